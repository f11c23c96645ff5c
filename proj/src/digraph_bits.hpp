#pragma once

// Packed looped digraphs on at most 8 vertices and the orderly canonicity
// test used by the generator. Vertices are 0-based here and 1-based in
// GraphPair.

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "fusion/enumerator.hpp"
#include "fusion/graph_pair.hpp"

namespace fusion::detail {

struct Digraph {
  int n = 0;
  std::array<std::uint8_t, 8> out{};  // bit j of out[i]: arc i -> j, loop when i == j

  bool arc(int i, int j) const { return (out[i] >> j) & 1u; }
};

Digraph from_graph_pair(const GraphPair& g);
GraphPair to_graph_pair(const Digraph& d);

/// Vertex t contributes the block (a_tt, a_0t, a_t0, ..., a_{t-1,t}, a_{t,t-1})
/// read most significant first; the orderly code is the block sequence and a
/// digraph is canonical when no relabeling gives a lexicographically smaller
/// code. Restricting a canonical digraph to its first n-1 vertices yields a
/// canonical digraph, which is what makes augmentation complete.
bool is_orderly_canonical(const Digraph& d);

/// Canonical children of a canonical parent obtained by appending one vertex,
/// restricted by the hereditary filters.
void extend(const Digraph& parent, const SearchFilter& filter,
            const std::function<void(const Digraph&)>& visit);

/// Canonical digraphs of order n in generation order.
std::vector<Digraph> canonical_digraphs(int n, const SearchFilter& filter);

}  // namespace fusion::detail
