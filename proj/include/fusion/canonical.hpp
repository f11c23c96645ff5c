#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fusion/graph_pair.hpp"

namespace fusion {

inline constexpr int default_canonical_order_bound = 8;

/// Relabeling-invariant key of a GraphPair.
///
/// bytes is the serialization (order, sorted loops, sorted arcs, sorted
/// hyperedges, each list prefixed by its length) that is lexicographically
/// least over all vertex relabelings. witness is the relabeling reaching it:
/// g.relabeled(witness) serializes to bytes.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  std::vector<int> witness;

  std::string hex() const;

  // Keys order and compare by bytes alone; witnesses differ between members
  // of an orbit.
  std::strong_ordering operator<=>(const CanonicalKey& other) const {
    return bytes <=> other.bytes;
  }
  bool operator==(const CanonicalKey& other) const { return bytes == other.bytes; }
};

std::vector<std::uint8_t> serialize(const GraphPair& g);

/// Brute force over all order! relabelings. Throws order_too_large above
/// max_order.
CanonicalKey canonical_form(const GraphPair& g,
                            int max_order = default_canonical_order_bound);

/// The pair that canonical_form's key serializes.
GraphPair canonical_pair(const GraphPair& g,
                         int max_order = default_canonical_order_bound);

/// Pairs of different order are never isomorphic.
bool is_isomorphic(const GraphPair& a, const GraphPair& b,
                   int max_order = default_canonical_order_bound);

}  // namespace fusion
