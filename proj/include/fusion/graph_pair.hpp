#pragma once

#include <array>
#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace fusion {

using Arc = std::pair<int, int>;
using Triple = std::array<int, 3>;

/// Looped digraph D plus 3-uniform hypergraph H on vertices 1..order.
///
/// Loops are sorted, arcs sorted lexicographically, and every hyperedge is
/// stored as an ascending triple with the list sorted. The constructor
/// normalizes its input into that form and rejects out-of-range vertices,
/// arcs (i, i), and hyperedges with repeated vertices.
class GraphPair {
 public:
  GraphPair() = default;
  explicit GraphPair(int order);
  GraphPair(int order, std::vector<int> loops, std::vector<Arc> arcs,
            std::vector<Triple> hyperedges = {});

  int order() const noexcept { return order_; }
  const std::vector<int>& loops() const noexcept { return loops_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::vector<Triple>& hyperedges() const noexcept { return hyperedges_; }

  bool has_loop(int v) const;
  bool has_arc(int from, int to) const;
  bool has_hyperedge(int a, int b, int c) const;

  /// Same digraph with the hyperedge set replaced.
  GraphPair with_hyperedges(std::vector<Triple> hyperedges) const;
  GraphPair without_hyperedges() const { return with_hyperedges({}); }

  /// Image under the vertex map v -> sigma[v - 1]; sigma must be a
  /// permutation of 1..order.
  GraphPair relabeled(std::span<const int> sigma) const;

  auto operator<=>(const GraphPair&) const = default;
  bool operator==(const GraphPair&) const = default;

 private:
  int order_ = 0;
  std::vector<int> loops_;
  std::vector<Arc> arcs_;
  std::vector<Triple> hyperedges_;
};

}  // namespace fusion
