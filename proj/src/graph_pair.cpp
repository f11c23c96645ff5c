#include "fusion/graph_pair.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fusion {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GraphPair::GraphPair(int order) : GraphPair(order, {}, {}, {}) {}

GraphPair::GraphPair(int order, std::vector<int> loops, std::vector<Arc> arcs,
                     std::vector<Triple> hyperedges)
    : order_(order),
      loops_(std::move(loops)),
      arcs_(std::move(arcs)),
      hyperedges_(std::move(hyperedges)) {
  if (order < 0) throw std::invalid_argument("graph order must be non-negative");
  auto check = [order](int v) {
    if (v < 1 || v > order) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." +
                                  std::to_string(order));
    }
  };
  for (int v : loops_) check(v);
  for (const Arc& a : arcs_) {
    check(a.first);
    check(a.second);
    if (a.first == a.second) {
      throw std::invalid_argument("arc (" + std::to_string(a.first) + "," +
                                  std::to_string(a.first) + ") must be a loop");
    }
  }
  for (Triple& t : hyperedges_) {
    for (int v : t) check(v);
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw std::invalid_argument("hyperedge needs three distinct vertices");
    }
  }
  sort_unique(loops_);
  sort_unique(arcs_);
  sort_unique(hyperedges_);
}

bool GraphPair::has_loop(int v) const {
  return std::binary_search(loops_.begin(), loops_.end(), v);
}

bool GraphPair::has_arc(int from, int to) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to});
}

bool GraphPair::has_hyperedge(int a, int b, int c) const {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return std::binary_search(hyperedges_.begin(), hyperedges_.end(), t);
}

GraphPair GraphPair::with_hyperedges(std::vector<Triple> hyperedges) const {
  return GraphPair(order_, loops_, arcs_, std::move(hyperedges));
}

GraphPair GraphPair::relabeled(std::span<const int> sigma) const {
  if (int(sigma.size()) != order_) {
    throw std::invalid_argument("relabeling has wrong length");
  }
  std::vector<bool> seen(std::size_t(order_) + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > order_ || seen[std::size_t(v)]) {
      throw std::invalid_argument("relabeling is not a permutation");
    }
    seen[std::size_t(v)] = true;
  }
  auto map = [&](int v) { return sigma[std::size_t(v - 1)]; };
  std::vector<int> loops;
  loops.reserve(loops_.size());
  for (int v : loops_) loops.push_back(map(v));
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) arcs.emplace_back(map(a.first), map(a.second));
  std::vector<Triple> hyper;
  hyper.reserve(hyperedges_.size());
  for (const Triple& t : hyperedges_) hyper.push_back({map(t[0]), map(t[1]), map(t[2])});
  return GraphPair(order_, std::move(loops), std::move(arcs), std::move(hyper));
}

}  // namespace fusion
