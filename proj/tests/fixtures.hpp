#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "fusion/graph_pair.hpp"

namespace fixtures {

using fusion::GraphPair;

inline GraphPair sem() { return GraphPair(1); }
inline GraphPair fib() { return GraphPair(1, {1}, {}); }
inline GraphPair ising() { return GraphPair(2, {}, {{1, 2}}); }
inline GraphPair rep_s3() { return GraphPair(2, {1}, {{1, 2}}); }
inline GraphPair psu3_2() { return GraphPair(2, {1}, {{1, 2}, {2, 1}}); }
inline GraphPair sem_squared() { return GraphPair(3, {}, {}, {{1, 2, 3}}); }
inline GraphPair psu2_6() { return GraphPair(3, {1, 2}, {{1, 2}, {2, 1}}, {{1, 2, 3}}); }
inline GraphPair pso5_6() { return GraphPair(3, {}, {{1, 2}, {1, 3}, {2, 1}, {2, 3}}); }

// Rep(Z3^2 x| Z2) as drawn in the paper's figure.
inline GraphPair figure_ring() {
  return GraphPair(5, {1, 2, 3, 4}, {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                   {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

inline GraphPair loopless_k4() {
  std::vector<fusion::Arc> arcs;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) arcs.emplace_back(i, j);
  return GraphPair(4, {}, arcs);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every pair on n vertices with each loop, arc and hyperedge included
// independently with probability p.
inline GraphPair random_pair(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<int> loops;
  std::vector<fusion::Arc> arcs;
  std::vector<fusion::Triple> hyper;
  for (int i = 1; i <= n; ++i) {
    if (coin(rng)) loops.push_back(i);
    for (int j = 1; j <= n; ++j)
      if (i != j && coin(rng)) arcs.emplace_back(i, j);
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (coin(rng)) hyper.push_back({i, j, k});
  }
  return GraphPair(n, loops, arcs, hyper);
}

}  // namespace fixtures
