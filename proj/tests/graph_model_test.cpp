#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "fusion/errors.hpp"
#include "fusion/graph_model.hpp"
#include "fusion/ring.hpp"

using namespace fusion;

namespace {

bool has_lemma(const std::vector<Obstruction>& found, Lemma lemma) {
  return std::any_of(found.begin(), found.end(),
                     [&](const Obstruction& o) { return o.lemma == lemma; });
}

GraphPair undirected(int n, std::vector<int> loops, const std::vector<Arc>& edges) {
  std::vector<Arc> arcs;
  for (const Arc& e : edges) {
    arcs.push_back(e);
    arcs.emplace_back(e.second, e.first);
  }
  return GraphPair(n, std::move(loops), std::move(arcs));
}

// Labeled digraph from a bit mask: bit i*n+j is arc (i+1, j+1), the diagonal
// bits are loops.
GraphPair digraph_from_mask(int n, std::uint32_t mask) {
  std::vector<int> loops;
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!((mask >> (i * n + j)) & 1u)) continue;
      if (i == j) {
        loops.push_back(i + 1);
      } else {
        arcs.emplace_back(i + 1, j + 1);
      }
    }
  return GraphPair(n, loops, arcs);
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back({i, j, k});
  return out;
}

}  // namespace

TEST_CASE("decode examples") {
  const FusionData fib = decode(fixtures::fib());
  CHECK(fib.rank() == 2);
  CHECK(fib.get(1, 1, 1) == 1);

  const FusionData s3 = decode(fixtures::rep_s3());
  CHECK(s3.get(1, 1, 1) == 1);
  CHECK(s3.get(1, 1, 2) == 1);
  CHECK(s3.get(1, 2, 1) == 1);
  CHECK(s3.get(2, 2, 2) == 0);
  CHECK(s3.get(2, 2, 1) == 0);

  // X1 X2 = X3 + X4 and X1 X1 = 1 + X1 + X5 in the figure's rule table.
  const FusionData fig = decode(fixtures::figure_ring());
  CHECK(fig.get(1, 2, 3) == 1);
  CHECK(fig.get(1, 2, 4) == 1);
  CHECK(fig.get(1, 2, 5) == 0);
  CHECK(fig.get(1, 1, 0) == 1);
  CHECK(fig.get(1, 1, 1) == 1);
  CHECK(fig.get(1, 1, 5) == 1);
  CHECK(fig.get(5, 5, 0) == 1);
  CHECK(fig.get(5, 5, 5) == 0);

  const FusionData trivial = decode(GraphPair(0));
  CHECK(trivial.rank() == 1);
  CHECK(trivial.get(0, 0, 0) == 1);
}

TEST_CASE("encode examples and round trips") {
  FusionData fib(2);
  fib.set(1, 1, 1);
  CHECK(encode(fib) == fixtures::fib());
  CHECK(encode(FusionData(2)) == GraphPair(1));
  CHECK(encode(decode(fixtures::figure_ring())) == fixtures::figure_ring());

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const GraphPair g = fixtures::random_pair(trial % 7, 0.4, rng);
    CHECK(encode(decode(g)) == g);
    const FusionData f = decode(g);
    CHECK(decode(encode(f)) == f);
  }
}

TEST_CASE("pair requirements examples") {
  const PairRequirements psu = pair_requirements(fixtures::psu2_6());
  CHECK(psu(1, 2) == 1);
  CHECK(psu(1, 3) == 1);
  CHECK(psu(2, 3) == 1);

  CHECK(pair_requirements(undirected(2, {}, {{1, 2}}))(1, 2) == -1);

  const PairRequirements empty = pair_requirements(GraphPair(3));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) CHECK(empty(i, j) == 1);
}

// The (i, j) entry of N_i N_j - N_j N_i equals w_ij minus the hyperedge
// degree of {i, j}, for every labeled digraph and every hyperedge set.
TEST_CASE("directed pair requirement matches the commutator entry up to order 3") {
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Triple> triples = all_triples(n);
    for (std::uint32_t mask = 0; mask < (1u << (n * n)); ++mask) {
      const GraphPair d = digraph_from_mask(n, mask);
      const PairRequirements w = pair_requirements(d);
      for (std::uint32_t h = 0; h < (1u << triples.size()); ++h) {
        std::vector<Triple> hyper;
        for (std::size_t t = 0; t < triples.size(); ++t)
          if ((h >> t) & 1u) hyper.push_back(triples[t]);
        const GraphPair g = d.with_hyperedges(hyper);
        const FusionMatrices m = fusion_matrices(decode(g));
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n; ++j) {
            const IntMatrix ij = m[std::size_t(i)] * m[std::size_t(j)];
            const IntMatrix ji = m[std::size_t(j)] * m[std::size_t(i)];
            REQUIRE(ij(i, j) - ji(i, j) == w(i, j) - pair_degree(g, i, j));
          }
        if (!verify(decode(g))) {
          for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) REQUIRE(pair_degree(g, i, j) == w(i, j));
        }
      }
    }
  }
}

TEST_CASE("directed pair requirement on random order 4 to 6 pairs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 4 + trial % 3;
    const GraphPair g = fixtures::random_pair(n, 0.3, rng);
    const PairRequirements w = pair_requirements(g);
    const FusionMatrices m = fusion_matrices(decode(g));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const IntMatrix ij = m[std::size_t(i)] * m[std::size_t(j)];
        const IntMatrix ji = m[std::size_t(j)] * m[std::size_t(i)];
        REQUIRE(ij(i, j) - ji(i, j) == w(i, j) - pair_degree(g, i, j));
      }
  }
}

TEST_CASE("undirected pair requirement reduces to the edge form") {
  const GraphPair g = undirected(4, {1, 3}, {{1, 2}, {2, 3}, {3, 4}, {1, 3}});
  const PairRequirements w = pair_requirements(g);
  auto e = [&](int i, int j) { return int(i == j ? g.has_loop(i) : g.has_arc(i, j)); };
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      int common = 0;
      for (int k = 1; k <= 4; ++k) common += e(i, k) * e(j, k);
      CHECK(w(i, j) == 1 + common - 2 * e(i, j));
    }
}

TEST_CASE("pair requirements are relabeling equivariant") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 5;
    const GraphPair g = fixtures::random_pair(n, 0.4, rng);
    const std::vector<int> sigma = fixtures::random_permutation(n, rng);
    const PairRequirements w = pair_requirements(g);
    const PairRequirements ws = pair_requirements(g.relabeled(sigma));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) CHECK(ws(sigma[std::size_t(i - 1)], sigma[std::size_t(j - 1)]) == w(i, j));
  }
}

TEST_CASE("undirected obstructions examples") {
  CHECK(has_lemma(undirected_obstructions(fixtures::loopless_k4()), Lemma::MinDegreeFour));

  const auto path = undirected_obstructions(undirected(4, {1, 4}, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(has_lemma(path, Lemma::LoopDistance));
  CHECK(has_lemma(path, Lemma::ForcedLoops));
  for (const Obstruction& o : path)
    if (o.lemma == Lemma::LoopDistance) CHECK(o.witness == std::vector<int>{1, 4});

  CHECK(undirected_obstructions(fixtures::fib()).empty());
  CHECK(undirected_obstructions(fixtures::psu3_2()).empty());
  CHECK(undirected_obstructions(GraphPair(3)).empty());

  const auto edge = undirected_obstructions(undirected(2, {}, {{1, 2}}));
  CHECK(has_lemma(edge, Lemma::ForceLoop));
  CHECK(has_lemma(edge, Lemma::NegativePairDegree));

  CHECK_THROWS_AS(undirected_obstructions(fixtures::rep_s3()), not_undirected);
}

TEST_CASE("obstruction witnesses lie in the graph") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Arc> edges;
    std::vector<int> loops;
    std::bernoulli_distribution coin(0.4);
    for (int i = 1; i <= n; ++i) {
      if (coin(rng)) loops.push_back(i);
      for (int j = i + 1; j <= n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    }
    for (const Obstruction& o : undirected_obstructions(undirected(n, loops, edges))) {
      CHECK_FALSE(o.witness.empty());
      for (int v : o.witness) CHECK((v >= 1 && v <= n));
    }
  }
}

TEST_CASE("triangle-free classification") {
  const auto fib = classify_triangle_free(fixtures::fib());
  REQUIRE(fib);
  CHECK(fib->family == 1);

  const auto psu32 = classify_triangle_free(fixtures::psu3_2());
  REQUIRE(psu32);
  CHECK(psu32->family == 2);

  const auto psu26 = classify_triangle_free(fixtures::psu2_6());
  REQUIRE(psu26);
  CHECK(psu26->family == 3);

  const auto seven = classify_triangle_free(GraphPair(7));
  REQUIRE(seven);
  CHECK(*seven == TriangleFreeFamily{4, 3});
  CHECK(*classify_triangle_free(GraphPair(3)) == TriangleFreeFamily{4, 2});
  CHECK(*classify_triangle_free(GraphPair(1)) == TriangleFreeFamily{4, 1});

  CHECK_FALSE(classify_triangle_free(GraphPair(5)));
  CHECK_FALSE(classify_triangle_free(undirected(2, {}, {{1, 2}})));
  CHECK_FALSE(classify_triangle_free(undirected(3, {1, 2, 3}, {{1, 2}, {2, 3}})));

  CHECK_THROWS_AS(classify_triangle_free(fixtures::rep_s3()), not_undirected);
  CHECK_THROWS_AS(classify_triangle_free(undirected(3, {}, {{1, 2}, {2, 3}, {1, 3}})),
                  not_triangle_free);
}

TEST_CASE("graph predicates examples") {
  const GraphStats empty = graph_predicates(GraphPair(3));
  CHECK(empty.components == 3);
  CHECK(empty.min_degree == 0);
  CHECK(empty.is_triangle_free);
  CHECK(empty.is_undirected);

  CHECK_FALSE(graph_predicates(fixtures::pso5_6()).is_undirected);

  const GraphStats k4 = graph_predicates(fixtures::loopless_k4());
  CHECK(k4.components == 1);
  CHECK(k4.min_degree == 3);
  CHECK_FALSE(k4.is_triangle_free);
  CHECK(k4.loopless_components == 1);
  CHECK(k4.diameter_per_component == std::vector<int>{1});

  const GraphStats path = graph_predicates(undirected(5, {1}, {{1, 2}, {2, 3}, {4, 5}}));
  CHECK(path.components == 2);
  CHECK(path.loopless_components == 1);
  CHECK(path.diameter_per_component == std::vector<int>{2, 1});
}
