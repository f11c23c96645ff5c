#include "fusion/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fusion/errors.hpp"
#include "fusion/graph_model.hpp"

namespace fusion {

namespace {

struct Row {
  int rank;
  const char* name;
  std::vector<int> loops;
  std::vector<Arc> arcs;
  std::vector<Triple> hyperedges;
};

// Loops, arcs and hyperedges exactly as listed in the rank 2-7 tables.
const std::vector<Row>& table_rows() {
  static const std::vector<Row> rows = {
    {2, "Sem", {}, {}, {}},
    {2, "Fib", {1}, {}, {}},
    {3, "Ising", {}, {{1, 2}}, {}},
    {3, "Rep(S3)", {1}, {{1, 2}}, {}},
    {3, "PSU(3)_2", {1}, {{1, 2}, {2, 1}}, {}},
    {4, "Sem^2", {}, {}, {{1, 2, 3}}},
    {4, "PSO(5)_6", {}, {{1, 2}, {1, 3}, {2, 1}, {2, 3}}, {}},
    {4, "Sem⊠Fib", {2}, {{1, 2}}, {{1, 2, 3}}},
    {4, "PSU(2)_6", {1, 2}, {{1, 2}, {2, 1}}, {{1, 2, 3}}},
    {4, "PSU(2)_5", {1, 2}, {{1, 2}, {1, 3}, {2, 1}, {3, 2}}, {{1, 2, 3}}},
    {4, "Fib^2", {1, 2, 3}, {{1, 2}, {1, 3}}, {{1, 2, 3}}},
    {5, "TY(Z2xZ2,chi,nu)", {}, {{1, 2}, {1, 3}, {1, 4}}, {{2, 3, 4}}},
    {5, "C(so7,e^(pi i/14),14)_ad", {}, {{1, 3}, {1, 4}, {2, 1}, {2, 4}, {3, 2}, {3, 4}}, {{1, 2, 3}}},
    {5, "", {1}, {{1, 2}, {1, 3}, {1, 4}}, {{2, 3, 4}}},
    {5, "C(so3,e^(pi i/6),6)", {1}, {{1, 4}, {2, 1}, {3, 1}}, {{1, 2, 3}, {2, 3, 4}}},
    {5, "", {1, 3}, {{1, 4}, {2, 1}, {2, 3}, {3, 1}}, {{1, 2, 3}, {2, 3, 4}}},
    {5, "", {1, 3}, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {3, 1}}, {{1, 2, 3}, {2, 3, 4}}},
    {5, "", {2, 3}, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, {{1, 2, 3}, {2, 3, 4}}},
    {5, "", {1, 2, 3}, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {3, 1}, {4, 3}}, {{1, 2, 3}, {1, 2, 4}, {2, 3, 4}}},
    {5, "", {1, 2, 3}, {{1, 4}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, {{1, 2, 3}, {2, 3, 4}}},
    {5, "", {1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 2}, {4, 3}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}},
    {6, "Sem⊠Ising", {}, {{1, 5}, {2, 5}}, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}},
    {6, "", {}, {{1, 2}, {1, 5}, {2, 1}, {2, 5}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}, {{1, 3, 4}, {2, 3, 4}, {3, 4, 5}}},
    {6, "Sem⊠Rep(S3)", {2}, {{1, 2}, {1, 5}, {2, 5}}, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}},
    {6, "Fib⊠Ising", {4}, {{1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}}, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}},
    {6, "Sem⊠PSU(3)_2", {2}, {{1, 2}, {1, 4}, {2, 4}, {3, 2}, {4, 2}}, {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {3, 4, 5}}},
    {6, "", {1}, {{1, 5}, {2, 4}, {2, 5}, {3, 2}, {3, 5}, {4, 3}, {4, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}},
    {6, "", {2}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 3}, {4, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}},
    {6, "", {1}, {{1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {4, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}}},
    {6, "", {1}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {4, 5}, {5, 2}, {5, 3}, {5, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}}},
    {6, "", {1, 2}, {{1, 2}, {1, 5}, {2, 1}, {2, 5}}, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}},
    {6, "", {1, 2}, {{1, 2}, {1, 4}, {2, 1}, {2, 4}, {3, 1}, {3, 2}, {4, 1}, {4, 2}}, {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}}},
    {6, "", {1, 2}, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 3}, {4, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}},
    {6, "Fib⊠Rep(S3)", {1, 2, 4}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}}, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}},
    {6, "Fib⊠PSU(3)_2", {1, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 3}, {2, 4}, {3, 5}, {5, 3}}, {{1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {2, 4, 5}}},
    {6, "", {1, 2, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 3}, {2, 4}, {3, 2}, {3, 4}, {4, 2}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {3, 4, 5}}},
    {6, "", {1, 2, 4}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 4}, {4, 2}, {5, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {2, 3, 5}, {3, 4, 5}}},
    {6, "", {1, 2, 3, 4}, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
    {6, "", {1, 2, 3, 4}, {{1, 5}, {2, 4}, {2, 5}, {3, 2}, {3, 5}, {4, 3}, {4, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}},
    {6, "", {1, 2, 3, 4}, {{1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 5}, {3, 1}, {3, 2}, {3, 4}, {4, 1}, {4, 2}, {4, 3}}, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {3, 4, 5}}},
    {6, "", {1, 2, 4, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 2}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {5, 3}, {5, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 4, 5}}},
    {7, "", {}, {{1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 6}, {3, 1}, {3, 6}}, {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {4, 5, 6}}},
    {7, "", {}, {{1, 5}, {1, 6}, {2, 1}, {2, 6}, {3, 2}, {3, 6}, {4, 3}, {4, 6}, {5, 4}, {5, 6}}, {{1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}}},
    {7, "", {}, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 3}, {4, 6}, {5, 4}, {5, 6}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {3, 4, 5}}},
    {7, "", {3}, {{1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3}, {2, 6}, {3, 1}, {3, 6}}, {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {4, 5, 6}}},
    {7, "", {1}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 6}, {3, 1}, {3, 6}}, {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {4, 5, 6}}},
    {7, "", {3}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3}, {2, 6}, {3, 1}, {3, 6}}, {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {4, 5, 6}}},
    {7, "", {2}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 3}, {4, 6}, {5, 4}, {5, 6}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {3, 4, 5}}},
    {7, "", {2, 3}, {{1, 2}, {1, 3}, {1, 6}, {2, 3}, {3, 2}, {4, 3}, {5, 3}}, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 6}, {2, 4, 5}, {4, 5, 6}}},
    {7, "", {2, 3}, {{1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3}, {2, 6}, {3, 1}, {3, 2}, {3, 6}}, {{1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {4, 5, 6}}},
    {7, "", {1, 5}, {{1, 6}, {2, 1}, {2, 4}, {2, 5}, {3, 1}, {3, 4}, {3, 5}, {4, 1}, {4, 3}, {4, 5}, {5, 1}, {5, 3}}, {{1, 2, 3}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {4, 5, 6}}},
    {7, "", {1, 2}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 3}, {4, 6}, {5, 4}, {5, 6}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {3, 4, 5}}},
    {7, "", {3, 4, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 5}, {4, 5}, {5, 4}}, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 6}, {4, 5, 6}}},
    {7, "", {1, 2, 3}, {{1, 6}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 4}, {3, 5}, {4, 1}, {4, 3}, {5, 1}, {5, 3}}, {{1, 2, 3}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {4, 5, 6}}},
    {7, "", {1, 2, 3, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3}, {2, 5}, {3, 1}, {3, 2}, {3, 5}, {4, 3}, {4, 5}, {5, 3}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 6}, {2, 4, 5}, {4, 5, 6}}},
    {7, "", {1, 2, 3, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 5}, {4, 1}, {4, 3}, {4, 5}, {5, 3}, {6, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 6}, {2, 4, 5}, {3, 4, 6}, {4, 5, 6}}},
    {7, "", {1, 2, 3, 5}, {{1, 2}, {1, 3}, {1, 4}, {1, 6}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 4}, {3, 5}, {4, 2}, {4, 3}, {4, 5}, {4, 6}, {5, 4}, {5, 6}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}}},
    {7, "", {1, 2, 3, 4, 5}, {{1, 4}, {1, 5}, {1, 6}, {2, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 1}, {3, 2}, {3, 4}, {3, 5}, {4, 3}, {4, 5}, {5, 3}, {5, 4}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {4, 5, 6}}},
    {7, "", {1, 2, 3, 4, 5, 6}, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 5}, {3, 6}, {4, 2}, {4, 3}, {4, 5}, {5, 2}, {5, 4}, {5, 6}, {6, 3}, {6, 4}, {6, 5}}, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 5}, {2, 4, 6}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}}},
  };
  return rows;
}

}  // namespace

Catalog::Catalog(int max_product_rank) {
  std::vector<int> seen_in_rank(10, 0);
  for (const Row& row : table_rows()) {
    CatalogEntry e;
    e.name = row.name;
    e.rank = row.rank;
    e.pair = GraphPair(row.rank - 1, row.loops, row.arcs, row.hyperedges);
    e.source = "Rank " + std::to_string(row.rank) + " table, row " +
               std::to_string(++seen_in_rank[std::size_t(row.rank)]);
    builtins_.push_back(std::move(e));
  }
  builtins_.push_back(CatalogEntry{
      "Rep(Z3^2⋊Z2)",
      GraphPair(5, {1, 2, 3, 4}, {{1, 5}, {2, 5}, {3, 5}, {4, 5}},
                {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}),
      6, "Figure: presentations of Rep(Z3^2⋊Z2)"});

  for (const CatalogEntry& e : builtins_) builtin_keys_.push_back(canonical_form(e.pair));

  std::vector<std::pair<CatalogEntry, CanonicalKey>> products;
  for (std::size_t a = 0; a < builtins_.size(); ++a) {
    for (std::size_t b = a; b < builtins_.size(); ++b) {
      const CatalogEntry& x = builtins_[a];
      const CatalogEntry& y = builtins_[b];
      if (x.name.empty() || y.name.empty() || x.rank * y.rank > max_product_rank) continue;
      const GraphPair pair = encode(product(decode(x.pair), decode(y.pair)));
      CanonicalKey key = canonical_form(pair);
      CatalogEntry e{x.name + "⊠" + y.name, pair.relabeled(key.witness), x.rank * y.rank,
                     "product of " + x.name + " and " + y.name};
      products.emplace_back(std::move(e), std::move(key));
    }
  }
  std::stable_sort(products.begin(), products.end(),
                   [](const auto& p, const auto& q) { return p.first.name < q.first.name; });
  auto named_builtin = [&](const CanonicalKey& key) {
    for (std::size_t i = 0; i < builtins_.size(); ++i)
      if (!builtins_[i].name.empty() && builtin_keys_[i] == key) return true;
    return false;
  };
  for (auto& [entry, key] : products) {
    if (named_builtin(key)) continue;
    if (std::find(product_keys_.begin(), product_keys_.end(), key) != product_keys_.end()) continue;
    products_.push_back(std::move(entry));
    product_keys_.push_back(std::move(key));
  }
}

const Catalog& Catalog::standard() {
  static const Catalog catalog;
  return catalog;
}

std::vector<CatalogEntry> Catalog::entries_of_rank(int rank) const {
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : builtins_)
    if (e.rank == rank) out.push_back(e);
  for (const CatalogEntry& e : products_)
    if (e.rank == rank) out.push_back(e);
  return out;
}

std::optional<std::string> Catalog::match(const GraphPair& g) const {
  if (g.order() > default_canonical_order_bound) return std::nullopt;
  const CanonicalKey key = canonical_form(g);
  for (std::size_t i = 0; i < builtins_.size(); ++i)
    if (!builtins_[i].name.empty() && builtin_keys_[i] == key) return builtins_[i].name;
  for (std::size_t i = 0; i < products_.size(); ++i)
    if (product_keys_[i] == key) return products_[i].name;
  return std::nullopt;
}

void Catalog::annotate(EnumerationResult& result) const {
  for (EnumeratedRing& ring : result.rings) ring.catalog_name = match(ring.pair);
}

std::optional<std::string> match_catalog(const GraphPair& g) {
  return Catalog::standard().match(g);
}

TripleSystem boolean_sts(int k) {
  if (k < 1) throw std::invalid_argument("boolean STS needs k >= 1");
  if (k > 8) throw order_too_large((1 << k) - 1, 255);
  TripleSystem ts;
  ts.points = (1 << k) - 1;
  for (int a = 1; a <= ts.points; ++a)
    for (int b = a + 1; b <= ts.points; ++b) {
      const int c = a ^ b;
      if (c > b) ts.triples.push_back({a, b, c});
    }
  return ts;
}

bool is_steiner(const TripleSystem& ts) {
  const int n = ts.points;
  std::vector<std::vector<int>> seen(std::size_t(n) + 1, std::vector<int>(std::size_t(n) + 1, 0));
  for (const Triple& t : ts.triples) {
    for (int v : t)
      if (v < 1 || v > n) return false;
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) return false;
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        ++seen[t[x]][t[y]];
        ++seen[t[y]][t[x]];
      }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (seen[i][j] != 1) return false;
  return true;
}

bool sts_generates_ring(const TripleSystem& ts) {
  const GraphPair g(ts.points, {}, {}, ts.triples);
  return !verify(decode(g)).has_value();
}

TripleSystem grid_sts9() {
  TripleSystem ts;
  ts.points = 9;
  auto point = [](int r, int c) { return 3 * ((r % 3 + 3) % 3) + (c % 3 + 3) % 3 + 1; };
  const int directions[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& d : directions) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        Triple t{point(r, c), point(r + d[0], c + d[1]), point(r + 2 * d[0], c + 2 * d[1])};
        std::sort(t.begin(), t.end());
        if (std::find(ts.triples.begin(), ts.triples.end(), t) == ts.triples.end())
          ts.triples.push_back(t);
      }
  }
  std::sort(ts.triples.begin(), ts.triples.end());
  return ts;
}

std::vector<int> matching_permutation(const Matching& matching, int vertices) {
  std::vector<int> p(static_cast<std::size_t>(vertices));
  std::iota(p.begin(), p.end(), 0);
  for (const auto& [u, v] : matching) {
    p[std::size_t(u)] = v;
    p[std::size_t(v)] = u;
  }
  return p;
}

bool matchings_commute(const Matching& a, const Matching& b, int vertices) {
  const std::vector<int> pa = matching_permutation(a, vertices);
  const std::vector<int> pb = matching_permutation(b, vertices);
  for (int x = 0; x < vertices; ++x)
    if (pa[std::size_t(pb[std::size_t(x)])] != pb[std::size_t(pa[std::size_t(x)])]) return false;
  return true;
}

bool is_decomposition(const MatchingDecomposition& d) {
  const int m = d.vertices;
  if (m < 2 || m % 2 != 0 || int(d.matchings.size()) != m - 1) return false;
  std::vector<std::vector<int>> used(std::size_t(m), std::vector<int>(std::size_t(m), 0));
  for (const Matching& matching : d.matchings) {
    std::vector<int> covered(std::size_t(m), 0);
    if (int(matching.size()) != m / 2) return false;
    for (const auto& [u, v] : matching) {
      if (u < 0 || v < 0 || u >= m || v >= m || u == v) return false;
      ++covered[std::size_t(u)];
      ++covered[std::size_t(v)];
      ++used[std::size_t(std::min(u, v))][std::size_t(std::max(u, v))];
    }
    if (std::any_of(covered.begin(), covered.end(), [](int c) { return c != 1; })) return false;
  }
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (used[std::size_t(u)][std::size_t(v)] != 1) return false;
  return true;
}

namespace {

class MatchingSearch {
 public:
  explicit MatchingSearch(int m)
      : m_(m), used_(std::size_t(m), std::vector<bool>(std::size_t(m), false)) {}

  std::optional<MatchingDecomposition> run() {
    // Any decomposition can be relabeled so that the matching through {0, 1}
    // pairs 2t with 2t + 1.
    Matching first;
    for (int t = 0; t < m_; t += 2) first.emplace_back(t, t + 1);
    mark(first, true);
    found_.push_back(first);
    if (next_matching(2)) return MatchingDecomposition{m_, found_};
    return std::nullopt;
  }

 private:
  void mark(const Matching& matching, bool value) {
    for (const auto& [u, v] : matching) {
      used_[std::size_t(u)][std::size_t(v)] = value;
      used_[std::size_t(v)][std::size_t(u)] = value;
    }
  }

  bool next_matching(int k) {
    if (k == m_) return true;
    if (used_[0][std::size_t(k)]) return false;
    current_.assign(1, Edge{0, k});
    std::vector<bool> covered(std::size_t(m_), false);
    covered[0] = covered[std::size_t(k)] = true;
    return extend(k, covered);
  }

  bool extend(int k, std::vector<bool>& covered) {
    int u = 0;
    while (u < m_ && covered[std::size_t(u)]) ++u;
    if (u == m_) {
      for (const Matching& other : found_)
        if (!matchings_commute(current_, other, m_)) return false;
      const Matching done = current_;
      mark(done, true);
      found_.push_back(done);
      if (next_matching(k + 1)) return true;
      found_.pop_back();
      mark(done, false);
      current_ = done;
      return false;
    }
    for (int v = u + 1; v < m_; ++v) {
      if (covered[std::size_t(v)] || used_[std::size_t(u)][std::size_t(v)]) continue;
      covered[std::size_t(u)] = covered[std::size_t(v)] = true;
      current_.emplace_back(u, v);
      if (extend(k, covered)) return true;
      current_.pop_back();
      covered[std::size_t(u)] = covered[std::size_t(v)] = false;
    }
    return false;
  }

  int m_;
  std::vector<std::vector<bool>> used_;
  std::vector<Matching> found_;
  Matching current_;
};

}  // namespace

std::optional<MatchingDecomposition> find_matching_decomposition(int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("K_m needs an even m >= 2");
  if (m > 8) throw order_too_large(m, 8);
  return MatchingSearch(m).run();
}

}  // namespace fusion
