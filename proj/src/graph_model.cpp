#include "fusion/graph_model.hpp"

#include <algorithm>
#include <queue>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

constexpr int unreachable = -1;

// Symmetrized adjacency on 1..n without loops.
struct Undirected {
  int n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<bool> looped;

  explicit Undirected(const GraphPair& g)
      : n(g.order()),
        adj(std::size_t(n) + 1, std::vector<bool>(std::size_t(n) + 1, false)),
        looped(std::size_t(n) + 1, false) {
    for (const Arc& a : g.arcs()) {
      adj[a.first][a.second] = true;
      adj[a.second][a.first] = true;
    }
    for (int v : g.loops()) looped[v] = true;
  }

  int degree(int v) const {
    int d = 0;
    for (int u = 1; u <= n; ++u) d += adj[v][u];
    return d;
  }

  bool common_neighbour(int i, int j) const {
    for (int k = 1; k <= n; ++k) {
      if (k != i && k != j && adj[i][k] && adj[j][k]) return true;
    }
    return false;
  }

  std::vector<int> distances_from(int s) const {
    std::vector<int> dist(std::size_t(n) + 1, unreachable);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int u = 1; u <= n; ++u) {
        if (adj[v][u] && dist[u] == unreachable) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
      }
    }
    return dist;
  }

  // Component id per vertex, ids assigned in order of least vertex.
  std::vector<int> component_ids(int& count) const {
    std::vector<int> id(std::size_t(n) + 1, -1);
    count = 0;
    for (int s = 1; s <= n; ++s) {
      if (id[s] != -1) continue;
      const std::vector<int> d = distances_from(s);
      for (int v = 1; v <= n; ++v)
        if (d[v] != unreachable) id[v] = count;
      ++count;
    }
    return id;
  }
};

}  // namespace

FusionData decode(const GraphPair& g) {
  FusionData f(g.order() + 1);
  for (int v : g.loops()) f.set(v, v, v);
  for (const Arc& a : g.arcs()) f.set(a.first, a.first, a.second);
  for (const Triple& t : g.hyperedges()) f.set(t[0], t[1], t[2]);
  return f;
}

GraphPair encode(const FusionData& f) {
  const int n = f.rank() - 1;
  std::vector<int> loops;
  std::vector<Arc> arcs;
  std::vector<Triple> hyper;
  for (int i = 1; i <= n; ++i) {
    if (f.get(i, i, i)) loops.push_back(i);
    for (int j = 1; j <= n; ++j)
      if (j != i && f.get(i, i, j)) arcs.emplace_back(i, j);
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (f.get(i, j, k)) hyper.push_back({i, j, k});
  }
  return GraphPair(n, std::move(loops), std::move(arcs), std::move(hyper));
}

bool PairRequirements::all_non_negative() const {
  return std::all_of(w_.begin(), w_.end(), [](int v) { return v >= 0; });
}

PairRequirements pair_requirements(const GraphPair& g) {
  const int n = g.order();
  std::vector<std::vector<int>> a(std::size_t(n) + 1, std::vector<int>(std::size_t(n) + 1, 0));
  for (int v : g.loops()) a[v][v] = 1;
  for (const Arc& e : g.arcs()) a[e.first][e.second] = 1;

  PairRequirements w(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      int value = 1 - a[i][j] - a[j][i];
      for (int k = 1; k <= n; ++k) value += a[i][k] * a[j][k];
      w.set(i, j, value);
    }
  }
  return w;
}

int pair_degree(const GraphPair& g, int i, int j) {
  int count = 0;
  for (const Triple& t : g.hyperedges()) {
    const bool has_i = t[0] == i || t[1] == i || t[2] == i;
    const bool has_j = t[0] == j || t[1] == j || t[2] == j;
    count += has_i && has_j;
  }
  return count;
}

std::string_view to_string(Lemma lemma) {
  switch (lemma) {
    case Lemma::NeighborhoodDegree: return "NeighborhoodDegree";
    case Lemma::MinDegreeFour: return "MinDegreeFour";
    case Lemma::ForceLoop: return "ForceLoop";
    case Lemma::LoopDistance: return "LoopDistance";
    case Lemma::ForcedLoops: return "ForcedLoops";
    case Lemma::NegativePairDegree: return "NegativePairDegree";
  }
  return "Unknown";
}

bool is_undirected(const GraphPair& g) {
  return std::all_of(g.arcs().begin(), g.arcs().end(),
                     [&](const Arc& a) { return g.has_arc(a.second, a.first); });
}

bool is_triangle_free(const GraphPair& g) {
  const Undirected u(g);
  for (int i = 1; i <= u.n; ++i)
    for (int j = i + 1; j <= u.n; ++j)
      if (u.adj[i][j] && u.common_neighbour(i, j)) return false;
  return true;
}

std::vector<Obstruction> undirected_obstructions(const GraphPair& g) {
  if (!is_undirected(g)) throw not_undirected();
  const Undirected u(g);
  const int n = u.n;
  std::vector<Obstruction> out;

  int count = 0;
  const std::vector<int> comp = u.component_ids(count);
  std::vector<int> comp_size(std::size_t(count), 0);
  std::vector<bool> comp_looped(std::size_t(count), false);
  for (int v = 1; v <= n; ++v) {
    ++comp_size[comp[v]];
    if (u.looped[v]) comp_looped[comp[v]] = true;
  }
  auto in_simple_component = [&](int v) {
    return comp_size[comp[v]] > 1 && !comp_looped[comp[v]];
  };

  for (int v = 1; v <= n; ++v) {
    if (!in_simple_component(v)) continue;
    for (int x = 1; x <= n; ++x) {
      if (!u.adj[v][x]) continue;
      int inside = 0;
      for (int y = 1; y <= n; ++y) inside += y != x && u.adj[v][y] && u.adj[x][y];
      if (inside < 2) out.push_back({Lemma::NeighborhoodDegree, {v, x}});
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (in_simple_component(v) && u.degree(v) < 4) out.push_back({Lemma::MinDegreeFour, {v}});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (u.adj[i][j] && !u.looped[i] && !u.looped[j] && !u.common_neighbour(i, j))
        out.push_back({Lemma::ForceLoop, {i, j}});

  for (int i = 1; i <= n; ++i) {
    if (!u.looped[i]) continue;
    const std::vector<int> d = u.distances_from(i);
    for (int j = i + 1; j <= n; ++j)
      if (u.looped[j] && (d[j] == unreachable || d[j] >= 3))
        out.push_back({Lemma::LoopDistance, {i, j}});
  }

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!u.adj[i][j] || u.common_neighbour(i, j)) continue;
      if (u.looped[i] && u.looped[j]) continue;
      for (int k = 1; k <= n; ++k)
        if (k != i && u.adj[j][k] && !u.adj[i][k])
          out.push_back({Lemma::ForcedLoops, {i, j, k}});
    }

  const PairRequirements w = pair_requirements(g);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i, j) < 0) out.push_back({Lemma::NegativePairDegree, {i, j}});
  return out;
}

GraphStats graph_predicates(const GraphPair& g) {
  const Undirected u(g);
  const int n = u.n;
  GraphStats s;
  s.is_undirected = is_undirected(g);
  s.is_triangle_free = is_triangle_free(g);

  const std::vector<int> comp = u.component_ids(s.components);
  s.diameter_per_component.assign(std::size_t(s.components), 0);
  std::vector<int> size(std::size_t(s.components), 0);
  std::vector<bool> looped(std::size_t(s.components), false);
  s.min_degree = n == 0 ? 0 : n;
  for (int v = 1; v <= n; ++v) {
    ++size[comp[v]];
    if (u.looped[v]) looped[comp[v]] = true;
    s.min_degree = std::min(s.min_degree, u.degree(v));
    const std::vector<int> d = u.distances_from(v);
    for (int x = 1; x <= n; ++x)
      if (d[x] != unreachable)
        s.diameter_per_component[comp[v]] = std::max(s.diameter_per_component[comp[v]], d[x]);
  }
  for (int c = 0; c < s.components; ++c)
    if (size[c] > 1 && !looped[c]) ++s.loopless_components;
  return s;
}

std::optional<TriangleFreeFamily> classify_triangle_free(const GraphPair& g) {
  if (!is_undirected(g)) throw not_undirected();
  if (!is_triangle_free(g)) throw not_triangle_free();

  const int n = g.order();
  const auto& loops = g.loops();
  const auto& arcs = g.arcs();

  if (arcs.empty()) {
    if (n == 1 && loops.size() == 1) return TriangleFreeFamily{1, 0};
    if (loops.empty()) {
      // n = 2^k - 1
      int k = 0;
      while ((1 << k) - 1 < n) ++k;
      if ((1 << k) - 1 == n) return TriangleFreeFamily{4, k};
    }
    return std::nullopt;
  }
  if (arcs.size() != 2) return std::nullopt;
  const auto [x, y] = arcs.front();
  if (n == 2 && loops.size() == 1) return TriangleFreeFamily{2, 0};
  if (n == 3 && loops == std::vector<int>{std::min(x, y), std::max(x, y)}) {
    return TriangleFreeFamily{3, 0};
  }
  return std::nullopt;
}

}  // namespace fusion
