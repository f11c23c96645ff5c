#include "digraph_bits.hpp"

#include "fusion/errors.hpp"

namespace fusion::detail {

Digraph from_graph_pair(const GraphPair& g) {
  if (g.order() > 8) throw order_too_large(g.order(), 8);
  Digraph d;
  d.n = g.order();
  for (int v : g.loops()) d.out[v - 1] |= std::uint8_t(1u << (v - 1));
  for (const Arc& a : g.arcs()) d.out[a.first - 1] |= std::uint8_t(1u << (a.second - 1));
  return d;
}

GraphPair to_graph_pair(const Digraph& d) {
  std::vector<int> loops;
  std::vector<Arc> arcs;
  for (int i = 0; i < d.n; ++i) {
    for (int j = 0; j < d.n; ++j) {
      if (!d.arc(i, j)) continue;
      if (i == j) {
        loops.push_back(i + 1);
      } else {
        arcs.emplace_back(i + 1, j + 1);
      }
    }
  }
  return GraphPair(d.n, std::move(loops), std::move(arcs));
}

namespace {

struct CanonicityCheck {
  const Digraph& d;
  std::array<std::uint32_t, 8> target{};
  std::array<int, 8> perm{};
  std::uint8_t used = 0;

  explicit CanonicityCheck(const Digraph& g) : d(g) {
    for (int t = 0; t < d.n; ++t) perm[t] = t;
    for (int t = 0; t < d.n; ++t) target[t] = block(t, t);
  }

  // Block of position t when original vertex v is placed there; positions
  // below t use perm.
  std::uint32_t block(int t, int v) const {
    std::uint32_t b = d.arc(v, v);
    for (int s = 0; s < t; ++s) {
      const int u = perm[s];
      b = (b << 2) | (std::uint32_t(d.arc(u, v)) << 1) | std::uint32_t(d.arc(v, u));
    }
    return b;
  }

  // False as soon as some relabeling beats the identity code.
  bool search(int t) {
    if (t == d.n) return true;
    for (int v = 0; v < d.n; ++v) {
      if ((used >> v) & 1u) continue;
      const std::uint32_t b = block(t, v);
      if (b > target[t]) continue;
      if (b < target[t]) return false;
      perm[t] = v;
      used |= std::uint8_t(1u << v);
      const bool ok = search(t + 1);
      used &= std::uint8_t(~(1u << v));
      if (!ok) return false;
    }
    return true;
  }
};

bool triangle_free_extension(const Digraph& parent, std::uint8_t neighbours) {
  for (int s = 0; s < parent.n; ++s) {
    if (!((neighbours >> s) & 1u)) continue;
    std::uint8_t adj = 0;
    for (int u = 0; u < parent.n; ++u)
      if (u != s && (parent.arc(s, u) || parent.arc(u, s))) adj |= std::uint8_t(1u << u);
    if (adj & neighbours) return false;
  }
  return true;
}

}  // namespace

bool is_orderly_canonical(const Digraph& d) {
  CanonicityCheck check(d);
  return check.search(0);
}

void extend(const Digraph& parent, const SearchFilter& filter,
            const std::function<void(const Digraph&)>& visit) {
  const int m = parent.n;
  if (m >= 8) throw order_too_large(m + 1, 8);
  Digraph child = parent;
  child.n = m + 1;
  const std::uint8_t full = std::uint8_t((1u << m) - 1);

  for (int loop = 0; loop <= 1; ++loop) {
    if (loop && filter.empty_graph_only) continue;
    for (std::uint32_t in = 0; in <= full; ++in) {
      if (in && filter.empty_graph_only) break;
      for (std::uint32_t out = 0; out <= full; ++out) {
        if (filter.undirected_only && out != in) continue;
        if (out && filter.empty_graph_only) break;
        if (filter.triangle_free_only && !triangle_free_extension(parent, std::uint8_t(in | out)))
          continue;
        for (int s = 0; s < m; ++s) {
          child.out[s] = std::uint8_t((parent.out[s] & ~(1u << m)) | (((in >> s) & 1u) << m));
        }
        child.out[m] = std::uint8_t(out | (std::uint32_t(loop) << m));
        if (is_orderly_canonical(child)) visit(child);
      }
    }
  }
}

std::vector<Digraph> canonical_digraphs(int n, const SearchFilter& filter) {
  if (n < 0) throw std::invalid_argument("digraph order must be non-negative");
  if (n > max_generator_order) throw order_too_large(n, max_generator_order);
  std::vector<Digraph> level{Digraph{}};
  for (int m = 0; m < n; ++m) {
    std::vector<Digraph> next;
    for (const Digraph& p : level) extend(p, filter, [&](const Digraph& c) { next.push_back(c); });
    level = std::move(next);
  }
  return level;
}

}  // namespace fusion::detail
