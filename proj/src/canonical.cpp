#include "fusion/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

struct Scratch {
  std::vector<int> loops;
  std::vector<Arc> arcs;
  std::vector<Triple> hyper;
  std::vector<std::uint8_t> bytes;
};

void serialize_into(int order, Scratch& s) {
  std::sort(s.loops.begin(), s.loops.end());
  std::sort(s.arcs.begin(), s.arcs.end());
  for (Triple& t : s.hyper) std::sort(t.begin(), t.end());
  std::sort(s.hyper.begin(), s.hyper.end());

  s.bytes.clear();
  s.bytes.push_back(std::uint8_t(order));
  s.bytes.push_back(std::uint8_t(s.loops.size()));
  for (int v : s.loops) s.bytes.push_back(std::uint8_t(v));
  s.bytes.push_back(std::uint8_t(s.arcs.size()));
  for (const Arc& a : s.arcs) {
    s.bytes.push_back(std::uint8_t(a.first));
    s.bytes.push_back(std::uint8_t(a.second));
  }
  s.bytes.push_back(std::uint8_t(s.hyper.size()));
  for (const Triple& t : s.hyper)
    for (int v : t) s.bytes.push_back(std::uint8_t(v));
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

std::vector<std::uint8_t> serialize(const GraphPair& g) {
  Scratch s;
  s.loops = g.loops();
  s.arcs = g.arcs();
  s.hyper = g.hyperedges();
  serialize_into(g.order(), s);
  return std::move(s.bytes);
}

CanonicalKey canonical_form(const GraphPair& g, int max_order) {
  const int n = g.order();
  if (n > max_order) throw order_too_large(n, max_order);

  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);

  CanonicalKey best;
  best.bytes = serialize(g);
  best.witness = sigma;

  Scratch s;
  auto map = [&](int v) { return sigma[std::size_t(v - 1)]; };
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    s.loops.clear();
    for (int v : g.loops()) s.loops.push_back(map(v));
    s.arcs.clear();
    for (const Arc& a : g.arcs()) s.arcs.emplace_back(map(a.first), map(a.second));
    s.hyper.clear();
    for (const Triple& t : g.hyperedges()) s.hyper.push_back({map(t[0]), map(t[1]), map(t[2])});
    serialize_into(n, s);
    if (s.bytes < best.bytes) {
      best.bytes = s.bytes;
      best.witness = sigma;
    }
  }
  return best;
}

GraphPair canonical_pair(const GraphPair& g, int max_order) {
  return g.relabeled(canonical_form(g, max_order).witness);
}

bool is_isomorphic(const GraphPair& a, const GraphPair& b, int max_order) {
  if (a.order() != b.order()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace fusion
