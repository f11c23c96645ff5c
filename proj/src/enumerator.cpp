#include "fusion/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <thread>

#include "digraph_bits.hpp"
#include "fusion/errors.hpp"

namespace fusion {

using detail::Digraph;

bool SearchFilter::matches(const GraphPair& d) const {
  if (empty_graph_only && (!d.loops().empty() || !d.arcs().empty())) return false;
  if (undirected_only && !is_undirected(d)) return false;
  if (triangle_free_only && !is_triangle_free(d)) return false;
  return true;
}

std::string_view to_string(PruneReason reason) {
  switch (reason) {
    case PruneReason::Filtered: return "Filtered";
    case PruneReason::NegativePairDegree: return "NegativePairDegree";
    case PruneReason::NeighborhoodDegree: return "NeighborhoodDegree";
    case PruneReason::MinDegreeFour: return "MinDegreeFour";
    case PruneReason::ForceLoop: return "ForceLoop";
    case PruneReason::LoopDistance: return "LoopDistance";
    case PruneReason::ForcedLoops: return "ForcedLoops";
  }
  return "Unknown";
}

namespace {

PruneReason reason_for(Lemma lemma) {
  switch (lemma) {
    case Lemma::NeighborhoodDegree: return PruneReason::NeighborhoodDegree;
    case Lemma::MinDegreeFour: return PruneReason::MinDegreeFour;
    case Lemma::ForceLoop: return PruneReason::ForceLoop;
    case Lemma::LoopDistance: return PruneReason::LoopDistance;
    case Lemma::ForcedLoops: return PruneReason::ForcedLoops;
    case Lemma::NegativePairDegree: return PruneReason::NegativePairDegree;
  }
  return PruneReason::Filtered;
}

}  // namespace

PruneDecision prune(const GraphPair& d, const SearchFilter& filter) {
  if (!filter.matches(d)) return {false, PruneReason::Filtered};
  if (!pair_requirements(d).all_non_negative()) return {false, PruneReason::NegativePairDegree};
  if (is_undirected(d)) {
    const std::vector<Obstruction> found = undirected_obstructions(d);
    if (!found.empty()) return {false, reason_for(found.front().lemma)};
  }
  return {true, PruneReason::Filtered};
}

void for_each_digraph(int n, const SearchFilter& filter,
                      const std::function<void(const GraphPair&)>& visit) {
  if (n < 0) throw std::invalid_argument("digraph order must be non-negative");
  if (n > max_generator_order) throw order_too_large(n, max_generator_order);
  if (n == 0) {
    visit(GraphPair(0));
    return;
  }
  for (const Digraph& parent : detail::canonical_digraphs(n - 1, filter)) {
    detail::extend(parent, filter, [&](const Digraph& c) { visit(detail::to_graph_pair(c)); });
  }
}

std::vector<GraphPair> generate_digraphs(int n, const SearchFilter& filter) {
  std::vector<std::pair<CanonicalKey, GraphPair>> keyed;
  for_each_digraph(n, filter, [&](const GraphPair& g) { keyed.emplace_back(canonical_form(g), g); });
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<GraphPair> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

namespace {

constexpr int max_completion_order = 30;

// Rows R[x][y] = { m : N_{xy}^m = 1 } over indices 0..n, as bitmasks.
using Rows = std::vector<std::vector<std::uint32_t>>;

Rows digraph_rows(const GraphPair& d) {
  const int n = d.order();
  Rows r(std::size_t(n) + 1, std::vector<std::uint32_t>(std::size_t(n) + 1, 0));
  for (int y = 0; y <= n; ++y) {
    r[0][y] |= 1u << y;
    r[y][0] |= 1u << y;
    r[y][y] |= 1u;
  }
  for (int v : d.loops()) r[v][v] |= 1u << v;
  for (const Arc& a : d.arcs()) {
    r[a.first][a.first] |= 1u << a.second;
    r[a.first][a.second] |= 1u << a.first;
    r[a.second][a.first] |= 1u << a.first;
  }
  return r;
}

void add_triple(Rows& r, int i, int j, int k) {
  r[i][j] |= 1u << k;
  r[j][i] |= 1u << k;
  r[i][k] |= 1u << j;
  r[k][i] |= 1u << j;
  r[j][k] |= 1u << i;
  r[k][j] |= 1u << i;
}

// (N_i N_j)_{ab} = |R[i][a] & R[j][b]| because every N_i is symmetric.
bool rows_commute(const Rows& r, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b)
          if (std::popcount(r[i][a] & r[j][b]) != std::popcount(r[j][a] & r[i][b])) return false;
  return true;
}

class Completer {
 public:
  Completer(const GraphPair& d, const PairRequirements& w,
            const std::function<void(const GraphPair&)>& emit, long* tested)
      : d_(d),
        n_(d.order()),
        emit_(emit),
        tested_(tested),
        w_(std::size_t(n_) + 1, std::vector<int>(std::size_t(n_) + 1, 0)),
        count_(w_),
        base_(digraph_rows(d)) {
    for (int i = 1; i <= n_; ++i)
      for (int j = 1; j <= n_; ++j)
        if (i != j) w_[i][j] = w(i, j);
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j) pairs_.emplace_back(i, j);
  }

  void run() {
    if (!feasible()) return;
    fill(0);
  }

 private:
  // Degree-sum conditions every completion satisfies.
  bool feasible() const {
    long total = 0;
    for (int i = 1; i <= n_; ++i) {
      int row = 0;
      for (int j = 1; j <= n_; ++j) {
        if (i == j) continue;
        if (w_[i][j] < 0 || w_[i][j] > n_ - 2) return false;
        row += w_[i][j];
      }
      if (row % 2 != 0) return false;
      total += row;
    }
    return (total / 2) % 3 == 0;
  }

  void place(int a, int b, int c, int delta) {
    count_[a][b] += delta;
    count_[b][a] += delta;
    count_[a][c] += delta;
    count_[c][a] += delta;
    count_[b][c] += delta;
    count_[c][b] += delta;
  }

  bool open(int x, int y) const { return count_[x][y] < w_[x][y]; }

  void fill(std::size_t p) {
    if (p == pairs_.size()) {
      leaf();
      return;
    }
    const auto [a, b] = pairs_[p];
    choose(p, a, b, b + 1, w_[a][b] - count_[a][b]);
  }

  void choose(std::size_t p, int a, int b, int from, int need) {
    if (need < 0) return;
    if (need == 0) {
      fill(p + 1);
      return;
    }
    for (int c = from; c <= n_ - need + 1; ++c) {
      if (!open(a, c) || !open(b, c)) continue;
      place(a, b, c, +1);
      chosen_.push_back({a, b, c});
      choose(p, a, b, c + 1, need - 1);
      chosen_.pop_back();
      place(a, b, c, -1);
    }
  }

  void leaf() {
    if (tested_) ++*tested_;
    Rows r = base_;
    for (const Triple& t : chosen_) add_triple(r, t[0], t[1], t[2]);
    if (!rows_commute(r, n_)) return;
    GraphPair candidate = d_.with_hyperedges(chosen_);
    if (verify(decode(candidate))) return;
    emit_(candidate);
  }

  const GraphPair& d_;
  int n_;
  const std::function<void(const GraphPair&)>& emit_;
  long* tested_;
  std::vector<std::vector<int>> w_;
  std::vector<std::vector<int>> count_;
  Rows base_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<Triple> chosen_;
};

void run_completion(const GraphPair& d, const PairRequirements& w,
                    const std::function<void(const GraphPair&)>& emit, long* tested) {
  if (d.order() > max_completion_order) throw order_too_large(d.order(), max_completion_order);
  if (w.order() != d.order()) throw std::invalid_argument("pair requirements order mismatch");
  Completer(d.without_hyperedges(), w, emit, tested).run();
}

}  // namespace

void complete_hypergraphs(const GraphPair& d, const PairRequirements& w,
                          const std::function<void(const GraphPair&)>& emit) {
  run_completion(d, w, emit, nullptr);
}

std::vector<GraphPair> complete_hypergraphs(const GraphPair& d, const PairRequirements& w) {
  std::vector<GraphPair> out;
  complete_hypergraphs(d, w, [&](const GraphPair& g) { out.push_back(g); });
  return out;
}

std::vector<GraphPair> exhaustive_completions(const GraphPair& d) {
  constexpr int bound = 6;
  const int n = d.order();
  if (n > bound) throw order_too_large(n, bound);
  std::vector<Triple> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) all.push_back({i, j, k});
  std::vector<GraphPair> out;
  const std::uint32_t limit = 1u << all.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<Triple> hyper;
    for (std::size_t t = 0; t < all.size(); ++t)
      if ((mask >> t) & 1u) hyper.push_back(all[t]);
    GraphPair candidate = d.with_hyperedges(std::move(hyper));
    if (!verify(decode(candidate))) out.push_back(std::move(candidate));
  }
  return out;
}

long SearchStats::digraphs_pruned() const {
  long total = 0;
  for (const auto& [reason, count] : digraphs_pruned_by_reason) total += count;
  return total;
}

namespace {

struct WorkerOutput {
  SearchStats stats;
  std::vector<std::pair<CanonicalKey, GraphPair>> found;
};

// w_ij from the packed digraph; the loop bit sits on the diagonal so the
// common out-neighbour count already includes the a_ii a_ji and a_ij a_jj terms.
bool has_negative_requirement(const Digraph& d) {
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j) {
      const int w = 1 + std::popcount(unsigned(d.out[i] & d.out[j])) - d.arc(i, j) - d.arc(j, i);
      if (w < 0) return true;
    }
  return false;
}

bool packed_undirected(const Digraph& d) {
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      if (d.arc(i, j) != d.arc(j, i)) return false;
  return true;
}

void process_digraph(const Digraph& packed, const SearchFilter& filter, WorkerOutput& out) {
  ++out.stats.digraphs_generated;
  // Same decision sequence as prune(); the filter already holds by
  // construction and the negative-requirement test runs on the packed form.
  if (has_negative_requirement(packed)) {
    ++out.stats.digraphs_pruned_by_reason[PruneReason::NegativePairDegree];
    return;
  }
  const GraphPair d = detail::to_graph_pair(packed);
  if (packed_undirected(packed)) {
    const PruneDecision decision = prune(d, filter);
    if (!decision.keep) {
      ++out.stats.digraphs_pruned_by_reason[decision.reason];
      return;
    }
  }
  ++out.stats.digraphs_kept;
  run_completion(d, pair_requirements(d),
                 [&](const GraphPair& ring) {
                   CanonicalKey key = canonical_form(ring);
                   GraphPair rep = ring.relabeled(key.witness);
                   out.found.emplace_back(std::move(key), std::move(rep));
                 },
                 &out.stats.completions_tested);
}

EnumerationResult collect(int rank, std::vector<std::pair<CanonicalKey, GraphPair>> found) {
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  EnumerationResult result;
  result.rank = rank;
  for (auto& [key, pair] : found) {
    if (!result.rings.empty() && result.rings.back().key == key) continue;
    EnumeratedRing ring;
    ring.invariants = ring_invariants(decode(pair));
    ring.pair = std::move(pair);
    ring.key = std::move(key);
    result.rings.push_back(std::move(ring));
  }
  return result;
}

}  // namespace

EnumerationResult search(int rank, const SearchFilter& filter, SearchOptions options) {
  const auto start = std::chrono::steady_clock::now();
  if (rank < 2) throw std::invalid_argument("search rank must be at least 2");
  const int n = rank - 1;
  if (n > max_generator_order) throw order_too_large(n, max_generator_order);

  const std::vector<Digraph> parents = detail::canonical_digraphs(n - 1, filter);
  const int jobs = std::max(1, options.jobs);
  std::vector<WorkerOutput> outputs(static_cast<std::size_t>(jobs));
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&](WorkerOutput& out) {
    try {
      for (std::size_t p = next++; p < parents.size(); p = next++) {
        detail::extend(parents[p], filter,
                       [&](const Digraph& child) { process_digraph(child, filter, out); });
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };

  if (jobs == 1) {
    worker(outputs[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(std::size_t(jobs));
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, std::ref(outputs[std::size_t(t)]));
    for (std::thread& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  std::vector<std::pair<CanonicalKey, GraphPair>> found;
  SearchStats stats;
  for (WorkerOutput& out : outputs) {
    stats.digraphs_generated += out.stats.digraphs_generated;
    stats.digraphs_kept += out.stats.digraphs_kept;
    stats.completions_tested += out.stats.completions_tested;
    for (const auto& [reason, count] : out.stats.digraphs_pruned_by_reason)
      stats.digraphs_pruned_by_reason[reason] += count;
    std::move(out.found.begin(), out.found.end(), std::back_inserter(found));
  }

  EnumerationResult result = collect(rank, std::move(found));
  result.stats = std::move(stats);
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

EnumerationResult brute_force_oracle(int rank) {
  const auto start = std::chrono::steady_clock::now();
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (rank > max_oracle_rank) throw order_too_large(rank - 1, max_oracle_rank - 1);
  const int n = rank - 1;

  std::vector<Triple> slots;  // multisets {i,j,k} over 1..n: iii, iij (i != j), ijk
  for (int i = 1; i <= n; ++i) slots.push_back({i, i, i});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) slots.push_back({i, i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) slots.push_back({i, j, k});

  std::vector<std::pair<CanonicalKey, GraphPair>> found;
  long tested = 0;
  const std::uint64_t limit = std::uint64_t(1) << slots.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    FusionData f(rank);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) f.set(slots[s][0], slots[s][1], slots[s][2]);
    ++tested;
    if (verify(f)) continue;
    const GraphPair g = encode(f);
    CanonicalKey key = canonical_form(g);
    GraphPair rep = g.relabeled(key.witness);
    found.emplace_back(std::move(key), std::move(rep));
  }
  EnumerationResult result = collect(rank, std::move(found));
  result.stats.completions_tested = tested;
  result.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace fusion
