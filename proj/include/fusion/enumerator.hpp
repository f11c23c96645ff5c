#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/canonical.hpp"
#include "fusion/graph_model.hpp"
#include "fusion/graph_pair.hpp"
#include "fusion/ring.hpp"

namespace fusion {

/// Largest digraph order the generator accepts (rank 8).
inline constexpr int max_generator_order = 7;
/// Largest rank the exhaustive constant sweep accepts.
inline constexpr int max_oracle_rank = 5;

struct SearchFilter {
  bool undirected_only = false;
  bool triangle_free_only = false;  // on the symmetrized arc set
  bool empty_graph_only = false;    // no loops and no arcs

  bool matches(const GraphPair& d) const;
};

enum class PruneReason {
  Filtered,
  NegativePairDegree,
  NeighborhoodDegree,
  MinDegreeFour,
  ForceLoop,
  LoopDistance,
  ForcedLoops,
};

std::string_view to_string(PruneReason reason);

struct PruneDecision {
  bool keep = true;
  PruneReason reason = PruneReason::Filtered;  // meaningful only when !keep
};

/// Filter mismatch first, then any negative pair requirement, then (fully
/// undirected digraphs only) the first structural obstruction.
PruneDecision prune(const GraphPair& d, const SearchFilter& filter = {});

/// One representative per isomorphism class of looped digraphs on n
/// vertices, generated by vertex augmentation with canonical rejection and
/// delivered in generation order. Filters are hereditary and are applied
/// during augmentation. Throws order_too_large for n > max_generator_order.
void for_each_digraph(int n, const SearchFilter& filter,
                      const std::function<void(const GraphPair&)>& visit);

/// Collected form of for_each_digraph, sorted by CanonicalKey.
std::vector<GraphPair> generate_digraphs(int n, const SearchFilter& filter = {});

/// Every hyperedge set in which each pair {i, j} lies in exactly w(i, j)
/// hyperedges and whose pair with d verifies; pairs are filled in
/// lexicographic order with third vertices tried ascending.
void complete_hypergraphs(const GraphPair& d, const PairRequirements& w,
                          const std::function<void(const GraphPair&)>& emit);
std::vector<GraphPair> complete_hypergraphs(const GraphPair& d, const PairRequirements& w);

/// All 2^C(n,3) hyperedge sets of d, keeping those that verify. Ignores pair
/// requirements entirely; order bound 6.
std::vector<GraphPair> exhaustive_completions(const GraphPair& d);

struct EnumeratedRing {
  GraphPair pair;  // canonical representative
  CanonicalKey key;
  RingInvariants invariants;
  std::optional<std::string> catalog_name;
};

struct SearchStats {
  long digraphs_generated = 0;
  long digraphs_kept = 0;
  std::map<PruneReason, long> digraphs_pruned_by_reason;
  long completions_tested = 0;
  double elapsed_seconds = 0.0;

  long digraphs_pruned() const;
};

struct EnumerationResult {
  int rank = 0;
  std::vector<EnumeratedRing> rings;  // ascending key, keys distinct
  SearchStats stats;
};

struct SearchOptions {
  int jobs = 1;
};

/// generate -> prune -> complete -> verify -> canonicalize -> dedupe.
/// Output is independent of options.jobs. Ranks 2..8.
EnumerationResult search(int rank, const SearchFilter& filter = {}, SearchOptions options = {});

/// Every symmetric 0/1 constant assignment of the given rank, verified and
/// deduplicated. Shares no code with search() beyond verify() and
/// canonical_form(). Ranks 1..max_oracle_rank.
EnumerationResult brute_force_oracle(int rank);

}  // namespace fusion
