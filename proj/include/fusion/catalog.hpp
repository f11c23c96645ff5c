#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/canonical.hpp"
#include "fusion/enumerator.hpp"
#include "fusion/graph_pair.hpp"

namespace fusion {

struct CatalogEntry {
  std::string name;  // empty for table rows without a class name
  GraphPair pair;
  int rank = 0;
  std::string source;
};

/// Reference rings: every row of the rank 2-7 tables, the Rep(Z3^2 x| Z2)
/// presentation, and pairwise Deligne products of the named entries.
/// Immutable after construction; lookups are safe from any thread.
class Catalog {
 public:
  /// Products are materialized up to max_product_rank.
  explicit Catalog(int max_product_rank = 9);

  /// Shared instance with the default product bound.
  static const Catalog& standard();

  const std::vector<CatalogEntry>& builtins() const noexcept { return builtins_; }
  /// Products "A⊠B" (A before B in catalog order) sorted by name, one per
  /// isomorphism class, skipping classes that already have a named builtin.
  const std::vector<CatalogEntry>& products() const noexcept { return products_; }

  std::vector<CatalogEntry> entries_of_rank(int rank) const;

  /// First named builtin isomorphic to g, else the first product (in name
  /// order) isomorphic to g.
  std::optional<std::string> match(const GraphPair& g) const;

  /// Fills catalog_name on every ring.
  void annotate(EnumerationResult& result) const;

 private:
  std::vector<CatalogEntry> builtins_;
  std::vector<CatalogEntry> products_;
  std::vector<CanonicalKey> builtin_keys_;
  std::vector<CanonicalKey> product_keys_;
};

std::optional<std::string> match_catalog(const GraphPair& g);

/// 3-subsets of {1..points}.
struct TripleSystem {
  int points = 0;
  std::vector<Triple> triples;
  bool operator==(const TripleSystem&) const = default;
};

/// Triples {a, b, a xor b} on the nonzero k-bit strings; points = 2^k - 1.
TripleSystem boolean_sts(int k);

/// Every pair of points lies in exactly one triple.
bool is_steiner(const TripleSystem& ts);

/// Whether the empty digraph with ts as hypergraph verifies.
bool sts_generates_ring(const TripleSystem& ts);

/// Affine plane of order 3: a Steiner triple system on 9 points.
TripleSystem grid_sts9();

using Edge = std::pair<int, int>;
using Matching = std::vector<Edge>;

/// Perfect matchings on vertices 0..vertices-1 partitioning K_vertices.
struct MatchingDecomposition {
  int vertices = 0;
  std::vector<Matching> matchings;
};

/// Commuting perfect-matching decomposition of K_m by backtracking, where
/// matching k is the one containing {0, k}. Requires m even; throws
/// order_too_large above 8. Empty when none exists.
std::optional<MatchingDecomposition> find_matching_decomposition(int m);

/// Involution of 0..vertices-1 swapping the ends of each edge.
std::vector<int> matching_permutation(const Matching& matching, int vertices);

bool matchings_commute(const Matching& a, const Matching& b, int vertices);

/// Edge-disjoint perfect matchings covering every edge of K_vertices.
bool is_decomposition(const MatchingDecomposition& d);

}  // namespace fusion
