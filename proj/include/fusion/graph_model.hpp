#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fusion/graph_pair.hpp"
#include "fusion/ring.hpp"

namespace fusion {

/// Rank order + 1 ring: loops give N_{ii}^i, arcs (i, j) give N_{ii}^j and
/// hyperedges {i, j, k} give N_{ij}^k.
FusionData decode(const GraphPair& g);

/// Inverse of decode.
GraphPair encode(const FusionData& f);

/// Number of hyperedges each pair {i, j} must lie in for the fusion matrices
/// to commute. Entries may be negative, meaning no completion exists.
class PairRequirements {
 public:
  explicit PairRequirements(int order = 0)
      : order_(order), w_(std::size_t(order) * std::size_t(order), 0) {}

  int order() const noexcept { return order_; }
  int operator()(int i, int j) const { return w_[index(i, j)]; }
  void set(int i, int j, int value) {
    w_[index(i, j)] = value;
    w_[index(j, i)] = value;
  }
  bool all_non_negative() const;
  bool operator==(const PairRequirements&) const = default;

 private:
  std::size_t index(int i, int j) const {
    return std::size_t(i - 1) * std::size_t(order_) + std::size_t(j - 1);
  }
  int order_;
  std::vector<int> w_;
};

/// w_ij = 1 + sum_k a_ik a_jk - a_ij - a_ji with a_ii the loop indicator.
/// This is the (i, j) entry of N_i N_j = N_j N_i; on undirected graphs it is
/// 1 + sum_k e_ik e_jk - 2 e_ij.
PairRequirements pair_requirements(const GraphPair& g);

/// Hyperedge count of the pair {i, j} in g.
int pair_degree(const GraphPair& g, int i, int j);

enum class Lemma {
  NeighborhoodDegree,
  MinDegreeFour,
  ForceLoop,
  LoopDistance,
  ForcedLoops,
  NegativePairDegree,
};

std::string_view to_string(Lemma lemma);

struct Obstruction {
  Lemma lemma;
  std::vector<int> witness;
  bool operator==(const Obstruction&) const = default;
};

/// Structural obstructions for an undirected looped graph. Every violation
/// found is reported; an empty list means none of the checks exclude g.
/// Throws not_undirected when some arc lacks its reverse.
///
///   NeighborhoodDegree (v, u)  loopless nontrivial component, u in N(v) has
///                              fewer than 2 neighbours inside N(v)
///   MinDegreeFour (v)          loopless nontrivial component, deg(v) < 4
///   ForceLoop (i, j)           loopless edge ij with no common neighbour
///   LoopDistance (i, j)        looped i, j at distance >= 3 (or disconnected)
///   ForcedLoops (i, j, k)      induced path i~j~k, ij in no triangle, and i
///                              or j lacks a loop
///   NegativePairDegree (i, j)  w_ij < 0
std::vector<Obstruction> undirected_obstructions(const GraphPair& g);

struct GraphStats {
  bool is_undirected = true;
  bool is_triangle_free = true;
  int components = 0;
  int loopless_components = 0;  // nontrivial components without a loop
  int min_degree = 0;
  std::vector<int> diameter_per_component;  // components ordered by least vertex
  bool operator==(const GraphStats&) const = default;
};

/// Statistics of the symmetrized arc set (loops ignored for degree and
/// triangles).
GraphStats graph_predicates(const GraphPair& g);

bool is_undirected(const GraphPair& g);
bool is_triangle_free(const GraphPair& g);

/// The generating undirected triangle-free shapes:
///   1  a single looped vertex
///   2  a single edge with exactly one loop
///   3  a single edge looped at both ends plus one isolated loopless vertex
///   4  2^k - 1 isolated loopless vertices (k stored)
struct TriangleFreeFamily {
  int family = 0;
  int k = 0;
  bool operator==(const TriangleFreeFamily&) const = default;
};

/// Empty result means the graph generates no fusion ring. Only the digraph
/// part of g is inspected. Throws not_undirected / not_triangle_free.
std::optional<TriangleFreeFamily> classify_triangle_free(const GraphPair& g);

}  // namespace fusion
