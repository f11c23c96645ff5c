#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fusion {

/// Structure constants of a self-dual, multiplicity-free fusion ring.
///
/// Index 0 is the unit. Only constants on non-unit indices are stored; the
/// unit rules N_{i0}^k = d_{ik} and N_{ij}^0 = d_{ij} are applied by get().
/// Self-duality makes N_{ij}^k a function of the multiset {i,j,k}, so set()
/// writes all six orderings at once.
class FusionData {
 public:
  explicit FusionData(int rank = 1);

  int rank() const noexcept { return rank_; }

  /// N_{ij}^k for any i, j, k in [0, rank).
  int get(int i, int j, int k) const;

  /// Sets N on the multiset {i,j,k}; every index must lie in [1, rank).
  void set(int i, int j, int k, bool value = true);

  bool operator==(const FusionData&) const = default;

 private:
  std::size_t slot(int i, int j, int k) const;

  int rank_;
  std::vector<std::uint8_t> constants_;
};

/// Square non-negative integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int size) : size_(size), data_(std::size_t(size) * size, 0) {}

  int size() const noexcept { return size_; }
  int& operator()(int row, int col) { return data_[std::size_t(row) * size_ + col]; }
  int operator()(int row, int col) const { return data_[std::size_t(row) * size_ + col]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int size_ = 0;
  std::vector<int> data_;
};

/// (N_i)_{jk} = N_{ij}^k, one matrix per basis element.
using FusionMatrices = std::vector<IntMatrix>;

FusionMatrices fusion_matrices(const FusionData& f);

/// Witness (i, j, a, b) with (N_i N_j)_{ab} != (N_j N_i)_{ab}.
struct CommutatorViolation {
  int i, j, a, b;
  bool operator==(const CommutatorViolation&) const = default;
};

/// Witness (i, j, k, l) where (X_i X_j) X_k and X_i (X_j X_k) disagree on X_l.
struct AssociativityViolation {
  int i, j, k, l;
  bool operator==(const AssociativityViolation&) const = default;
};

/// Empty when every pair of fusion matrices commutes; otherwise the
/// lexicographically least witness.
std::optional<CommutatorViolation> verify(const FusionData& f);

/// Direct associativity check over all index quadruples, independent of the
/// matrix-commutation criterion. Empty when associative.
std::optional<AssociativityViolation> associativity_oracle(const FusionData& f);

struct RingInvariants {
  long loop_sum = 0;
  long arc_sum = 0;
  long triple_sum = 0;  // unordered triples of distinct indices
  long trace_sum = 0;   // sum of Tr N_i over all i, unit included
  long total_sum = 0;   // N over multisets {i,j,k}, unit included
  std::vector<double> fp_dims;
  double fp_total = 0.0;

  bool operator==(const RingInvariants&) const = default;
};

struct FpDimensions {
  std::vector<double> dims;
  double total = 0.0;
};

inline constexpr double default_fp_tolerance = 1e-9;
inline constexpr long default_fp_iteration_budget = 1'000'000;

/// Frobenius-Perron eigenvalue of every fusion matrix by power iteration from
/// the all-ones vector. Throws non_convergence when the residual does not
/// drop below tol inside the iteration budget.
FpDimensions fp_dimensions(const FusionData& f, double tol = default_fp_tolerance,
                           long max_iterations = default_fp_iteration_budget);

/// Integer invariants only; fp_dims stays empty and fp_total zero.
RingInvariants invariant_tuple(const FusionData& f);

/// invariant_tuple plus FP dimensions. Requires a valid ring.
RingInvariants ring_invariants(const FusionData& f, double tol = default_fp_tolerance);

/// Deligne product. Index (a, b) maps to a * f2.rank() + b, so (0, 0) stays
/// the unit.
FusionData product(const FusionData& f1, const FusionData& f2);

}  // namespace fusion
