#include "fusion/ring.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fusion/errors.hpp"

namespace fusion {

FusionData::FusionData(int rank) : rank_(rank) {
  if (rank < 1) {
    throw std::invalid_argument("fusion ring rank must be at least 1");
  }
  const std::size_t n = std::size_t(rank - 1);
  constants_.assign(n * n * n, 0);
}

std::size_t FusionData::slot(int i, int j, int k) const {
  const std::size_t n = std::size_t(rank_ - 1);
  return (std::size_t(i - 1) * n + std::size_t(j - 1)) * n + std::size_t(k - 1);
}

int FusionData::get(int i, int j, int k) const {
  if (i == 0) return j == k;
  if (j == 0) return i == k;
  if (k == 0) return i == j;
  return constants_[slot(i, j, k)];
}

void FusionData::set(int i, int j, int k, bool value) {
  for (int x : {i, j, k}) {
    if (x < 1 || x >= rank_) {
      throw std::out_of_range("index " + std::to_string(x) + " outside [1, " +
                              std::to_string(rank_) + ")");
    }
  }
  const std::uint8_t v = value ? 1 : 0;
  constants_[slot(i, j, k)] = v;
  constants_[slot(i, k, j)] = v;
  constants_[slot(j, i, k)] = v;
  constants_[slot(j, k, i)] = v;
  constants_[slot(k, i, j)] = v;
  constants_[slot(k, j, i)] = v;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (size_ != rhs.size_) throw std::invalid_argument("matrix size mismatch");
  IntMatrix out(size_);
  for (int r = 0; r < size_; ++r) {
    for (int m = 0; m < size_; ++m) {
      const int x = (*this)(r, m);
      if (x == 0) continue;
      for (int c = 0; c < size_; ++c) out(r, c) += x * rhs(m, c);
    }
  }
  return out;
}

FusionMatrices fusion_matrices(const FusionData& f) {
  const int r = f.rank();
  FusionMatrices out;
  out.reserve(std::size_t(r));
  for (int i = 0; i < r; ++i) {
    IntMatrix m(r);
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) m(j, k) = f.get(i, j, k);
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<CommutatorViolation> verify(const FusionData& f) {
  const int r = f.rank();
  const FusionMatrices n = fusion_matrices(f);
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
          int ij = 0;
          int ji = 0;
          for (int m = 0; m < r; ++m) {
            ij += n[i](a, m) * n[j](m, b);
            ji += n[j](a, m) * n[i](m, b);
          }
          if (ij != ji) return CommutatorViolation{i, j, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<AssociativityViolation> associativity_oracle(const FusionData& f) {
  const int r = f.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          int left = 0;
          int right = 0;
          for (int m = 0; m < r; ++m) {
            left += f.get(i, j, m) * f.get(m, k, l);
            right += f.get(j, k, m) * f.get(i, m, l);
          }
          if (left != right) return AssociativityViolation{i, j, k, l};
        }
  return std::nullopt;
}

namespace {

// Perron root of a symmetric non-negative matrix, iterating on M + I.
double perron_root(const IntMatrix& m, double tol, long max_iterations) {
  const int size = m.size();
  std::vector<double> x(std::size_t(size), 1.0);
  std::vector<double> mx(static_cast<std::size_t>(size));
  for (long iter = 0; iter < max_iterations; ++iter) {
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    const double norm = std::sqrt(norm2);
    for (double& v : x) v /= norm;

    double rayleigh = 0.0;
    for (int r = 0; r < size; ++r) {
      double s = 0.0;
      for (int c = 0; c < size; ++c) s += m(r, c) * x[std::size_t(c)];
      mx[std::size_t(r)] = s;
      rayleigh += x[std::size_t(r)] * s;
    }
    double residual2 = 0.0;
    for (int r = 0; r < size; ++r) {
      const double d = mx[std::size_t(r)] - rayleigh * x[std::size_t(r)];
      residual2 += d * d;
    }
    if (std::sqrt(residual2) <= tol) return rayleigh;
    for (int r = 0; r < size; ++r) x[std::size_t(r)] += mx[std::size_t(r)];
  }
  throw non_convergence("power iteration did not reach tolerance within " +
                        std::to_string(max_iterations) + " iterations");
}

}  // namespace

FpDimensions fp_dimensions(const FusionData& f, double tol, long max_iterations) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  FpDimensions out;
  const FusionMatrices mats = fusion_matrices(f);
  out.dims.reserve(mats.size());
  for (const IntMatrix& m : mats) {
    const double d = perron_root(m, tol, max_iterations);
    out.dims.push_back(d);
    out.total += d * d;
  }
  return out;
}

RingInvariants invariant_tuple(const FusionData& f) {
  const int r = f.rank();
  RingInvariants inv;
  for (int i = 1; i < r; ++i) {
    inv.loop_sum += f.get(i, i, i);
    for (int j = 1; j < r; ++j) {
      if (j != i) inv.arc_sum += f.get(i, i, j);
    }
    for (int j = i + 1; j < r; ++j)
      for (int k = j + 1; k < r; ++k) inv.triple_sum += f.get(i, j, k);
  }
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) inv.trace_sum += f.get(i, j, j);
    for (int j = i; j < r; ++j)
      for (int k = j; k < r; ++k) inv.total_sum += f.get(i, j, k);
  }
  return inv;
}

RingInvariants ring_invariants(const FusionData& f, double tol) {
  RingInvariants inv = invariant_tuple(f);
  FpDimensions fp = fp_dimensions(f, tol);
  inv.fp_dims = std::move(fp.dims);
  inv.fp_total = fp.total;
  return inv;
}

FusionData product(const FusionData& f1, const FusionData& f2) {
  const int r2 = f2.rank();
  const int rank = f1.rank() * r2;
  FusionData out(rank);
  for (int x = 1; x < rank; ++x)
    for (int y = x; y < rank; ++y)
      for (int z = y; z < rank; ++z) {
        const int v = f1.get(x / r2, y / r2, z / r2) * f2.get(x % r2, y % r2, z % r2);
        if (v != 0) out.set(x, y, z);
      }
  return out;
}

}  // namespace fusion
