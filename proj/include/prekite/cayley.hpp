#pragma once

/// @file cayley.hpp
/// @brief Squared distance matrices and the Cayley-Menger machinery: bordered
/// and inner determinants, volume, circumradius, Gram realizability, facets.

#include "prekite/numkernel.hpp"

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prekite {

/// Symmetric (n+1) x (n+1) matrix of squared vertex distances with zero
/// diagonal and positive off-diagonal entries. Euclidean realizability is NOT
/// part of the invariant; see is_realizable().
class SquaredDistanceMatrix {
 public:
  /// Validates shape, symmetry, zero diagonal and positivity.
  SquaredDistanceMatrix(std::size_t n, std::vector<std::vector<Scalar>> rows) : n_(n) {
    if (n < 1) throw InputError("dimension must be >= 1");
    if (rows.size() != n + 1) throw InputError("expected " + std::to_string(n + 1) + " rows");
    entries_.reserve((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
      if (rows[i].size() != n + 1) throw InputError("row " + std::to_string(i) + " has wrong length");
      for (std::size_t j = 0; j <= n; ++j) entries_.push_back(std::move(rows[i][j]));
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if ((*this)(i, i) != 0) throw InputError("diagonal entry " + std::to_string(i) + " is not zero");
      for (std::size_t j = i + 1; j <= n; ++j) {
        if ((*this)(i, j) != (*this)(j, i))
          throw InputError("matrix is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if ((*this)(i, j) <= 0)
          throw InputError("off-diagonal entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not positive");
      }
    }
  }

  /// Builds the matrix from the strict upper triangle given row by row:
  /// a01, a02, ..., a0n, a12, ..., a(n-1)n.
  static SquaredDistanceMatrix from_upper(std::size_t n, std::span<const Scalar> upper) {
    if (upper.size() != n * (n + 1) / 2) throw InputError("upper triangle has wrong length");
    std::vector<std::vector<Scalar>> rows(n + 1, std::vector<Scalar>(n + 1));
    std::size_t k = 0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) rows[i][j] = rows[j][i] = upper[k++];
    return SquaredDistanceMatrix(n, std::move(rows));
  }

  /// Regular n-simplex with squared edge `edge_sq`.
  static SquaredDistanceMatrix regular(std::size_t n, const Scalar& edge_sq = 1) {
    std::vector<std::vector<Scalar>> rows(n + 1, std::vector<Scalar>(n + 1, edge_sq));
    for (std::size_t i = 0; i <= n; ++i) rows[i][i] = 0;
    return SquaredDistanceMatrix(n, std::move(rows));
  }

  std::size_t dimension() const noexcept { return n_; }
  std::size_t vertex_count() const noexcept { return n_ + 1; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * (n_ + 1) + j]; }

  std::vector<std::vector<Scalar>> rows() const {
    std::vector<std::vector<Scalar>> out(n_ + 1);
    for (std::size_t i = 0; i <= n_; ++i) out[i].assign(entries_.begin() + i * (n_ + 1), entries_.begin() + (i + 1) * (n_ + 1));
    return out;
  }

  SquaredDistanceMatrix scaled(const Scalar& factor) const {
    auto r = rows();
    for (auto& row : r)
      for (auto& x : row) x *= factor;
    return SquaredDistanceMatrix(n_, std::move(r));
  }

  /// Vertex i of the result is vertex order[i] of this matrix.
  SquaredDistanceMatrix permuted(std::span<const std::size_t> order) const {
    if (order.size() != n_ + 1) throw InputError("permutation has wrong length");
    std::vector<std::vector<Scalar>> r(n_ + 1, std::vector<Scalar>(n_ + 1));
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = 0; j <= n_; ++j) r[i][j] = (*this)(order[i], order[j]);
    return SquaredDistanceMatrix(n_, std::move(r));
  }

  /// True when all off-diagonal entries coincide.
  bool is_regular() const {
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j)
        if ((*this)(i, j) != (*this)(0, 1)) return false;
    return true;
  }

  friend bool operator==(const SquaredDistanceMatrix&, const SquaredDistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> entries_;
};

enum class Realizability { nondegenerate, degenerate, non_euclidean };

inline const char* to_string(Realizability r) {
  switch (r) {
    case Realizability::nondegenerate: return "nondegenerate";
    case Realizability::degenerate: return "degenerate";
    case Realizability::non_euclidean: return "non-euclidean";
  }
  return "unknown";
}

struct RealizabilityVerdict {
  Realizability status = Realizability::non_euclidean;
  Inertia gram_inertia;

  bool nondegenerate() const noexcept { return status == Realizability::nondegenerate; }
  bool euclidean() const noexcept { return status != Realizability::non_euclidean; }
};

/// Raised when an operation needs cm_det != 0.
class DegenerateSimplexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a matrix cannot be realized as required; carries the verdict.
class NotRealizableError : public std::domain_error {
 public:
  NotRealizableError(const std::string& what, RealizabilityVerdict verdict)
      : std::domain_error(what + " (" + to_string(verdict.status) + ")"), verdict_(verdict) {}
  const RealizabilityVerdict& verdict() const noexcept { return verdict_; }

 private:
  RealizabilityVerdict verdict_;
};

/// (n+2) x (n+2) bordered matrix: zero corner, unit border, squared distances.
inline ExactMatrix cm_matrix(const SquaredDistanceMatrix& d) {
  const std::size_t m = d.vertex_count();
  ExactMatrix c(m + 1);
  for (std::size_t i = 1; i <= m; ++i) {
    c(0, i) = 1;
    c(i, 0) = 1;
    for (std::size_t j = 1; j <= m; ++j) c(i, j) = d(i - 1, j - 1);
  }
  return c;
}

/// The (n+1) x (n+1) matrix of squared distances itself.
inline ExactMatrix inner_cm_matrix(const SquaredDistanceMatrix& d) {
  const std::size_t m = d.vertex_count();
  ExactMatrix c(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) c(i, j) = d(i, j);
  return c;
}

inline Scalar cm_det(const SquaredDistanceMatrix& d) { return exact_determinant(cm_matrix(d)); }

inline Scalar inner_cm_det(const SquaredDistanceMatrix& d) { return exact_determinant(inner_cm_matrix(d)); }

inline Scalar factorial(std::size_t n) {
  Scalar f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= Scalar(k);
  return f;
}

/// Gram matrix of edge vectors from vertex `base`:
/// G[i][j] = (a[b][i] + a[b][j] - a[i][j]) / 2 over the other vertices.
inline ExactMatrix gram_matrix(const SquaredDistanceMatrix& d, std::size_t base = 0) {
  const std::size_t m = d.vertex_count();
  if (base >= m) throw InputError("base vertex out of range");
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < m; ++i)
    if (i != base) others.push_back(i);
  ExactMatrix g(others.size());
  for (std::size_t r = 0; r < others.size(); ++r)
    for (std::size_t c = 0; c < others.size(); ++c) {
      const std::size_t i = others[r], j = others[c];
      g(r, c) = (d(base, i) + d(base, j) - d(i, j)) / 2;
    }
  return g;
}

/// Gram criterion: positive definite means a nondegenerate Euclidean simplex,
/// positive semidefinite and singular means degenerate, anything else is
/// non-Euclidean.
inline RealizabilityVerdict is_realizable(const SquaredDistanceMatrix& d, std::size_t base = 0) {
  RealizabilityVerdict v;
  v.gram_inertia = inertia(gram_matrix(d, base));
  if (v.gram_inertia.negative > 0)
    v.status = Realizability::non_euclidean;
  else if (v.gram_inertia.zero > 0)
    v.status = Realizability::degenerate;
  else
    v.status = Realizability::nondegenerate;
  return v;
}

/// Squared n-volume (-1)^(n+1) C / (2^n (n!)^2). Throws NotRealizableError when
/// the sign convention fails, which only happens for non-Euclidean input.
inline Scalar volume_sq(const SquaredDistanceMatrix& d) {
  const std::size_t n = d.dimension();
  Scalar v = cm_det(d) / (power(Scalar(2), static_cast<unsigned>(n)) * power(factorial(n), 2));
  if (n % 2 == 0) v = -v;
  if (v < 0) throw NotRealizableError("negative squared volume", is_realizable(d));
  return v;
}

/// R^2 = -D / (2C).
inline Scalar circumradius_sq(const SquaredDistanceMatrix& d) {
  const Scalar c = cm_det(d);
  if (c == 0) throw DegenerateSimplexError("circumradius undefined: Cayley-Menger determinant vanishes");
  return -inner_cm_det(d) / (2 * c);
}

/// Matrix of the facet opposite vertex j.
inline SquaredDistanceMatrix facet_sdm(const SquaredDistanceMatrix& d, std::size_t j) {
  const std::size_t n = d.dimension();
  if (n < 2) throw InputError("facets are defined for n >= 2");
  if (j > n) throw InputError("vertex index " + std::to_string(j) + " out of range");
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (i == j) continue;
    std::vector<Scalar> row;
    row.reserve(n);
    for (std::size_t k = 0; k <= n; ++k)
      if (k != j) row.push_back(d(i, k));
    rows.push_back(std::move(row));
  }
  return SquaredDistanceMatrix(n - 1, std::move(rows));
}

}  // namespace prekite
