#pragma once

/// @file detkit.hpp
/// @brief Closed forms for the constant-diagonal determinant J(n;a;b) and its
/// bordered generalization K(n;z;x;y;a;b).

#include "prekite/numkernel.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace prekite {

/// Parameters of the bordered determinant: corner `corner`, left border
/// `column` (x), top border `row` (y), off-diagonal `off_diagonal` (a) and
/// diagonal `diagonal` (b) of the inner n x n block.
struct KSpec {
  Scalar corner;
  std::vector<Scalar> column;
  std::vector<Scalar> row;
  Scalar off_diagonal;
  Scalar diagonal;

  std::size_t n() const noexcept { return column.size(); }

  void validate() const {
    if (column.empty()) throw InputError("KSpec requires n >= 1");
    if (column.size() != row.size()) throw InputError("KSpec borders must have equal length");
  }
};

/// n x n matrix with `diagonal` on the diagonal and `off_diagonal` elsewhere.
inline ExactMatrix assemble_j_matrix(std::size_t n, const Scalar& off_diagonal, const Scalar& diagonal) {
  ExactMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j) ? diagonal : off_diagonal;
  return m;
}

/// The (n+1) x (n+1) bordered matrix: row 0 is [z, y...], column 0 is
/// [z, x...]^T, the rest is the J block.
inline ExactMatrix assemble_k_matrix(const KSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n();
  ExactMatrix m(n + 1);
  m(0, 0) = spec.corner;
  for (std::size_t i = 1; i <= n; ++i) {
    m(i, 0) = spec.column[i - 1];
    m(0, i) = spec.row[i - 1];
    for (std::size_t j = 1; j <= n; ++j) m(i, j) = (i == j) ? spec.diagonal : spec.off_diagonal;
  }
  return m;
}

/// ((n-1)a + b)(b - a)^(n-1).
inline Scalar det_j(std::size_t n, const Scalar& off_diagonal, const Scalar& diagonal) {
  if (n == 0) throw InputError("det_j requires n >= 1");
  const Scalar gap = diagonal - off_diagonal;
  return (Scalar(n - 1) * off_diagonal + diagonal) * power(gap, static_cast<unsigned>(n - 1));
}

/// Closed form of the bordered determinant:
///   (b-a)^(n-2) [ ((n-1)a + b)(z(b-a) - Mxy) + a Mx My ],
/// with Mx, My the border sums and Mxy their dot product. For n = 1 the
/// 2x2 value z b - x1 y1 is returned directly.
inline Scalar det_k(const KSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n();
  const Scalar& z = spec.corner;
  const Scalar& a = spec.off_diagonal;
  const Scalar& b = spec.diagonal;
  if (n == 1) return z * b - spec.column[0] * spec.row[0];

  Scalar sum_x = 0, sum_y = 0, sum_xy = 0;
  for (std::size_t j = 0; j < n; ++j) {
    sum_x += spec.column[j];
    sum_y += spec.row[j];
    sum_xy += spec.column[j] * spec.row[j];
  }
  const Scalar gap = b - a;
  const Scalar bracket = (Scalar(n - 1) * a + b) * (z * gap - sum_xy) + a * sum_x * sum_y;
  return power(gap, static_cast<unsigned>(n - 2)) * bracket;
}

}  // namespace prekite
