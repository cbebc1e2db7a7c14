#pragma once

/// @file prekite.hpp
/// @brief Simplices with a regular facet. A pre-kite PK[n;u;v1..vn] has apex at
/// vertex 0, squared apex edges v_j to vertex j and squared base edge u
/// between any two base vertices. All parameters are squared lengths.

#include "prekite/cayley.hpp"
#include "prekite/numkernel.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prekite {

class PreKite {
 public:
  PreKite(Scalar base_sq, std::vector<Scalar> apex_sq) : base_sq_(std::move(base_sq)), apex_sq_(std::move(apex_sq)) {
    if (apex_sq_.size() < 2) throw InputError("a pre-kite needs dimension n >= 2");
    if (base_sq_ <= 0) throw InputError("squared base edge must be positive");
    for (const auto& v : apex_sq_)
      if (v <= 0) throw InputError("squared apex edges must be positive");
    edge_sum_ = base_sq_;
    edge_square_sum_ = base_sq_ * base_sq_;
    for (const auto& v : apex_sq_) {
      edge_sum_ += v;
      edge_square_sum_ += v * v;
    }
  }

  /// Kite PK[n;u;v,...,v].
  static PreKite kite(std::size_t n, const Scalar& base_sq, const Scalar& apex_sq) {
    return PreKite(base_sq, std::vector<Scalar>(n, apex_sq));
  }

  /// Two-apexed pre-kite PK[n;u;u,...,u,v].
  static PreKite two_apexed(std::size_t n, const Scalar& base_sq, const Scalar& odd_sq) {
    std::vector<Scalar> v(n, base_sq);
    v.back() = odd_sq;
    return PreKite(base_sq, std::move(v));
  }

  std::size_t dimension() const noexcept { return apex_sq_.size(); }
  const Scalar& base_sq() const noexcept { return base_sq_; }
  std::span<const Scalar> apex_sq() const noexcept { return apex_sq_; }
  /// Squared apex edge to vertex j, 1 <= j <= n.
  const Scalar& apex_sq(std::size_t j) const { return apex_sq_.at(j - 1); }

  /// u + v1 + ... + vn
  const Scalar& edge_sum() const noexcept { return edge_sum_; }
  /// u^2 + v1^2 + ... + vn^2
  const Scalar& edge_square_sum() const noexcept { return edge_square_sum_; }

  friend bool operator==(const PreKite& a, const PreKite& b) {
    return a.base_sq_ == b.base_sq_ && a.apex_sq_ == b.apex_sq_;
  }

 private:
  Scalar base_sq_;
  std::vector<Scalar> apex_sq_;
  Scalar edge_sum_;
  Scalar edge_square_sum_;
};

inline SquaredDistanceMatrix to_sdm(const PreKite& pk) {
  const std::size_t n = pk.dimension();
  std::vector<std::vector<Scalar>> rows(n + 1, std::vector<Scalar>(n + 1, pk.base_sq()));
  for (std::size_t i = 0; i <= n; ++i) rows[i][i] = 0;
  for (std::size_t j = 1; j <= n; ++j) rows[0][j] = rows[j][0] = pk.apex_sq(j);
  return SquaredDistanceMatrix(n, std::move(rows));
}

namespace detail {

inline Scalar neg_power(const Scalar& u, std::size_t exponent) {
  Scalar p = power(u, static_cast<unsigned>(exponent));
  return (exponent % 2 == 0) ? p : Scalar(-p);
}

inline void require_facet_index(const PreKite& pk, std::size_t j) {
  if (pk.dimension() < 3) throw InputError("facet closed forms need n >= 3");
  if (j > pk.dimension()) throw InputError("facet index " + std::to_string(j) + " out of range");
}

}  // namespace detail

/// Cayley-Menger determinant (-u)^(n-2) [n beta - alpha^2]. The closed form is
/// used for n >= 3; n = 2 goes through the generic determinant.
inline Scalar pk_cm_det(const PreKite& pk) {
  const std::size_t n = pk.dimension();
  if (n == 2) return cm_det(to_sdm(pk));
  const Scalar& alpha = pk.edge_sum();
  return detail::neg_power(pk.base_sq(), n - 2) * (Scalar(n) * pk.edge_square_sum() - alpha * alpha);
}

/// Inner determinant (-u)^(n-1) [(n-1) sum v^2 - (sum v)^2].
inline Scalar pk_inner_cm_det(const PreKite& pk) {
  const std::size_t n = pk.dimension();
  if (n == 2) return inner_cm_det(to_sdm(pk));
  Scalar sum = 0, sum_sq = 0;
  for (const auto& v : pk.apex_sq()) {
    sum += v;
    sum_sq += v * v;
  }
  return detail::neg_power(pk.base_sq(), n - 1) * (Scalar(n - 1) * sum_sq - sum * sum);
}

/// Cayley-Menger determinant of the facet opposite vertex j (n >= 3).
inline Scalar pk_facet_cm(const PreKite& pk, std::size_t j) {
  detail::require_facet_index(pk, j);
  const std::size_t n = pk.dimension();
  const Scalar& u = pk.base_sq();
  if (j == 0) {
    Scalar c = Scalar(n) * power(u, static_cast<unsigned>(n - 1));
    return (n % 2 == 0) ? c : Scalar(-c);
  }
  const Scalar& alpha = pk.edge_sum();
  const Scalar& beta = pk.edge_square_sum();
  const Scalar& v = pk.apex_sq(j);
  return detail::neg_power(u, n - 3) * (-alpha * alpha + Scalar(n - 1) * beta - Scalar(n) * v * v + 2 * alpha * v);
}

/// Inner Cayley-Menger determinant of the facet opposite vertex j (n >= 3).
inline Scalar pk_facet_inner_cm(const PreKite& pk, std::size_t j) {
  detail::require_facet_index(pk, j);
  const std::size_t n = pk.dimension();
  const Scalar& u = pk.base_sq();
  if (j == 0) {
    Scalar d = Scalar(n - 1) * power(u, static_cast<unsigned>(n));
    return (n % 2 == 1) ? d : Scalar(-d);
  }
  const Scalar& alpha = pk.edge_sum();
  const Scalar& beta = pk.edge_square_sum();
  const Scalar& v = pk.apex_sq(j);
  const Scalar k = Scalar(n - 1);
  return detail::neg_power(u, n - 2) *
         (Scalar(n - 2) * beta - alpha * alpha + 2 * alpha * u - k * u * u - k * v * v + 2 * alpha * v - 2 * u * v);
}

struct ApexReport {
  std::vector<std::size_t> apexes;  ///< ascending vertex indices
  bool is_kite = false;
  bool is_regular = false;

  bool is_prekite() const noexcept { return !apexes.empty(); }
};

/// Vertices whose opposite facet is regular. For n = 2 every vertex
/// qualifies, since facets are single edges.
inline ApexReport find_apexes(const SquaredDistanceMatrix& d) {
  const std::size_t n = d.dimension();
  if (n < 2) throw InputError("apex enumeration needs n >= 2");
  ApexReport report;
  report.is_regular = d.is_regular();
  for (std::size_t j = 0; j <= n; ++j) {
    std::optional<Scalar> common;
    bool regular_facet = true;
    for (std::size_t i = 0; i <= n && regular_facet; ++i) {
      if (i == j) continue;
      for (std::size_t k = i + 1; k <= n; ++k) {
        if (k == j) continue;
        if (!common)
          common = d(i, k);
        else if (d(i, k) != *common) {
          regular_facet = false;
          break;
        }
      }
    }
    if (!regular_facet) continue;
    report.apexes.push_back(j);
    std::optional<Scalar> spoke;
    bool equal_spokes = true;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == j) continue;
      if (!spoke)
        spoke = d(j, i);
      else if (d(j, i) != *spoke)
        equal_spokes = false;
    }
    if (equal_spokes) report.is_kite = true;
  }
  return report;
}

/// Open interval (lower, upper) of rationals.
struct OpenInterval {
  Scalar lower;
  Scalar upper;

  bool contains(const Scalar& x) const { return lower < x && x < upper; }
};

/// Window (0, 2n/(n-1)) for the ratio v/u of SQUARED lengths under which
/// PK[n;u;u,...,u,v] is a nondegenerate simplex.
inline OpenInterval apex_squared_ratio_window(std::size_t n) {
  if (n < 2) throw InputError("window defined for n >= 2");
  return {Scalar(0), Scalar(2 * n) / Scalar(n - 1)};
}

inline bool two_apexed_feasible(std::size_t n, const Scalar& base_sq, const Scalar& odd_sq) {
  if (base_sq <= 0 || odd_sq <= 0) throw InputError("squared lengths must be positive");
  return apex_squared_ratio_window(n).contains(odd_sq / base_sq);
}

}  // namespace prekite
