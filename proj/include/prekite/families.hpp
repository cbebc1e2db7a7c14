#pragma once

/// @file families.hpp
/// @brief Recognition of the orthocentric, circumscriptible, isodynamic and
/// tetra-isogonic families through their vertex weight vectors, and the
/// combined classification with apex detection.
///
/// A family fit always produces a candidate beta and a residual; membership is
/// the verdict on that candidate. Orthocentric recovery is exact, the other
/// three need square roots and work in double precision with a residual
/// relative to the largest squared (or unsquared) edge.

#include "prekite/cayley.hpp"
#include "prekite/geometry.hpp"
#include "prekite/numkernel.hpp"
#include "prekite/prekite.hpp"


#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace prekite {

enum class Family { orthocentric, circumscriptible, isodynamic, tetra_isogonic };

inline constexpr std::array<Family, 4> all_families = {Family::orthocentric, Family::circumscriptible,
                                                       Family::isodynamic, Family::tetra_isogonic};

inline const char* to_string(Family f) {
  switch (f) {
    case Family::orthocentric: return "orthocentric";
    case Family::circumscriptible: return "circumscriptible";
    case Family::isodynamic: return "isodynamic";
    case Family::tetra_isogonic: return "tetra_isogonic";
  }
  return "unknown";
}

struct BetaVector {
  Family family = Family::orthocentric;
  std::vector<double> beta;
  std::optional<std::vector<Scalar>> exact_beta;  ///< orthocentric only
  double residual = 0;
  bool member = false;
  std::string diagnostic;
};

/// Squared distances induced by a weight profile:
///   orthocentric a_ij = b_i + b_j, circumscriptible a_ij = (b_i + b_j)^2,
///   isodynamic a_ij = b_i b_j, tetra-isogonic a_ij = b_i^2 + b_i b_j + b_j^2.
inline SquaredDistanceMatrix family_matrix(Family f, const std::vector<Scalar>& beta) {
  const std::size_t m = beta.size();
  if (m < 2) throw InputError("need at least two weights");
  std::vector<std::vector<Scalar>> rows(m, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      const Scalar& p = beta[i];
      const Scalar& q = beta[j];
      switch (f) {
        case Family::orthocentric: rows[i][j] = p + q; break;
        case Family::circumscriptible: rows[i][j] = (p + q) * (p + q); break;
        case Family::isodynamic: rows[i][j] = p * q; break;
        case Family::tetra_isogonic: rows[i][j] = p * p + p * q + q * q; break;
      }
    }
  return SquaredDistanceMatrix(m - 1, std::move(rows));
}

namespace detail {

/// Lowest-index pair of vertices distinct from i.
inline std::pair<std::size_t, std::size_t> partner_pair(std::size_t i) {
  if (i == 0) return {1, 2};
  if (i == 1) return {0, 2};
  return {0, 1};
}

inline void require_family_dimension(const SquaredDistanceMatrix& d) {
  if (d.dimension() < 2) throw InputError("family recovery needs n >= 2");
}

inline double max_entry(const SquaredDistanceMatrix& d) {
  double m = 0;
  for (std::size_t i = 0; i < d.vertex_count(); ++i)
    for (std::size_t j = i + 1; j < d.vertex_count(); ++j) m = std::max(m, to_double(d(i, j)));
  return m;
}

}  // namespace detail

/// b_i = (a_ij + a_ik - a_jk) / 2, verified on every pair exactly.
inline BetaVector fit_orthocentric(const SquaredDistanceMatrix& d) {
  detail::require_family_dimension(d);
  const std::size_t m = d.vertex_count();
  std::vector<Scalar> beta(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto [j, k] = detail::partner_pair(i);
    beta[i] = (d(i, j) + d(i, k) - d(j, k)) / 2;
  }
  BetaVector out;
  out.family = Family::orthocentric;
  Scalar worst = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) worst = std::max(worst, Scalar(abs(d(i, j) - beta[i] - beta[j])));
  out.residual = to_double(worst);
  out.member = worst == 0;
  if (!out.member) out.diagnostic = "pairwise sums do not reproduce the matrix";
  for (const auto& b : beta) out.beta.push_back(to_double(b));
  out.exact_beta = std::move(beta);
  return out;
}

/// b_i = (l_ij + l_ik - l_jk) / 2 on unsquared lengths.
inline BetaVector fit_circumscriptible(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  detail::require_family_dimension(d);
  const std::size_t m = d.vertex_count();
  const auto len = [&](std::size_t i, std::size_t j) { return std::sqrt(to_double(d(i, j))); };
  BetaVector out;
  out.family = Family::circumscriptible;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [j, k] = detail::partner_pair(i);
    out.beta.push_back((len(i, j) + len(i, k) - len(j, k)) / 2);
  }
  const double scale = std::sqrt(detail::max_entry(d));
  double worst = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) worst = std::max(worst, std::abs(len(i, j) - out.beta[i] - out.beta[j]));
  out.residual = worst / scale;
  const bool positive = std::all_of(out.beta.begin(), out.beta.end(), [](double b) { return b > 0; });
  out.member = positive && out.residual <= tol;
  if (!positive)
    out.diagnostic = "non-positive weight";
  else if (!out.member)
    out.diagnostic = "pairwise sums do not reproduce the edge lengths";
  return out;
}

/// b_i = sqrt(a_ij a_ik / a_jk).
inline BetaVector fit_isodynamic(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  detail::require_family_dimension(d);
  const std::size_t m = d.vertex_count();
  BetaVector out;
  out.family = Family::isodynamic;
  for (std::size_t i = 0; i < m; ++i) {
    const auto [j, k] = detail::partner_pair(i);
    out.beta.push_back(std::sqrt(to_double(d(i, j) * d(i, k) / d(j, k))));
  }
  double worst = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      worst = std::max(worst, std::abs(to_double(d(i, j)) - out.beta[i] * out.beta[j]));
  out.residual = worst / detail::max_entry(d);
  out.member = out.residual <= tol;
  if (!out.member) out.diagnostic = "pairwise products do not reproduce the matrix";
  return out;
}

/// With p = a01, q = a02, r = a12 and s = b0 + b1 + b2:
///   p - q = (b1 - b2) s,  p - r = (b0 - b2) s,  q - r = (b0 - b1) s,
/// and s solves s^4 - sigma s^2 + Q/2 = 0 with sigma = p + q + r and
/// Q = (p-q)^2 + (p-r)^2 + (q-r)^2. Positive weights force s^2 > sigma/2,
/// which selects the larger root in s^2. Remaining weights
/// follow from a_0m = b0^2 + b0 bm + bm^2.
inline BetaVector fit_tetra_isogonic(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  detail::require_family_dimension(d);
  const std::size_t m = d.vertex_count();
  BetaVector out;
  out.family = Family::tetra_isogonic;

  const double p = to_double(d(0, 1)), q = to_double(d(0, 2)), r = to_double(d(1, 2));
  const double sigma = p + q + r;
  const double spread = (p - q) * (p - q) + (p - r) * (p - r) + (q - r) * (q - r);
  const double disc = sigma * sigma - 2 * spread;
  if (disc < 0) {
    out.diagnostic = "no real root for the weight sum";
    out.residual = std::numeric_limits<double>::infinity();
    return out;
  }
  // The larger root in s^2 is the one with s^2 >= sigma/2.
  const double s = std::sqrt((sigma + std::sqrt(disc)) / 2);

  out.beta.resize(m);
  out.beta[2] = (s - (p - q) / s - (p - r) / s) / 3;
  out.beta[1] = out.beta[2] + (p - q) / s;
  out.beta[0] = out.beta[2] + (p - r) / s;
  const double b0 = out.beta[0];
  for (std::size_t k = 3; k < m; ++k) {
    const double radicand = 4 * to_double(d(0, k)) - 3 * b0 * b0;
    if (radicand < 0) {
      out.diagnostic = "no real weight for vertex " + std::to_string(k);
      out.residual = std::numeric_limits<double>::infinity();
      out.beta.resize(k);
      return out;
    }
    out.beta[k] = (-b0 + std::sqrt(radicand)) / 2;
  }

  double worst = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double bi = out.beta[i], bj = out.beta[j];
      worst = std::max(worst, std::abs(to_double(d(i, j)) - (bi * bi + bi * bj + bj * bj)));
    }
  out.residual = worst / detail::max_entry(d);
  const bool positive = std::all_of(out.beta.begin(), out.beta.end(), [](double b) { return b > 0; });
  out.member = positive && out.residual <= tol;
  if (!positive)
    out.diagnostic = "non-positive weight";
  else if (!out.member)
    out.diagnostic = "weights do not reproduce the matrix";
  return out;
}

inline BetaVector fit_family(Family f, const SquaredDistanceMatrix& d, double tol = 1e-9) {
  switch (f) {
    case Family::orthocentric: return fit_orthocentric(d);
    case Family::circumscriptible: return fit_circumscriptible(d, tol);
    case Family::isodynamic: return fit_isodynamic(d, tol);
    case Family::tetra_isogonic: return fit_tetra_isogonic(d, tol);
  }
  throw InputError("unknown family");
}

namespace detail {

inline std::optional<BetaVector> member_only(BetaVector b) {
  if (!b.member) return std::nullopt;
  return b;
}

}  // namespace detail

inline std::optional<BetaVector> recover_orthocentric(const SquaredDistanceMatrix& d) {
  return detail::member_only(fit_orthocentric(d));
}
inline std::optional<BetaVector> recover_circumscriptible(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  return detail::member_only(fit_circumscriptible(d, tol));
}
inline std::optional<BetaVector> recover_isodynamic(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  return detail::member_only(fit_isodynamic(d, tol));
}
inline std::optional<BetaVector> recover_tetra_isogonic(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  return detail::member_only(fit_tetra_isogonic(d, tol));
}

struct ClassificationReport {
  std::size_t n = 0;
  RealizabilityVerdict realizability;
  ApexReport apexes;
  std::vector<BetaVector> families;  ///< one entry per Family, in enum order
  /// Family membership and pre-kite status with n >= 3 must entail a kite.
  bool kite_consistency = true;

  bool member_of_any() const {
    return std::any_of(families.begin(), families.end(), [](const BetaVector& b) { return b.member; });
  }
  const BetaVector& family(Family f) const { return families.at(static_cast<std::size_t>(f)); }
};

/// Requires a nondegenerate simplex; family membership is not defined
/// otherwise.
inline ClassificationReport classify(const SquaredDistanceMatrix& d, double tol = 1e-9) {
  ClassificationReport r;
  r.n = d.dimension();
  r.realizability = is_realizable(d);
  if (!r.realizability.nondegenerate()) throw NotRealizableError("classification needs a simplex", r.realizability);
  if (r.n < 2) throw InputError("classification needs n >= 2");
  r.apexes = find_apexes(d);
  for (Family f : all_families) r.families.push_back(fit_family(f, d, tol));
  if (r.n >= 3 && r.apexes.is_prekite() && r.member_of_any()) r.kite_consistency = r.apexes.is_kite;
  return r;
}

}  // namespace prekite
