#pragma once

/// @file relation.hpp
/// @brief The quartic relation between the edge t0 of a regular n-simplex and
/// the distances t1..t(n+1) from a point of its affine hull to the vertices:
///   (n+1) (t0^4 + ... + t(n+1)^4) = (t0^2 + ... + t(n+1)^2)^2.
/// Also the missing-distance solver, the circumsphere criterion and the
/// planar Pompeiu classifier. Everything is computed on squares.

#include "prekite/numkernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace prekite {

/// Edge t0 of a regular n-simplex and the n+1 distances from a point.
struct DistanceTuple {
  double t0 = 1;
  std::vector<double> t;

  std::size_t n() const { return t.empty() ? 0 : t.size() - 1; }

  void validate() const {
    if (!(t0 > 0)) throw InputError("t0 must be positive");
    if (t.size() < 2) throw InputError("need at least two distances");
    for (double x : t)
      if (!(x >= 0)) throw InputError("distances must be non-negative");
  }
};

/// (n+1) sum t^4 - (sum t^2)^2 over t0 and all n+1 distances, in doubles.
inline double rel_residual(const DistanceTuple& dt) {
  dt.validate();
  double s2 = dt.t0 * dt.t0;
  double s4 = s2 * s2;
  for (double x : dt.t) {
    s2 += x * x;
    s4 += x * x * x * x;
  }
  return static_cast<double>(dt.n() + 1) * s4 - s2 * s2;
}

/// Exact residual from squared inputs t0^2 and t_j^2.
inline Scalar rel_residual_squares(const Scalar& t0_sq, std::span<const Scalar> t_sq) {
  if (t0_sq <= 0) throw InputError("t0 must be positive");
  if (t_sq.size() < 2) throw InputError("need at least two distances");
  Scalar s2 = t0_sq, s4 = t0_sq * t0_sq;
  for (const auto& w : t_sq) {
    if (w < 0) throw InputError("squared distances must be non-negative");
    s2 += w;
    s4 += w * w;
  }
  return Scalar(t_sq.size()) * s4 - s2 * s2;
}

/// |residual| / max(t)^4, the scale-free form used for tolerances.
inline double rel_relative_residual(const DistanceTuple& dt) {
  double m = dt.t0;
  for (double x : dt.t) m = std::max(m, x);
  return std::abs(rel_residual(dt)) / (m * m * m * m);
}

struct MissingDistance {
  /// Quadratic n w^2 - 2 S1 w + ((n+1) S2 - S1^2) = 0 in w = t^2; this is
  /// its discriminant divided by 4, (n+1)(S1^2 - n S2).
  Scalar quarter_discriminant;
  std::vector<double> values;         ///< non-negative t, ascending
  std::vector<Scalar> exact_squares;  ///< t^2 when the discriminant is a rational square
};

/// Solves the relation for the one missing squared distance. `known_sq` has
/// n+1 slots with exactly one empty.
inline MissingDistance solve_missing_distance(std::size_t n, const Scalar& t0_sq,
                                              std::span<const std::optional<Scalar>> known_sq) {
  if (n < 1) throw InputError("n must be >= 1");
  if (t0_sq <= 0) throw InputError("t0 must be positive");
  if (known_sq.size() != n + 1) throw InputError("expected n+1 distance slots");
  if (std::count_if(known_sq.begin(), known_sq.end(), [](const auto& k) { return !k.has_value(); }) != 1)
    throw InputError("exactly one distance must be missing");

  Scalar s1 = t0_sq, s2 = t0_sq * t0_sq;
  for (const auto& k : known_sq)
    if (k) {
      if (*k < 0) throw InputError("squared distances must be non-negative");
      s1 += *k;
      s2 += *k * *k;
    }
  const Scalar sn(n);
  MissingDistance out;
  out.quarter_discriminant = Scalar(n + 1) * (s1 * s1 - sn * s2);
  if (out.quarter_discriminant < 0) return out;

  std::vector<Scalar> exact;
  std::vector<double> approx_sq;
  if (const auto root = exact_sqrt(out.quarter_discriminant)) {
    exact.push_back((s1 - *root) / sn);
    if (*root != 0) exact.push_back((s1 + *root) / sn);
    for (const auto& w : exact) approx_sq.push_back(to_double(w));
  } else {
    const double approx_root = std::sqrt(to_double(out.quarter_discriminant));
    const double b = to_double(s1);
    approx_sq = {(b - approx_root) / static_cast<double>(n), (b + approx_root) / static_cast<double>(n)};
  }
  for (std::size_t i = 0; i < approx_sq.size(); ++i) {
    if (approx_sq[i] < 0) continue;
    out.values.push_back(std::sqrt(approx_sq[i]));
    if (!exact.empty()) out.exact_squares.push_back(exact[i]);
  }
  return out;
}

/// Floating convenience form taking lengths.
inline MissingDistance solve_missing_distance(std::size_t n, double t0, std::span<const std::optional<double>> known) {
  std::vector<std::optional<Scalar>> sq;
  for (const auto& k : known) {
    if (k && !(*k >= 0)) throw InputError("distances must be non-negative");
    sq.push_back(k ? std::optional<Scalar>(Scalar(*k) * Scalar(*k)) : std::nullopt);
  }
  return solve_missing_distance(n, Scalar(t0) * Scalar(t0), sq);
}

/// A point of the affine hull is on the circumsphere of the regular simplex
/// with edge u iff its squared vertex distances sum to n u^2. Exact form on
/// squares.
inline bool on_circumsphere_by_sums(std::size_t n, const Scalar& u_sq, const Scalar& sum_sq) {
  if (u_sq <= 0) throw InputError("edge must be positive");
  return sum_sq == Scalar(n) * u_sq;
}

inline bool on_circumsphere_by_sums(std::size_t n, double u, double sum_sq, double tol = 1e-9) {
  if (!(u > 0)) throw InputError("edge must be positive");
  const double target = static_cast<double>(n) * u * u;
  return std::abs(sum_sq - target) <= tol * target;
}

enum class PompeiuVerdict { valid_triangle, degenerate_on_circle, inconsistent };

inline const char* to_string(PompeiuVerdict v) {
  switch (v) {
    case PompeiuVerdict::valid_triangle: return "valid_triangle";
    case PompeiuVerdict::degenerate_on_circle: return "degenerate_on_circle";
    case PompeiuVerdict::inconsistent: return "inconsistent";
  }
  return "unknown";
}

struct PompeiuTolerances {
  double consistency = 1e-9;  ///< |g| relative to max(a,x,y,z)^4
  double circle = 1e-8;       ///< |rho - a/sqrt3| relative to a
};

struct PompeiuReport {
  PompeiuVerdict verdict = PompeiuVerdict::inconsistent;
  double g = 0;    ///< 3(a^4+x^4+y^4+z^4) - (a^2+x^2+y^2+z^2)^2
  double h = 0;    ///< 16 * squared area of the triangle with sides x, y, z
  double rho = 0;  ///< implied distance from the center, when consistent
};

/// For a point of the plane, g = 0 and the squared vertex distances sum to
/// a^2 + 3 rho^2, so 2a^2 - (x^2+y^2+z^2) = a^2 - 3 rho^2 and
/// h = (a^2 - 3 rho^2)^2 / 3. Degeneracy is decided on rho, which is linear
/// in the distance to the circumcircle; h itself is quadratic there.
inline PompeiuReport pompeiu_classify(double a, double x, double y, double z, const PompeiuTolerances& tol = {}) {
  if (!(a > 0)) throw InputError("side length must be positive");
  if (!(x >= 0 && y >= 0 && z >= 0)) throw InputError("distances must be non-negative");
  const double a2 = a * a, x2 = x * x, y2 = y * y, z2 = z * z;
  const double scale = std::pow(std::max({a, x, y, z}), 4);
  PompeiuReport r;
  r.g = 3 * (a2 * a2 + x2 * x2 + y2 * y2 + z2 * z2) - (a2 + x2 + y2 + z2) * (a2 + x2 + y2 + z2);
  r.h = (x + y + z) * (-x + y + z) * (x - y + z) * (x + y - z);
  if (std::abs(r.g) > tol.consistency * scale) return r;
  r.rho = std::sqrt(std::max(0.0, (x2 + y2 + z2 - a2) / 3));
  const double radius = a / std::numbers::sqrt3;
  r.verdict = std::abs(r.rho - radius) <= tol.circle * a ? PompeiuVerdict::degenerate_on_circle
                                                         : PompeiuVerdict::valid_triangle;
  return r;
}

/// Exact verdict from squared inputs.
inline PompeiuVerdict pompeiu_classify_squares(const Scalar& a2, const Scalar& x2, const Scalar& y2, const Scalar& z2) {
  if (a2 <= 0) throw InputError("side length must be positive");
  if (x2 < 0 || y2 < 0 || z2 < 0) throw InputError("distances must be non-negative");
  const Scalar sum = a2 + x2 + y2 + z2;
  const Scalar g = 3 * (a2 * a2 + x2 * x2 + y2 * y2 + z2 * z2) - sum * sum;
  if (g != 0) return PompeiuVerdict::inconsistent;
  return 2 * a2 == x2 + y2 + z2 ? PompeiuVerdict::degenerate_on_circle : PompeiuVerdict::valid_triangle;
}

/// Vertices of the equilateral triangle of side a centered at the origin, at
/// angles 90, 210 and 330 degrees.
inline std::array<Eigen::Vector2d, 3> pompeiu_triangle(double a) {
  const double radius = a / std::numbers::sqrt3;
  std::array<Eigen::Vector2d, 3> v;
  for (int k = 0; k < 3; ++k) {
    const double angle = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 3;
    v[static_cast<std::size_t>(k)] = radius * Eigen::Vector2d(std::cos(angle), std::sin(angle));
  }
  return v;
}

struct PompeiuPoint {
  double x = 0, y = 0, z = 0;
  PompeiuReport report;
};

inline PompeiuPoint pompeiu_from_point(double a, const Eigen::Vector2d& p, const PompeiuTolerances& tol = {}) {
  if (!(a > 0)) throw InputError("side length must be positive");
  const auto v = pompeiu_triangle(a);
  PompeiuPoint out;
  out.x = (p - v[0]).norm();
  out.y = (p - v[1]).norm();
  out.z = (p - v[2]).norm();
  out.report = pompeiu_classify(a, out.x, out.y, out.z, tol);
  return out;
}

}  // namespace prekite
