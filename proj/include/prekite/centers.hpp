#pragma once

/// @file centers.hpp
/// @brief Exact coincidence predicates (well-distributed, equiradial,
/// equiareal), circumcenter interiority, and the equiareal pre-kite solver.

#include "prekite/cayley.hpp"
#include "prekite/geometry.hpp"
#include "prekite/numkernel.hpp"
#include "prekite/prekite.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace prekite {

/// Per-vertex sums M_j = sum_{i != j} a_ij. All facets have the same edge
/// square sum exactly when all M_j agree.
inline std::vector<Scalar> vertex_square_sums(const SquaredDistanceMatrix& d) {
  std::vector<Scalar> m(d.vertex_count());
  for (std::size_t j = 0; j < d.vertex_count(); ++j)
    for (std::size_t i = 0; i < d.vertex_count(); ++i)
      if (i != j) m[j] += d(i, j);
  return m;
}

inline bool is_well_distributed(const SquaredDistanceMatrix& d) {
  if (d.dimension() < 2) throw InputError("well-distributedness needs n >= 2");
  const auto m = vertex_square_sums(d);
  for (const auto& x : m)
    if (x != m.front()) return false;
  return true;
}

/// Facet circumradii compared through C_i D_j = C_j D_i.
inline bool is_equiradial(const SquaredDistanceMatrix& d) {
  const std::size_t n = d.dimension();
  if (n < 2) throw InputError("equiradiality needs n >= 2");
  std::vector<Scalar> c(n + 1), dd(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const auto f = facet_sdm(d, j);
    c[j] = cm_det(f);
    if (c[j] == 0) throw DegenerateSimplexError("facet " + std::to_string(j) + " is degenerate");
    dd[j] = inner_cm_det(f);
  }
  for (std::size_t j = 1; j <= n; ++j)
    if (c[0] * dd[j] != c[j] * dd[0]) return false;
  return true;
}

/// Facet volumes compared through their Cayley-Menger determinants, which
/// share one normalizing constant.
inline bool is_equiareal(const SquaredDistanceMatrix& d) {
  const std::size_t n = d.dimension();
  if (n < 2) throw InputError("equiareality needs n >= 2");
  const Scalar first = cm_det(facet_sdm(d, 0));
  for (std::size_t j = 1; j <= n; ++j)
    if (cm_det(facet_sdm(d, j)) != first) return false;
  return true;
}

/// 2(alpha - n u) v_j - (alpha^2 + beta - 2 n alpha u + n(n-1) u^2).
/// Vanishes iff facet j has the circumradius of the base facet.
inline Scalar prekite_equiradial_condition(const PreKite& pk, std::size_t j) {
  const std::size_t n = pk.dimension();
  if (n < 3) throw InputError("equiradial condition needs n >= 3");
  if (j < 1 || j > n) throw InputError("facet index must be in 1..n");
  const Scalar& u = pk.base_sq();
  const Scalar& alpha = pk.edge_sum();
  const Scalar& beta = pk.edge_square_sum();
  const Scalar sn(n);
  return 2 * (alpha - sn * u) * pk.apex_sq(j) -
         (alpha * alpha + beta - 2 * sn * alpha * u + sn * Scalar(n - 1) * u * u);
}

struct CircumcenterBarycentric {
  std::vector<Scalar> weights;  ///< sum to 1
  Scalar circumradius_sq;
  bool interior = false;        ///< every weight strictly positive
};

/// Exact barycentric coordinates of the circumcenter. With w summing to 1,
/// D w = lambda 1 for the squared distance block D, i.e. the bordered system
/// CM [lambda', w] = e_0 with lambda' = -2 R^2.
inline CircumcenterBarycentric circumcenter_barycentric(const SquaredDistanceMatrix& d) {
  const ExactMatrix cm = cm_matrix(d);
  std::vector<Scalar> rhs(cm.order());
  rhs[0] = 1;
  const auto x = solve_exact(cm, rhs);
  if (!x) throw DegenerateSimplexError("circumcenter undefined: Cayley-Menger determinant vanishes");
  CircumcenterBarycentric out;
  out.circumradius_sq = -(*x)[0] / 2;
  out.weights.assign(x->begin() + 1, x->end());
  out.interior = true;
  for (const auto& w : out.weights)
    if (w <= 0) out.interior = false;
  return out;
}

inline bool circumcenter_interior(const SquaredDistanceMatrix& d) { return circumcenter_barycentric(d).interior; }

struct FloatCoincidence {
  double distance = 0;
  bool coincide = false;
};

struct CoincidenceReport {
  bool well_distributed = false;
  bool equiradial = false;
  bool equiareal = false;
  bool circumcenter_interior = false;
  bool qg_coincide = false;  ///< circumcenter = centroid
  bool qi_coincide = false;  ///< circumcenter = incenter
  bool ig_coincide = false;  ///< incenter = centroid

  /// Geometric cross-check, present when requested.
  struct Floats {
    FloatCoincidence qg, qi, ig;
    bool agrees = false;  ///< every float flag equals its exact counterpart
    // Experimental: Fermat-Torricelli coincidences, no exact counterpart.
    FermatStatus fermat_status = FermatStatus::budget_exhausted;
    FloatCoincidence fg, fq, fi;
  };
  std::optional<Floats> floats;
};

inline CoincidenceReport coincidence_report(const SquaredDistanceMatrix& d, bool with_floats = false,
                                            const Tolerances& tol = {}) {
  const auto verdict = is_realizable(d);
  if (!verdict.nondegenerate()) throw NotRealizableError("coincidence report needs a nondegenerate simplex", verdict);

  CoincidenceReport r;
  r.well_distributed = is_well_distributed(d);
  r.equiradial = is_equiradial(d);
  r.equiareal = is_equiareal(d);
  r.circumcenter_interior = circumcenter_interior(d);
  r.qg_coincide = r.well_distributed;
  r.qi_coincide = r.equiradial && r.circumcenter_interior;
  r.ig_coincide = r.equiareal;

  if (with_floats) {
    const auto s = embed(d, tol);
    const auto c = compute_centers(s, tol);
    const auto measure = [&](const Point& p, const Point& q) {
      FloatCoincidence f;
      f.distance = (p - q).norm();
      f.coincide = centers_coincide(p, q, c.circumradius, tol);
      return f;
    };
    CoincidenceReport::Floats f;
    f.qg = measure(c.circumcenter, c.centroid);
    f.qi = measure(c.circumcenter, c.incenter);
    f.ig = measure(c.incenter, c.centroid);
    f.agrees = f.qg.coincide == r.qg_coincide && f.qi.coincide == r.qi_coincide && f.ig.coincide == r.ig_coincide;
    f.fermat_status = c.fermat_status;
    f.fg = measure(c.fermat, c.centroid);
    f.fq = measure(c.fermat, c.circumcenter);
    f.fi = measure(c.fermat, c.incenter);
    r.floats = f;
  }
  return r;
}

/// Raised when the equiareal system has no solution for the given split.
class NoSolutionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pre-kite PK[n;u;x (t times), y (s times)].
struct EquiarealCandidate {
  std::size_t n = 0, t = 0, s = 0;
  Scalar x, y, u;
  Realizability realizability = Realizability::non_euclidean;
  bool equiareal_verified = false;  ///< all facet determinants equal, exact
  bool regular = false;

  bool realizable() const noexcept { return realizability == Realizability::nondegenerate; }
  PreKite prekite() const {
    std::vector<Scalar> v(t, x);
    v.insert(v.end(), s, y);
    return PreKite(u, std::move(v));
  }
};

namespace detail {

/// Left side of the facet condition C_j = C_0 for an apex edge of squared
/// length x: n u^2 - alpha^2 + (n-1) beta - n x^2 + 2 alpha x.
inline Scalar equiareal_condition(std::size_t n, std::size_t t, std::size_t s, const Scalar& u, const Scalar& x,
                                  const Scalar& y) {
  const Scalar alpha = u + Scalar(t) * x + Scalar(s) * y;
  const Scalar beta = u * u + Scalar(t) * x * x + Scalar(s) * y * y;
  const Scalar sn(n);
  return sn * u * u - alpha * alpha + Scalar(n - 1) * beta - sn * x * x + 2 * alpha * x;
}

}  // namespace detail

/// Solves the equiareal conditions for PK[n;u;x^t,y^s]:
///   (i)  n u^2 - alpha^2 + (n-1) beta - n x^2 + 2 alpha x = 0
///   (ii) (t - s)(y - x) = 2u
/// at u = 1, then rescales by `u`. Substituting (ii) into (i) leaves a
/// polynomial of degree at most two in x, recovered here by exact
/// interpolation. Every candidate is re-checked by the facet oracle.
inline std::vector<EquiarealCandidate> equiareal_prekite_solve(std::size_t n, std::size_t t, std::size_t s,
                                                               const Scalar& u = 1) {
  if (n < 3) throw InputError("equiareal solver needs n >= 3");
  if (t + s != n || s < 1 || t < s) throw InputError("need t + s = n and t >= s >= 1");
  if (u <= 0) throw InputError("u must be positive");
  if (t == s) throw NoSolutionError("t = s: (t - s)(y - x) = 2u has no solution");

  const Scalar one(1);
  const Scalar gap = Scalar(2) / Scalar(t - s);
  const auto f = [&](const Scalar& x) { return detail::equiareal_condition(n, t, s, one, x, x + gap); };
  const Scalar f0 = f(0), f1 = f(1), f2 = f(2);
  const Scalar qa = (f2 - 2 * f1 + f0) / 2;
  const Scalar qb = f1 - f0 - qa;
  const Scalar qc = f0;

  std::vector<Scalar> roots;
  if (qa == 0) {
    if (qb == 0) {
      if (qc == 0) throw NoSolutionError("facet condition is identically satisfied");
      return {};
    }
    roots.push_back(-qc / qb);
  } else {
    const Scalar disc = qb * qb - 4 * qa * qc;
    if (disc < 0) return {};
    const auto root = exact_sqrt(disc);
    if (!root) throw NoSolutionError("irrational solutions are not represented exactly");
    roots.push_back((-qb - *root) / (2 * qa));
    if (*root != 0) roots.push_back((-qb + *root) / (2 * qa));
  }

  std::vector<EquiarealCandidate> out;
  for (const auto& x1 : roots) {
    const Scalar y1 = x1 + gap;
    if (x1 <= 0 || y1 <= 0) continue;
    EquiarealCandidate c;
    c.n = n;
    c.t = t;
    c.s = s;
    c.u = u;
    c.x = x1 * u;
    c.y = y1 * u;
    const auto d = to_sdm(c.prekite());
    c.realizability = is_realizable(d).status;
    c.equiareal_verified = is_equiareal(d);
    c.regular = d.is_regular();
    out.push_back(std::move(c));
  }
  return out;
}

/// One (t, s) split of an equiareal scan.
struct EquiarealScanRow {
  std::size_t t = 0, s = 0;
  std::vector<EquiarealCandidate> candidates;
  std::string note;  ///< why no candidate was produced, if none
};

struct EquiarealScan {
  std::size_t n = 0;
  std::vector<EquiarealScanRow> rows;
  /// The published claim for this n: only regular equiareal pre-kites when n <= 5.
  bool claim_regular_only = false;
  /// Whether the exact oracle found a realizable non-regular equiareal pre-kite.
  bool oracle_non_regular_found = false;
  std::optional<std::string> discrepancy;
};

inline EquiarealScan equiareal_scan(std::size_t n) {
  if (n < 3 || n > 12) throw InputError("equiareal scan supports 3 <= n <= 12");
  EquiarealScan scan;
  scan.n = n;
  scan.claim_regular_only = n <= 5;
  for (std::size_t s = 1; 2 * s <= n; ++s) {
    EquiarealScanRow row;
    row.s = s;
    row.t = n - s;
    try {
      row.candidates = equiareal_prekite_solve(n, row.t, row.s);
      if (row.candidates.empty()) row.note = "no positive solution";
    } catch (const NoSolutionError& e) {
      row.note = e.what();
    }
    for (const auto& c : row.candidates)
      if (c.realizable() && c.equiareal_verified && !c.regular) scan.oracle_non_regular_found = true;
    scan.rows.push_back(std::move(row));
  }
  if (scan.claim_regular_only && scan.oracle_non_regular_found)
    scan.discrepancy =
        "published claim: every equiareal " + std::to_string(n) +
        "-pre-kite is regular; exact oracle certifies a realizable non-regular equiareal candidate";
  return scan;
}

}  // namespace prekite
