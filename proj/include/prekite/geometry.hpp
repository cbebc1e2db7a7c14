#pragma once

/// @file geometry.hpp
/// @brief Floating-point realization of squared distance matrices and the four
/// centers: centroid, circumcenter, incenter and Fermat-Torricelli point.
///
/// The embedding is the only bridge from the exact core: the Gram matrix is
/// factored exactly as L D L^T and square roots are taken at the very end.
/// Vertex 0 sits at the origin and vertex i lies in the span of the first i
/// coordinate axes.

#include "prekite/cayley.hpp"
#include "prekite/numkernel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace prekite {

using Point = Eigen::VectorXd;

/// Numerical tolerances shared by the floating-point modules.
struct Tolerances {
  double embed = 1e-9;            ///< relative error of re-embedded squared distances
  double center = 1e-8;           ///< relative tolerance for center identities
  double fermat_gradient = 1e-10; ///< gradient norm at an interior Fermat point
  std::size_t fermat_max_iterations = 100000;
  double family = 1e-9;           ///< relative residual for floating family fits
};

class EmbeddedSimplex {
 public:
  EmbeddedSimplex(SquaredDistanceMatrix source, std::vector<Point> vertices)
      : source_(std::move(source)), vertices_(std::move(vertices)) {
    if (vertices_.size() != source_.vertex_count()) throw InputError("vertex count does not match source matrix");
    for (const auto& v : vertices_)
      if (static_cast<std::size_t>(v.size()) != source_.dimension()) throw InputError("coordinate length must equal n");
  }

  /// Simplex from explicit coordinates; the source matrix holds the exact
  /// squared distances of the given doubles.
  static EmbeddedSimplex from_points(std::vector<Point> vertices) {
    if (vertices.size() < 2) throw InputError("need at least two vertices");
    const std::size_t n = vertices.size() - 1;
    std::vector<std::vector<Scalar>> rows(n + 1, std::vector<Scalar>(n + 1));
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        Scalar s = 0;
        for (Eigen::Index k = 0; k < vertices[i].size(); ++k) {
          Scalar diff = Scalar(vertices[i][k]) - Scalar(vertices[j][k]);
          s += diff * diff;
        }
        rows[i][j] = rows[j][i] = s;
      }
    return EmbeddedSimplex(SquaredDistanceMatrix(n, std::move(rows)), std::move(vertices));
  }

  std::size_t dimension() const noexcept { return source_.dimension(); }
  const SquaredDistanceMatrix& source() const noexcept { return source_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_.at(i); }

  /// max |(|Ai - Aj|^2 - a_ij)| / a_ij over all pairs.
  double max_relative_distance_error() const {
    double worst = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      for (std::size_t j = i + 1; j < vertices_.size(); ++j) {
        const double target = to_double(source_(i, j));
        const double got = (vertices_[i] - vertices_[j]).squaredNorm();
        worst = std::max(worst, std::abs(got - target) / target);
      }
    return worst;
  }

 private:
  SquaredDistanceMatrix source_;
  std::vector<Point> vertices_;
};

/// Coordinates realizing `d`. Requires a nondegenerate Euclidean matrix.
inline EmbeddedSimplex embed(const SquaredDistanceMatrix& d, const Tolerances& tol = {}) {
  const auto verdict = is_realizable(d);
  if (!verdict.nondegenerate()) throw NotRealizableError("cannot embed", verdict);
  const std::size_t n = d.dimension();
  const ExactMatrix g = gram_matrix(d, 0);

  // Exact L D L^T; all pivots are positive because g is positive definite.
  ExactMatrix lower = ExactMatrix::identity(n);
  std::vector<Scalar> pivots(n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar p = g(k, k);
    for (std::size_t m = 0; m < k; ++m) p -= lower(k, m) * lower(k, m) * pivots[m];
    pivots[k] = p;
    for (std::size_t i = k + 1; i < n; ++i) {
      Scalar s = g(i, k);
      for (std::size_t m = 0; m < k; ++m) s -= lower(i, m) * lower(k, m) * pivots[m];
      lower(i, k) = s / p;
    }
  }

  std::vector<double> root_pivots(n);
  for (std::size_t k = 0; k < n; ++k) root_pivots[k] = std::sqrt(to_double(pivots[k]));

  std::vector<Point> vertices(n + 1, Point::Zero(static_cast<Eigen::Index>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= i; ++k) vertices[i + 1][static_cast<Eigen::Index>(k)] = to_double(lower(i, k)) * root_pivots[k];

  EmbeddedSimplex s(d, std::move(vertices));
  if (s.max_relative_distance_error() > tol.embed)
    throw std::runtime_error("embedding round-trip error exceeds tolerance");
  return s;
}

inline Point centroid(const EmbeddedSimplex& s) {
  Point c = Point::Zero(static_cast<Eigen::Index>(s.dimension()));
  for (const auto& v : s.vertices()) c += v;
  return c / static_cast<double>(s.vertices().size());
}

struct Sphere {
  Point center;
  double radius = 0;
};

/// Solves 2 (Ai - A0) . (c - A0) = |Ai - A0|^2, i = 1..n.
inline Sphere circumcenter(const EmbeddedSimplex& s) {
  const auto n = static_cast<Eigen::Index>(s.dimension());
  const Point& origin = s.vertex(0);
  Eigen::MatrixXd m(n, n);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point e = s.vertex(static_cast<std::size_t>(i) + 1) - origin;
    m.row(i) = 2.0 * e.transpose();
    rhs[i] = e.squaredNorm();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  if (!lu.isInvertible()) throw DegenerateSimplexError("circumcenter system is singular");
  Point c = origin + lu.solve(rhs);
  return {c, (c - origin).norm()};
}

/// Orthogonal projection of p onto the affine hull of `points`.
struct Projection {
  Point foot;
  double distance = 0;
  std::vector<double> barycentric;
};

inline Projection project_to_affine_hull(const Point& p, const std::vector<Point>& points) {
  const Point& base = points.front();
  const auto k = static_cast<Eigen::Index>(points.size()) - 1;
  Projection out;
  if (k == 0) {
    out.foot = base;
  } else {
    Eigen::MatrixXd edges(p.size(), k);
    for (Eigen::Index i = 0; i < k; ++i) edges.col(i) = points[static_cast<std::size_t>(i) + 1] - base;
    const Eigen::VectorXd lambda = (edges.transpose() * edges).ldlt().solve(edges.transpose() * (p - base));
    out.foot = base + edges * lambda;
    out.barycentric.push_back(1.0 - lambda.sum());
    for (Eigen::Index i = 0; i < k; ++i) out.barycentric.push_back(lambda[i]);
  }
  if (out.barycentric.empty()) out.barycentric.push_back(1.0);
  out.distance = (p - out.foot).norm();
  return out;
}

inline std::vector<Point> facet_vertices(const EmbeddedSimplex& s, std::size_t j) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < s.vertices().size(); ++i)
    if (i != j) out.push_back(s.vertex(i));
  return out;
}

struct InSphere {
  Point center;
  double radius = 0;
  std::vector<double> facet_distances;
  std::vector<Point> touch_points;
  bool touches_interior = false;  ///< every touch point lies inside its facet
};

/// Facet-volume weighted vertex average; facet volumes come from the exact
/// squared volumes.
inline InSphere incenter(const EmbeddedSimplex& s, const Tolerances& tol = {}) {
  const std::size_t n = s.dimension();
  if (n < 2) {
    // A segment: midpoint, "facets" are the endpoints.
    InSphere in;
    in.center = (s.vertex(0) + s.vertex(1)) / 2.0;
    in.radius = (s.vertex(1) - s.vertex(0)).norm() / 2.0;
    in.facet_distances = {in.radius, in.radius};
    in.touch_points = {s.vertex(1), s.vertex(0)};
    in.touches_interior = true;
    return in;
  }
  std::vector<double> weights(n + 1);
  double total = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    weights[j] = std::sqrt(to_double(volume_sq(facet_sdm(s.source(), j))));
    total += weights[j];
  }
  InSphere in;
  in.center = Point::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t j = 0; j <= n; ++j) in.center += weights[j] * s.vertex(j);
  in.center /= total;

  in.touches_interior = true;
  for (std::size_t j = 0; j <= n; ++j) {
    const auto proj = project_to_affine_hull(in.center, facet_vertices(s, j));
    in.facet_distances.push_back(proj.distance);
    in.touch_points.push_back(proj.foot);
    for (double b : proj.barycentric)
      if (b < -tol.center) in.touches_interior = false;
  }
  in.radius = in.facet_distances.front();
  return in;
}

inline double distance_sum(const EmbeddedSimplex& s, const Point& x) {
  double total = 0;
  for (const auto& v : s.vertices()) total += (x - v).norm();
  return total;
}

enum class FermatStatus { converged, vertex, budget_exhausted };

inline const char* to_string(FermatStatus s) {
  switch (s) {
    case FermatStatus::converged: return "converged";
    case FermatStatus::vertex: return "vertex";
    case FermatStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

struct FermatResult {
  Point point;
  double objective = 0;
  double gradient_norm = 0;
  std::size_t iterations = 0;
  FermatStatus status = FermatStatus::budget_exhausted;
  std::optional<std::size_t> vertex;  ///< set when status == vertex
};

namespace detail {

/// Sum of unit vectors (x - Aj)/|x - Aj| over vertices other than `skip`.
inline Point unit_pull(const EmbeddedSimplex& s, const Point& x, std::optional<std::size_t> skip = std::nullopt) {
  Point g = Point::Zero(x.size());
  for (std::size_t j = 0; j < s.vertices().size(); ++j) {
    if (skip && *skip == j) continue;
    const Point diff = x - s.vertex(j);
    const double r = diff.norm();
    if (r > 0) g += diff / r;
  }
  return g;
}

}  // namespace detail

/// Minimizer of the sum of distances to the vertices. Vertices are tested
/// first with the subgradient criterion |sum_{j!=k} unit(Ak - Aj)| <= 1, up to
/// rounding. The interior case runs Weiszfeld's re-weighted averaging from the
/// centroid, with a Newton step taken whenever it lowers the objective further.
inline FermatResult fermat_torricelli(const EmbeddedSimplex& s, double tol = 1e-10, std::size_t max_iterations = 100000) {
  const std::size_t m = s.vertices().size();
  FermatResult result;

  double shortest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) shortest = std::min(shortest, (s.vertex(i) - s.vertex(j)).norm());

  for (std::size_t k = 0; k < m; ++k) {
    const Point pull = detail::unit_pull(s, s.vertex(k), k);
    if (pull.norm() <= 1.0 + 1e-12) {
      result.point = s.vertex(k);
      result.objective = distance_sum(s, result.point);
      result.gradient_norm = 0;
      result.status = FermatStatus::vertex;
      result.vertex = k;
      return result;
    }
  }

  const auto dim = static_cast<Eigen::Index>(s.dimension());
  Point x = centroid(s);
  double fx = distance_sum(s, x);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    // Never sit on a vertex: it is known not to be optimal, so step off it
    // along the descent direction of the remaining terms.
    for (std::size_t k = 0; k < m; ++k) {
      if ((x - s.vertex(k)).norm() < 1e-12 * shortest) {
        const Point pull = detail::unit_pull(s, s.vertex(k), k);
        x = s.vertex(k) - 1e-3 * shortest * pull / pull.norm();
        fx = distance_sum(s, x);
      }
    }
    const Point grad = detail::unit_pull(s, x);
    result.iterations = it;
    if (grad.norm() <= tol) {
      result.point = x;
      result.objective = fx;
      result.gradient_norm = grad.norm();
      result.status = FermatStatus::converged;
      return result;
    }

    Point numer = Point::Zero(dim);
    double denom = 0;
    Eigen::MatrixXd hessian = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t j = 0; j < m; ++j) {
      const Point diff = x - s.vertex(j);
      const double r = diff.norm();
      numer += s.vertex(j) / r;
      denom += 1.0 / r;
      const Point e = diff / r;
      hessian += (Eigen::MatrixXd::Identity(dim, dim) - e * e.transpose()) / r;
    }
    Point next = numer / denom;
    double fnext = distance_sum(s, next);

    Eigen::LDLT<Eigen::MatrixXd> ldlt(hessian);
    if (ldlt.info() == Eigen::Success && ldlt.isPositive()) {
      const Point newton = x - ldlt.solve(grad);
      if (newton.allFinite()) {
        const double fnewton = distance_sum(s, newton);
        if (fnewton <= fnext) {
          next = newton;
          fnext = fnewton;
        }
      }
    }
    x = next;
    fx = fnext;
  }
  result.point = x;
  result.objective = fx;
  result.gradient_norm = detail::unit_pull(s, x).norm();
  result.iterations = max_iterations;
  result.status = result.gradient_norm <= tol ? FermatStatus::converged : FermatStatus::budget_exhausted;
  return result;
}

struct SquareSumReport {
  double actual = 0;     ///< sum |p - Aj|^2
  double predicted = 0;  ///< (n+1)(rho^2 + R^2)
  double rho = 0;        ///< |p - center|
  double circumradius = 0;
};

/// For a regular simplex: sum of squared distances from p to the vertices,
/// with the closed-form prediction (n+1)(rho^2 + R^2).
inline SquareSumReport sum_sq_to_vertices(const EmbeddedSimplex& s, const Point& p) {
  if (!s.source().is_regular()) throw InputError("sum_sq_to_vertices requires a regular simplex");
  const Point center = centroid(s);
  const std::size_t n = s.dimension();
  SquareSumReport r;
  for (const auto& v : s.vertices()) r.actual += (p - v).squaredNorm();
  r.rho = (p - center).norm();
  r.circumradius = std::sqrt(to_double(s.source()(0, 1)) * static_cast<double>(n) / (2.0 * static_cast<double>(n + 1)));
  r.predicted = static_cast<double>(n + 1) * (r.rho * r.rho + r.circumradius * r.circumradius);
  return r;
}

struct CenterSet {
  Point centroid;
  Point circumcenter;
  Point incenter;
  Point fermat;
  double circumradius = 0;
  double inradius = 0;
  FermatStatus fermat_status = FermatStatus::budget_exhausted;
};

inline CenterSet compute_centers(const EmbeddedSimplex& s, const Tolerances& tol = {}) {
  CenterSet c;
  c.centroid = centroid(s);
  const auto sphere = circumcenter(s);
  c.circumcenter = sphere.center;
  c.circumradius = sphere.radius;
  const auto in = incenter(s, tol);
  c.incenter = in.center;
  c.inradius = in.radius;
  const auto ft = fermat_torricelli(s, tol.fermat_gradient, tol.fermat_max_iterations);
  c.fermat = ft.point;
  c.fermat_status = ft.status;
  return c;
}

/// Two centers coincide when |p - q| <= tol * (1 + circumradius).
inline bool centers_coincide(const Point& p, const Point& q, double circumradius, const Tolerances& tol = {}) {
  return (p - q).norm() <= tol.center * (1.0 + circumradius);
}

}  // namespace prekite
