// Command-line front end for the prekite library.
//
// Exit codes: 0 success, 1 bad input, 2 not realizable or degenerate where a
// simplex is required, 3 internal error.

#include "prekite/cayley.hpp"
#include "prekite/centers.hpp"
#include "prekite/families.hpp"
#include "prekite/geometry.hpp"
#include "prekite/io.hpp"
#include "prekite/prekite.hpp"
#include "prekite/relation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using prekite::Scalar;
using prekite::io::json;

enum Exit { ok = 0, bad_input = 1, not_realizable = 2, internal = 3 };

struct RunConfig {
  bool exact = false;
  std::optional<double> tol;
  std::string format = "json";
  bool lengths = false;
  std::uint64_t seed = 0;

  prekite::Tolerances tolerances() const {
    prekite::Tolerances t;
    if (tol) {
      t.center = *tol;
      t.family = *tol;
    }
    return t;
  }

  /// Squares a CLI value on ingestion when --lengths is given.
  Scalar ingest(const std::string& text) const {
    Scalar x = prekite::parse_scalar(text);
    if (lengths) {
      if (x < 0) throw prekite::InputError("lengths must be non-negative");
      x *= x;
    }
    return x;
  }
};

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw prekite::InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw prekite::InputError(std::string("malformed JSON: ") + e.what());
  }
}

prekite::SquaredDistanceMatrix read_matrix(const std::string& path, const RunConfig& cfg) {
  return prekite::io::sdm_from_json(read_document(path), cfg.lengths);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void require_json(const RunConfig& cfg, const char* command) {
  if (cfg.format != "json") throw prekite::InputError(std::string("--format csv is not available for ") + command);
}

int cmd_classify(const std::string& path, const RunConfig& cfg) {
  require_json(cfg, "classify");
  const auto d = read_matrix(path, cfg);
  const auto tol = cfg.tolerances();
  const auto classification = prekite::classify(d, tol.family);
  json out{{"classification", prekite::io::to_json(classification)}};
  if (d.dimension() >= 2) out["coincidence"] = prekite::io::to_json(prekite::coincidence_report(d, !cfg.exact, tol));
  emit(out);
  return ok;
}

json nullable(const std::optional<Scalar>& x) { return x ? prekite::io::to_json(*x) : json(nullptr); }

/// Squared volume from a Cayley-Menger determinant; empty when its sign
/// rules out a Euclidean simplex.
std::optional<Scalar> volume_from_cm(const Scalar& c, std::size_t n) {
  Scalar v = c / (prekite::power(Scalar(2), static_cast<unsigned>(n)) * prekite::power(prekite::factorial(n), 2));
  if (n % 2 == 0) v = -v;
  if (v < 0) return std::nullopt;
  return v;
}

std::optional<Scalar> radius_from_cm(const Scalar& c, const Scalar& d) {
  if (c == 0) return std::nullopt;
  return -d / (2 * c);
}

int cmd_prekite_eval(std::size_t n, const std::string& u, const std::vector<std::string>& v, const RunConfig& cfg) {
  require_json(cfg, "prekite-eval");
  if (v.size() != n) throw prekite::InputError("expected " + std::to_string(n) + " apex values");
  std::vector<Scalar> apex;
  for (const auto& x : v) apex.push_back(cfg.ingest(x));
  const prekite::PreKite pk(cfg.ingest(u), apex);
  const auto d = prekite::to_sdm(pk);
  const auto verdict = prekite::is_realizable(d);

  const Scalar c = prekite::pk_cm_det(pk);
  const Scalar dd = prekite::pk_inner_cm_det(pk);
  json out{{"n", n},
           {"u", prekite::io::to_json(pk.base_sq())},
           {"v", prekite::io::to_json(pk.apex_sq())},
           {"realizability", prekite::io::to_json(verdict)},
           {"degenerate", c == 0},
           {"C", prekite::io::to_json(c)},
           {"D", prekite::io::to_json(dd)},
           {"volume_sq", nullable(volume_from_cm(c, n))},
           {"circumradius_sq", nullable(radius_from_cm(c, dd))}};

  json facets = json::array();
  std::vector<Scalar> cs, ds;
  for (std::size_t j = 0; j <= n; ++j) {
    Scalar cj, dj;
    if (n >= 3) {
      cj = prekite::pk_facet_cm(pk, j);
      dj = prekite::pk_facet_inner_cm(pk, j);
    } else {
      const auto f = prekite::facet_sdm(d, j);
      cj = prekite::cm_det(f);
      dj = prekite::inner_cm_det(f);
    }
    facets.push_back(json{{"j", j},
                          {"C", prekite::io::to_json(cj)},
                          {"D", prekite::io::to_json(dj)},
                          {"volume_sq", nullable(volume_from_cm(cj, n - 1))},
                          {"circumradius_sq", nullable(radius_from_cm(cj, dj))}});
    cs.push_back(cj);
    ds.push_back(dj);
  }
  out["facets"] = facets;

  bool equiareal = true, equiradial = true, facets_nondegenerate = true;
  for (std::size_t j = 0; j <= n; ++j) {
    if (cs[j] != cs[0]) equiareal = false;
    if (cs[j] == 0) facets_nondegenerate = false;
    if (cs[0] * ds[j] != cs[j] * ds[0]) equiradial = false;
  }
  out["equiareal"] = equiareal;
  out["equiradial"] = facets_nondegenerate ? json(equiradial) : json(nullptr);
  emit(out);
  return verdict.nondegenerate() ? ok : not_realizable;
}

int cmd_prekite_feasible(std::size_t n, const std::string& u, const std::string& v, const RunConfig& cfg) {
  require_json(cfg, "prekite-feasible");
  const Scalar base = cfg.ingest(u), odd = cfg.ingest(v);
  const auto window = prekite::apex_squared_ratio_window(n);
  const auto pk = prekite::PreKite::two_apexed(n, base, odd);
  emit(json{{"n", n},
            {"u", prekite::io::to_json(base)},
            {"v", prekite::io::to_json(odd)},
            {"ratio", prekite::io::to_json(Scalar(odd / base))},
            {"window", {prekite::io::to_json(window.lower), prekite::io::to_json(window.upper)}},
            {"feasible", prekite::two_apexed_feasible(n, base, odd)},
            {"C", prekite::io::to_json(prekite::pk_cm_det(pk))}});
  return ok;
}

int cmd_equiareal_scan(std::size_t n, const RunConfig& cfg) {
  const auto scan = prekite::equiareal_scan(n);
  if (cfg.format == "csv")
    std::cout << prekite::io::to_csv(scan);
  else
    emit(prekite::io::to_json(scan));
  return ok;
}

std::vector<Scalar> ingest_all(const std::vector<std::string>& values, const RunConfig& cfg) {
  std::vector<Scalar> out;
  for (const auto& v : values) out.push_back(cfg.ingest(v));
  return out;
}

int cmd_rel_solve(std::size_t n, const std::string& t0, const std::vector<std::string>& known,
                  std::optional<std::size_t> missing, const RunConfig& cfg) {
  require_json(cfg, "rel");
  if (known.size() != n) throw prekite::InputError("rel solve expects n known distances");
  const std::size_t slot = missing.value_or(n);
  if (slot > n) throw prekite::InputError("missing slot out of range");
  std::vector<std::optional<Scalar>> slots;
  const auto values = ingest_all(known, cfg);
  for (std::size_t i = 0, k = 0; i <= n; ++i) slots.push_back(i == slot ? std::nullopt : std::optional(values[k++]));
  const Scalar t0_sq = cfg.ingest(t0);
  const auto result = prekite::solve_missing_distance(n, t0_sq, slots);

  json checks = json::array();
  for (double t : result.values) {
    std::vector<Scalar> full;
    for (const auto& s : slots) full.push_back(s ? *s : Scalar(t) * Scalar(t));
    const Scalar res = prekite::rel_residual_squares(t0_sq, full);
    checks.push_back(prekite::to_double(res));
  }
  json out{{"n", n}, {"missing_slot", slot}};
  out["solution"] = prekite::io::to_json(result);
  out["substituted_residuals"] = checks;
  emit(out);
  return ok;
}

int cmd_rel_verify(const std::string& t0, const std::vector<std::string>& t, const RunConfig& cfg) {
  require_json(cfg, "rel");
  const auto squares = ingest_all(t, cfg);
  const Scalar t0_sq = cfg.ingest(t0);
  const Scalar res = prekite::rel_residual_squares(t0_sq, squares);
  emit(json{{"n", squares.size() - 1}, {"residual", prekite::io::to_json(res)}, {"holds", res == 0}});
  return ok;
}

int cmd_pompeiu(const std::string& a, const std::string& x, const std::string& y, const std::string& z,
                const RunConfig& cfg) {
  require_json(cfg, "pompeiu");
  const Scalar a2 = cfg.ingest(a), x2 = cfg.ingest(x), y2 = cfg.ingest(y), z2 = cfg.ingest(z);
  const auto exact = prekite::pompeiu_classify_squares(a2, x2, y2, z2);
  json out{{"exact_verdict", prekite::to_string(exact)}};
  if (!cfg.exact) {
    prekite::PompeiuTolerances tol;
    if (cfg.tol) tol.circle = *cfg.tol;
    const auto root = [](const Scalar& s) { return std::sqrt(prekite::to_double(s)); };
    out["float"] = prekite::io::to_json(prekite::pompeiu_classify(root(a2), root(x2), root(y2), root(z2), tol));
  }
  emit(out);
  return ok;
}

int cmd_embed(const std::string& path, const RunConfig& cfg) {
  require_json(cfg, "embed");
  const auto d = read_matrix(path, cfg);
  emit(prekite::io::to_json(prekite::embed(d, cfg.tolerances())));
  return ok;
}

/// Random point of the closed simplex from normalized exponential weights.
prekite::Point random_hull_point(const prekite::EmbeddedSimplex& s, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  prekite::Point p = prekite::Point::Zero(static_cast<Eigen::Index>(s.dimension()));
  double total = 0;
  for (const auto& v : s.vertices()) {
    const double w = e(rng);
    p += w * v;
    total += w;
  }
  return p / total;
}

int cmd_centers(const std::string& path, const RunConfig& cfg) {
  require_json(cfg, "centers");
  const auto d = read_matrix(path, cfg);
  const auto tol = cfg.tolerances();
  const auto s = prekite::embed(d, tol);
  const auto sphere = prekite::circumcenter(s);
  const auto in = prekite::incenter(s, tol);
  const auto ft = prekite::fermat_torricelli(s, tol.fermat_gradient, tol.fermat_max_iterations);

  // Sampled certificate: the Fermat point beats every vertex and 100 random
  // points of the simplex.
  std::mt19937_64 rng(cfg.seed);
  bool certified = true;
  for (const auto& v : s.vertices())
    if (prekite::distance_sum(s, v) < ft.objective) certified = false;
  for (int k = 0; k < 100; ++k)
    if (prekite::distance_sum(s, random_hull_point(s, rng)) < ft.objective) certified = false;

  const double exact_r2 = prekite::to_double(prekite::circumradius_sq(d));
  json fermat{{"point", prekite::io::to_json(ft.point)},
              {"objective", ft.objective},
              {"gradient_norm", ft.gradient_norm},
              {"iterations", ft.iterations},
              {"status", prekite::to_string(ft.status)},
              {"vertex", ft.vertex ? json(*ft.vertex) : json(nullptr)},
              {"sampled_certificate", {{"seed", cfg.seed}, {"samples", 100}, {"holds", certified}}}};
  emit(json{{"embedding", prekite::io::to_json(s)},
            {"centroid", prekite::io::to_json(prekite::centroid(s))},
            {"circumcenter",
             {{"center", prekite::io::to_json(sphere.center)},
              {"radius", sphere.radius},
              {"radius_sq_exact", prekite::io::to_json(prekite::circumradius_sq(d))},
              {"radius_sq_relative_error", std::abs(sphere.radius * sphere.radius - exact_r2) / exact_r2}}},
            {"incenter",
             {{"center", prekite::io::to_json(in.center)},
              {"radius", in.radius},
              {"facet_distances", in.facet_distances},
              {"touches_interior", in.touches_interior}}},
            {"fermat", fermat}});
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical tools for simplices with a regular facet"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  double tol_value = 0;
  auto* tol_opt = app.add_option("--tol", tol_value, "Override floating tolerances (centers, families, Pompeiu circle)");
  app.add_flag("--exact", cfg.exact, "Exact results only; skip floating cross-checks");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--lengths", cfg.lengths, "Inputs are edge lengths, squared on ingestion");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  std::string path;
  std::size_t n = 0;
  std::string u, v, t0, a, x, y, z;
  std::vector<std::string> values;
  std::optional<std::size_t> missing;

  auto* classify = app.add_subcommand("classify", "Families, apexes and center coincidences of a matrix file");
  classify->add_option("file", path, "JSON matrix file, - for stdin")->required();

  auto* eval = app.add_subcommand("prekite-eval", "Exact determinants of PK[n;u;v1..vn]");
  eval->add_option("n", n)->required();
  eval->add_option("u", u)->required();
  eval->add_option("v", values)->required();

  auto* feasible = app.add_subcommand("prekite-feasible", "Window test for PK[n;u;u..u,v]");
  feasible->add_option("n", n)->required();
  feasible->add_option("u", u)->required();
  feasible->add_option("v", v)->required();

  auto* scan = app.add_subcommand("equiareal-scan", "Equiareal pre-kites over all (t,s) splits");
  scan->add_option("n", n)->required();

  auto* rel = app.add_subcommand("rel", "Distance relation for a regular simplex");
  rel->require_subcommand(1);
  auto* rel_solve = rel->add_subcommand("solve", "Solve for one missing distance");
  rel_solve->add_option("--n", n)->required();
  rel_solve->add_option("--t0", t0)->required();
  rel_solve->add_option("--known", values, "The n known distances")->required()->delimiter(',');
  rel_solve->add_option("--missing", missing, "Index of the missing slot (default: last)");
  auto* rel_verify = rel->add_subcommand("verify", "Residual of a full distance tuple");
  rel_verify->add_option("--t0", t0)->required();
  rel_verify->add_option("--t", values, "The n+1 distances")->required()->delimiter(',');

  auto* pompeiu = app.add_subcommand("pompeiu", "Classify distances to an equilateral triangle");
  pompeiu->add_option("--a", a)->required();
  pompeiu->add_option("--x", x)->required();
  pompeiu->add_option("--y", y)->required();
  pompeiu->add_option("--z", z)->required();

  auto* embed = app.add_subcommand("embed", "Coordinates realizing a matrix file");
  embed->add_option("file", path)->required();

  auto* centers = app.add_subcommand("centers", "Centroid, circumcenter, incenter and Fermat point");
  centers->add_option("file", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : bad_input;
  }
  if (*tol_opt) cfg.tol = tol_value;

  try {
    if (*classify) return cmd_classify(path, cfg);
    if (*eval) return cmd_prekite_eval(n, u, values, cfg);
    if (*feasible) return cmd_prekite_feasible(n, u, v, cfg);
    if (*scan) return cmd_equiareal_scan(n, cfg);
    if (*rel_solve) return cmd_rel_solve(n, t0, values, missing, cfg);
    if (*rel_verify) return cmd_rel_verify(t0, values, cfg);
    if (*pompeiu) return cmd_pompeiu(a, x, y, z, cfg);
    if (*embed) return cmd_embed(path, cfg);
    if (*centers) return cmd_centers(path, cfg);
  } catch (const prekite::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return bad_input;
  } catch (const prekite::NotRealizableError& e) {
    std::cerr << "not realizable: " << e.what() << '\n';
    return not_realizable;
  } catch (const prekite::DegenerateSimplexError& e) {
    std::cerr << "degenerate: " << e.what() << '\n';
    return not_realizable;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return internal;
  }
  return internal;
}
