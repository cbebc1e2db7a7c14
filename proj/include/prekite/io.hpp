#pragma once

/// @file io.hpp
/// @brief JSON reading of squared distance matrices and JSON rendering of the
/// library's reports. Exact values are written as strings ("3", "-1/2"),
/// floating values as numbers. Key order is fixed, so output is reproducible.

#include "prekite/cayley.hpp"
#include "prekite/centers.hpp"
#include "prekite/families.hpp"
#include "prekite/geometry.hpp"
#include "prekite/numkernel.hpp"
#include "prekite/prekite.hpp"
#include "prekite/relation.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace prekite::io {

using json = nlohmann::ordered_json;

/// Integers and strings ("7", "-3/4", "0.25") are accepted; JSON floats are
/// not, since their decimal text is lost on parsing.
inline Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_number_unsigned()) return Scalar(j.get<unsigned long long>());
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_float()) throw InputError("floating JSON number " + j.dump() + "; write it as a string");
  throw InputError("expected a number or string, got " + j.dump());
}

inline json to_json(const Scalar& x) { return to_string(x); }

inline json to_json(std::span<const Scalar> xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

inline json to_json(const Point& p) {
  json a = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(p[i]);
  return a;
}

/// {"n": 3, "a": [[...], ...]} with the full (n+1) x (n+1) matrix, or
/// {"n": 3, "upper": [a01, a02, ..., a(n-1)n]}. With `lengths`, entries are
/// edge lengths and get squared.
inline SquaredDistanceMatrix sdm_from_json(const json& doc, bool lengths = false) {
  if (!doc.is_object()) throw InputError("matrix document must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw InputError("field \"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  const auto ingest = [&](const json& e) {
    Scalar x = scalar_from_json(e);
    return lengths ? Scalar(x * x) : x;
  };
  if (doc.contains("upper")) {
    const json& up = doc["upper"];
    if (!up.is_array()) throw InputError("field \"upper\" must be an array");
    std::vector<Scalar> values;
    for (const auto& e : up) values.push_back(ingest(e));
    return SquaredDistanceMatrix::from_upper(n, values);
  }
  if (!doc.contains("a") || !doc["a"].is_array()) throw InputError("field \"a\" must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : doc["a"]) {
    if (!row.is_array()) throw InputError("each row of \"a\" must be an array");
    std::vector<Scalar> r;
    for (const auto& e : row) r.push_back(ingest(e));
    rows.push_back(std::move(r));
  }
  return SquaredDistanceMatrix(n, std::move(rows));
}

inline json to_json(const SquaredDistanceMatrix& d) {
  json rows = json::array();
  for (const auto& r : d.rows()) rows.push_back(to_json(std::span<const Scalar>(r)));
  return json{{"n", d.dimension()}, {"a", rows}};
}

inline json to_json(const RealizabilityVerdict& v) {
  return json{{"status", to_string(v.status)},
              {"gram_inertia",
               {{"positive", v.gram_inertia.positive},
                {"negative", v.gram_inertia.negative},
                {"zero", v.gram_inertia.zero}}}};
}

inline json to_json(const BetaVector& b) {
  json j{{"member", b.member}, {"beta", b.beta}, {"residual", b.residual}};
  if (b.exact_beta) j["beta_exact"] = to_json(std::span<const Scalar>(*b.exact_beta));
  if (!b.diagnostic.empty()) j["diagnostic"] = b.diagnostic;
  return j;
}

inline json to_json(const ClassificationReport& r) {
  json families = json::object();
  for (const auto& b : r.families) families[to_string(b.family)] = to_json(b);
  return json{{"n", r.n},
              {"realizable", r.realizability.nondegenerate()},
              {"realizability", to_json(r.realizability)},
              {"apexes", r.apexes.apexes},
              {"prekite", r.apexes.is_prekite()},
              {"kite", r.apexes.is_kite},
              {"regular", r.apexes.is_regular},
              {"families", families},
              {"kite_consistency", r.kite_consistency}};
}

inline json to_json(const FloatCoincidence& f) { return json{{"distance", f.distance}, {"coincide", f.coincide}}; }

inline json to_json(const CoincidenceReport& r) {
  json j{{"well_distributed", r.well_distributed},
         {"equiradial", r.equiradial},
         {"equiareal", r.equiareal},
         {"circumcenter_interior", r.circumcenter_interior},
         {"qg_coincide", r.qg_coincide},
         {"qi_coincide", r.qi_coincide},
         {"ig_coincide", r.ig_coincide}};
  if (r.floats) {
    const auto& f = *r.floats;
    j["floats"] = json{{"qg", to_json(f.qg)},
                       {"qi", to_json(f.qi)},
                       {"ig", to_json(f.ig)},
                       {"agrees_with_exact", f.agrees},
                       {"experimental_fermat",
                        {{"status", to_string(f.fermat_status)},
                         {"fg", to_json(f.fg)},
                         {"fq", to_json(f.fq)},
                         {"fi", to_json(f.fi)}}}};
  }
  return j;
}

inline json to_json(const EquiarealCandidate& c) {
  return json{{"x", to_string(c.x)},
              {"y", to_string(c.y)},
              {"u", to_string(c.u)},
              {"apex_sq", to_json(c.prekite().apex_sq())},
              {"realizability", to_string(c.realizability)},
              {"equiareal_verified", c.equiareal_verified},
              {"regular", c.regular}};
}

inline json to_json(const EquiarealScan& scan) {
  json rows = json::array();
  for (const auto& row : scan.rows) {
    json cands = json::array();
    for (const auto& c : row.candidates) cands.push_back(to_json(c));
    json r{{"t", row.t}, {"s", row.s}, {"candidates", cands}};
    if (!row.note.empty()) r["note"] = row.note;
    rows.push_back(r);
  }
  json j{{"n", scan.n},
         {"rows", rows},
         {"published_claim_regular_only", scan.claim_regular_only},
         {"oracle_non_regular_found", scan.oracle_non_regular_found}};
  j["discrepancy"] = scan.discrepancy ? json(*scan.discrepancy) : json(nullptr);
  return j;
}

/// One line per candidate (or per empty split), header first.
inline std::string to_csv(const EquiarealScan& scan) {
  std::string out = "n,t,s,x,y,u,realizability,equiareal_verified,regular,published_claim_regular_only,note\n";
  const std::string claim = scan.claim_regular_only ? "true" : "false";
  for (const auto& row : scan.rows) {
    const std::string head = std::to_string(scan.n) + "," + std::to_string(row.t) + "," + std::to_string(row.s) + ",";
    if (row.candidates.empty()) {
      out += head + ",,,,,," + claim + ",\"" + row.note + "\"\n";
      continue;
    }
    for (const auto& c : row.candidates)
      out += head + to_string(c.x) + "," + to_string(c.y) + "," + to_string(c.u) + "," + to_string(c.realizability) +
             "," + (c.equiareal_verified ? "true" : "false") + "," + (c.regular ? "true" : "false") + "," + claim +
             ",\n";
  }
  return out;
}

inline json to_json(const EmbeddedSimplex& s) {
  json coords = json::array();
  for (const auto& v : s.vertices()) coords.push_back(to_json(v));
  return json{{"n", s.dimension()}, {"vertices", coords}, {"max_relative_error", s.max_relative_distance_error()}};
}

inline json to_json(const MissingDistance& m) {
  json j{{"quarter_discriminant", to_string(m.quarter_discriminant)}, {"values", m.values}};
  j["exact_squares"] = to_json(std::span<const Scalar>(m.exact_squares));
  return j;
}

inline json to_json(const PompeiuReport& r) {
  return json{{"verdict", to_string(r.verdict)}, {"g", r.g}, {"h", r.h}, {"rho", r.rho}};
}

}  // namespace prekite::io
