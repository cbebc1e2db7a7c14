#include "prekite/centers.hpp"
#include "prekite/geometry.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace prekite;
using prekite::gen::Rng;

TEST(WellDistributed, Examples) {
  EXPECT_TRUE(is_well_distributed(SquaredDistanceMatrix::regular(4)));
  const auto d = to_sdm(PreKite(1, {1, 1, 2}));
  EXPECT_FALSE(is_well_distributed(d));
  const auto sums = vertex_square_sums(d);
  EXPECT_EQ(sums[0], 4);
  EXPECT_EQ(sums[3], 4);
  EXPECT_EQ(sums[1], 3);
  EXPECT_EQ(is_well_distributed(d.scaled(Scalar(7) / 3)), is_well_distributed(d));

  // A non-regular well-distributed tetrahedron: opposite edges equal.
  const std::vector<Scalar> up{2, 3, 4, 4, 3, 2};
  EXPECT_TRUE(is_well_distributed(SquaredDistanceMatrix::from_upper(3, up)));
}

TEST(Equiradial, Examples) {
  EXPECT_TRUE(is_equiradial(SquaredDistanceMatrix::regular(3)));
  EXPECT_FALSE(is_equiradial(to_sdm(PreKite(1, {2, 2, 2}))));
  EXPECT_FALSE(is_equiradial(to_sdm(PreKite(1, {1, 1, 2}))));
  const std::vector<Scalar> up{1, 1, 4, 1, 4, 9};
  EXPECT_THROW(is_equiradial(SquaredDistanceMatrix::from_upper(3, up)), DegenerateSimplexError);
}

TEST(Equiareal, Examples) {
  EXPECT_TRUE(is_equiareal(SquaredDistanceMatrix::regular(5)));
  EXPECT_TRUE(is_equiareal(to_sdm(PreKite(1, {1, 1, 1, 2}))));
  EXPECT_FALSE(is_equiareal(to_sdm(PreKite(1, {1, 1, 2}))));
}

TEST(EquiradialCondition, Examples) {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(prekite_equiradial_condition(PreKite::kite(n, 3, 3), j), 0);
  // alpha = 5, beta = 7. Facet 3 of PK[3;1;(1,1,2)] is the unit triangle on
  // vertices 0,1,2, congruent to the base, so its residual vanishes; facet 1
  // is a right isosceles triangle and does not.
  EXPECT_EQ(prekite_equiradial_condition(PreKite(1, {1, 1, 2}), 3), 0);
  EXPECT_EQ(prekite_equiradial_condition(PreKite(1, {1, 1, 2}), 1), -4);
  EXPECT_EQ(prekite_equiradial_condition(PreKite(1, {1, 1, 2}), 2), -4);
  EXPECT_THROW(prekite_equiradial_condition(PreKite(1, {1, 2}), 1), InputError);
}

// The residual equals (C0 Dj - Cj D0) / u^(2n-3), which is what makes the
// vanishing of all residuals equivalent to equal facet radii.
TEST(EquiradialCondition, MatchesCrossProductOfFacetDeterminants) {
  Rng rng(61);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 3, 6));
    const auto pk = gen::random_prekite(rng, n);
    const Scalar scale = power(pk.base_sq(), static_cast<unsigned>(2 * n - 3));
    for (std::size_t j = 1; j <= n; ++j) {
      const Scalar cross = pk_facet_cm(pk, 0) * pk_facet_inner_cm(pk, j) - pk_facet_cm(pk, j) * pk_facet_inner_cm(pk, 0);
      ASSERT_EQ(cross, scale * prekite_equiradial_condition(pk, j));
    }
  }
}

TEST(CircumcenterBarycentric, Examples) {
  const auto reg = circumcenter_barycentric(SquaredDistanceMatrix::regular(3));
  for (const auto& w : reg.weights) EXPECT_EQ(w, Scalar(1) / 4);
  EXPECT_EQ(reg.circumradius_sq, Scalar(3) / 8);
  EXPECT_TRUE(reg.interior);

  // Obtuse triangle: circumcenter outside. Right triangle: on the hypotenuse.
  const std::vector<Scalar> obtuse{1, 1, 3}, right{9, 16, 25};
  EXPECT_FALSE(circumcenter_interior(SquaredDistanceMatrix::from_upper(2, obtuse)));
  const auto r = circumcenter_barycentric(SquaredDistanceMatrix::from_upper(2, right));
  EXPECT_EQ(r.weights[0], 0);
  EXPECT_FALSE(r.interior);
}

TEST(CircumcenterBarycentric, MatchesGeometry) {
  Rng rng(62);
  for (int k = 0; k < 100; ++k) {
    const auto pk = gen::random_realizable_prekite(rng, 6);
    const auto d = to_sdm(pk);
    const auto bary = circumcenter_barycentric(d);
    EXPECT_EQ(bary.circumradius_sq, circumradius_sq(d));
    const auto s = embed(d);
    Point c = Point::Zero(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t i = 0; i < s.vertices().size(); ++i) c += to_double(bary.weights[i]) * s.vertex(i);
    EXPECT_LE((c - circumcenter(s).center).norm(), 1e-8);
  }
}

TEST(CoincidenceReport, Examples) {
  const auto reg = coincidence_report(SquaredDistanceMatrix::regular(3), true);
  EXPECT_TRUE(reg.well_distributed && reg.equiradial && reg.equiareal);
  EXPECT_TRUE(reg.qg_coincide && reg.qi_coincide && reg.ig_coincide);
  ASSERT_TRUE(reg.floats);
  EXPECT_TRUE(reg.floats->agrees);
  EXPECT_TRUE(reg.floats->fg.coincide);

  const auto eq = coincidence_report(to_sdm(PreKite(1, {1, 1, 1, 2})), true);
  EXPECT_TRUE(eq.equiareal);
  EXPECT_FALSE(eq.well_distributed);
  EXPECT_FALSE(eq.equiradial);
  EXPECT_TRUE(eq.floats->agrees);

  const auto kite = coincidence_report(to_sdm(PreKite(1, {2, 2, 2})));
  EXPECT_FALSE(kite.well_distributed || kite.equiradial || kite.equiareal);
  EXPECT_FALSE(kite.floats);

  const std::vector<Scalar> flat{1, 1, 4};
  EXPECT_THROW(coincidence_report(SquaredDistanceMatrix::from_upper(2, flat)), NotRealizableError);
}

// Equal facet circumradii alone do not force regularity: the kites with
// v = (n-2)u/n, n >= 4, are equiradial with an exterior circumcenter. The
// coincidence Q = I additionally needs interiority and does force it.
TEST(CoincidenceReport, PrekiteTheoremsAndFloatAgreement) {
  Rng rng(63);
  int regular = 0;
  for (int k = 0; k < 300; ++k) {
    const auto pk = gen::random_realizable_prekite(rng, 6);
    const auto d = to_sdm(pk);
    const bool is_regular = d.is_regular();
    regular += is_regular;
    const auto r = coincidence_report(d, k % 3 == 0);
    EXPECT_EQ(r.well_distributed, is_regular);
    EXPECT_EQ(r.qg_coincide, is_regular);
    EXPECT_EQ(r.qi_coincide, is_regular);
    if (r.equiradial && !is_regular) {
      const std::size_t n = pk.dimension();
      EXPECT_EQ(pk, PreKite::kite(n, pk.base_sq(), pk.base_sq() * Scalar(n - 2) / Scalar(n)));
      EXPECT_FALSE(r.circumcenter_interior);
    }
    if (r.floats) {
      EXPECT_TRUE(r.floats->agrees);
    }
    if (pk.dimension() >= 3) {
      bool all_zero = true;
      for (std::size_t j = 1; j <= pk.dimension(); ++j)
        if (prekite_equiradial_condition(pk, j) != 0) all_zero = false;
      EXPECT_EQ(all_zero, r.equiradial);
    }
  }
  EXPECT_GT(regular, 10);
}

TEST(Equiradial, NonRegularKites) {
  EXPECT_EQ(pk_cm_det(PreKite::kite(3, 3, 1)), 0);
  for (std::size_t n = 4; n <= 8; ++n) {
    const Scalar u = 5;
    const auto pk = PreKite::kite(n, u, u * Scalar(n - 2) / Scalar(n));
    const auto d = to_sdm(pk);
    ASSERT_TRUE(is_realizable(d).nondegenerate()) << n;
    EXPECT_TRUE(is_equiradial(d)) << n;
    EXPECT_FALSE(d.is_regular());
    for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(prekite_equiradial_condition(pk, j), 0);
    const auto r = coincidence_report(d, true);
    EXPECT_FALSE(r.circumcenter_interior);
    EXPECT_FALSE(r.qi_coincide);
    EXPECT_FALSE(r.floats->qi.coincide);
    EXPECT_TRUE(r.floats->agrees);
  }
}

TEST(EquiarealSolve, PublishedAndDerivedCases) {
  const auto six = equiareal_prekite_solve(6, 5, 1);
  ASSERT_EQ(six.size(), 1u);
  EXPECT_EQ(six[0].x, 1);
  EXPECT_EQ(six[0].y, Scalar(3) / 2);
  EXPECT_TRUE(six[0].realizable());
  EXPECT_TRUE(six[0].equiareal_verified);
  EXPECT_FALSE(six[0].regular);

  const auto four = equiareal_prekite_solve(4, 3, 1);
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].x, 1);
  EXPECT_EQ(four[0].y, 2);
  EXPECT_TRUE(four[0].realizable());
  EXPECT_TRUE(four[0].equiareal_verified);
  const auto g = gram_matrix(to_sdm(four[0].prekite()));
  // Leading principal minors of the Gram matrix.
  const std::vector<Scalar> minors{1, Scalar(3) / 4, Scalar(1) / 2, Scalar(1) / 4};
  std::vector<Scalar> got;
  for (std::size_t k = 1; k <= 4; ++k) {
    ExactMatrix lead(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = g(i, j);
    got.push_back(exact_determinant(lead));
  }
  EXPECT_EQ(got, minors);

  const auto five = equiareal_prekite_solve(5, 3, 2);
  ASSERT_EQ(five.size(), 1u);
  EXPECT_EQ(five[0].y, 2 * five[0].x);
  EXPECT_EQ(five[0].realizability, Realizability::degenerate);
  EXPECT_EQ(pk_cm_det(five[0].prekite()), 0);

  EXPECT_THROW(equiareal_prekite_solve(4, 2, 2), NoSolutionError);
  EXPECT_THROW(equiareal_prekite_solve(4, 1, 3), InputError);
  EXPECT_THROW(equiareal_prekite_solve(4, 3, 2), InputError);
}

TEST(EquiarealSolve, ScalesWithU) {
  const auto scaled = equiareal_prekite_solve(6, 5, 1, 4);
  ASSERT_EQ(scaled.size(), 1u);
  EXPECT_EQ(scaled[0].x, 4);
  EXPECT_EQ(scaled[0].y, 6);
  EXPECT_TRUE(scaled[0].equiareal_verified);
}

TEST(EquiarealSolve, EveryCandidatePassesTheFacetOracle) {
  for (std::size_t n = 3; n <= 12; ++n)
    for (std::size_t s = 1; 2 * s < n; ++s)
      for (const auto& c : equiareal_prekite_solve(n, n - s, s)) {
        const auto d = to_sdm(c.prekite());
        const Scalar first = cm_det(facet_sdm(d, 0));
        for (std::size_t j = 1; j <= n; ++j) EXPECT_EQ(cm_det(facet_sdm(d, j)), first) << n << "," << s;
        EXPECT_TRUE(c.equiareal_verified);
      }
}

TEST(EquiarealScan, ReportsDiscrepancyAgainstPublishedClaim) {
  const auto three = equiareal_scan(3);
  EXPECT_FALSE(three.oracle_non_regular_found);
  EXPECT_FALSE(three.discrepancy);
  ASSERT_EQ(three.rows.size(), 1u);
  EXPECT_EQ(three.rows[0].candidates.at(0).realizability, Realizability::degenerate);

  for (std::size_t n : {4u, 5u}) {
    const auto scan = equiareal_scan(n);
    EXPECT_TRUE(scan.claim_regular_only);
    EXPECT_TRUE(scan.oracle_non_regular_found);
    EXPECT_TRUE(scan.discrepancy);
  }
  const auto six = equiareal_scan(6);
  EXPECT_FALSE(six.claim_regular_only);
  EXPECT_TRUE(six.oracle_non_regular_found);
  EXPECT_FALSE(six.discrepancy);
  EXPECT_EQ(six.rows.back().t, 3u);
  EXPECT_FALSE(six.rows.back().note.empty());
  EXPECT_THROW(equiareal_scan(2), InputError);
  EXPECT_THROW(equiareal_scan(13), InputError);
}
