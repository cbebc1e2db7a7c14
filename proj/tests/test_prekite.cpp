#include "prekite/cayley.hpp"
#include "prekite/prekite.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace prekite;
using prekite::gen::Rng;

TEST(PreKite, Construction) {
  const PreKite pk(1, {1, 1, 2});
  EXPECT_EQ(pk.dimension(), 3u);
  EXPECT_EQ(pk.edge_sum(), 5);
  EXPECT_EQ(pk.edge_square_sum(), 7);
  EXPECT_EQ(pk.apex_sq(3), 2);
  EXPECT_THROW(PreKite(1, {1}), InputError);
  EXPECT_THROW(PreKite(0, {1, 1}), InputError);
  EXPECT_THROW(PreKite(1, {1, -1}), InputError);
  EXPECT_EQ(PreKite::kite(3, 1, 2), PreKite(1, {2, 2, 2}));
  EXPECT_EQ(PreKite::two_apexed(4, 1, 2), PreKite(1, {1, 1, 1, 2}));
}

TEST(PreKite, ToMatrix) {
  const std::vector<Scalar> tri{5, 7, 3};
  EXPECT_EQ(to_sdm(PreKite(3, {5, 7})), SquaredDistanceMatrix::from_upper(2, tri));
  EXPECT_EQ(to_sdm(PreKite(1, {1, 1, 1})), SquaredDistanceMatrix::regular(3));
  const auto d = to_sdm(PreKite(1, {1, 1, 2}));
  for (std::size_t i = 0; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) EXPECT_EQ(d(i, j), (i == 0 && j == 3) ? 2 : 1);
}

TEST(PreKite, DeterminantExamples) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const int expected = (n % 2 == 1 ? 1 : -1) * static_cast<int>(n + 1);
    EXPECT_EQ(pk_cm_det(PreKite::kite(n, 1, 1)), expected) << n;
  }
  EXPECT_EQ(pk_cm_det(PreKite(1, {1, 1, 2})), 4);
  EXPECT_EQ(pk_cm_det(PreKite(1, {1, 1, 3})), 0);
  EXPECT_EQ(pk_inner_cm_det(PreKite(1, {1, 1, 2})), -4);
  EXPECT_EQ(pk_inner_cm_det(PreKite(1, {1, 1, 1})), -3);
  for (int c : {1, 2, 5}) EXPECT_EQ(pk_inner_cm_det(PreKite(3, {c, c})), 2 * 3 * c * c);
}

TEST(PreKite, FacetExamples) {
  const PreKite pk(1, {1, 1, 1, 2});
  EXPECT_EQ(pk_facet_cm(pk, 0), 4);
  EXPECT_EQ(pk_facet_cm(pk, 4), 4);
  EXPECT_EQ(pk_facet_cm(pk, 1), 4);
  EXPECT_EQ(pk_facet_inner_cm(pk, 0), -3);
  EXPECT_EQ(pk_facet_inner_cm(pk, 4), -3);
  const auto d = to_sdm(pk);
  EXPECT_EQ(pk_facet_inner_cm(pk, 1), inner_cm_det(facet_sdm(d, 1)));
  EXPECT_THROW(pk_facet_cm(PreKite(1, {1, 2}), 1), InputError);
  EXPECT_THROW(pk_facet_cm(pk, 5), InputError);
}

TEST(PreKite, ClosedFormsMatchGenericDeterminants) {
  Rng rng(41);
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 2, 6));
    const auto pk = gen::random_prekite(rng, n);
    const auto d = to_sdm(pk);
    ASSERT_EQ(pk_cm_det(pk), cm_det(d));
    ASSERT_EQ(pk_inner_cm_det(pk), inner_cm_det(d));
    if (n < 3) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      const auto f = facet_sdm(d, j);
      ASSERT_EQ(pk_facet_cm(pk, j), cm_det(f)) << "facet " << j;
      ASSERT_EQ(pk_facet_inner_cm(pk, j), inner_cm_det(f)) << "facet " << j;
    }
  }
}

TEST(Apexes, Examples) {
  const auto two = find_apexes(to_sdm(PreKite(1, {1, 1, 2})));
  EXPECT_EQ(two.apexes, (std::vector<std::size_t>{0, 3}));
  EXPECT_FALSE(two.is_kite);
  EXPECT_FALSE(two.is_regular);

  const auto reg = find_apexes(SquaredDistanceMatrix::regular(4));
  EXPECT_EQ(reg.apexes.size(), 5u);
  EXPECT_TRUE(reg.is_regular);
  EXPECT_TRUE(reg.is_kite);

  const auto kite = find_apexes(to_sdm(PreKite(1, {2, 2, 2})));
  EXPECT_EQ(kite.apexes, (std::vector<std::size_t>{0}));
  EXPECT_TRUE(kite.is_kite);

  const std::vector<Scalar> up{1, 4, 9, 16, 25, 36};
  EXPECT_FALSE(find_apexes(SquaredDistanceMatrix::from_upper(3, up)).is_prekite());
}

TEST(Apexes, AtMostTwoOnNonRegularRealizable) {
  Rng rng(42);
  for (int k = 0; k < 300; ++k) {
    const auto pk = gen::random_realizable_prekite(rng, 6);
    const auto d = to_sdm(pk);
    const auto report = find_apexes(d);
    ASSERT_TRUE(report.is_prekite());
    EXPECT_EQ(report.apexes.front(), 0u);
    if (report.is_regular) {
      EXPECT_EQ(report.apexes.size(), d.vertex_count());
    } else if (pk.dimension() >= 3) {
      EXPECT_LE(report.apexes.size(), 2u);
    }
    // Faces of a pre-kite are pre-kites.
    if (pk.dimension() >= 3) {
      for (std::size_t j = 0; j <= pk.dimension(); ++j) EXPECT_TRUE(find_apexes(facet_sdm(d, j)).is_prekite());
    }
  }
}

TEST(Window, Bounds) {
  EXPECT_EQ(apex_squared_ratio_window(3).upper, 3);
  EXPECT_EQ(apex_squared_ratio_window(2).upper, 4);
  EXPECT_EQ(apex_squared_ratio_window(6).upper, Scalar(12) / 5);
  EXPECT_EQ(pk_cm_det(PreKite::two_apexed(3, 1, 3)), 0);
  EXPECT_TRUE(two_apexed_feasible(4, 1, 2));
  EXPECT_FALSE(two_apexed_feasible(3, 1, 3));
  EXPECT_TRUE(two_apexed_feasible(3, 1, 1));
  EXPECT_THROW(apex_squared_ratio_window(1), InputError);
}

TEST(Window, AgreesWithRealizability) {
  Rng rng(43);
  for (std::size_t n = 2; n <= 8; ++n) {
    const Scalar edge = Scalar(2 * n) / Scalar(n - 1);
    EXPECT_EQ(pk_cm_det(PreKite::two_apexed(n, 1, edge)), 0);
    EXPECT_EQ(is_realizable(to_sdm(PreKite::two_apexed(n, 1, edge))).status, Realizability::degenerate);
    for (int k = 0; k < 20; ++k) {
      const Scalar u = gen::random_positive_rational(rng, 4, 5);
      const Scalar v = u * gen::random_positive_rational(rng, 4, 7);
      const bool inside = two_apexed_feasible(n, u, v);
      EXPECT_EQ(inside, is_realizable(to_sdm(PreKite::two_apexed(n, u, v))).nondegenerate());
    }
  }
}
