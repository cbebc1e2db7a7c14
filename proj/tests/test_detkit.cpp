#include "prekite/detkit.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace prekite;
using prekite::gen::Rng;

namespace {

KSpec random_spec(Rng& rng, std::size_t n) {
  KSpec s;
  s.corner = gen::random_rational(rng, -5, 5, 3);
  s.off_diagonal = gen::random_rational(rng, -5, 5, 3);
  s.diagonal = gen::random_rational(rng, -5, 5, 3);
  for (std::size_t i = 0; i < n; ++i) {
    s.column.push_back(gen::random_rational(rng, -5, 5, 3));
    s.row.push_back(gen::random_rational(rng, -5, 5, 3));
  }
  return s;
}

}  // namespace

TEST(DetJ, Examples) {
  EXPECT_EQ(det_j(3, 1, 2), 4);
  EXPECT_EQ(det_j(1, 7, 5), 5);
  for (int c : {-3, 0, 2, 9}) EXPECT_EQ(det_j(4, c, c), 0);
  EXPECT_THROW(det_j(0, 1, 2), InputError);
}

TEST(DetJ, MatchesAssembledMatrix) {
  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 6));
    const Scalar a = gen::random_rational(rng, -6, 6, 4);
    const Scalar b = gen::random_rational(rng, -6, 6, 4);
    const auto m = assemble_j_matrix(n, a, b);
    EXPECT_EQ(det_j(n, a, b), exact_determinant(m));
    EXPECT_EQ(det_j(n, a, b), cofactor_determinant(m));
  }
}

TEST(DetK, Examples) {
  KSpec s{5, {1, 2}, {3, 4}, 7, 9};
  EXPECT_EQ(det_k(s), 131);
  EXPECT_EQ(exact_determinant(ExactMatrix::from_rows({{5, 3, 4}, {1, 9, 7}, {2, 7, 9}})), 131);
  EXPECT_EQ(assemble_k_matrix(s), ExactMatrix::from_rows({{5, 3, 4}, {1, 9, 7}, {2, 7, 9}}));

  KSpec base{3, {2}, {5}, 11, 4};
  EXPECT_EQ(det_k(base), 3 * 4 - 2 * 5);
}

TEST(DetK, ZeroBorderFactorsThroughJ) {
  Rng rng(22);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Scalar z = gen::random_rational(rng, -5, 5);
    const Scalar a = gen::random_rational(rng, -5, 5);
    const Scalar b = gen::random_rational(rng, -5, 5);
    KSpec s{z, std::vector<Scalar>(n), std::vector<Scalar>(n), a, b};
    EXPECT_EQ(det_k(s), z * det_j(n, a, b));
  }
}

TEST(DetK, MatchesAssembledMatrix) {
  Rng rng(23);
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 6));
    auto s = random_spec(rng, n);
    if (k % 7 == 0) s.diagonal = s.off_diagonal;  // singular inner block
    const auto m = assemble_k_matrix(s);
    EXPECT_EQ(det_k(s), exact_determinant(m));
    EXPECT_EQ(det_k(s), cofactor_determinant(m));
  }
}

TEST(DetK, SwappingBordersIsTransposition) {
  Rng rng(24);
  for (int k = 0; k < 100; ++k) {
    auto s = random_spec(rng, static_cast<std::size_t>(gen::uniform_int(rng, 1, 6)));
    KSpec t = s;
    std::swap(t.column, t.row);
    EXPECT_EQ(det_k(s), det_k(t));
  }
}

TEST(DetK, SimultaneousPermutationOfBorders) {
  Rng rng(25);
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 2, 6));
    auto s = random_spec(rng, n);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    KSpec t = s;
    for (std::size_t i = 0; i < n; ++i) {
      t.column[i] = s.column[order[i]];
      t.row[i] = s.row[order[i]];
    }
    EXPECT_EQ(det_k(s), det_k(t));
  }
}

// Three classical specializations of the bordered determinant.
TEST(DetK, ClassicalSpecializations) {
  Rng rng(26);
  for (int k = 0; k < 60; ++k) {
    const auto n = static_cast<std::size_t>(gen::uniform_int(rng, 1, 6));
    auto s = random_spec(rng, n);
    s.row = s.column;

    KSpec unit_corner = s;
    unit_corner.corner = 1;
    EXPECT_EQ(det_k(unit_corner), exact_determinant(assemble_k_matrix(unit_corner)));

    KSpec signed_identity = s;
    signed_identity.corner = 0;
    signed_identity.off_diagonal = 1;
    signed_identity.diagonal = -1;
    EXPECT_EQ(det_k(signed_identity), exact_determinant(assemble_k_matrix(signed_identity)));

    KSpec zero_corner = s;
    zero_corner.corner = 0;
    EXPECT_EQ(det_k(zero_corner), exact_determinant(assemble_k_matrix(zero_corner)));
  }
}

TEST(DetK, ValidatesShape) {
  EXPECT_THROW(det_k(KSpec{1, {}, {}, 1, 2}), InputError);
  EXPECT_THROW(det_k(KSpec{1, {1, 2}, {1}, 1, 2}), InputError);
}
