#pragma once

// Seeded generators shared by the test binaries.

#include "prekite/cayley.hpp"
#include "prekite/numkernel.hpp"
#include "prekite/prekite.hpp"

#include <cstddef>
#include <random>
#include <vector>

namespace prekite::gen {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// p/q with p in [lo*q, hi*q] and q in [1, max_den].
inline Scalar random_rational(Rng& rng, long long lo, long long hi, long long max_den = 6) {
  const long long q = uniform_int(rng, 1, max_den);
  return Scalar(uniform_int(rng, lo * q, hi * q)) / Scalar(q);
}

inline Scalar random_positive_rational(Rng& rng, long long hi, long long max_den = 6) {
  const long long q = uniform_int(rng, 1, max_den);
  return Scalar(uniform_int(rng, 1, hi * q)) / Scalar(q);
}

inline ExactMatrix random_int_matrix(Rng& rng, std::size_t order, long long lo, long long hi) {
  ExactMatrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) m(i, j) = Scalar(uniform_int(rng, lo, hi));
  return m;
}

inline ExactMatrix random_symmetric_matrix(Rng& rng, std::size_t order, long long lo, long long hi) {
  ExactMatrix m(order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = i; j < order; ++j) m(i, j) = m(j, i) = Scalar(uniform_int(rng, lo, hi));
  return m;
}

/// Random pre-kite with base 1 and rational apex edges, not necessarily
/// realizable.
inline PreKite random_prekite(Rng& rng, std::size_t n) {
  std::vector<Scalar> v(n);
  for (auto& x : v) x = random_positive_rational(rng, 4, 8);
  return PreKite(random_positive_rational(rng, 3, 4), std::move(v));
}

/// Random nondegenerate pre-kite with 2 <= n <= max_n. The mix includes
/// regular simplices, kites and two-apexed pre-kites so that implications
/// with those as conclusion are exercised.
inline PreKite random_realizable_prekite(Rng& rng, std::size_t max_n) {
  for (;;) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long long>(max_n)));
    const Scalar u = random_positive_rational(rng, 3, 3);
    const auto kind = uniform_int(rng, 0, 9);
    std::vector<Scalar> v(n);
    if (kind == 0) {
      v.assign(n, u);
    } else if (kind <= 2) {
      v.assign(n, u * random_positive_rational(rng, 3, 8));
    } else if (kind <= 4) {
      v.assign(n, u);
      v.back() = u * random_positive_rational(rng, 3, 8);
    } else {
      for (auto& x : v) x = u * random_positive_rational(rng, 2, 8);
    }
    PreKite pk(u, std::move(v));
    if (is_realizable(to_sdm(pk)).nondegenerate()) return pk;
  }
}

}  // namespace prekite::gen
