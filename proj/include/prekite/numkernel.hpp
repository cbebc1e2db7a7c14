#pragma once

/// @file numkernel.hpp
/// @brief Exact rational scalars, dense exact matrices, determinants and
/// inertia.
///
/// Everything in the algebraic core of the library is computed over the
/// rationals. Two determinant routes are provided: fraction-free (Bareiss)
/// elimination for production use and a memoized Laplace expansion that never
/// divides, used as the brute-force oracle in tests.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prekite {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
using Scalar = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Malformed textual or structural input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Scalar helpers
// ---------------------------------------------------------------------------

inline BigInt numerator_of(const Scalar& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const Scalar& x) { return boost::multiprecision::denominator(x); }

inline int sign(const Scalar& x) { return x.sign(); }

/// Integer power with a non-negative exponent.
inline Scalar power(Scalar base, unsigned exponent) {
  Scalar result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline double to_double(const Scalar& x) { return x.convert_to<double>(); }

/// Text form used in every JSON payload: "p" or "p/q" with q > 0.
inline std::string to_string(const Scalar& x) { return x.str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

/// Base-10 integer from a digit string. BigInt's string constructor reads a
/// leading 0 as an octal prefix, so leading zeros are stripped first.
inline BigInt decimal_integer(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return BigInt(0);
  return BigInt(std::string{digits.substr(first)});
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "p", "p/q" or a plain decimal such as "-1.25". Decimals are read
/// exactly (1.25 becomes 5/4); exponents are not accepted.
inline Scalar parse_scalar(std::string_view text) {
  std::string_view s = detail::trim(text);
  if (s.empty()) throw InputError("empty scalar");
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Scalar value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den))
      throw InputError("malformed rational '" + std::string(text) + "'");
    BigInt q = detail::decimal_integer(den);
    if (q == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    value = Scalar(detail::decimal_integer(num), q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
        (!frac.empty() && !detail::all_digits(frac)))
      throw InputError("malformed decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    value = Scalar(detail::decimal_integer(digits), den);
  } else {
    if (!detail::all_digits(s)) throw InputError("malformed scalar '" + std::string(text) + "'");
    value = Scalar(detail::decimal_integer(s));
  }
  return negative ? Scalar(-value) : value;
}

/// Exact square root of a non-negative rational when it is a perfect square.
inline std::optional<Scalar> exact_sqrt(const Scalar& x) {
  if (x < 0) return std::nullopt;
  BigInt p = numerator_of(x);
  BigInt q = denominator_of(x);
  BigInt rp = boost::multiprecision::sqrt(p);
  BigInt rq = boost::multiprecision::sqrt(q);
  if (rp * rp != p || rq * rq != q) return std::nullopt;
  return Scalar(rp, rq);
}

// ---------------------------------------------------------------------------
// ExactMatrix
// ---------------------------------------------------------------------------

/// Square matrix of exact rationals stored row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;

  explicit ExactMatrix(std::size_t order) : order_(order), entries_(order * order) {}

  ExactMatrix(std::size_t order, std::vector<Scalar> entries) : order_(order), entries_(std::move(entries)) {
    if (entries_.size() != order_ * order_)
      throw InputError("matrix of order " + std::to_string(order_) + " needs " + std::to_string(order_ * order_) +
                       " entries, got " + std::to_string(entries_.size()));
  }

  static ExactMatrix identity(std::size_t order) {
    ExactMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
    return m;
  }

  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows) {
    ExactMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw InputError("matrix rows must form a square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t order() const noexcept { return order_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }

  std::span<const Scalar> entries() const noexcept { return entries_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  ExactMatrix transposed() const {
    ExactMatrix t(order_);
    for (std::size_t i = 0; i < order_; ++i)
      for (std::size_t j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Matrix with row `row` and column `col` removed.
  ExactMatrix without(std::size_t row, std::size_t col) const {
    ExactMatrix m(order_ - 1);
    for (std::size_t i = 0, r = 0; i < order_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, c = 0; j < order_; ++j) {
        if (j == col) continue;
        m(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return m;
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.order_ != b.order_) throw InputError("order mismatch in matrix product");
    ExactMatrix c(a.order_);
    for (std::size_t i = 0; i < a.order_; ++i)
      for (std::size_t k = 0; k < a.order_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.order_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Scalar> entries_;
};

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

/// Exact determinant by fraction-free (Bareiss) elimination with row
/// pivoting. The empty matrix has determinant 1.
inline Scalar exact_determinant(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  ExactMatrix w = m;
  Scalar previous = 1;
  int swaps = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && w(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      ++swaps;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / previous;
      }
      w(i, k) = 0;
    }
    previous = w(k, k);
  }
  Scalar det = w(n - 1, n - 1);
  return (swaps % 2 == 0) ? det : Scalar(-det);
}

/// Laplace (cofactor) expansion along successive rows, memoized over the set
/// of consumed columns. Uses only ring operations, so it shares no code path
/// with the elimination route; O(2^n n) time. Intended as an oracle.
inline Scalar cofactor_determinant(const ExactMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  if (n > 24) throw InputError("cofactor oracle limited to order <= 24");
  const std::uint32_t full = (1u << n) - 1u;
  // minor[mask] = determinant of rows [popcount(mask), n) x columns not in mask
  std::vector<Scalar> minor(std::size_t{1} << n);
  minor[full] = 1;
  for (std::uint32_t mask = full; mask-- > 0;) {
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    Scalar acc = 0;
    int position = 0;  // index of column c among the free columns
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      if (m(row, c) != 0) {
        const Scalar term = m(row, c) * minor[mask | (1u << c)];
        if (position % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      ++position;
    }
    minor[mask] = acc;
  }
  return minor[0];
}

// ---------------------------------------------------------------------------
// Inertia
// ---------------------------------------------------------------------------

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Signature of a symmetric matrix by exact congruence (symmetric elimination
/// with 1x1 pivots, and 2x2 pivots when the remaining diagonal vanishes).
inline Inertia inertia(const ExactMatrix& m) {
  if (!m.is_symmetric()) throw InputError("inertia requires a symmetric matrix");
  ExactMatrix w = m;
  std::vector<std::size_t> active(m.order());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  Inertia result;

  auto erase = [&active](std::size_t idx) { active.erase(std::find(active.begin(), active.end(), idx)); };

  while (!active.empty()) {
    auto diag = std::find_if(active.begin(), active.end(), [&w](std::size_t i) { return w(i, i) != 0; });
    if (diag != active.end()) {
      const std::size_t p = *diag;
      const Scalar pivot = w(p, p);
      (pivot > 0 ? result.positive : result.negative) += 1;
      erase(p);
      for (std::size_t r : active) {
        if (w(r, p) == 0) continue;
        const Scalar factor = w(r, p) / pivot;
        for (std::size_t c : active) w(r, c) -= factor * w(p, c);
      }
      continue;
    }
    // Zero diagonal: look for an off-diagonal pair forming [[0,b],[b,0]].
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t a = 0; a < active.size() && !pair; ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b)
        if (w(active[a], active[b]) != 0) {
          pair = std::make_pair(active[a], active[b]);
          break;
        }
    if (!pair) {
      result.zero += active.size();
      break;
    }
    const auto [i, j] = *pair;
    const Scalar b = w(i, j);
    result.positive += 1;
    result.negative += 1;
    erase(i);
    erase(j);
    // Schur complement with block inverse [[0, 1/b], [1/b, 0]].
    ExactMatrix next = w;
    for (std::size_t r : active)
      for (std::size_t c : active) next(r, c) = w(r, c) - (w(r, i) * w(j, c) + w(r, j) * w(i, c)) / b;
    w = std::move(next);
  }
  return result;
}

/// Exact solution of m x = rhs by Gauss-Jordan elimination; nullopt when m is
/// singular.
inline std::optional<std::vector<Scalar>> solve_exact(const ExactMatrix& m, std::span<const Scalar> rhs) {
  const std::size_t n = m.order();
  if (rhs.size() != n) throw InputError("right-hand side length mismatch");
  ExactMatrix w = m;
  std::vector<Scalar> b(rhs.begin(), rhs.end());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && w(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(k, j), w(p, j));
      std::swap(b[k], b[p]);
    }
    const Scalar pivot = w(k, k);
    for (std::size_t j = k; j < n; ++j) w(k, j) /= pivot;
    b[k] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      const Scalar factor = w(i, k);
      for (std::size_t j = k; j < n; ++j) w(i, j) -= factor * w(k, j);
      b[i] -= factor * b[k];
    }
  }
  return b;
}

}  // namespace prekite
