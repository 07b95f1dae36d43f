#pragma once

#include "qlattice/core.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qlattice {

/**
 * Dense univariate polynomial over the integers.
 *
 * coefficients()[i] is the coefficient of q^i. The stored list is always
 * canonical: the last entry is nonzero, and the zero polynomial stores
 * nothing. Equality is therefore plain coefficient-list equality.
 */
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  /// c * q^power
  static Polynomial monomial(BigInt c, std::size_t power) {
    std::vector<BigInt> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return Polynomial(std::move(coeffs));
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  std::size_t size() const noexcept { return coeffs_.size(); }

  BigInt coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
  }

  /// f(1), the sum of all coefficients.
  BigInt value_at_one() const {
    BigInt sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
  }

  /// q^k * f
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
    return Polynomial(std::move(out));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human-readable form, e.g. "1 + q + 2q^2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0 || mag != 1) out += mag.str();
      if (i >= 1) out += "q";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

/// Thrown by exact division; carries the remainder that blocked it.
class NotDivisible : public std::domain_error {
 public:
  NotDivisible(const std::string& what, Polynomial remainder)
      : std::domain_error(what), remainder_(std::move(remainder)) {}
  const Polynomial& remainder() const noexcept { return remainder_; }

 private:
  Polynomial remainder_;
};

/// [m]_q = 1 + q + ... + q^{m-1}
inline Polynomial q_analogue(std::int64_t m) {
  if (m < 1) throw InvalidArgument("q_analogue: m must be >= 1, got " + std::to_string(m));
  return Polynomial(std::vector<BigInt>(static_cast<std::size_t>(m), BigInt(1)));
}

inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const auto& a = f.coefficients();
  const auto& b = g.coefficients();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return Polynomial(std::move(out));
}

inline Polynomial operator*(const Polynomial& f, const Polynomial& g) { return poly_mul(f, g); }

/**
 * Long division over Z: returns h with f = g * h.
 *
 * Throws NotDivisible when a quotient coefficient would be fractional or the
 * remainder is nonzero. The exception carries the remainder at the point of
 * failure.
 */
inline Polynomial poly_exact_div(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("poly_exact_div: division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.degree() < g.degree()) throw NotDivisible("poly_exact_div: divisor degree exceeds dividend", f);

  std::vector<BigInt> rem = f.coefficients();
  const auto& d = g.coefficients();
  const std::size_t dn = d.size() - 1;
  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - dn);

  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + dn];
    if (top == 0) continue;
    BigInt qc, r;
    boost::multiprecision::divide_qr(top, lead, qc, r);
    if (r != 0) throw NotDivisible("poly_exact_div: non-integer quotient coefficient", Polynomial(rem));
    for (std::size_t j = 0; j <= dn; ++j) rem[i + j] -= qc * d[j];
    quot[i] = std::move(qc);
  }
  Polynomial remainder(std::move(rem));
  if (!remainder.is_zero()) throw NotDivisible("poly_exact_div: nonzero remainder", std::move(remainder));
  return Polynomial(std::move(quot));
}

/// f * [m]_q as a sliding-window sum, O(deg f + m).
inline Polynomial multiply_by_q_analogue(const Polynomial& f, std::int64_t m) {
  if (m < 1) throw InvalidArgument("multiply_by_q_analogue: m must be >= 1");
  if (f.is_zero()) return {};
  const auto& a = f.coefficients();
  const auto w = static_cast<std::size_t>(m);
  std::vector<BigInt> out(a.size() + w - 1);
  BigInt window = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) window += a[i];
    if (i >= w) window -= a[i - w];
    out[i] = window;
  }
  return Polynomial(std::move(out));
}

/**
 * Exact f / [m]_q in O(deg f), via f * (1 - q) / (1 - q^m).
 * Same contract as poly_exact_div with g = [m]_q.
 */
inline Polynomial divide_by_q_analogue(const Polynomial& f, std::int64_t m) {
  if (m < 1) throw InvalidArgument("divide_by_q_analogue: m must be >= 1");
  if (f.is_zero() || m == 1) return f;
  const auto w = static_cast<std::size_t>(m);
  const auto& a = f.coefficients();
  if (a.size() < w) throw NotDivisible("divide_by_q_analogue: divisor degree exceeds dividend", f);

  // Power series h = (1 - q) f / (1 - q^m); f is divisible iff h stops at deg f - m + 1.
  const std::size_t quot_len = a.size() - w + 1;
  std::vector<BigInt> h(a.size() + 1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i < a.size()) h[i] = a[i];
    if (i >= 1 && i - 1 < a.size()) h[i] -= a[i - 1];
    if (i >= w) h[i] += h[i - w];
  }
  const bool tail_zero = std::all_of(h.begin() + static_cast<std::ptrdiff_t>(quot_len), h.end(),
                                     [](const BigInt& c) { return c == 0; });
  h.resize(quot_len);
  Polynomial quot(std::move(h));
  if (!tail_zero) {
    throw NotDivisible("divide_by_q_analogue: nonzero remainder", f - multiply_by_q_analogue(quot, m));
  }
  return quot;
}

/// b(k, m; f) for k = 0..m-1: sums of coefficients a_i over i = k (mod m).
inline std::vector<BigInt> content_sums(const Polynomial& f, std::int64_t m) {
  if (m < 1) throw InvalidArgument("content_sums: m must be >= 1, got " + std::to_string(m));
  const auto classes = static_cast<std::size_t>(m);
  std::vector<BigInt> sums(classes);
  const auto& a = f.coefficients();
  for (std::size_t i = 0; i < a.size(); ++i) sums[i % classes] += a[i];
  return sums;
}

namespace detail {

inline bool equal_content_by_sums(const Polynomial& f, std::int64_t m) {
  const auto sums = content_sums(f, m);
  BigInt share, r;
  boost::multiprecision::divide_qr(f.value_at_one(), BigInt(m), share, r);
  if (r != 0) return false;
  return std::all_of(sums.begin(), sums.end(), [&](const BigInt& s) { return s == share; });
}

inline bool divisible_by_q_analogue(const Polynomial& f, std::int64_t m) {
  try {
    (void)poly_exact_div(f, q_analogue(m));
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace detail

/**
 * True iff every content sum modulo m equals f(1)/m.
 *
 * This holds exactly when [m]_q divides f in Z[q]. Builds that define
 * QLATTICE_CROSSCHECK also run the division and throw InvariantViolation if
 * the two answers differ.
 */
inline bool has_equal_content(const Polynomial& f, std::int64_t m) {
  if (m < 1) throw InvalidArgument("has_equal_content: m must be >= 1, got " + std::to_string(m));
  const bool by_sums = detail::equal_content_by_sums(f, m);
#ifdef QLATTICE_CROSSCHECK
  if (by_sums != detail::divisible_by_q_analogue(f, m)) {
    throw InvariantViolation("has_equal_content: content sums and [m]_q divisibility disagree");
  }
#endif
  return by_sums;
}

}  // namespace qlattice
