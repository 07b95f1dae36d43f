#pragma once

#include "qlattice/intpoly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

namespace qlattice {

namespace detail {

/// Largest n served by the memoized q-Pascal table.
inline constexpr std::int64_t kPascalMemoMaxN = 64;

/**
 * Memo table for the q-Pascal recurrence
 *   [n, k] = q^{n-k} [n-1, k-1] + [n-1, k],
 * keyed by (n, min(k, n-k)). Lookups and inserts are serialized; the
 * polynomial work happens outside the lock, so two threads may compute the
 * same entry, which is harmless since the results are identical.
 */
class PascalTable {
 public:
  using Entry = std::shared_ptr<const Polynomial>;

  static PascalTable& instance() {
    static PascalTable table;
    return table;
  }

  Entry get(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return zero_;
    k = std::min(k, n - k);
    if (k == 0) return one_;
    const auto key = std::make_pair(n, k);
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    // Use the reflected form: [n, k] with k <= n-k.
    Entry left = get(n - 1, k - 1);
    Entry right = get(n - 1, k);
    auto value = std::make_shared<const Polynomial>(left->shifted(static_cast<std::size_t>(n - k)) + *right);
    std::lock_guard lock(mutex_);
    return memo_.emplace(key, std::move(value)).first->second;
  }

 private:
  PascalTable()
      : zero_(std::make_shared<const Polynomial>()), one_(std::make_shared<const Polynomial>(Polynomial{1})) {}

  std::mutex mutex_;
  std::map<std::pair<std::int64_t, std::int64_t>, Entry> memo_;
  Entry zero_;
  Entry one_;
};

/**
 * [n, k] as prod_{j=1..k} (1 - q^{n-k+j}) / (1 - q^j), updated in place.
 * After step j the buffer holds [n-k+j, j], so every division is exact and
 * the j coefficients dropped from the top must be zero.
 */
inline Polynomial gauss_binom_interleaved(std::int64_t n, std::int64_t k) {
  k = std::min(k, n - k);
  std::vector<BigInt> acc(static_cast<std::size_t>(k * (n - k) + n + 1));
  acc[0] = 1;
  std::size_t len = 1;
  for (std::int64_t j = 1; j <= k; ++j) {
    const auto up = static_cast<std::size_t>(n - k + j);
    const auto down = static_cast<std::size_t>(j);
    len += up;
    for (std::size_t i = len; i-- > up;) acc[i] -= acc[i - up];
    for (std::size_t i = down; i < len; ++i) acc[i] += acc[i - down];
    for (std::size_t i = len - down; i < len; ++i) {
      if (acc[i] != 0) throw InvariantViolation("gauss_binom: inexact division in the product route");
    }
    len -= down;
  }
  acc.resize(len);
  return Polynomial(std::move(acc));
}

}  // namespace detail

/**
 * Gaussian binomial coefficient [n brack k]_q.
 *
 * The coefficient of q^j counts lattice paths to (k, n-k) enclosing area j.
 * Returns the zero polynomial for k outside [0, n]. Up to n = 64 this is the
 * memoized q-Pascal recurrence; larger n use the interleaved product so the
 * table never holds the whole k x (n-k) box.
 */
inline Polynomial gauss_binom(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgument("gauss_binom: n must be >= 0, got " + std::to_string(n));
  if (k < 0 || k > n) return {};
  if (n <= detail::kPascalMemoMaxN) return *detail::PascalTable::instance().get(n, k);
  return detail::gauss_binom_interleaved(n, k);
}

/**
 * [n]_q! / ([k]_q! [n-k]_q!) by explicit products and exact division.
 *
 * The numerator [n-k+1]_q ... [n]_q is accumulated first, then divided by
 * [1]_q, [2]_q, ..., [k]_q one factor at a time. Each partial quotient is a
 * polynomial, so a NotDivisible here is an invariant violation.
 */
inline Polynomial gauss_binom_product(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    throw InvalidArgument("gauss_binom_product: need 0 <= k <= n, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
  }
  k = std::min(k, n - k);
  Polynomial acc{1};
  for (std::int64_t i = n - k + 1; i <= n; ++i) acc = poly_mul(acc, q_analogue(i));
  try {
    for (std::int64_t j = 2; j <= k; ++j) acc = poly_exact_div(acc, q_analogue(j));
  } catch (const NotDivisible& e) {
    throw InvariantViolation(std::string("gauss_binom_product: ") + e.what());
  }
  return acc;
}

/// {2n brack n}_q / [n+1]_q. Evaluates to the Catalan number at q = 1.
inline Polynomial q_catalan(std::int64_t n) {
  if (n < 1) throw InvalidArgument("q_catalan: n must be >= 1, got " + std::to_string(n));
  Polynomial result;
  try {
    result = poly_exact_div(gauss_binom(2 * n, n), q_analogue(n + 1));
  } catch (const NotDivisible& e) {
    throw InvariantViolation(std::string("q_catalan: ") + e.what());
  }
#ifdef QLATTICE_CROSSCHECK
  if (result != gauss_binom(2 * n, n) - gauss_binom(2 * n, n + 1).shifted(1)) {
    throw InvariantViolation("q_catalan: quotient differs from the difference formula");
  }
#endif
  return result;
}

struct QIdentityReport {
  std::int64_t n = 0;
  /// {2n brack n} = (1 + q^n) [2n-1]_q ({2n-2 brack n-1} / [n]_q)
  bool factorization = false;
  /// {2n brack n} / [n+1]_q = {2n brack n} - q {2n brack n+1}
  bool catalan_difference = false;
  /// [2n-1]_q divides {2n brack n}
  bool divisible_by_2n_minus_1 = false;

  bool all() const noexcept { return factorization && catalan_difference && divisible_by_2n_minus_1; }
};

inline QIdentityReport verify_q_identities(std::int64_t n) {
  if (n < 1) throw InvalidArgument("verify_q_identities: n must be >= 1, got " + std::to_string(n));
  QIdentityReport report;
  report.n = n;
  const Polynomial central = gauss_binom(2 * n, n);

  try {
    const Polynomial prev_catalan = poly_exact_div(gauss_binom(2 * n - 2, n - 1), q_analogue(n));
    const Polynomial one_plus_qn = Polynomial{1} + Polynomial::monomial(1, static_cast<std::size_t>(n));
    report.factorization = poly_mul(poly_mul(one_plus_qn, q_analogue(2 * n - 1)), prev_catalan) == central;
  } catch (const NotDivisible&) {
    report.factorization = false;
  }

  try {
    const Polynomial quotient = poly_exact_div(central, q_analogue(n + 1));
    report.catalan_difference = quotient == central - gauss_binom(2 * n, n + 1).shifted(1);
  } catch (const NotDivisible&) {
    report.catalan_difference = false;
  }

  try {
    (void)poly_exact_div(central, q_analogue(2 * n - 1));
    report.divisible_by_2n_minus_1 = true;
  } catch (const NotDivisible&) {
    report.divisible_by_2n_minus_1 = false;
  }
  return report;
}

}  // namespace qlattice
