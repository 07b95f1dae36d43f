#pragma once

#include "qlattice/cyclic.hpp"
#include "qlattice/gaussian.hpp"
#include "qlattice/numbertheory.hpp"
#include "qlattice/paths.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace qlattice {

/**
 * Counts of objects per residue class.
 *
 * counts[i] belongs to residue first_residue + i. Usually first_residue is 0
 * and there are `modulus` classes; product distributions cover the units
 * 1..p-1 (first_residue 1, p-1 classes).
 */
struct ResidueDistribution {
  std::uint64_t modulus = 1;
  std::uint64_t first_residue = 0;
  std::vector<BigInt> counts;
  BigInt total = 0;

  static ResidueDistribution zeros(std::uint64_t modulus, std::uint64_t first_residue = 0) {
    ResidueDistribution d;
    d.modulus = modulus;
    d.first_residue = first_residue;
    d.counts.assign(static_cast<std::size_t>(modulus - first_residue), BigInt(0));
    return d;
  }

  std::uint64_t residue(std::size_t index) const noexcept { return first_residue + index; }

  /// Shared class size if total splits evenly, else nullopt.
  std::optional<BigInt> uniform_count() const {
    if (counts.empty()) return std::nullopt;
    BigInt share, r;
    boost::multiprecision::divide_qr(total, BigInt(counts.size()), share, r);
    if (r != 0) return std::nullopt;
    for (const auto& c : counts) {
      if (c != share) return std::nullopt;
    }
    return share;
  }

  bool uniform() const { return uniform_count().has_value(); }

  friend bool operator==(const ResidueDistribution&, const ResidueDistribution&) = default;
};

enum class Mode { Oracle, Poly };

struct EnumerationOptions {
  /// Total-step bound for exhaustive enumeration; nullopt reads QLATTICE_MAX_STEPS.
  std::optional<std::size_t> step_bound;
  /// Worker threads for prefix-partitioned enumeration.
  unsigned threads = 1;

  std::size_t bound() const { return step_bound.value_or(qlattice::step_bound()); }
};

namespace detail {

inline void check_modulus(std::int64_t m) {
  if (m < 1) throw InvalidArgument("modulus must be >= 1, got " + std::to_string(m));
}

inline ResidueDistribution from_content(const std::vector<BigInt>& sums, std::uint64_t modulus) {
  ResidueDistribution d;
  d.modulus = modulus;
  d.counts = sums;
  for (const auto& c : sums) d.total += c;
  return d;
}

/// All step prefixes of a fixed length that fit inside (width, height).
inline std::vector<std::vector<Step>> path_prefixes(std::size_t width, std::size_t height, std::size_t length) {
  std::vector<std::vector<Step>> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::vector<Step>> next;
    for (const auto& p : out) {
      const auto e = static_cast<std::size_t>(std::count(p.begin(), p.end(), Step::East));
      const std::size_t nn = p.size() - e;
      if (e < width) {
        next.push_back(p);
        next.back().push_back(Step::East);
      }
      if (nn < height) {
        next.push_back(p);
        next.back().push_back(Step::North);
      }
    }
    out = std::move(next);
  }
  return out;
}

inline ResidueDistribution area_distribution_oracle(std::size_t width, std::size_t height, std::uint64_t m,
                                                    const EnumerationOptions& opts) {
  check_step_bound(width + height, opts.bound());
  const unsigned workers = std::max(1U, opts.threads);

  // Partition by prefix; each worker owns a strided share of prefixes and its
  // own counters, merged in worker order.
  std::size_t prefix_len = 0;
  while (prefix_len < width + height && (std::size_t{1} << prefix_len) < 4 * workers) ++prefix_len;
  if (workers == 1) prefix_len = 0;
  const auto prefixes = path_prefixes(width, height, prefix_len);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(m, 0));
  auto run = [&](unsigned w) {
    auto& counts = partial[w];
    for (std::size_t i = w; i < prefixes.size(); i += workers) {
      for_each_completion(prefixes[i], width, height,
                          [&](const std::vector<Step>& steps) { ++counts[area(steps) % m]; });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }

  auto d = ResidueDistribution::zeros(m);
  for (const auto& counts : partial) {
    for (std::size_t r = 0; r < m; ++r) d.counts[r] += counts[r];
  }
  for (const auto& c : d.counts) d.total += c;
  return d;
}

template <class Stat>
ResidueDistribution even_word_distribution(std::int64_t n, std::int64_t m, Stat&& stat, const EnumerationOptions& opts) {
  if (n < 0) throw InvalidArgument("word half-length must be >= 0");
  check_modulus(m);
  const auto half = static_cast<std::size_t>(n);
  check_step_bound(2 * half, opts.bound());
  auto d = ResidueDistribution::zeros(static_cast<std::uint64_t>(m));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m), 0);
  for_each_completion({}, half, half, [&](const std::vector<Step>& steps) {
    std::vector<std::uint8_t> digits(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) digits[i] = steps[i] == Step::North ? 1 : 0;
    ++counts[stat(BinaryWord(std::move(digits))) % static_cast<std::uint64_t>(m)];
  });
  for (std::size_t r = 0; r < counts.size(); ++r) {
    d.counts[r] = counts[r];
    d.total += counts[r];
  }
  return d;
}

}  // namespace detail

/**
 * Paths to (width, height) counted by area mod m.
 *
 * Oracle mode enumerates every path (bounded); poly mode reads the content
 * sums of gauss_binom(width + height, width).
 */
inline ResidueDistribution area_distribution(std::int64_t width, std::int64_t height, std::int64_t m, Mode mode,
                                             const EnumerationOptions& opts = {}) {
  if (width < 0 || height < 0) throw InvalidArgument("area_distribution: negative grid size");
  detail::check_modulus(m);
  if (mode == Mode::Poly) {
    return detail::from_content(content_sums(gauss_binom(width + height, width), m), static_cast<std::uint64_t>(m));
  }
  return detail::area_distribution_oracle(static_cast<std::size_t>(width), static_cast<std::size_t>(height),
                                          static_cast<std::uint64_t>(m), opts);
}

/// Strictly increasing k-subsets of [1, n] counted by sum mod m.
inline ResidueDistribution subset_sum_distribution(std::int64_t n, std::int64_t k, std::int64_t m,
                                                   const EnumerationOptions& opts = {}) {
  if (k < 1 || k > n) throw InvalidArgument("subset_sum_distribution: need 1 <= k <= n");
  detail::check_modulus(m);
  check_step_bound(static_cast<std::size_t>(n), opts.bound());
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m), 0);
  for_each_increasing_sequence(n, k, [&](const std::vector<std::int64_t>& s) {
    const auto sum = std::accumulate(s.begin(), s.end(), std::int64_t{0});
    ++counts[static_cast<std::size_t>(sum % m)];
  });
  auto d = ResidueDistribution::zeros(static_cast<std::uint64_t>(m));
  for (std::size_t r = 0; r < counts.size(); ++r) {
    d.counts[r] = counts[r];
    d.total += counts[r];
  }
  return d;
}

/// Whether (p, l) satisfies the product theorem: p prime, 1 <= l <= p-1, gcd(l, p-1) = 1.
inline bool product_theorem_applies(std::int64_t p, std::int64_t l) {
  return p >= 2 && is_prime(static_cast<std::uint64_t>(p)) && l >= 1 && l <= p - 1 && std::gcd(l, p - 1) == 1;
}

/**
 * Strictly increasing l-subsets of [1, p-1] counted by product mod p, over
 * residues 1..p-1. Throws PreconditionError unless the product theorem
 * applies; `diagnostic` computes the distribution anyway (p must still be
 * prime).
 */
inline ResidueDistribution subset_product_distribution(std::int64_t p, std::int64_t l, bool diagnostic = false,
                                                       const EnumerationOptions& opts = {}) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("subset_product_distribution: " + std::to_string(p) + " is not prime");
  }
  if (l < 1 || l > p - 1) throw PreconditionError("subset_product_distribution: need 1 <= l <= p-1");
  if (!diagnostic && std::gcd(l, p - 1) != 1) {
    throw PreconditionError("subset_product_distribution: gcd(" + std::to_string(l) + ", " + std::to_string(p - 1) +
                            ") > 1");
  }
  check_step_bound(static_cast<std::size_t>(p - 1), opts.bound());
  const auto up = static_cast<std::uint64_t>(p);
  std::vector<std::uint64_t> counts(up - 1, 0);
  for_each_increasing_sequence(p - 1, l, [&](const std::vector<std::int64_t>& s) {
    std::uint64_t prod = 1;
    for (auto a : s) prod = mul_mod(prod, static_cast<std::uint64_t>(a), up);
    ++counts[prod - 1];
  });
  auto d = ResidueDistribution::zeros(up, 1);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    d.counts[r] = counts[r];
    d.total += counts[r];
  }
  return d;
}

/**
 * The same subsets, each element replaced by its discrete log to the
 * smallest primitive root, counted by exponent sum mod p-1. Uniform exactly
 * when the product distribution is, since the log map is a group isomorphism.
 */
inline ResidueDistribution exponent_sum_distribution(std::int64_t p, std::int64_t l,
                                                     const EnumerationOptions& opts = {}) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw PreconditionError("exponent_sum_distribution: " + std::to_string(p) + " is not prime");
  }
  if (l < 1 || l > p - 1) throw PreconditionError("exponent_sum_distribution: need 1 <= l <= p-1");
  check_step_bound(static_cast<std::size_t>(p - 1), opts.bound());
  const auto up = static_cast<std::uint64_t>(p);
  const std::uint64_t g = primitive_root(up);
  const std::uint64_t order = up - 1;
  std::vector<std::uint64_t> logs(up, 0);
  for (std::uint64_t x = 1; x < up; ++x) logs[x] = discrete_log(up, g, x);

  std::vector<std::uint64_t> counts(order, 0);
  for_each_increasing_sequence(p - 1, l, [&](const std::vector<std::int64_t>& s) {
    std::uint64_t e = 0;
    for (auto a : s) e = (e + logs[static_cast<std::size_t>(a)]) % order;
    ++counts[e];
  });
  auto d = ResidueDistribution::zeros(order);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    d.counts[r] = counts[r];
    d.total += counts[r];
  }
  return d;
}

/// Even binary words of length 2n counted by major index mod m.
inline ResidueDistribution maj_distribution(std::int64_t n, std::int64_t m, const EnumerationOptions& opts = {}) {
  return detail::even_word_distribution(n, m, [](const BinaryWord& w) { return major_index(w); }, opts);
}

/// Even binary words of length 2n counted by inversions mod m.
inline ResidueDistribution inversion_distribution(std::int64_t n, std::int64_t m, const EnumerationOptions& opts = {}) {
  return detail::even_word_distribution(n, m, [](const BinaryWord& w) { return inversions(w); }, opts);
}

/// Exact histogram value -> count of a word statistic over even words of length 2n.
template <class Stat>
std::map<std::uint64_t, std::uint64_t> even_word_histogram(std::int64_t n, Stat&& stat,
                                                           const EnumerationOptions& opts = {}) {
  const auto half = static_cast<std::size_t>(n);
  check_step_bound(2 * half, opts.bound());
  std::map<std::uint64_t, std::uint64_t> hist;
  for_each_completion({}, half, half, [&](const std::vector<Step>& steps) {
    std::vector<std::uint8_t> digits(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) digits[i] = steps[i] == Step::North ? 1 : 0;
    ++hist[stat(BinaryWord(std::move(digits)))];
  });
  return hist;
}

/// (n, n) paths counted by exceedance; index j holds the paths with j North steps on or above the diagonal.
inline std::vector<BigInt> exceedance_counts(std::int64_t n, const EnumerationOptions& opts = {}) {
  const auto side = static_cast<std::size_t>(n);
  check_step_bound(2 * side, opts.bound());
  std::vector<std::uint64_t> counts(side + 1, 0);
  for_each_completion({}, side, side,
                      [&](const std::vector<Step>& steps) { ++counts[exceedance(LatticePath(steps))]; });
  return {counts.begin(), counts.end()};
}

// ---------------------------------------------------------------------------
// Theorem verdicts

enum class TheoremId { T1 = 1, T2, T3, T4, T5, T6, T7 };

struct TheoremParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t p = 0;
  std::int64_t l = 0;
  Mode mode = Mode::Oracle;
  /// T6 only: read areas mod this instead of n / gcd(n, k).
  std::optional<std::int64_t> forced_modulus;
  EnumerationOptions enumeration;
};

struct TheoremVerdict {
  TheoremId theorem = TheoremId::T1;
  std::uint64_t modulus = 1;
  ResidueDistribution distribution;
  BigInt expected_count = 0;
  bool pass = false;
  std::string note;
};

namespace detail {

inline TheoremVerdict make_verdict(TheoremId id, ResidueDistribution dist, BigInt expected, std::string note = {}) {
  TheoremVerdict v;
  v.theorem = id;
  v.modulus = dist.modulus;
  v.expected_count = std::move(expected);
  v.pass = !dist.counts.empty() &&
           std::all_of(dist.counts.begin(), dist.counts.end(), [&](const BigInt& c) { return c == v.expected_count; });
  v.distribution = std::move(dist);
  v.note = std::move(note);
  return v;
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

}  // namespace detail

/**
 * Computes the distribution a theorem speaks about and compares every class
 * with the theorem's predicted count.
 *
 *   T1 (n):    (n,n) paths by area mod 2n-1,     each C(2n,n)/(2n-1)
 *   T2 (n):    even words by inversions mod 2n-1, same count
 *   T3 (n):    n-subsets of [1,2n] by sum mod 2n-1, same count
 *   T4 (n,k):  (k,n-k) paths by area mod n,      each C(n,k)/n; gcd(n,k) = 1
 *   T5 (p,l):  l-subsets of [1,p-1] by product mod p, each C(p-1,l)/(p-1)
 *   T6 (n,k):  (k,n-k) paths by area mod n/g,    each (g/n) C(n,k)
 *   T7 (n):    (n,n) paths by area mod n+1,      each C_n
 */
inline TheoremVerdict verify_theorem(TheoremId id, const TheoremParams& prm) {
  using detail::require;
  const auto n = prm.n;
  const auto k = prm.k;
  const auto& opts = prm.enumeration;
  switch (id) {
    case TheoremId::T1: {
      require(n >= 1, "T1 needs n >= 1");
      return detail::make_verdict(id, area_distribution(n, n, 2 * n - 1, prm.mode, opts),
                                  binomial(2 * n, n) / (2 * n - 1));
    }
    case TheoremId::T2: {
      require(n >= 1, "T2 needs n >= 1");
      return detail::make_verdict(id, inversion_distribution(n, 2 * n - 1, opts), binomial(2 * n, n) / (2 * n - 1));
    }
    case TheoremId::T3: {
      require(n >= 1, "T3 needs n >= 1");
      return detail::make_verdict(id, subset_sum_distribution(2 * n, n, 2 * n - 1, opts),
                                  binomial(2 * n, n) / (2 * n - 1));
    }
    case TheoremId::T4: {
      require(0 < k && k < n, "T4 needs 0 < k < n");
      require(std::gcd(n, k) == 1, "T4 needs gcd(n, k) = 1");
      return detail::make_verdict(id, area_distribution(k, n - k, n, prm.mode, opts), binomial(n, k) / n);
    }
    case TheoremId::T5: {
      require(product_theorem_applies(prm.p, prm.l), "T5 needs p prime, 1 <= l <= p-1, gcd(l, p-1) = 1");
      auto dist = subset_product_distribution(prm.p, prm.l, false, opts);
      const BigInt expected = binomial(prm.p - 1, prm.l) / (prm.p - 1);
      const auto exps = exponent_sum_distribution(prm.p, prm.l, opts);
      const bool logs_agree = exps.uniform_count() == std::optional<BigInt>(expected);
      auto v = detail::make_verdict(id, std::move(dist), expected,
                                    logs_agree ? "exponent sums mod p-1 uniform" : "exponent sums mod p-1 NOT uniform");
      v.pass = v.pass && logs_agree;
      return v;
    }
    case TheoremId::T6: {
      require(0 < k && k < n, "T6 needs 0 < k < n");
      const std::int64_t g = std::gcd(n, k);
      const std::int64_t modulus = prm.forced_modulus.value_or(n / g);
      require(modulus >= 1, "T6 modulus must be >= 1");
      std::string note = "modulus n/g = " + std::to_string(n / g);
      if (prm.forced_modulus) note = "modulus forced to " + std::to_string(modulus) + " (theorem predicts n/g = " +
                                     std::to_string(n / g) + ")";
      // Expected class size for the modulus actually used; a forced modulus
      // that doesn't split the paths evenly can never pass.
      BigInt expected, r;
      boost::multiprecision::divide_qr(binomial(n, k), BigInt(modulus), expected, r);
      auto v = detail::make_verdict(id, area_distribution(k, n - k, modulus, prm.mode, opts), expected, note);
      v.pass = v.pass && r == 0;
      return v;
    }
    case TheoremId::T7: {
      require(n >= 1, "T7 needs n >= 1");
      return detail::make_verdict(id, area_distribution(n, n, n + 1, prm.mode, opts), catalan(n));
    }
  }
  throw InvalidArgument("verify_theorem: unknown theorem id");
}

}  // namespace qlattice
