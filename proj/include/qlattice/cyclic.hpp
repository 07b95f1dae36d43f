#pragma once

#include "qlattice/paths.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlattice {

/// Strictly increasing integers a_1 < ... < a_k, all within [lower, upper].
class IncreasingSequence {
 public:
  IncreasingSequence(std::vector<std::int64_t> values, std::int64_t lower, std::int64_t upper)
      : values_(std::move(values)), lower_(lower), upper_(upper) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < lower_ || values_[i] > upper_) {
        throw InvalidArgument("increasing sequence: " + std::to_string(values_[i]) + " outside [" +
                              std::to_string(lower_) + "," + std::to_string(upper_) + "]");
      }
      if (i > 0 && values_[i - 1] >= values_[i]) {
        throw InvalidArgument("increasing sequence: values must be strictly increasing");
      }
    }
  }

  /// "1,3,4" within [lower, upper].
  static IncreasingSequence parse(std::string_view text, std::int64_t lower, std::int64_t upper) {
    std::vector<std::int64_t> values;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        values.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw InvalidArgument("cannot parse sequence '" + std::string(text) + "'");
      }
    }
    return IncreasingSequence(std::move(values), lower, upper);
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t length() const noexcept { return values_.size(); }
  std::int64_t lower() const noexcept { return lower_; }
  std::int64_t upper() const noexcept { return upper_; }
  std::int64_t sum() const { return std::accumulate(values_.begin(), values_.end(), std::int64_t{0}); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(values_[i]);
    }
    return out;
  }

  friend bool operator==(const IncreasingSequence&, const IncreasingSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::int64_t lower_;
  std::int64_t upper_;
};

/// Calls fn(const std::vector<std::int64_t>&) for each k-subset of [1, n] in lexicographic order.
template <class Fn>
void for_each_increasing_sequence(std::int64_t n, std::int64_t k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<std::int64_t> current(static_cast<std::size_t>(k));
  std::iota(current.begin(), current.end(), std::int64_t{1});
  while (true) {
    fn(static_cast<const std::vector<std::int64_t>&>(current));
    std::int64_t i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) return;
    ++current[static_cast<std::size_t>(i)];
    for (auto j = static_cast<std::size_t>(i) + 1; j < current.size(); ++j) current[j] = current[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// Step maps

/**
 * Moves the last step to the front. On a path with n steps and width k the
 * area changes by +k (last step North) or -(n-k) (last step East).
 */
inline LatticePath rotate_step(const LatticePath& path) {
  if (path.empty()) throw InvalidArgument("rotate_step: empty path");
  const auto& s = path.steps();
  std::vector<Step> out;
  out.reserve(s.size());
  out.push_back(s.back());
  out.insert(out.end(), s.begin(), s.end() - 1);
  return LatticePath(std::move(out));
}

namespace detail {

inline LatticePath fix_first_rotate_rest(const LatticePath& path) {
  const auto& s = path.steps();
  std::vector<Step> out;
  out.reserve(s.size());
  out.push_back(s.front());
  out.push_back(s.back());
  out.insert(out.end(), s.begin() + 1, s.end() - 1);
  return LatticePath(std::move(out));
}

}  // namespace detail

/**
 * The period-(2n-1) map on square paths.
 *
 * Paths starting East keep that step and rotate the other 2n-1 steps right
 * by one (area +n-1 mod 2n-1). Paths starting North are conjugated by the
 * transpose (area +n mod 2n-1).
 */
inline LatticePath phi_square(const LatticePath& path) {
  if (!path.is_square() || path.width() == 0) {
    throw InvalidArgument("phi_square: path must end at (n,n) with n >= 1, got " + path.to_string());
  }
  if (path.steps().front() == Step::East) return detail::fix_first_rotate_rest(path);
  return transpose(detail::fix_first_rotate_rest(transpose(path)));
}

/// First digit fixed, remaining digits cyclically shifted one place right.
inline BinaryWord phi_word(const BinaryWord& word) {
  if (word.length() < 2) throw InvalidArgument("phi_word: word must have length >= 2");
  const auto& d = word.digits();
  std::vector<std::uint8_t> out;
  out.reserve(d.size());
  out.push_back(d.front());
  out.push_back(d.back());
  out.insert(out.end(), d.begin() + 1, d.end() - 1);
  return BinaryWord(std::move(out));
}

/**
 * phi' on n-subsets of [1, 2n]. a_1 = 1 stays put (phi_0); otherwise a_1
 * moves too (phi_1). Every moved term is incremented, with 2n wrapping to 2.
 * The sum shifts by n-1 (phi_0) or n (phi_1) mod 2n-1.
 */
inline IncreasingSequence phi_sequence(const IncreasingSequence& seq) {
  const std::int64_t n = static_cast<std::int64_t>(seq.length());
  if (n < 1 || seq.lower() != 1 || seq.upper() != 2 * n) {
    throw InvalidArgument("phi_sequence: need a length-n sequence bounded by [1, 2n], got " + seq.to_string() +
                          " in [" + std::to_string(seq.lower()) + "," + std::to_string(seq.upper()) + "]");
  }
  std::vector<std::int64_t> out(seq.values());
  const std::size_t first_moved = out.front() == 1 ? 1 : 0;
  for (std::size_t i = first_moved; i < out.size(); ++i) out[i] = out[i] == 2 * n ? 2 : out[i] + 1;
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvariantViolation("phi_sequence: image of " + seq.to_string() + " has a repeated term");
  }
  return IncreasingSequence(std::move(out), 1, 2 * n);
}

/**
 * Induced map on paths to (n+1, n) that pass through (n, n), i.e. end with
 * an East step: rotate until the image again ends with East. The embedded
 * (n, n) path's area shifts by 1 mod n+1.
 */
inline LatticePath catalan_restrict_step(const LatticePath& path) {
  if (path.width() != path.height() + 1 || path.empty() || path.steps().back() != Step::East) {
    throw InvalidArgument("catalan_restrict_step: path must end at (n+1,n) through (n,n), got " + path.to_string());
  }
  LatticePath current = rotate_step(path);
  for (std::size_t j = 1; current.steps().back() != Step::East; ++j) {
    if (j > path.length()) throw InvariantViolation("catalan_restrict_step: no return through (n,n)");
    current = rotate_step(current);
  }
  return current;
}

/// Area of the (n, n) path obtained by dropping the final East step.
inline std::uint64_t embedded_area(const LatticePath& path) { return area(path) - path.height(); }

// ---------------------------------------------------------------------------
// Orbits

/// A cycle of a step map, with each element's statistic value.
template <class T>
struct Orbit {
  std::vector<T> elements;
  std::vector<std::int64_t> statistic_values;
  std::uint64_t modulus = 1;

  std::size_t size() const noexcept { return elements.size(); }

  std::vector<std::uint64_t> residues() const {
    std::vector<std::uint64_t> out;
    out.reserve(statistic_values.size());
    const auto m = static_cast<std::int64_t>(modulus);
    for (auto v : statistic_values) out.push_back(static_cast<std::uint64_t>(((v % m) + m) % m));
    return out;
  }

  /// Statistic change from each element to its image (the last wraps to the first).
  std::vector<std::int64_t> deltas() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < statistic_values.size(); ++i) {
      out.push_back(statistic_values[(i + 1) % statistic_values.size()] - statistic_values[i]);
    }
    return out;
  }

  bool residues_distinct() const {
    auto r = residues();
    std::sort(r.begin(), r.end());
    return std::adjacent_find(r.begin(), r.end()) == r.end();
  }
};

// Each map type names its element type, its statistic and the modulus the
// statistic is read in.

struct RotateMap {
  using element_type = LatticePath;
  static constexpr std::string_view name = "rotate";
  static LatticePath apply(const LatticePath& p) { return rotate_step(p); }
  static std::int64_t statistic(const LatticePath& p) { return static_cast<std::int64_t>(area(p)); }
  static std::uint64_t modulus(const LatticePath& p) { return std::max<std::size_t>(p.length(), 1); }
};

struct PhiSquareMap {
  using element_type = LatticePath;
  static constexpr std::string_view name = "phi-square";
  static LatticePath apply(const LatticePath& p) { return phi_square(p); }
  static std::int64_t statistic(const LatticePath& p) { return static_cast<std::int64_t>(area(p)); }
  static std::uint64_t modulus(const LatticePath& p) { return std::max<std::size_t>(2 * p.width(), 2) - 1; }
};

struct PhiWordMap {
  using element_type = BinaryWord;
  static constexpr std::string_view name = "phi-word";
  static BinaryWord apply(const BinaryWord& w) { return phi_word(w); }
  static std::int64_t statistic(const BinaryWord& w) { return static_cast<std::int64_t>(inversions(w)); }
  static std::uint64_t modulus(const BinaryWord& w) { return std::max<std::size_t>(w.length(), 2) - 1; }
};

struct PhiSequenceMap {
  using element_type = IncreasingSequence;
  static constexpr std::string_view name = "phi-seq";
  static IncreasingSequence apply(const IncreasingSequence& s) { return phi_sequence(s); }
  static std::int64_t statistic(const IncreasingSequence& s) { return s.sum(); }
  static std::uint64_t modulus(const IncreasingSequence& s) { return std::max<std::size_t>(2 * s.length(), 2) - 1; }
};

struct CatalanMap {
  using element_type = LatticePath;
  static constexpr std::string_view name = "catalan";
  static LatticePath apply(const LatticePath& p) { return catalan_restrict_step(p); }
  static std::int64_t statistic(const LatticePath& p) { return static_cast<std::int64_t>(embedded_area(p)); }
  static std::uint64_t modulus(const LatticePath& p) { return p.height() + 1; }
};

/**
 * Applies Map until `start` reappears. Throws InvariantViolation if it has
 * not reappeared after max_length steps (default: 2 * length + 2, above every
 * period these maps can have).
 */
template <class Map>
Orbit<typename Map::element_type> orbit_of(const typename Map::element_type& start,
                                           std::optional<std::size_t> max_length = std::nullopt) {
  using T = typename Map::element_type;
  const std::size_t cap = max_length.value_or(2 * start.length() + 2);
  Orbit<T> orbit;
  orbit.modulus = Map::modulus(start);
  T current = start;
  do {
    orbit.statistic_values.push_back(Map::statistic(current));
    orbit.elements.push_back(current);
    if (orbit.elements.size() > cap) {
      throw InvariantViolation(std::string(Map::name) + ": orbit did not close within " + std::to_string(cap) +
                               " steps");
    }
    current = Map::apply(current);
  } while (!(current == start));
  return orbit;
}

enum class MapKind { Rotate, PhiSquare, PhiWord, PhiSequence, Catalan };

inline std::optional<MapKind> parse_map_kind(std::string_view name) {
  if (name == RotateMap::name) return MapKind::Rotate;
  if (name == PhiSquareMap::name) return MapKind::PhiSquare;
  if (name == PhiWordMap::name) return MapKind::PhiWord;
  if (name == PhiSequenceMap::name) return MapKind::PhiSequence;
  if (name == CatalanMap::name) return MapKind::Catalan;
  return std::nullopt;
}

}  // namespace qlattice
