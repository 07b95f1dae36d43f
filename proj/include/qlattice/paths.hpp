#pragma once

#include "qlattice/core.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qlattice {

enum class Step : std::uint8_t { East = 0, North = 1 };

class BinaryWord;

/**
 * Northeastern lattice path from (0,0) to (width, height).
 *
 * Text form is a string over {E, N}. The word form maps North to 1 and
 * East to 0, leftmost digit first.
 */
class LatticePath {
 public:
  LatticePath() = default;

  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
    for (Step s : steps_) (s == Step::East ? width_ : height_) += 1;
  }

  /// Accepts "ENNE..." or "0110...".
  static LatticePath parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    const bool letters = text.find_first_of("ENen") != std::string_view::npos;
    for (char c : text) {
      if (letters && (c == 'E' || c == 'e')) {
        steps.push_back(Step::East);
      } else if (letters && (c == 'N' || c == 'n')) {
        steps.push_back(Step::North);
      } else if (!letters && c == '0') {
        steps.push_back(Step::East);
      } else if (!letters && c == '1') {
        steps.push_back(Step::North);
      } else {
        throw InvalidArgument("cannot parse path '" + std::string(text) +
                              "': expected only E/N letters or only 0/1 digits");
      }
    }
    return LatticePath(std::move(steps));
  }

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  bool is_square() const noexcept { return width_ == height_; }

  std::string to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(s == Step::East ? 'E' : 'N');
    return out;
  }

  BinaryWord to_word() const;

  friend bool operator==(const LatticePath& a, const LatticePath& b) { return a.steps_ == b.steps_; }
  friend auto operator<=>(const LatticePath& a, const LatticePath& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
  std::size_t width_ = 0;
  std::size_t height_ = 0;
};

/// Finite word over {0, 1}.
class BinaryWord {
 public:
  BinaryWord() = default;

  explicit BinaryWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    for (auto d : digits_) {
      if (d > 1) throw InvalidArgument("binary word digits must be 0 or 1");
    }
  }

  static BinaryWord parse(std::string_view text) {
    std::vector<std::uint8_t> digits;
    digits.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw InvalidArgument("cannot parse word '" + std::string(text) + "'");
      digits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryWord(std::move(digits));
  }

  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }

  std::size_t ones() const noexcept { return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), 1)); }
  std::size_t zeros() const noexcept { return digits_.size() - ones(); }

  /// Even word: length 2n with n zeros and n ones.
  bool is_even() const noexcept { return digits_.size() % 2 == 0 && 2 * ones() == digits_.size(); }

  std::string to_string() const {
    std::string out;
    out.reserve(digits_.size());
    for (auto d : digits_) out.push_back(static_cast<char>('0' + d));
    return out;
  }

  LatticePath to_path() const {
    std::vector<Step> steps;
    steps.reserve(digits_.size());
    for (auto d : digits_) steps.push_back(d ? Step::North : Step::East);
    return LatticePath(std::move(steps));
  }

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

inline BinaryWord LatticePath::to_word() const {
  std::vector<std::uint8_t> digits;
  digits.reserve(steps_.size());
  for (Step s : steps_) digits.push_back(s == Step::North ? 1 : 0);
  return BinaryWord(std::move(digits));
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::size_t kDefaultStepBound = 30;
inline constexpr const char* kStepBoundEnv = "QLATTICE_MAX_STEPS";

/// Step bound for exhaustive enumeration; QLATTICE_MAX_STEPS overrides the default of 30.
inline std::size_t step_bound() {
  if (const char* env = std::getenv(kStepBoundEnv); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultStepBound;
}

inline void check_step_bound(std::size_t steps, std::size_t bound) {
  if (steps > bound) {
    throw ResourceLimit("enumeration of " + std::to_string(steps) + "-step objects exceeds the bound of " +
                        std::to_string(bound) + " steps (set " + kStepBoundEnv + " to raise it)");
  }
}

/**
 * Every path to (width, height), once each, in lexicographic order of the
 * step string with East < North. Iterating yields const LatticePath&.
 */
class PathEnumeration {
 public:
  class iterator {
   public:
    using value_type = LatticePath;
    using difference_type = std::ptrdiff_t;
    using reference = const LatticePath&;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    explicit iterator(std::vector<Step> first) : steps_(std::move(first)), current_(steps_), done_(false) {}

    reference operator*() const { return current_; }
    const LatticePath* operator->() const { return &current_; }

    iterator& operator++() {
      if (std::next_permutation(steps_.begin(), steps_.end())) {
        current_ = LatticePath(steps_);
      } else {
        done_ = true;
      }
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    std::vector<Step> steps_;
    LatticePath current_;
    bool done_ = true;
  };

  PathEnumeration(std::size_t width, std::size_t height) : width_(width), height_(height) {}

  iterator begin() const {
    std::vector<Step> first(width_, Step::East);
    first.insert(first.end(), height_, Step::North);
    return iterator(std::move(first));
  }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t width_;
  std::size_t height_;
};

inline PathEnumeration enumerate_paths(std::size_t width, std::size_t height, std::size_t bound) {
  check_step_bound(width + height, bound);
  return PathEnumeration(width, height);
}

inline PathEnumeration enumerate_paths(std::size_t width, std::size_t height) {
  return enumerate_paths(width, height, step_bound());
}

/**
 * Calls fn(steps) for every arrangement of `width` East and `height` North
 * steps that starts with `prefix`, in lexicographic order. No bound check.
 */
template <class Fn>
void for_each_completion(const std::vector<Step>& prefix, std::size_t width, std::size_t height, Fn&& fn) {
  std::size_t pe = 0;
  for (Step s : prefix) pe += s == Step::East;
  const std::size_t pn = prefix.size() - pe;
  if (pe > width || pn > height) return;
  std::vector<Step> steps(prefix);
  steps.insert(steps.end(), width - pe, Step::East);
  steps.insert(steps.end(), height - pn, Step::North);
  const auto tail = steps.begin() + static_cast<std::ptrdiff_t>(prefix.size());
  do {
    fn(static_cast<const std::vector<Step>&>(steps));
  } while (std::next_permutation(tail, steps.end()));
}

// ---------------------------------------------------------------------------
// Statistics

/// Pairs i < j with step i North and step j East, computed in one pass.
inline std::uint64_t area(const std::vector<Step>& steps) {
  std::uint64_t norths = 0, total = 0;
  for (Step s : steps) {
    if (s == Step::North) {
      ++norths;
    } else {
      total += norths;
    }
  }
  return total;
}

/// Enclosed area: number of (North before East) step pairs. 0 <= area <= width * height.
inline std::uint64_t area(const LatticePath& path) { return area(path.steps()); }

/// Pairs i < j with digit i = 1 and digit j = 0.
inline std::uint64_t inversions(const BinaryWord& word) {
  std::uint64_t ones = 0, total = 0;
  for (auto d : word.digits()) {
    if (d == 1) {
      ++ones;
    } else {
      total += ones;
    }
  }
  return total;
}

/// Sum of 1-based positions i where digit i is 1 and digit i+1 is 0.
inline std::uint64_t major_index(const BinaryWord& word) {
  const auto& d = word.digits();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] == 1 && d[i + 1] == 0) total += i + 1;
  }
  return total;
}

/// Mirror in the main diagonal: East and North swap stepwise.
inline LatticePath transpose(const LatticePath& path) {
  std::vector<Step> steps;
  steps.reserve(path.length());
  for (Step s : path.steps()) steps.push_back(s == Step::East ? Step::North : Step::East);
  return LatticePath(std::move(steps));
}

/// North steps whose starting point lies on or above y = x. Square paths only.
inline std::size_t exceedance(const LatticePath& path) {
  if (!path.is_square()) {
    throw InvalidArgument("exceedance: path to (" + std::to_string(path.width()) + "," +
                          std::to_string(path.height()) + ") is not square");
  }
  std::size_t x = 0, y = 0, count = 0;
  for (Step s : path.steps()) {
    if (s == Step::East) {
      ++x;
    } else {
      if (y >= x) ++count;
      ++y;
    }
  }
  return count;
}

/// Never rises above the diagonal. n is the expected side length.
inline bool is_dyck(const LatticePath& path, std::size_t n) {
  if (path.width() != n || path.height() != n) {
    throw InvalidArgument("is_dyck: path does not end at (" + std::to_string(n) + "," + std::to_string(n) + ")");
  }
  return exceedance(path) == 0;
}

inline bool is_dyck(const LatticePath& path) { return is_dyck(path, path.width()); }

/// Enclosed squares per column, left to right; weakly increasing, sums to area(path).
inline std::vector<std::size_t> column_partition(const LatticePath& path) {
  std::vector<std::size_t> columns;
  columns.reserve(path.width());
  std::size_t y = 0;
  for (Step s : path.steps()) {
    if (s == Step::North) {
      ++y;
    } else {
      columns.push_back(y);
    }
  }
  return columns;
}

}  // namespace qlattice
