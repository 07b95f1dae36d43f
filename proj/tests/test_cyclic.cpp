#include "qlattice/cyclic.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using qlattice::BinaryWord;
using qlattice::IncreasingSequence;
using qlattice::LatticePath;

namespace {

LatticePath P(const char* s) { return LatticePath::parse(s); }
IncreasingSequence S(std::vector<std::int64_t> v) {
  const auto n = static_cast<std::int64_t>(v.size());
  return IncreasingSequence(std::move(v), 1, 2 * n);
}

template <class T>
void expect_orbit_shape(const qlattice::Orbit<T>& orbit, std::size_t size) {
  EXPECT_EQ(orbit.size(), size);
  EXPECT_EQ(std::set<T>(orbit.elements.begin(), orbit.elements.end()).size(), orbit.size());
  EXPECT_TRUE(orbit.residues_distinct());
}

}  // namespace

TEST(IncreasingSequence, Validation) {
  EXPECT_EQ(IncreasingSequence::parse("1,3,4", 1, 6).sum(), 8);
  EXPECT_THROW(IncreasingSequence::parse("1,3,3", 1, 6), qlattice::InvalidArgument);
  EXPECT_THROW(IncreasingSequence::parse("0,3", 1, 6), qlattice::InvalidArgument);
  EXPECT_THROW(IncreasingSequence::parse("1,x", 1, 6), qlattice::InvalidArgument);
  EXPECT_EQ(IncreasingSequence::parse("2,5", 1, 6).to_string(), "2,5");
}

TEST(IncreasingSequence, EnumeratesSubsets) {
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      std::uint64_t count = 0;
      std::vector<std::int64_t> prev;
      qlattice::for_each_increasing_sequence(n, k, [&](const std::vector<std::int64_t>& s) {
        EXPECT_NO_THROW(IncreasingSequence(s, 1, n));
        if (count > 0) {
          EXPECT_LT(prev, s);
        }
        prev = s;
        ++count;
      });
      EXPECT_EQ(count, oracle::binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    }
}

TEST(RotateStep, Examples) {
  const auto en = P("EN");
  EXPECT_EQ(qlattice::rotate_step(en), P("NE"));
  EXPECT_EQ(qlattice::area(en), 0u);
  EXPECT_EQ(qlattice::area(P("NE")), 1u);

  const auto left = P("NEENEENE");
  const auto right = qlattice::rotate_step(left);
  EXPECT_EQ(right, P("ENEENEEN"));
  EXPECT_EQ(qlattice::area(left), 9u);
  EXPECT_EQ(qlattice::area(right), 6u);

  EXPECT_EQ(qlattice::rotate_step(P("EEEE")), P("EEEE"));
  EXPECT_THROW(qlattice::rotate_step(LatticePath()), qlattice::InvalidArgument);
}

TEST(RotateStep, AreaShift) {
  for (std::size_t w = 0; w <= 5; ++w)
    for (std::size_t h = 0; h <= 5; ++h)
      for (const auto& p : qlattice::enumerate_paths(w, h)) {
        if (p.empty()) continue;
        const auto before = static_cast<std::int64_t>(qlattice::area(p));
        const auto after = static_cast<std::int64_t>(qlattice::area(qlattice::rotate_step(p)));
        const bool last_north = p.steps().back() == qlattice::Step::North;
        EXPECT_EQ(after - before, last_north ? static_cast<std::int64_t>(w) : -static_cast<std::int64_t>(h));
      }
}

TEST(PhiSquare, Examples) {
  const auto a = P("ENNENEEN");
  const auto b = qlattice::phi_square(a);
  const auto c = qlattice::phi_square(b);
  EXPECT_EQ(b, P("ENNNENEE"));
  EXPECT_EQ(c, P("EENNNENE"));
  EXPECT_EQ(qlattice::area(a), 8u);
  EXPECT_EQ(qlattice::area(b), 11u);
  EXPECT_EQ(qlattice::area(c), 7u);

  EXPECT_EQ(qlattice::phi_square(P("EN")), P("EN"));
  EXPECT_EQ(qlattice::phi_square(P("NE")), P("NE"));
  EXPECT_THROW(qlattice::phi_square(P("EEN")), qlattice::InvalidArgument);
  EXPECT_THROW(qlattice::phi_square(LatticePath()), qlattice::InvalidArgument);
}

TEST(PhiSquare, OrbitOfStartPath) {
  const auto orbit = qlattice::orbit_of<qlattice::PhiSquareMap>(P("01101001"));
  ASSERT_EQ(orbit.size(), 7u);
  EXPECT_EQ(orbit.modulus, 7u);
  EXPECT_EQ(orbit.statistic_values, (std::vector<std::int64_t>{8, 11, 7, 3, 6, 2, 5}));
  EXPECT_EQ(orbit.residues(), (std::vector<std::uint64_t>{1, 4, 0, 3, 6, 2, 5}));
  for (auto d : orbit.deltas()) EXPECT_EQ(((d % 7) + 7) % 7, 3);
}

TEST(PhiSquare, OrbitsPartitionSquarePaths) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<LatticePath> seen;
    std::size_t orbits = 0;
    for (const auto& p : qlattice::enumerate_paths(n, n)) {
      if (seen.count(p)) continue;
      const auto orbit = qlattice::orbit_of<qlattice::PhiSquareMap>(p);
      expect_orbit_shape(orbit, 2 * n - 1);
      for (const auto& q : orbit.elements) EXPECT_TRUE(seen.insert(q).second);
      ++orbits;
    }
    EXPECT_EQ(seen.size(), oracle::binomial(2 * n, n));
    EXPECT_EQ(orbits, oracle::binomial(2 * n, n) / (2 * n - 1));
  }
}

TEST(PhiWord, Examples) {
  EXPECT_EQ(qlattice::phi_word(BinaryWord::parse("01")).to_string(), "01");
  EXPECT_EQ(qlattice::phi_word(BinaryWord::parse("0110")).to_string(), "0011");
  auto w = BinaryWord::parse("011010");
  const auto start = w;
  for (int i = 0; i < 5; ++i) {
    w = qlattice::phi_word(w);
    if (i < 4) {
      EXPECT_NE(w.to_string(), start.to_string());
    }
  }
  EXPECT_EQ(w.to_string(), start.to_string());
  EXPECT_THROW(qlattice::phi_word(BinaryWord::parse("1")), qlattice::InvalidArgument);
}

// Same map as phi_square on paths starting East, so inversions shift by n-1.
TEST(PhiWord, InversionsShiftOnLeadingZero) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : qlattice::enumerate_paths(n, n)) {
      const auto w = p.to_word();
      if (w.digits().front() != 0) continue;
      const auto image = qlattice::phi_word(w);
      EXPECT_EQ(image.to_path(), qlattice::phi_square(p));
      const auto m = static_cast<std::int64_t>(2 * n - 1);
      const auto d = static_cast<std::int64_t>(qlattice::inversions(image)) -
                     static_cast<std::int64_t>(qlattice::inversions(w));
      EXPECT_EQ(((d % m) + m) % m, static_cast<std::int64_t>(n - 1) % m);
    }
}

TEST(PhiSequence, Examples) {
  EXPECT_EQ(qlattice::phi_sequence(S({1, 2})), S({1, 3}));
  EXPECT_EQ(qlattice::phi_sequence(S({2, 4})), S({2, 3}));
  EXPECT_EQ(qlattice::phi_sequence(S({1, 4})), S({1, 2}));
  EXPECT_THROW(qlattice::phi_sequence(IncreasingSequence({1, 2}, 1, 5)), qlattice::InvalidArgument);
}

TEST(PhiSequence, OrbitsPartitionSubsets) {
  for (std::int64_t n = 1; n <= 7; ++n) {
    std::set<std::vector<std::int64_t>> seen;
    qlattice::for_each_increasing_sequence(2 * n, n, [&](const std::vector<std::int64_t>& v) {
      if (seen.count(v)) return;
      const auto orbit = qlattice::orbit_of<qlattice::PhiSequenceMap>(IncreasingSequence(v, 1, 2 * n));
      EXPECT_EQ(orbit.size(), static_cast<std::size_t>(2 * n - 1));
      EXPECT_TRUE(orbit.residues_distinct());
      for (const auto& s : orbit.elements) EXPECT_TRUE(seen.insert(s.values()).second);
    });
    EXPECT_EQ(seen.size(), oracle::binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(n)));
  }
}

TEST(RotateOrbits, CoprimeGridsHaveFullDistinctOrbits) {
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      if (std::gcd(n, k) != 1) continue;
      std::set<LatticePath> seen;
      for (const auto& p : qlattice::enumerate_paths(k, n - k)) {
        if (seen.count(p)) continue;
        const auto orbit = qlattice::orbit_of<qlattice::RotateMap>(p);
        EXPECT_EQ(orbit.modulus, n);
        expect_orbit_shape(orbit, n);
        seen.insert(orbit.elements.begin(), orbit.elements.end());
      }
    }
}

TEST(RotateOrbits, Examples) {
  EXPECT_EQ(qlattice::orbit_of<qlattice::RotateMap>(P("E")).size(), 1u);
  EXPECT_EQ(qlattice::orbit_of<qlattice::RotateMap>(P("ENNENEEN")).size(), 8u);
  EXPECT_EQ(qlattice::orbit_of<qlattice::RotateMap>(P("ENEN")).size(), 2u);
  const auto orbit = qlattice::orbit_of<qlattice::RotateMap>(P("NEENEENE"));
  expect_orbit_shape(orbit, 8);
}

TEST(CatalanRestrict, Examples) {
  EXPECT_EQ(qlattice::catalan_restrict_step(P("NEE")), P("ENE"));
  EXPECT_EQ(qlattice::catalan_restrict_step(P("ENE")), P("NEE"));
  EXPECT_EQ(qlattice::orbit_of<qlattice::CatalanMap>(P("NEE")).size(), 2u);
  EXPECT_THROW(qlattice::catalan_restrict_step(P("EEN")), qlattice::InvalidArgument);
  EXPECT_THROW(qlattice::catalan_restrict_step(P("ENNE")), qlattice::InvalidArgument);
}

// Every rotation cycle of (4,3) paths has 7 members; 4 of them end with East.
TEST(CatalanRestrict, FourOfSevenPassThroughCorner) {
  for (const auto& p : qlattice::enumerate_paths(4, 3)) {
    const auto cycle = qlattice::orbit_of<qlattice::RotateMap>(p);
    ASSERT_EQ(cycle.size(), 7u);
    std::size_t through = 0;
    for (const auto& q : cycle.elements) through += q.steps().back() == qlattice::Step::East;
    EXPECT_EQ(through, 4u);
  }
  const auto orbit = qlattice::orbit_of<qlattice::CatalanMap>(P("ENNENEE"));
  EXPECT_EQ(orbit.size(), 4u);
  EXPECT_EQ(orbit.statistic_values, (std::vector<std::int64_t>{5, 2, 3, 8}));
  EXPECT_EQ(orbit.residues(), (std::vector<std::uint64_t>{1, 2, 3, 0}));
}

TEST(CatalanRestrict, PeriodAndUnitShift) {
  for (std::size_t n = 1; n <= 7; ++n) {
    std::set<LatticePath> seen;
    std::size_t orbits = 0;
    for (const auto& p : qlattice::enumerate_paths(n + 1, n)) {
      if (p.steps().back() != qlattice::Step::East || seen.count(p)) continue;
      const auto orbit = qlattice::orbit_of<qlattice::CatalanMap>(p);
      expect_orbit_shape(orbit, n + 1);
      const auto m = static_cast<std::int64_t>(n + 1);
      for (auto d : orbit.deltas()) EXPECT_EQ(((d % m) + m) % m, 1);
      seen.insert(orbit.elements.begin(), orbit.elements.end());
      ++orbits;
    }
    EXPECT_EQ(orbits, oracle::catalan(n));
  }
}

TEST(Orbit, CapDetectsNonClosure) {
  EXPECT_THROW(qlattice::orbit_of<qlattice::RotateMap>(P("ENNENEEN"), 3), qlattice::InvariantViolation);
}

TEST(MapKind, Parse) {
  EXPECT_EQ(qlattice::parse_map_kind("phi-square"), qlattice::MapKind::PhiSquare);
  EXPECT_EQ(qlattice::parse_map_kind("catalan"), qlattice::MapKind::Catalan);
  EXPECT_FALSE(qlattice::parse_map_kind("nope").has_value());
}
