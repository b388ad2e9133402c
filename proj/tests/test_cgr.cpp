#include <gtest/gtest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "icgr/cgr.hpp"
#include "icgr/errors.hpp"
#include "support.hpp"

using namespace icgr;
using icgr::testing::random_sequence;
using icgr::testing::reference_walk;
using icgr::testing::RefInt;
using icgr::testing::seq;

namespace {

// Exact cell of the i-th CGR point (1-based): the classical point equals the
// integer walk scaled by 2^-i, so floor(2^(k-1) (x + 1)) is an integer division.
std::pair<std::uint32_t, std::uint32_t> exact_cell(const RefInt& px, const RefInt& py,
                                                   std::size_t i, int k) {
  const RefInt scale = RefInt(1) << i;
  auto bin = [&](const RefInt& p) {
    const RefInt num = (p + scale) << (k - 1);
    return static_cast<std::uint32_t>(num / scale);  // num >= 0
  };
  return {bin(px), bin(py)};
}

FcgrGrid oracle_grid(const Sequence& s, int k) {
  FcgrGrid grid(k);
  const auto walk = reference_walk(to_string(s));
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const auto [cx, cy] = exact_cell(walk[i].first, walk[i].second, i + 1, k);
    grid.add(cx, cy);
  }
  return grid;
}

std::string pixels(const std::string& pgm, std::size_t header) { return pgm.substr(header); }

}  // namespace

TEST(ClassicalCgr, TagcaVector) {
  const FloatTrajectory t = classical_cgr(seq("TAGCA"));
  const FloatTrajectory expected{
      {-0.5, 0.5}, {0.25, 0.75}, {0.625, -0.125}, {-0.1875, -0.5625}, {0.40625, 0.21875}};
  EXPECT_EQ(t, expected);
}

TEST(ClassicalCgr, SmallVectors) {
  EXPECT_EQ(classical_cgr(seq("A")), (FloatTrajectory{{0.5, 0.5}}));
  // p_i = (p_{i-1} + corner) / 2 by hand.
  EXPECT_EQ(classical_cgr(seq("ACGT")),
            (FloatTrajectory{{0.5, 0.5}, {-0.25, -0.25}, {0.375, -0.625}, {-0.3125, 0.1875}}));
  EXPECT_THROW(classical_cgr(seq("")), EmptySequence);
}

TEST(ClassicalCgr, EqualsScaledIntegerWalk) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Sequence s = random_sequence(rng, 1 + rng() % 52);
    const FloatTrajectory t = classical_cgr(s);
    const auto walk = reference_walk(to_string(s));
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double scale = std::ldexp(1.0, -static_cast<int>(i + 1));
      EXPECT_EQ(t[i].x, static_cast<double>(walk[i].first) * scale);
      EXPECT_EQ(t[i].y, static_cast<double>(walk[i].second) * scale);
    }
  }
}

TEST(ClassicalCgr, Containment) {
  std::mt19937_64 rng(10);
  const Sequence s = random_sequence(rng, 20000);
  for (const FloatPoint& p : classical_cgr(s)) {
    ASSERT_GT(p.x, -1.0);
    ASSERT_LT(p.x, 1.0);
    ASSERT_GT(p.y, -1.0);
    ASSERT_LT(p.y, 1.0);
  }
}

TEST(Fcgr, SinglePointQuadrant) {
  const FcgrGrid g = fcgr(seq("A"), 1);
  EXPECT_EQ(g.at(1, 1), 1u);
  EXPECT_EQ(g.at(0, 1) + g.at(0, 0) + g.at(1, 0), 0u);
  EXPECT_EQ(g.total(), 1u);
}

TEST(Fcgr, TagcaPointsByQuadrant) {
  // Signs of the five TAGCA points: T(-,+) A(+,+) G(+,-) C(-,-) A(+,+).
  const FcgrGrid g = fcgr(seq("TAGCA"), 1);
  EXPECT_EQ(g.at(1, 1), 2u);  // I
  EXPECT_EQ(g.at(0, 1), 1u);  // II
  EXPECT_EQ(g.at(0, 0), 1u);  // III
  EXPECT_EQ(g.at(1, 0), 1u);  // IV
  EXPECT_EQ(g, oracle_grid(seq("TAGCA"), 1));
}

TEST(Fcgr, MatchesFloatFloorBinningOnShortInputs) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Sequence s = random_sequence(rng, 1 + rng() % 50);
    for (int k : {1, 2, 3, 5, 8}) {
      FcgrGrid expected(k);
      const double half = std::ldexp(1.0, k - 1);
      const auto last = static_cast<double>((1u << k) - 1);
      for (const FloatPoint& p : classical_cgr(s)) {
        const double cx = std::clamp(std::floor(half * (p.x + 1.0)), 0.0, last);
        const double cy = std::clamp(std::floor(half * (p.y + 1.0)), 0.0, last);
        expected.add(static_cast<std::uint32_t>(cx), static_cast<std::uint32_t>(cy));
      }
      ASSERT_EQ(fcgr(s, k), expected) << "k=" << k;
    }
  }
}

TEST(Fcgr, MatchesExactBinningOnLongInputs) {
  std::mt19937_64 rng(13);
  Sequence s = random_sequence(rng, 1500);
  // A long homopolymer run where double-precision points would saturate.
  s.insert(s.begin() + 700, 100, Nucleotide::A);
  for (int k : {1, 4, 7}) EXPECT_EQ(fcgr(s, k), oracle_grid(s, k)) << "k=" << k;
}

TEST(Fcgr, TotalsAndErrors) {
  std::mt19937_64 rng(14);
  for (std::size_t n : {1u, 17u, 1000u}) {
    EXPECT_EQ(fcgr(random_sequence(rng, n), 7).total(), n);
  }
  EXPECT_THROW(fcgr(seq(""), 3), EmptySequence);
  EXPECT_THROW(fcgr(seq("A"), 0), InvalidResolution);
  EXPECT_THROW(fcgr(seq("A"), 17), InvalidResolution);
  const FcgrGrid fine = fcgr(seq("AAT"), 16);
  EXPECT_EQ(fine.side(), 65536u);
  EXPECT_EQ(fine.cells().size(), 3u);
  EXPECT_EQ(fine, oracle_grid(seq("AAT"), 16));
  EXPECT_THROW(fine.at(65536, 0), std::out_of_range);
}

TEST(Fcgr, SuffixLocality) {
  std::mt19937_64 rng(15);
  constexpr int k = 4;
  for (int trial = 0; trial < 100; ++trial) {
    const Sequence suffix = random_sequence(rng, k);
    Sequence a = random_sequence(rng, 1 + rng() % 40);
    Sequence b = random_sequence(rng, 1 + rng() % 40);
    a.insert(a.end(), suffix.begin(), suffix.end());
    b.insert(b.end(), suffix.begin(), suffix.end());
    // The last point of each sequence lands in the same cell.
    auto last_cell = [](const Sequence& s) {
      const std::uint32_t centre = 1u << (k - 1);
      std::pair<std::uint32_t, std::uint32_t> cell{centre, centre};
      for (Nucleotide n : s) cell = next_cell(cell, n, k);
      return cell;
    };
    EXPECT_EQ(last_cell(a), last_cell(b));
    const FcgrGrid only_a = fcgr(a, k);
    const FcgrGrid prefix_a = fcgr(std::span<const Nucleotide>(a).first(a.size() - 1), k);
    const auto [cx, cy] = last_cell(b);
    EXPECT_EQ(only_a.at(cx, cy), prefix_a.at(cx, cy) + 1);
  }
}

TEST(RenderPgm, TagcaGrid) {
  const std::string pgm = render_pgm(fcgr(seq("TAGCA"), 1));
  const std::string header = "P5\n2 2\n255\n";
  ASSERT_EQ(pgm.substr(0, header.size()), header);
  // Top row is (II, I), bottom row (III, IV); 255 * 1/2 rounds half up to 128.
  const std::string expected{'\x80', '\xff', '\x80', '\x80'};
  EXPECT_EQ(pixels(pgm, header.size()), expected);
}

TEST(RenderPgm, SingleCountAndEmpty) {
  const std::string header = "P5\n2 2\n255\n";
  EXPECT_EQ(pixels(render_pgm(fcgr(seq("A"), 1)), header.size()),
            (std::string{'\0', '\xff', '\0', '\0'}));
  EXPECT_EQ(render_pgm(FcgrGrid(1)), header + std::string(4, '\0'));
  EXPECT_EQ(render_pgm(FcgrGrid(3)).size(), std::string("P5\n8 8\n255\n").size() + 64);
}

TEST(RenderPgm, LogScale) {
  FcgrGrid g(1);
  g.add(0, 0, 1);
  g.add(1, 1, 2);
  const std::string pgm = render_pgm(g, true);
  const std::size_t header = std::string("P5\n2 2\n255\n").size();
  // 255 ln 2 / ln 3 = 160.88
  EXPECT_EQ(static_cast<unsigned char>(pgm[header + 2]), 161);
  EXPECT_EQ(static_cast<unsigned char>(pgm[header + 1]), 255);
  EXPECT_EQ(static_cast<unsigned char>(pgm[header + 0]), 0);
}

TEST(RenderPgm, StreamedMatchesString) {
  std::mt19937_64 rng(17);
  const FcgrGrid g = fcgr(random_sequence(rng, 3000), 5);
  for (bool log_scale : {false, true}) {
    std::ostringstream os;
    write_pgm(os, g, log_scale);
    EXPECT_EQ(os.str(), render_pgm(g, log_scale));
  }
}

TEST(RenderPgm, Deterministic) {
  std::mt19937_64 rng(16);
  const Sequence s = random_sequence(rng, 5000);
  EXPECT_EQ(render_pgm(fcgr(s, 6)), render_pgm(fcgr(s, 6)));
  EXPECT_EQ(render_pgm(fcgr(s, 6), true), render_pgm(fcgr(s, 6), true));
}
