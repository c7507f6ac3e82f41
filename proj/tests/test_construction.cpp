#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "gridgeom/construction.hpp"
#include "oracles.hpp"

using namespace gridgeom;

namespace {

// Does any line of the grid carry more than cap points of s?
bool has_excess_line(const std::vector<GridPoint>& s, std::int64_t a, int cap, bool axis) {
  std::vector<oracle::Pt> pts;
  for (const auto& p : s) pts.push_back(p.coords);
  for (const auto& line :
       oracle::brute_lines(a, static_cast<std::int64_t>(pts.empty() ? 2 : pts[0].size()), 2,
                           axis)) {
    int c = 0;
    for (const auto& p : pts)
      if (line.count(p)) ++c;
    if (c > cap) return true;
  }
  return false;
}

// Star scan: a grid point outside s on >= t axis lines each holding exactly r
// points of s.
bool has_star(const std::vector<GridPoint>& s, std::int64_t a, std::int64_t d, int r,
              int t) {
  std::set<oracle::Pt> member;
  for (const auto& p : s) member.insert(p.coords);
  for (const auto& center : oracle::all_points(a, d)) {
    if (member.count(center)) continue;
    int full = 0;
    for (std::int64_t axis = 0; axis < d; ++axis) {
      int c = 0;
      oracle::Pt p = center;
      for (std::int64_t v = 1; v <= a; ++v) {
        p[static_cast<size_t>(axis)] = v;
        if (member.count(p)) ++c;
      }
      if (c == r) ++full;
    }
    if (full >= t) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("stable rng") {
  StableRng a(12345), b(12345);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  StableRng c(1);
  for (int i = 0; i < 50; ++i) {
    CHECK(c.bernoulli(Rat(1)));
    CHECK_FALSE(c.bernoulli(Rat(0)));
    CHECK(c.below(7) < 7);
  }
}

TEST_CASE("p_random_subset endpoints and determinism") {
  CHECK(p_random_subset(3, 2, Rat(1), 9).size() == 9);
  CHECK(p_random_subset(3, 2, Rat(0), 9).empty());
  auto a = p_random_subset(8, 3, Rat(1, 3), 777);
  auto b = p_random_subset(8, 3, Rat(1, 3), 777);
  CHECK(a == b);
  auto c = p_random_subset(8, 3, Rat(1, 3), 778);
  CHECK(a != c);
}

TEST_CASE("p_random_subset matches binomial statistics") {
  // mean of 200 seeded draws should land within 3 sigma of n p
  double total = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed)
    total += static_cast<double>(p_random_subset(16, 3, Rat(1, 4), seed).size());
  const double mean = total / 200.0;
  const double sigma = std::sqrt(4096.0 * 0.25 * 0.75);
  CHECK(std::abs(mean - 1024.0) < 3 * sigma);
}

TEST_CASE("delete_excess_tuples") {
  // 4 collinear points, cap 3: exactly one removal
  std::vector<GridPoint> four = {GridPoint{{1, 1}}, GridPoint{{2, 2}}, GridPoint{{3, 3}},
                                 GridPoint{{4, 4}}};
  auto c = delete_excess_tuples(four, 4, 2, 3);
  CHECK(c.removed_excess.size() == 1);
  CHECK(c.surviving.size() == 3);
  CHECK(c.excess_certificate);
  CHECK_FALSE(has_excess_line(c.surviving, 4, 3, false));

  // nothing to do
  std::vector<GridPoint> tame = {GridPoint{{1, 1}}, GridPoint{{2, 3}}, GridPoint{{3, 2}}};
  c = delete_excess_tuples(tame, 4, 2, 3);
  CHECK(c.removed_excess.empty());
  CHECK(c.surviving == tame);

  // full [4]^2
  std::vector<GridPoint> full;
  for (const auto& p : oracle::all_points(4, 2)) full.push_back(GridPoint{p});
  c = delete_excess_tuples(full, 4, 2, 3);
  CHECK(c.excess_certificate);
  CHECK_FALSE(has_excess_line(c.surviving, 4, 3, false));
  CHECK(static_cast<std::int64_t>(c.removed_excess.size()) <= c.violations_processed);

  // determinism
  auto again = delete_excess_tuples(full, 4, 2, 3);
  CHECK(again.surviving == c.surviving);
  CHECK(again.removed_excess == c.removed_excess);
}

TEST_CASE("removals stay rare at the derived density") {
  // at p = r/(20n) the expected number of collinear 4-tuples is tiny, so the
  // cleaning pass should touch well under a tenth of the expected set size
  const double expected_size = 4096.0 * 3 / 320;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto s = p_random_subset(16, 3, Rat(3, 320), seed);
    auto c = delete_excess_tuples(s, 16, 3, 3);
    CHECK(c.excess_certificate);
    CHECK(static_cast<double>(c.removed_excess.size()) < 0.1 * expected_size);
  }
}

TEST_CASE("star_sparsen") {
  // the 4-point cross around the missing center (2,2)
  std::vector<GridPoint> cross = {GridPoint{{1, 2}}, GridPoint{{2, 1}}, GridPoint{{2, 3}},
                                  GridPoint{{3, 2}}};
  REQUIRE(has_star(cross, 3, 2, 2, 2));
  auto c = star_sparsen(cross, 3, 2, 2, 2, 1);
  CHECK(c.removed_star.size() == 1);
  CHECK(c.star_certificate);
  CHECK_FALSE(has_star(c.surviving, 3, 2, 2, 2));

  // no r-full line: unchanged
  std::vector<GridPoint> sparse = {GridPoint{{1, 1}}, GridPoint{{3, 3}}};
  c = star_sparsen(sparse, 3, 2, 2, 2, 1);
  CHECK(c.removed_star.empty());
  CHECK(c.surviving == sparse);

  // t = 1 is degenerate but well defined: every r-full axis line through a
  // non-member center loses a point
  std::vector<GridPoint> row = {GridPoint{{1, 1}}, GridPoint{{2, 1}}};
  c = star_sparsen(row, 3, 2, 2, 1, 1);
  CHECK(c.star_certificate);
  CHECK_FALSE(has_star(c.surviving, 3, 2, 2, 1));
}

TEST_CASE("drop_busy_points certificate") {
  std::vector<GridPoint> full;
  for (const auto& p : oracle::all_points(3, 2)) full.push_back(GridPoint{p});
  auto c = drop_busy_points(full, 3, 2, 3, 1);
  // survivors lie on at most 1 axis line that still carries >= 3 survivors
  std::set<oracle::Pt> member;
  for (const auto& p : c.surviving) member.insert(p.coords);
  for (const auto& p : c.surviving) {
    int busy = 0;
    for (std::int64_t axis = 0; axis < 2; ++axis) {
      int cnt = 0;
      oracle::Pt q = p.coords;
      for (std::int64_t v = 1; v <= 3; ++v) {
        q[static_cast<size_t>(axis)] = v;
        if (member.count(q)) ++cnt;
      }
      if (cnt >= 3) ++busy;
    }
    CHECK(busy <= 1);
  }
}

TEST_CASE("derive_params") {
  auto gp = derive_params(Regime::GeneralPosition34, 4096, 3, 3);
  CHECK(to_double(gp.p) == doctest::Approx(1.0 / (4096.0 * std::sqrt(12.0))));
  CHECK_FALSE(gp.full_scale_infeasible);

  auto en = derive_params(Regime::EpsNet, 1000, 3, 5);
  CHECK(en.p == Rat(1, 4000));

  auto wn = derive_params(Regime::WeakNet, 8, 4, 3);
  CHECK(wn.full_scale_infeasible);
  CHECK(wn.full_scale_values.at("log2_k").get<double>() == doctest::Approx(81.0));
  CHECK(wn.full_scale_values.at("log2_n").get<double>() == doctest::Approx(243.0));
  CHECK(wn.t.has_value());

  auto cd = derive_params(Regime::CoverDecomp, 4, 3, 3, Rat(1, 2));
  CHECK(cd.full_scale_infeasible);
  CHECK(cd.full_scale_values.at("eps").get<std::string>() == rat_str(Rat(1, 16)));

  CHECK(regime_from_name(regime_name(Regime::WeakNet)) == Regime::WeakNet);
  CHECK_THROWS_AS(regime_from_name("nope"), std::invalid_argument);
}

TEST_CASE("first_moment_check") {
  auto rep = first_moment_check(10, 100, 50, Rat(1, 2));
  const double want = 10 + 50 * std::log2(std::exp(1.0) * 2.0) - 50;
  CHECK(rep.log2_bound == doctest::Approx(want));
  CHECK_FALSE(rep.bound_below_one);
  CHECK_FALSE(rep.vacuous);

  rep = first_moment_check(10, 100, 50, Rat(1, 1u << 30));
  CHECK(rep.bound_below_one);

  rep = first_moment_check(10, 5, 50, Rat(1, 2));
  CHECK(rep.vacuous);
  CHECK(rep.bound_below_one);

  CHECK_THROWS_AS(first_moment_check(-1, 5, 3, Rat(1, 2)), std::invalid_argument);
}
