#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>

#include "doctest.h"
#include "gridgeom/line_family.hpp"
#include "oracles.hpp"

using namespace gridgeom;

namespace {

// Brute family materialization: every (base, direction) pair with its exact
// in-grid point count, by walking the parameter j over [-2n, 2n].
struct BruteLine {
  std::vector<std::int64_t> base, dir;
  std::vector<oracle::Pt> points;
};

std::vector<std::vector<std::int64_t>> brute_directions(const SupersatFamily& f) {
  std::vector<std::vector<std::int64_t>> dirs;
  std::vector<std::int64_t> v(static_cast<size_t>(f.k));
  for (std::int64_t p : f.primes) {
    v[0] = p;
    std::vector<std::int64_t> rest(static_cast<size_t>(f.k) - 1, -p);
    while (true) {
      std::copy(rest.begin(), rest.end(), v.begin() + 1);
      dirs.push_back(v);
      size_t i = rest.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++rest[i] <= p) {
          done = false;
          break;
        }
        rest[i] = -p;
      }
      if (done) break;
    }
  }
  return dirs;
}

std::vector<BruteLine> brute_family_lines(const SupersatFamily& f) {
  const std::int64_t n = f.n;
  std::vector<BruteLine> lines;
  const auto dirs = brute_directions(f);
  std::vector<std::int64_t> u(static_cast<size_t>(f.k));
  std::vector<std::int64_t> rest(static_cast<size_t>(f.k) - 1, -n);
  for (std::int64_t u1 = 1; u1 <= f.base1_max; ++u1) {
    u[0] = u1;
    std::fill(rest.begin(), rest.end(), -n);
    while (true) {
      std::copy(rest.begin(), rest.end(), u.begin() + 1);
      for (const auto& v : dirs) {
        BruteLine bl;
        bl.base = u;
        bl.dir = v;
        for (std::int64_t j = -2 * n; j <= 2 * n; ++j) {
          oracle::Pt p(u.size());
          bool in = true;
          for (size_t i = 0; i < u.size(); ++i) {
            p[i] = u[i] + j * v[i];
            if (p[i] < 1 || p[i] > n) in = false;
          }
          if (in) bl.points.push_back(p);
        }
        lines.push_back(std::move(bl));
      }
      size_t i = rest.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++rest[i] <= n) {
          done = false;
          break;
        }
        rest[i] = -n;
      }
      if (done) break;
    }
  }
  return lines;
}

}  // namespace

TEST_CASE("primes_in_range") {
  CHECK(primes_in_range(10, 20) == std::vector<std::int64_t>{11, 13, 17, 19});
  CHECK(primes_in_range(2, 3) == std::vector<std::int64_t>{3});
  CHECK(primes_in_range(24, 28).empty());
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("build_family_3d") {
  auto f = build_family_3d(64, 0, Rat(8));
  CHECK(f.primes == std::vector<std::int64_t>{11, 13});
  CHECK(f.base1_max == 8);
  CHECK(f.t_overridden);
  CHECK(f.default_t_ref == doctest::Approx(2000.0));

  CHECK_THROWS_AS(build_family_3d(16, 0, Rat(16)), FamilyDegenerate);
  CHECK_THROWS_AS(build_family_3d(16, Rat(3, 2)), std::invalid_argument);
}

TEST_CASE("build_family_general") {
  // the nominal default t = 10 * 2^{2k} * k / gamma = 1920 leaves no bases at
  // any feasible n, so the un-overridden build is degenerate by design
  CHECK_THROWS_AS(build_family_general(64, 3, Rat(1)), FamilyDegenerate);
  auto f = build_family_general(64, 3, Rat(1), Rat(8));
  CHECK(f.default_t_ref == doctest::Approx(1920.0));
  CHECK(f.t_overridden);

  auto g = build_family_general(32, 2, Rat(1), Rat(4));
  CHECK(g.primes == std::vector<std::int64_t>{11, 13});
  auto rep = verify_family(g);
  CHECK(rep.directions_ok);

  CHECK_THROWS_AS(build_family_general(32, 2, Rat(1, 20)), std::invalid_argument);
}

TEST_CASE("family counts match the brute materialization") {
  auto f = build_family_3d(16, 0, Rat(8));
  const auto lines = brute_family_lines(f);
  CHECK(f.line_count() == Int(static_cast<long>(lines.size())));
  std::int64_t nonneg = 0;
  for (const auto& v : brute_directions(f)) {
    bool ok = true;
    for (auto c : v)
      if (c < 0) ok = false;
    if (ok) ++nonneg;
  }
  CHECK(f.nonneg_direction_count() == Int(nonneg));

  std::int64_t max_pts = 0;
  for (const auto& l : lines)
    max_pts = std::max(max_pts, static_cast<std::int64_t>(l.points.size()));
  auto rep = verify_family(f);
  CHECK(rep.max_points_on_line == max_pts);
  CHECK(rep.cap_ok == (Rat(max_pts) <= f.t));
}

TEST_CASE("per-line cap holds at n=16, t=8") {
  auto f = build_family_3d(16, 0, Rat(8));
  auto rep = verify_family(f);
  CHECK(rep.cap_ok);
  CHECK(rep.max_points_on_line <= 8);
  CHECK(rep.directions_ok);
}

TEST_CASE("coverage fails for t > 1 and the witness is honest") {
  // With base first coordinates capped at floor(n/t) < n, points whose first
  // coordinate misses every residue window are on no family line at all.
  auto f = build_family_3d(16, 0, Rat(4));
  auto rep = verify_family(f);
  CHECK_FALSE(rep.cover_ok);
  REQUIRE(rep.uncovered_witness.has_value());

  const auto lines = brute_family_lines(f);

  // the brute scan agrees: (5,1,1) lies on zero family lines
  const oracle::Pt probe{5, 1, 1};
  std::int64_t through = 0;
  for (const auto& l : lines)
    if (std::find(l.points.begin(), l.points.end(), probe) != l.points.end()) ++through;
  CHECK(through == 0);

  const auto& w = rep.uncovered_witness->coords;
  through = 0;
  for (const auto& l : lines) {
    bool nonneg = true;
    for (auto c : l.dir)
      if (c < 0) nonneg = false;
    if (!nonneg) continue;
    if (std::find(l.points.begin(), l.points.end(), w) != l.points.end()) ++through;
  }
  CHECK(through == 0);
}

TEST_CASE("t=1 family covers the grid exactly") {
  auto f = build_family_3d(16, 0, Rat(1));
  auto rep = verify_family(f);
  CHECK(rep.cap_ok);
  CHECK(rep.max_points_on_line == 1);
  CHECK(rep.directions_ok);
  CHECK(rep.cover_ok);
  REQUIRE(rep.min_cover_count.has_value());
  CHECK(*rep.min_cover_count >= rep.nonneg_directions);
  CHECK(*rep.max_cover_count <= f.v_count());
}

TEST_CASE("incidence report") {
  auto f = build_family_3d(16, 0, Rat(8));

  CHECK_THROWS_AS(incidence_average_bound({GridPoint{{17, 1, 1}}}, f, 3),
                  std::invalid_argument);

  auto rep = incidence_average_bound({}, f, 3);
  CHECK(rep.incidences == 0);
  CHECK(rep.tuple_lower_bound == 0);
  CHECK(rep.bound_le_truth);

  // full grid: exact cross-check of incidences against the brute family
  std::vector<GridPoint> full;
  for (const auto& p : oracle::all_points(16, 3)) full.push_back(GridPoint{p});
  rep = incidence_average_bound(full, f, 3);
  CHECK(rep.incidences == rep.incidences_line_major);
  CHECK(rep.bound_le_truth);
  Int inc = 0, tuples = 0;
  for (const auto& l : brute_family_lines(f)) {
    inc += Int(static_cast<long>(l.points.size()));
    tuples += binomial(Int(static_cast<long>(l.points.size())), 3);
  }
  CHECK(rep.incidences == inc);
  CHECK(rep.tuples_on_family_lines == tuples);

  // monotonicity on a nested pair
  std::mt19937 rng(7);
  std::vector<GridPoint> small, big;
  for (const auto& p : oracle::all_points(16, 3)) {
    const auto roll = rng() % 4;
    if (roll == 0) small.push_back(GridPoint{p});
    if (roll <= 1) big.push_back(GridPoint{p});
  }
  for (const auto& p : small) big.push_back(p);
  std::sort(big.begin(), big.end());
  big.erase(std::unique(big.begin(), big.end()), big.end());
  auto rs = incidence_average_bound(small, f, 3);
  auto rb = incidence_average_bound(big, f, 3);
  CHECK(rs.incidences <= rb.incidences);
  CHECK(rs.tuple_lower_bound <= rb.tuple_lower_bound);
  CHECK(rs.bound_le_truth);
  CHECK(rb.bound_le_truth);
}
