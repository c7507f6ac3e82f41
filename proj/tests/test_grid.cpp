#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "gridgeom/grid.hpp"
#include "oracles.hpp"

using namespace gridgeom;

namespace {

GridPoint gp(std::vector<std::int64_t> c) { return GridPoint{std::move(c)}; }

std::set<std::set<oracle::Pt>> library_lines(std::int64_t a, std::int64_t d,
                                             std::int64_t min_pts, LineMode mode) {
  std::set<std::set<oracle::Pt>> out;
  enumerate_rich_lines(a, d, min_pts, mode, [&](const GridLine& l) {
    std::set<oracle::Pt> pts;
    for (std::int64_t j = 0; j < l.count; ++j) {
      oracle::Pt p = l.base.coords;
      for (size_t i = 0; i < p.size(); ++i) p[i] += j * l.dir.delta[i];
      pts.insert(p);
    }
    out.insert(pts);
  });
  return out;
}

}  // namespace

TEST_CASE("canonical_line fixtures") {
  auto l = canonical_line(gp({1, 1, 1}), gp({3, 5, 7}), 8);
  CHECK(l.dir.delta == std::vector<std::int64_t>{1, 2, 3});
  CHECK(l.base.coords == std::vector<std::int64_t>{1, 1, 1});
  CHECK(l.count == 3);

  l = canonical_line(gp({2, 2}), gp({1, 1}), 3);
  CHECK(l.dir.delta == std::vector<std::int64_t>{1, 1});
  CHECK(l.base.coords == std::vector<std::int64_t>{1, 1});
  CHECK(l.count == 3);

  l = canonical_line(gp({1, 1}), gp({1, 3}), 3);
  CHECK(l.dir.delta == std::vector<std::int64_t>{0, 1});
  CHECK(l.base.coords == std::vector<std::int64_t>{1, 1});
  CHECK(l.count == 3);

  CHECK_THROWS_WITH_AS(canonical_line(gp({2, 2}), gp({2, 2}), 3), "degenerate pair",
                       std::invalid_argument);
}

TEST_CASE("canonical_line is idempotent on every rich line") {
  for (auto [a, d] : {std::pair<std::int64_t, std::int64_t>{4, 2}, {3, 3}}) {
    for (const auto& l : collect_rich_lines(a, d, 3, LineMode::FullLine)) {
      std::vector<GridPoint> pts;
      for (std::int64_t j = 0; j < l.count; ++j) {
        GridPoint p = l.base;
        for (size_t i = 0; i < p.coords.size(); ++i) p.coords[i] += j * l.dir.delta[i];
        pts.push_back(p);
      }
      for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j)
          if (i != j) CHECK(canonical_line(pts[i], pts[j], a) == l);
    }
  }
}

TEST_CASE("rich line counts match the pair-scan oracle") {
  CHECK(library_lines(3, 2, 3, LineMode::FullLine).size() == 8);
  CHECK(library_lines(3, 3, 3, LineMode::FullLine).size() == 49);
  CHECK(library_lines(3, 2, 3, LineMode::AxisParallel).size() == 6);

  for (auto [a, d] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {4, 2}, {3, 3}, {2, 4}}) {
    CHECK(library_lines(a, d, 2, LineMode::FullLine) == oracle::brute_lines(a, d, 2, false));
    CHECK(library_lines(a, d, 2, LineMode::AxisParallel) ==
          oracle::brute_lines(a, d, 2, true));
  }
}

TEST_CASE("axis mode emits d * a^{d-1} lines") {
  for (std::int64_t a = 2; a <= 4; ++a)
    for (std::int64_t d = 2; d <= 4; ++d) {
      std::int64_t expect = d;
      for (std::int64_t i = 1; i < d; ++i) expect *= a;
      CHECK(static_cast<std::int64_t>(
                collect_rich_lines(a, d, 2, LineMode::AxisParallel).size()) == expect);
    }
}

TEST_CASE("enumeration budget is an error, not truncation") {
  EnumerationBudget tiny;
  tiny.max_points = 10;
  CHECK_THROWS_AS(collect_rich_lines(4, 2, 2, LineMode::FullLine, tiny), BudgetExceeded);
}

TEST_CASE("collinear tuple counts") {
  CHECK(count_collinear_tuples(3, 2, 3, LineMode::FullLine) == 8);
  CHECK(count_collinear_tuples(4, 2, 3, LineMode::FullLine) == 44);
  CHECK(count_collinear_tuples(2, 5, 3, LineMode::FullLine) == 0);
  CHECK(count_collinear_tuples(2, 5, 3, LineMode::AxisParallel) == 0);

  for (auto [a, d] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {4, 2}, {3, 3}, {2, 4}})
    for (int r = 2; r <= 4; ++r) {
      CHECK(count_collinear_tuples(a, d, r, LineMode::FullLine) ==
            oracle::brute_tuple_count(a, d, r, false));
      CHECK(count_collinear_tuples(a, d, r, LineMode::AxisParallel) ==
            oracle::brute_tuple_count(a, d, r, true));
    }
}

TEST_CASE("axis-parallel closed form") {
  for (std::int64_t a = 2; a <= 5; ++a)
    for (std::int64_t d = 2; d <= 5; ++d)
      for (int r = 2; r <= static_cast<int>(a); ++r)
        CHECK(count_collinear_tuples(a, d, r, LineMode::AxisParallel) ==
              axis_parallel_edge_count(a, d, r));
}

TEST_CASE("census identity and degree double count") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 30; ++i) {
    const std::int64_t a = 2 + static_cast<std::int64_t>(rng() % 5);
    const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 3);
    std::int64_t n = 1;
    for (std::int64_t j = 0; j < d; ++j) n *= a;
    if (n > 4000) continue;
    const int r = 2 + static_cast<int>(rng() % 3);
    const LineMode mode = rng() % 2 ? LineMode::FullLine : LineMode::AxisParallel;
    auto h = line_census(a, d, r, mode);
    Int from_census = 0;
    for (const auto& [pts, lines] : h.census)
      from_census += lines * binomial(Int(pts), static_cast<unsigned long>(r));
    CHECK(from_census == count_collinear_tuples(a, d, r, mode));
    CHECK(from_census == h.edge_count());
  }

  // sum of vertex degrees = r * e(H), via explicit brute edges
  for (auto [a, d] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {4, 2}}) {
    const auto pts = oracle::all_points(a, d);
    const auto edges = oracle::brute_edges(pts, 3, false);
    std::vector<std::int64_t> deg(pts.size(), 0);
    for (const auto& e : edges)
      for (int v : e) ++deg[static_cast<size_t>(v)];
    std::int64_t total = 0;
    for (auto v : deg) total += v;
    CHECK(Int(static_cast<long>(total)) ==
          Int(3) * count_collinear_tuples(a, d, 3, LineMode::FullLine));
  }
}

TEST_CASE("arithmetic progressions from [a/r]^d land on edges") {
  // (u, u+v, u+2v) with u, v in [3]^2 is a collinear in-grid triple of [9]^2
  const auto pts = oracle::all_points(9, 2);
  std::set<std::set<oracle::Pt>> edge_sets;
  for (const auto& e : oracle::brute_edges(pts, 3, false))
    edge_sets.insert({pts[static_cast<size_t>(e[0])], pts[static_cast<size_t>(e[1])],
                      pts[static_cast<size_t>(e[2])]});
  for (std::int64_t u1 = 1; u1 <= 3; ++u1)
    for (std::int64_t u2 = 1; u2 <= 3; ++u2)
      for (std::int64_t v1 = 1; v1 <= 3; ++v1)
        for (std::int64_t v2 = 1; v2 <= 3; ++v2) {
          std::set<oracle::Pt> triple;
          for (std::int64_t j = 0; j < 3; ++j) triple.insert({u1 + j * v1, u2 + j * v2});
          for (const auto& p : triple) {
            CHECK(p[0] >= 1);
            CHECK(p[0] <= 9);
            CHECK(p[1] >= 1);
            CHECK(p[1] <= 9);
          }
          CHECK(edge_sets.count(triple) == 1);
        }
}

TEST_CASE("dyadic bucket census") {
  auto b = bucket_line_census(3, 2);
  REQUIRE(b.buckets.size() == 1);
  CHECK(b.buckets[0].t == 1);
  CHECK(b.buckets[0].lines == 8);

  // [4]^2: 10 lines of 4 points plus 4 lines of 3 points, all in bucket t=1
  b = bucket_line_census(4, 2);
  REQUIRE(b.buckets.size() == 1);
  CHECK(b.buckets[0].t == 1);
  CHECK(b.buckets[0].lines == 14);
  std::int64_t with3 = 0, with4 = 0;
  for (const auto& line : oracle::brute_lines(4, 2, 3, false)) {
    if (line.size() == 3) ++with3;
    if (line.size() == 4) ++with4;
  }
  CHECK(with3 == 4);
  CHECK(with4 == 10);
  CHECK(b.buckets[0].lines == Int(static_cast<long>(with3 + with4)));

  CHECK(bucket_line_census(2, 2).buckets.empty());
}

TEST_CASE("codegree profile") {
  auto p = codegree_profile(3, 2, 3, LineMode::FullLine);
  CHECK(p.delta(2) == 1);
  CHECK(p.delta(3) == 1);
  p = codegree_profile(4, 2, 3, LineMode::FullLine);
  CHECK(p.delta(2) == 2);

  // zero-edge instance
  p = codegree_profile(2, 3, 3, LineMode::FullLine);
  CHECK(p.average_degree == 0);
  CHECK(p.delta(2) == 0);
  CHECK(p.delta(3) == 0);

  // exhaustive co-degree oracle
  for (auto [a, d] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {4, 2}, {3, 3}}) {
    const auto pts = oracle::all_points(a, d);
    const auto edges = oracle::brute_edges(pts, 3, false);
    auto prof = codegree_profile(a, d, 3, LineMode::FullLine);
    for (int j = 2; j <= 3; ++j) {
      std::int64_t best = 0;
      for (const auto& sub : oracle::brute_edges(pts, j, false)) {
        // count edges containing this j-set (the j-set itself must be collinear)
        std::int64_t c = 0;
        for (const auto& e : edges)
          if (std::includes(e.begin(), e.end(), sub.begin(), sub.end())) ++c;
        best = std::max(best, c);
      }
      CHECK(prof.delta(j) == Int(static_cast<long>(best)));
    }
    CHECK(prof.average_degree ==
          Rat(Int(3) * Int(static_cast<long>(edges.size()))) / Rat(prof.vertex_count));
  }

  // Delta_j = C(a-j, r-j) on the full grid with a >= r
  auto p5 = codegree_profile(5, 2, 3, LineMode::FullLine);
  CHECK(p5.delta(2) == binomial(Int(3), 1));
  CHECK(p5.delta(3) == binomial(Int(2), 0));
}

TEST_CASE("compute_delta") {
  DegreeProfile p;
  p.uniformity = 3;
  p.average_degree = 2;
  p.codegree = {Int(1), Int(1)};
  CHECK(compute_delta(p, 3, Rat(1, 2)) == 8);

  p.average_degree = 5;
  p.codegree = {Int(0), Int(0)};
  CHECK(compute_delta(p, 3, Rat(1, 10)) == 0);

  DegreeProfile q;
  q.uniformity = 4;
  q.average_degree = 10;
  q.codegree = {Int(1), Int(1), Int(1)};
  CHECK(compute_delta(q, 4, Rat(1, 2)) == 16);

  DegreeProfile z;
  z.uniformity = 3;
  z.average_degree = 0;
  z.codegree = {Int(0), Int(0)};
  CHECK_THROWS_WITH_AS(compute_delta(z, 3, Rat(1, 2)), "empty hypergraph",
                       std::invalid_argument);

  // r = 3 closed form 4 D2/(d tau) + 2 D3/(d tau^2) against the general formula
  DegreeProfile g;
  g.uniformity = 3;
  g.average_degree = Rat(7, 3);
  g.codegree = {Int(5), Int(2)};
  const Rat tau(3, 17);
  const Rat want = Rat(4) * Rat(5) / (g.average_degree * tau) +
                   Rat(2) * Rat(2) / (g.average_degree * tau * tau);
  CHECK(compute_delta(g, 3, tau) == want);
}
