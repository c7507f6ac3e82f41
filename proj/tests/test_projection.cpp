#include <algorithm>
#include <set>

#include "doctest.h"
#include "gridgeom/projection.hpp"
#include "oracles.hpp"

using namespace gridgeom;

namespace {

std::vector<GridPoint> grid(std::int64_t a, std::int64_t d) {
  std::vector<GridPoint> out;
  for (const auto& p : oracle::all_points(a, d)) out.push_back(GridPoint{p});
  return out;
}

// Independent O(m^3) determinant scan over the planar image.
std::set<std::array<int, 3>> det_triples(const std::vector<PlanarPoint>& pts) {
  std::set<std::array<int, 3>> out;
  const int m = static_cast<int>(pts.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const Rat det = (pts[j].x - pts[i].x) * (pts[k].y - pts[i].y) -
                        (pts[j].y - pts[i].y) * (pts[k].x - pts[i].x);
        if (det == 0) out.insert({i, j, k});
      }
  return out;
}

}  // namespace

TEST_CASE("lift_products") {
  CHECK(lift_products(GridPoint{{1, 2, 3}}) ==
        std::vector<Int>{1, 2, 3, 2, 3, 6, 6});
  CHECK(lift_products(GridPoint{{1, 1}}) == std::vector<Int>{1, 1, 1});
  CHECK(lift_products(GridPoint{{2, 3}}) == std::vector<Int>{2, 3, 6});
  CHECK_THROWS_AS(lift_products(GridPoint{{2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(lift_products(GridPoint{{5}}), std::invalid_argument);
}

TEST_CASE("line_through canonical form") {
  PlanarPoint p{Rat(0), Rat(0)}, q{Rat(2), Rat(4)}, s{Rat(1), Rat(2)};
  auto l = line_through(p, q);
  CHECK(l == line_through(q, p));
  CHECK(l == line_through(p, s));
  CHECK(on_line(l, s));
  CHECK_FALSE(on_line(l, PlanarPoint{Rat(1), Rat(3)}));
  CHECK_THROWS_AS(line_through(p, p), std::invalid_argument);

  // fractional inputs clear denominators
  auto f = line_through(PlanarPoint{Rat(1, 2), Rat(1, 3)}, PlanarPoint{Rat(3, 2), Rat(4, 3)});
  CHECK(on_line(f, PlanarPoint{Rat(5, 2), Rat(7, 3)}));
}

TEST_CASE("projection of a set with no collinear triple") {
  auto img = project_generic(grid(2, 3), ProjectionMode::FullLine, 5);
  CHECK(img.points.size() == 8);
  CHECK(img.cert.preserved == 0);
  CHECK(img.cert.created == 0);
  CHECK(det_triples(img.points).empty());
}

TEST_CASE("projection of the full 27-point grid keeps exactly 49 triples") {
  auto s = grid(3, 3);
  auto designated = source_collinear_triples(s, ProjectionMode::FullLine);
  CHECK(designated.size() == 49);
  auto img = project_generic(s, ProjectionMode::FullLine, 11);
  CHECK(img.cert.created == 0);
  CHECK(img.cert.preserved == 49);
  CHECK(det_triples(img.points) == designated);
  CHECK(planar_collinear_triples(img.points) == designated);
}

TEST_CASE("axis-only projection breaks the diagonals") {
  auto s = grid(3, 2);
  auto full = source_collinear_triples(s, ProjectionMode::FullLine);
  auto axis = source_collinear_triples(s, ProjectionMode::AxisOnly);
  CHECK(full.size() == 8);
  CHECK(axis.size() == 6);
  auto img = project_generic(s, ProjectionMode::AxisOnly, 21);
  CHECK(det_triples(img.points) == axis);
}

TEST_CASE("projection is seed deterministic") {
  auto s = grid(3, 2);
  auto a = project_generic(s, ProjectionMode::FullLine, 3);
  auto b = project_generic(s, ProjectionMode::FullLine, 3);
  CHECK(a.points == b.points);
  CHECK(a.coeffs_x == b.coeffs_x);
}

TEST_CASE("product grids") {
  std::vector<std::vector<Int>> bad = {{Int(1), Int(2), Int(3)}, {Int(1), Int(2), Int(3)}};
  CHECK_FALSE(product_grid_violations(bad).empty());

  auto g = generic_product_grid(3, 2, 31);
  CHECK(g.alphabets.size() == 2);
  CHECK(product_grid_violations(g.alphabets).empty());

  // the accepted product has exactly the 6 axis-parallel triples
  std::vector<PlanarPoint> pts;
  for (const auto& x : g.alphabets[0])
    for (const auto& y : g.alphabets[1]) pts.push_back(PlanarPoint{Rat(x), Rat(y)});
  CHECK(det_triples(pts).size() == 6);
}

TEST_CASE("duality") {
  std::vector<PlanarPoint> row = {PlanarPoint{Rat(1), Rat(0)}, PlanarPoint{Rat(2), Rat(0)},
                                  PlanarPoint{Rat(3), Rat(0)}};
  auto duals = dualize(row);
  REQUIRE(duals.size() == 3);
  for (const auto& l : duals) {
    CHECK_FALSE(l.vertical);
    CHECK(incident(PlanarPoint{Rat(0), Rat(0)}, l));  // concurrent at the origin
  }
  CHECK(duals[0].m == 1);
  CHECK(duals[1].m == 2);
  CHECK(duals[2].m == 3);

  auto origin = dualize({PlanarPoint{Rat(0), Rat(0)}});
  CHECK(origin[0].m == 0);
  CHECK(origin[0].c == 0);

  // involution and incidence preservation
  std::vector<PlanarPoint> pts = {PlanarPoint{Rat(1), Rat(2)}, PlanarPoint{Rat(-3), Rat(5)},
                                  PlanarPoint{Rat(1, 2), Rat(7, 3)}};
  CHECK(dualize_inverse(dualize(pts)) == pts);
  for (const auto& p : pts)
    for (const auto& q : pts) {
      // p on dual(q) iff q on dual(p)
      const bool a = incident(p, dualize({q})[0]);
      const bool b = incident(q, dualize({p})[0]);
      CHECK(a == b);
    }

  DualLine vertical;
  vertical.vertical = true;
  vertical.c = Rat(2);
  CHECK_THROWS_AS(dualize_inverse({vertical}), std::invalid_argument);
}
