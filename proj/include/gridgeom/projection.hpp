#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "gridgeom/exact.hpp"
#include "gridgeom/grid.hpp"

#include "json.hpp"

namespace gridgeom {

struct PlanarPoint {
  Rat x, y;

  friend bool operator==(const PlanarPoint& a, const PlanarPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const PlanarPoint& a, const PlanarPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

/// a*x + b*y = c with integer a, b, c, gcd 1, first nonzero of (a, b) positive.
struct PlanarLine {
  Int a, b, c;

  friend bool operator==(const PlanarLine&, const PlanarLine&) = default;
  friend bool operator<(const PlanarLine& l, const PlanarLine& r) {
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    return l.c < r.c;
  }
};

/// Canonical line through two distinct rational points; throws on equal input.
PlanarLine line_through(const PlanarPoint& p, const PlanarPoint& q);
bool on_line(const PlanarLine& l, const PlanarPoint& p);

/// All collinear triples of the point list, as sorted index triples.
std::set<std::array<int, 3>> planar_collinear_triples(const std::vector<PlanarPoint>& pts);

struct ProjectionCertificate {
  std::int64_t preserved = 0;  // designated collinear triples, found intact in the image
  std::int64_t created = 0;    // extra collinear triples in the image (must be 0)
  int attempts = 0;
};

enum class ProjectionMode { FullLine, AxisOnly };

struct PlanarImage {
  std::vector<PlanarPoint> points;  // image of the input, in input order
  ProjectionCertificate cert;
  std::vector<Int> coeffs_x, coeffs_y;  // the accepted linear forms
};

/// All coordinate products of p, ordered by subset size then lexicographic
/// index tuple, full product last. Needs >= 2 nonzero coordinates.
std::vector<Int> lift_products(const GridPoint& p);

/// Random integer linear map to the plane, redrawn until the image carries
/// exactly the designated collinear triples (all of S's lines in full-line
/// mode; only the axis-parallel ones, via the product lift, in axis-only
/// mode). Throws with the offending triple once the retry cap is exhausted.
PlanarImage project_generic(const std::vector<GridPoint>& s, ProjectionMode mode,
                            std::uint64_t seed, int retry_cap = 32);

/// Designated source triples, as sorted index triples into s.
std::set<std::array<int, 3>> source_collinear_triples(const std::vector<GridPoint>& s,
                                                      ProjectionMode mode);

struct ProductGrid {
  std::vector<std::vector<Int>> alphabets;  // one sorted alphabet per axis
  int attempts = 0;
};

/// First collinear non-axis-parallel triple of the product of the given
/// alphabets, as product-lex point indices; empty when the grid is generic.
std::vector<std::array<int, 3>> product_grid_violations(
    const std::vector<std::vector<Int>>& alphabets, std::size_t max_report = 1);

/// Draws d random alphabets of a entries and verifies that only axis-parallel
/// triples of the product are collinear, redrawing on failure.
ProductGrid generic_product_grid(std::int64_t a, std::int64_t d, std::uint64_t seed,
                                 int retry_cap = 32);

/// y = m*x + c, or the vertical line x = c.
struct DualLine {
  bool vertical = false;
  Rat m, c;
};

bool incident(const PlanarPoint& p, const DualLine& l);

/// (a, b) -> the line y = a*x - b.
std::vector<DualLine> dualize(const std::vector<PlanarPoint>& pts);
/// y = m*x + c -> (m, -c); vertical lines have no dual point in this chart.
std::vector<PlanarPoint> dualize_inverse(const std::vector<DualLine>& lines);

nlohmann::json planar_point_to_json(const PlanarPoint& p);
nlohmann::json planar_image_to_json(const PlanarImage& img);

}  // namespace gridgeom
