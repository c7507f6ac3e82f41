#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gridgeom/exact.hpp"

#include "json.hpp"

namespace gridgeom {

/// A lattice point of [1,a]^d. Coordinates are 1-based.
struct GridPoint {
  std::vector<std::int64_t> coords;

  auto operator<=>(const GridPoint&) const = default;
};

/// Integer direction with gcd 1 and first nonzero entry positive.
struct PrimitiveDirection {
  std::vector<std::int64_t> delta;

  auto operator<=>(const PrimitiveDirection&) const = default;
};

/// A line of the grid in canonical form: `base` is the extremal grid point
/// (base - dir leaves the grid), `count` the number of grid points on it.
struct GridLine {
  GridPoint base;
  PrimitiveDirection dir;
  std::int64_t count = 0;

  auto operator<=>(const GridLine&) const = default;
};

enum class LineMode { FullLine, AxisParallel };

struct EnumerationBudget {
  // Cap on alphabet^dimension; exceeding it is an error, never truncation.
  std::int64_t max_points = 10'000'000;
  std::int64_t max_directions = 50'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Line census of the collinear hypergraph on [a]^d: for each point count l,
/// the number of grid lines carrying exactly l points.
struct CollinearHypergraph {
  std::int64_t alphabet = 0;
  std::int64_t dimension = 0;
  int uniformity = 0;
  LineMode mode = LineMode::FullLine;
  std::map<std::int64_t, Int> census;  // points-on-line -> number of lines

  Int vertex_count() const;
  Int edge_count() const;  // sum over census of C(l, r)
};

struct DegreeProfile {
  int uniformity = 0;
  Int vertex_count;
  Int edge_count;
  Rat average_degree;        // r * e / N
  std::vector<Int> codegree;  // codegree[j] = Delta_j for j = 2..r (index j-2)

  const Int& delta(int j) const { return codegree.at(static_cast<size_t>(j) - 2); }
};

struct BucketCensus {
  struct Bucket {
    int t = 0;               // lines with 2^t < count <= 2^{t+1}
    Int lines;
    Rat reference_bound;     // 2^d (a/2^t)^d d a^d / 2^t, informational
    bool exceeds_reference = false;
  };
  std::vector<Bucket> buckets;
  bool premise_met = false;  // d <= 0.01 log2(a); informational at desk scale
};

bool in_grid(const GridPoint& p, std::int64_t a);

PrimitiveDirection primitive_direction(std::vector<std::int64_t> delta);

/// Canonical line through two distinct grid points of [1,n]^k.
/// Throws std::invalid_argument("degenerate pair") when p == q.
GridLine canonical_line(const GridPoint& p, const GridPoint& q, std::int64_t n);

/// Enumerates each line of [a]^d with at least min_pts grid points exactly
/// once, in lexicographic (dir, base) order.
void enumerate_rich_lines(std::int64_t a, std::int64_t d, std::int64_t min_pts,
                          LineMode mode, const std::function<void(const GridLine&)>& emit,
                          const EnumerationBudget& budget = {});

std::vector<GridLine> collect_rich_lines(std::int64_t a, std::int64_t d,
                                         std::int64_t min_pts, LineMode mode,
                                         const EnumerationBudget& budget = {});

/// Full line census (all lines with >= 2 points).
CollinearHypergraph line_census(std::int64_t a, std::int64_t d, int r, LineMode mode,
                                const EnumerationBudget& budget = {});

/// Exact number of collinear r-tuples of [a]^d.
Int count_collinear_tuples(std::int64_t a, std::int64_t d, int r, LineMode mode,
                           const EnumerationBudget& budget = {});

/// Closed form d * C(a,r) * a^{d-1} for the axis-parallel hypergraph.
Int axis_parallel_edge_count(std::int64_t a, std::int64_t d, int r);

/// Dyadic census: bucket t holds lines with 2^t < count <= 2^{t+1}, t >= 1.
BucketCensus bucket_line_census(std::int64_t a, std::int64_t d,
                                const EnumerationBudget& budget = {});

DegreeProfile codegree_profile(std::int64_t a, std::int64_t d, int r, LineMode mode,
                               const EnumerationBudget& budget = {});

DegreeProfile profile_from_census(const CollinearHypergraph& h);

/// The weighted co-degree functional
///   2^{C(r,2)-1} sum_{j=2}^r Delta_j / (d tau^{j-1} 2^{C(j-1,2)}).
/// Throws std::invalid_argument("empty hypergraph") when d == 0.
Rat compute_delta(const DegreeProfile& profile, int r, const Rat& tau);

nlohmann::json hypergraph_to_json(const CollinearHypergraph& h,
                                  const DegreeProfile& profile);

nlohmann::json line_to_json(const GridLine& line);

}  // namespace gridgeom
