#include "gridgeom/grid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gridgeom {

namespace {

std::int64_t checked_pow(std::int64_t a, std::int64_t d, std::int64_t cap) {
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    if (v > cap / a) return cap + 1;
    v *= a;
  }
  return v;
}

void check_budget(std::int64_t a, std::int64_t d, const EnumerationBudget& budget) {
  if (a < 1 || d < 1) throw std::invalid_argument("alphabet and dimension must be >= 1");
  if (checked_pow(a, d, budget.max_points) > budget.max_points)
    throw BudgetExceeded("instance too large: alphabet^dimension exceeds budget of " +
                         std::to_string(budget.max_points) + " points");
}

// Lexicographic successor of a mixed-radix vector with per-coordinate range
// [lo, hi]; returns false after the last one.
bool next_vector(std::vector<std::int64_t>& v, std::int64_t lo, std::int64_t hi) {
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it < hi) {
      ++*it;
      return true;
    }
    *it = lo;
  }
  return false;
}

}  // namespace

bool in_grid(const GridPoint& p, std::int64_t a) {
  return std::ranges::all_of(p.coords, [a](std::int64_t c) { return 1 <= c && c <= a; });
}

PrimitiveDirection primitive_direction(std::vector<std::int64_t> delta) {
  std::int64_t g = 0;
  for (auto c : delta) g = std::gcd(g, c);
  if (g == 0) throw std::invalid_argument("zero direction");
  for (auto& c : delta) c /= g;
  for (auto c : delta) {
    if (c != 0) {
      if (c < 0)
        for (auto& x : delta) x = -x;
      break;
    }
  }
  return {std::move(delta)};
}

GridLine canonical_line(const GridPoint& p, const GridPoint& q, std::int64_t n) {
  if (p == q) throw std::invalid_argument("degenerate pair");
  const auto k = p.coords.size();
  std::vector<std::int64_t> delta(k);
  for (size_t i = 0; i < k; ++i) delta[i] = q.coords[i] - p.coords[i];
  PrimitiveDirection dir = primitive_direction(std::move(delta));

  // Walk back to the extremal base, then forward for the count.
  GridPoint base = p;
  auto step = [&](GridPoint& pt, int sign) {
    for (size_t i = 0; i < k; ++i) pt.coords[i] += sign * dir.delta[i];
  };
  GridPoint prev = base;
  step(prev, -1);
  while (in_grid(prev, n)) {
    base = prev;
    step(prev, -1);
  }
  std::int64_t count = 0;
  GridPoint cur = base;
  while (in_grid(cur, n)) {
    ++count;
    step(cur, +1);
  }
  return {std::move(base), std::move(dir), count};
}

void enumerate_rich_lines(std::int64_t a, std::int64_t d, std::int64_t min_pts,
                          LineMode mode, const std::function<void(const GridLine&)>& emit,
                          const EnumerationBudget& budget) {
  if (min_pts < 2) throw std::invalid_argument("min_pts must be >= 2");
  check_budget(a, d, budget);

  if (mode == LineMode::AxisParallel) {
    if (min_pts > a) return;
    // Axis i varies; lexicographic (dir, base): dir = e_i ordered by the
    // position of the leading 1, i.e. axis 0 first.
    for (std::int64_t axis = 0; axis < d; ++axis) {
      std::vector<std::int64_t> delta(static_cast<size_t>(d), 0);
      delta[static_cast<size_t>(axis)] = 1;
      PrimitiveDirection dir{delta};
      std::vector<std::int64_t> base(static_cast<size_t>(d), 1);
      do {
        if (base[static_cast<size_t>(axis)] != 1) continue;
        emit(GridLine{GridPoint{base}, dir, a});
      } while (next_vector(base, 1, a));
    }
    return;
  }

  // Iterate primitive directions in lexicographic order; for each, sweep
  // extremal bases. Each line appears exactly once.
  std::vector<std::int64_t> delta(static_cast<size_t>(d), -(a - 1));
  std::int64_t dirs_seen = 0;
  if (a == 1) {
    return;  // a single point per axis, no line has 2 points
  }
  do {
    // Canonical: gcd 1 and first nonzero positive.
    std::int64_t g = 0;
    for (auto c : delta) g = std::gcd(g, c);
    if (g != 1) continue;
    bool lead_pos = false;
    for (auto c : delta) {
      if (c != 0) {
        lead_pos = c > 0;
        break;
      }
    }
    if (!lead_pos) continue;
    if (++dirs_seen > budget.max_directions)
      throw BudgetExceeded("instance too large: direction count exceeds budget");

    PrimitiveDirection dir{delta};
    std::vector<std::int64_t> base(static_cast<size_t>(d), 1);
    do {
      // Extremal: base - delta leaves the grid.
      bool extremal = false;
      for (std::int64_t i = 0; i < d; ++i) {
        const std::int64_t c = base[static_cast<size_t>(i)] - delta[static_cast<size_t>(i)];
        if (c < 1 || c > a) {
          extremal = true;
          break;
        }
      }
      if (!extremal) continue;
      std::int64_t count = 1;
      while (true) {
        bool inside = true;
        for (std::int64_t i = 0; i < d; ++i) {
          const std::int64_t c =
              base[static_cast<size_t>(i)] + count * delta[static_cast<size_t>(i)];
          if (c < 1 || c > a) {
            inside = false;
            break;
          }
        }
        if (!inside) break;
        ++count;
      }
      if (count >= min_pts) emit(GridLine{GridPoint{base}, dir, count});
    } while (next_vector(base, 1, a));
  } while (next_vector(delta, -(a - 1), a - 1));
}

std::vector<GridLine> collect_rich_lines(std::int64_t a, std::int64_t d,
                                         std::int64_t min_pts, LineMode mode,
                                         const EnumerationBudget& budget) {
  std::vector<GridLine> out;
  enumerate_rich_lines(a, d, min_pts, mode, [&](const GridLine& l) { out.push_back(l); },
                       budget);
  return out;
}

Int CollinearHypergraph::vertex_count() const {
  return pow_int(Int(alphabet), static_cast<unsigned long>(dimension));
}

Int CollinearHypergraph::edge_count() const {
  Int e = 0;
  for (const auto& [pts, lines] : census)
    e += binomial(static_cast<unsigned long>(pts), static_cast<unsigned long>(uniformity)) *
         lines;
  return e;
}

CollinearHypergraph line_census(std::int64_t a, std::int64_t d, int r, LineMode mode,
                                const EnumerationBudget& budget) {
  if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
  CollinearHypergraph h{a, d, r, mode, {}};
  enumerate_rich_lines(a, d, 2, mode, [&](const GridLine& l) { h.census[l.count] += 1; },
                       budget);
  return h;
}

Int count_collinear_tuples(std::int64_t a, std::int64_t d, int r, LineMode mode,
                           const EnumerationBudget& budget) {
  return line_census(a, d, r, mode, budget).edge_count();
}

Int axis_parallel_edge_count(std::int64_t a, std::int64_t d, int r) {
  return Int(d) * binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(r)) *
         pow_int(Int(a), static_cast<unsigned long>(d - 1));
}

BucketCensus bucket_line_census(std::int64_t a, std::int64_t d,
                                const EnumerationBudget& budget) {
  const CollinearHypergraph h = line_census(a, d, 2, LineMode::FullLine, budget);
  std::map<int, Int> by_bucket;
  for (const auto& [pts, lines] : h.census) {
    if (pts < 3) continue;  // buckets start at t = 1
    int t = 0;
    while ((std::int64_t(1) << (t + 1)) < pts) ++t;
    by_bucket[t] += lines;
  }
  BucketCensus out;
  out.premise_met = 100 * d <= static_cast<std::int64_t>(std::bit_width(
                                   static_cast<std::uint64_t>(a)) -
                               1);
  for (const auto& [t, lines] : by_bucket) {
    BucketCensus::Bucket b;
    b.t = t;
    b.lines = lines;
    const Rat two_t(Int(1) << t);
    b.reference_bound = Rat(pow_int(Int(2), static_cast<unsigned long>(d))) *
                        pow_rat(Rat(a) / two_t, d) * Rat(d) *
                        Rat(pow_int(Int(a), static_cast<unsigned long>(d))) / two_t;
    b.exceeds_reference = Rat(b.lines) > b.reference_bound;
    out.buckets.push_back(std::move(b));
  }
  return out;
}

DegreeProfile profile_from_census(const CollinearHypergraph& h) {
  const int r = h.uniformity;
  DegreeProfile p;
  p.uniformity = r;
  p.vertex_count = h.vertex_count();
  p.edge_count = h.edge_count();
  p.average_degree = p.edge_count == 0 ? Rat(0) : Rat(r) * Rat(p.edge_count) / Rat(p.vertex_count);
  // j >= 2 collinear points determine a unique line, so the maximum co-degree
  // is attained on a longest line: Delta_j = C(l_max - j, r - j).
  std::int64_t lmax = 0;
  for (const auto& [pts, lines] : h.census)
    if (lines > 0) lmax = std::max(lmax, pts);
  p.codegree.resize(static_cast<size_t>(r) - 1);
  for (int j = 2; j <= r; ++j) {
    Int dj = 0;
    if (lmax >= j && lmax >= r)
      dj = binomial(static_cast<unsigned long>(lmax - j), static_cast<unsigned long>(r - j));
    p.codegree[static_cast<size_t>(j) - 2] = dj;
  }
  return p;
}

DegreeProfile codegree_profile(std::int64_t a, std::int64_t d, int r, LineMode mode,
                               const EnumerationBudget& budget) {
  return profile_from_census(line_census(a, d, r, mode, budget));
}

Rat compute_delta(const DegreeProfile& profile, int r, const Rat& tau) {
  if (profile.average_degree == 0) throw std::invalid_argument("empty hypergraph");
  if (tau <= 0 || tau >= 1) throw std::invalid_argument("tau must be in (0,1)");
  Rat sum = 0;
  for (int j = 2; j <= r; ++j) {
    const Rat denom = profile.average_degree * pow_rat(tau, j - 1) *
                      Rat(pow_int(Int(2), static_cast<unsigned long>((j - 1) * (j - 2) / 2)));
    sum += Rat(profile.delta(j)) / denom;
  }
  return Rat(pow_int(Int(2), static_cast<unsigned long>(r * (r - 1) / 2 - 1))) * sum;
}

nlohmann::json hypergraph_to_json(const CollinearHypergraph& h,
                                  const DegreeProfile& profile) {
  nlohmann::json census = nlohmann::json::array();
  for (const auto& [pts, lines] : h.census)
    census.push_back({{"points", pts}, {"lines", lines.get_str()}});
  nlohmann::json delta = nlohmann::json::array();
  for (const auto& dj : profile.codegree) delta.push_back(dj.get_str());
  return {{"alphabet", h.alphabet},
          {"dimension", h.dimension},
          {"uniformity", h.uniformity},
          {"mode", h.mode == LineMode::FullLine ? "full-line" : "axis-parallel"},
          {"vertex_count", h.vertex_count().get_str()},
          {"edge_count", h.edge_count().get_str()},
          {"average_degree", rat_str(profile.average_degree)},
          {"census", census},
          {"delta", delta}};
}

nlohmann::json line_to_json(const GridLine& line) {
  return {{"base", line.base.coords}, {"dir", line.dir.delta}, {"count", line.count}};
}

}  // namespace gridgeom
