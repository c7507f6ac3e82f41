#include "gridgeom/projection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gridgeom/construction.hpp"

namespace gridgeom {

PlanarLine line_through(const PlanarPoint& p, const PlanarPoint& q) {
  if (p == q) throw std::invalid_argument("degenerate pair");
  Rat ar = q.y - p.y;
  Rat br = p.x - q.x;
  Rat cr = ar * p.x + br * p.y;
  Int l = ar.get_den();
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), br.get_den().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), cr.get_den().get_mpz_t());
  Int a = Rat(ar * l).get_num();
  Int b = Rat(br * l).get_num();
  Int c = Rat(cr * l).get_num();
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

bool on_line(const PlanarLine& l, const PlanarPoint& p) {
  return Rat(l.a) * p.x + Rat(l.b) * p.y == Rat(l.c);
}

std::set<std::array<int, 3>> planar_collinear_triples(const std::vector<PlanarPoint>& pts) {
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("duplicate planar point");
  std::map<PlanarLine, std::vector<int>> groups;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      auto& g = groups[line_through(pts[i], pts[j])];
      g.push_back(static_cast<int>(i));
      g.push_back(static_cast<int>(j));
    }
  std::set<std::array<int, 3>> out;
  for (auto& [line, g] : groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) out.insert({g[i], g[j], g[k]});
  }
  return out;
}

std::vector<Int> lift_products(const GridPoint& p) {
  const int k = static_cast<int>(p.coords.size());
  if (k < 2) throw std::invalid_argument("need dimension >= 2");
  for (auto c : p.coords)
    if (c == 0) throw std::invalid_argument("zero coordinate");
  std::vector<Int> out;
  for (int size = 1; size <= k; ++size) {
    // index combinations of the given size, lexicographic
    std::vector<int> combo(static_cast<size_t>(size));
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
      Int prod = 1;
      for (int idx : combo) prod *= p.coords[static_cast<size_t>(idx)];
      out.push_back(prod);
      int pos = size - 1;
      while (pos >= 0 && combo[static_cast<size_t>(pos)] == k - size + pos) --pos;
      if (pos < 0) break;
      ++combo[static_cast<size_t>(pos)];
      for (int q = pos + 1; q < size; ++q)
        combo[static_cast<size_t>(q)] = combo[static_cast<size_t>(q - 1)] + 1;
    }
  }
  return out;
}

namespace {

std::int64_t floor_div_ll(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

// canonical (direction, anchor) key for the affine line through two distinct
// integer points
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> affine_line_key(
    const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& q) {
  const size_t d = p.size();
  std::vector<std::int64_t> dir(d);
  std::int64_t g = 0;
  for (size_t i = 0; i < d; ++i) {
    dir[i] = q[i] - p[i];
    g = std::gcd(g, dir[i] < 0 ? -dir[i] : dir[i]);
  }
  if (g == 0) throw std::invalid_argument("degenerate pair");
  size_t i0 = 0;
  while (dir[i0] == 0) ++i0;
  const std::int64_t sign = dir[i0] > 0 ? 1 : -1;
  for (auto& c : dir) c = sign * c / g;
  i0 = 0;
  while (dir[i0] == 0) ++i0;
  const std::int64_t t = floor_div_ll(p[i0], dir[i0]);
  std::vector<std::int64_t> anchor(d);
  for (size_t i = 0; i < d; ++i) anchor[i] = p[i] - t * dir[i];
  return {std::move(dir), std::move(anchor)};
}

std::set<std::array<int, 3>> triples_from_groups(
    std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>,
             std::vector<int>>& groups) {
  std::set<std::array<int, 3>> out;
  for (auto& [key, g] : groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) out.insert({g[i], g[j], g[k]});
  }
  return out;
}

}  // namespace

std::set<std::array<int, 3>> source_collinear_triples(const std::vector<GridPoint>& s,
                                                      ProjectionMode mode) {
  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>,
           std::vector<int>>
      groups;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (mode == ProjectionMode::AxisOnly) {
        int diff = 0;
        for (size_t c = 0; c < s[i].coords.size(); ++c)
          if (s[i].coords[c] != s[j].coords[c]) ++diff;
        if (diff != 1) continue;
      }
      auto& g = groups[affine_line_key(s[i].coords, s[j].coords)];
      g.push_back(static_cast<int>(i));
      g.push_back(static_cast<int>(j));
    }
  return triples_from_groups(groups);
}

PlanarImage project_generic(const std::vector<GridPoint>& s, ProjectionMode mode,
                            std::uint64_t seed, int retry_cap) {
  if (s.empty()) return {};
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) throw std::invalid_argument("duplicate input point");

  // axis-only collinearities survive the product lift; everything else is
  // generically broken by it
  std::vector<std::vector<Int>> work;
  work.reserve(s.size());
  for (const auto& p : s) {
    if (mode == ProjectionMode::AxisOnly) {
      work.push_back(lift_products(p));
    } else {
      std::vector<Int> v;
      for (auto c : p.coords) v.emplace_back(c);
      work.push_back(std::move(v));
    }
  }
  const size_t dim = work[0].size();
  const auto designated = source_collinear_triples(s, mode);

  std::uint64_t range = 1ull << 32;
  std::uint64_t m6 = 1;
  for (int i = 0; i < 6; ++i) m6 *= s.size();
  range = std::max(range, m6);

  StableRng rng(seed);
  std::array<int, 3> offender{-1, -1, -1};
  for (int attempt = 1; attempt <= retry_cap; ++attempt) {
    PlanarImage img;
    for (size_t i = 0; i < dim; ++i) {
      img.coeffs_x.emplace_back(static_cast<unsigned long>(rng.below(range) + 1));
      img.coeffs_y.emplace_back(static_cast<unsigned long>(rng.below(range) + 1));
    }
    for (const auto& w : work) {
      Int x = 0, y = 0;
      for (size_t i = 0; i < dim; ++i) {
        x += img.coeffs_x[i] * w[i];
        y += img.coeffs_y[i] * w[i];
      }
      img.points.push_back({Rat(x), Rat(y)});
    }
    std::set<PlanarPoint> distinct(img.points.begin(), img.points.end());
    if (distinct.size() != img.points.size()) continue;
    const auto image_triples = planar_collinear_triples(img.points);
    if (image_triples == designated) {
      img.cert.preserved = static_cast<std::int64_t>(designated.size());
      img.cert.created = 0;
      img.cert.attempts = attempt;
      return img;
    }
    for (const auto& t : image_triples)
      if (!designated.count(t)) {
        offender = t;
        break;
      }
  }
  throw std::runtime_error("projection retry cap exhausted; offending triple indices " +
                           std::to_string(offender[0]) + "," +
                           std::to_string(offender[1]) + "," +
                           std::to_string(offender[2]));
}

namespace {

std::vector<std::vector<Int>> product_points(const std::vector<std::vector<Int>>& alph) {
  const size_t d = alph.size();
  std::vector<std::vector<Int>> pts;
  std::vector<size_t> idx(d, 0);
  while (true) {
    std::vector<Int> p(d);
    for (size_t i = 0; i < d; ++i) p[i] = alph[i][idx[i]];
    pts.push_back(std::move(p));
    size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < alph[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return pts;
    }
  }
}

bool collinear_int(const std::vector<Int>& p, const std::vector<Int>& q,
                   const std::vector<Int>& r) {
  const size_t d = p.size();
  for (size_t u = 0; u < d; ++u)
    for (size_t v = u + 1; v < d; ++v)
      if ((q[u] - p[u]) * (r[v] - p[v]) != (q[v] - p[v]) * (r[u] - p[u])) return false;
  return true;
}

bool axis_parallel_triple(const std::vector<Int>& p, const std::vector<Int>& q,
                          const std::vector<Int>& r) {
  int diff = 0;
  for (size_t c = 0; c < p.size(); ++c)
    if (!(p[c] == q[c] && q[c] == r[c])) ++diff;
  return diff == 1;
}

}  // namespace

std::vector<std::array<int, 3>> product_grid_violations(
    const std::vector<std::vector<Int>>& alphabets, std::size_t max_report) {
  const auto pts = product_points(alphabets);
  if (pts.size() > 512) throw BudgetExceeded("product grid too large to verify");
  std::vector<std::array<int, 3>> out;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n && out.size() < max_report; ++i)
    for (int j = i + 1; j < n && out.size() < max_report; ++j)
      for (int k = j + 1; k < n && out.size() < max_report; ++k)
        if (collinear_int(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)],
                          pts[static_cast<size_t>(k)]) &&
            !axis_parallel_triple(pts[static_cast<size_t>(i)], pts[static_cast<size_t>(j)],
                                  pts[static_cast<size_t>(k)]))
          out.push_back({i, j, k});
  return out;
}

ProductGrid generic_product_grid(std::int64_t a, std::int64_t d, std::uint64_t seed,
                                 int retry_cap) {
  if (a < 1 || d < 1) throw std::invalid_argument("need a >= 1 and d >= 1");
  std::uint64_t total = 1;
  for (std::int64_t i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(a);
  if (total > 512) throw BudgetExceeded("product grid too large to verify");
  std::uint64_t range = 1ull << 32;
  std::uint64_t t6 = 1;
  for (int i = 0; i < 6; ++i) t6 *= total;
  range = std::max(range, t6);

  StableRng rng(seed);
  for (int attempt = 1; attempt <= retry_cap; ++attempt) {
    ProductGrid grid;
    grid.attempts = attempt;
    for (std::int64_t axis = 0; axis < d; ++axis) {
      std::vector<Int> alph;
      for (std::int64_t i = 0; i < a; ++i)
        alph.emplace_back(static_cast<unsigned long>(rng.below(range) + 1));
      std::sort(alph.begin(), alph.end());
      grid.alphabets.push_back(std::move(alph));
    }
    bool injective = true;
    for (const auto& alph : grid.alphabets)
      if (std::adjacent_find(alph.begin(), alph.end()) != alph.end()) injective = false;
    if (!injective) continue;
    if (product_grid_violations(grid.alphabets).empty()) return grid;
  }
  throw std::runtime_error("product grid retry cap exhausted");
}

bool incident(const PlanarPoint& p, const DualLine& l) {
  if (l.vertical) return p.x == l.c;
  return p.y == l.m * p.x + l.c;
}

std::vector<DualLine> dualize(const std::vector<PlanarPoint>& pts) {
  std::vector<DualLine> out;
  for (const auto& p : pts) out.push_back({false, p.x, -p.y});
  return out;
}

std::vector<PlanarPoint> dualize_inverse(const std::vector<DualLine>& lines) {
  std::vector<PlanarPoint> out;
  for (const auto& l : lines) {
    if (l.vertical) throw std::invalid_argument("outside duality chart");
    out.push_back({l.m, -l.c});
  }
  return out;
}

nlohmann::json planar_point_to_json(const PlanarPoint& p) {
  return {{"x", rat_str(p.x)}, {"y", rat_str(p.y)}};
}

nlohmann::json planar_image_to_json(const PlanarImage& img) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : img.points) pts.push_back(planar_point_to_json(p));
  return {{"points", pts},
          {"certificate",
           {{"preserved", img.cert.preserved},
            {"created", img.cert.created},
            {"attempts", img.cert.attempts}}}};
}

}  // namespace gridgeom
