#pragma once

// Naive reference implementations used only by the tests. Everything here is
// O(pairs) or O(triples) over explicit point lists, on purpose: these scans
// share no code with the library's line enumeration, so agreement is evidence.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gridgeom/exact.hpp"

namespace oracle {

using Pt = std::vector<std::int64_t>;

inline std::vector<Pt> all_points(std::int64_t a, std::int64_t d) {
  std::vector<Pt> out;
  Pt p(static_cast<size_t>(d), 1);
  while (true) {
    out.push_back(p);
    size_t i = static_cast<size_t>(d);
    while (i > 0) {
      --i;
      if (++p[i] <= a) break;
      p[i] = 1;
      if (i == 0) return out;
    }
  }
}

// Three points on one line: q-p and s-p are parallel integer vectors.
inline bool collinear(const Pt& p, const Pt& q, const Pt& s) {
  const size_t d = p.size();
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) {
      const std::int64_t ui = q[i] - p[i], uj = q[j] - p[j];
      const std::int64_t wi = s[i] - p[i], wj = s[j] - p[j];
      if (ui * wj != uj * wi) return false;
    }
  return true;
}

inline bool axis_pair(const Pt& p, const Pt& q) {
  int diff = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != q[i]) ++diff;
  return diff == 1;
}

// All r-subsets lying on a common line, as sorted index tuples into pts.
inline std::vector<std::vector<int>> brute_edges(const std::vector<Pt>& pts, int r,
                                                 bool axis) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> edges;
  std::vector<int> idx(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
  if (r > n) return edges;
  while (true) {
    bool ok = true;
    if (axis) {
      // all points must agree in every coordinate but one
      const Pt& p0 = pts[static_cast<size_t>(idx[0])];
      int vary = -1;
      for (int m = 1; m < r && ok; ++m) {
        const Pt& pm = pts[static_cast<size_t>(idx[static_cast<size_t>(m)])];
        for (size_t c = 0; c < p0.size(); ++c)
          if (pm[c] != p0[c]) {
            if (vary == -1) vary = static_cast<int>(c);
            if (static_cast<int>(c) != vary) ok = false;
          }
      }
    } else {
      for (int m = 2; m < r && ok; ++m)
        ok = collinear(pts[static_cast<size_t>(idx[0])], pts[static_cast<size_t>(idx[1])],
                       pts[static_cast<size_t>(idx[static_cast<size_t>(m)])]);
    }
    if (ok) edges.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < r; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  return edges;
}

// Maximal lines as point sets, deduplicated, full-line or axis mode.
inline std::set<std::set<Pt>> brute_lines(std::int64_t a, std::int64_t d,
                                          std::int64_t min_pts, bool axis) {
  const auto pts = all_points(a, d);
  std::set<std::set<Pt>> lines;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      if (axis && !axis_pair(pts[i], pts[j])) continue;
      std::set<Pt> line;
      for (const auto& s : pts)
        if (collinear(pts[i], pts[j], s) && (!axis || s == pts[i] || axis_pair(pts[i], s)))
          line.insert(s);
      if (static_cast<std::int64_t>(line.size()) >= min_pts) lines.insert(line);
    }
  return lines;
}

inline gridgeom::Int brute_tuple_count(std::int64_t a, std::int64_t d, int r, bool axis) {
  gridgeom::Int total = 0;
  for (const auto& line : brute_lines(a, d, 2, axis))
    total += gridgeom::binomial(gridgeom::Int(static_cast<long>(line.size())),
                                static_cast<unsigned long>(r));
  return total;
}

}  // namespace oracle
