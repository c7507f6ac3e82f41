#include "gridgeom/analysis.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <stdexcept>

namespace gridgeom {

RichLineSet rich_lines(const std::vector<PlanarPoint>& s, int threshold) {
  if (threshold < 2) throw std::invalid_argument("threshold must be >= 2");
  RichLineSet out;
  out.threshold = threshold;
  std::map<PlanarLine, std::vector<int>> groups;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) throw std::invalid_argument("duplicate planar point");
      auto& g = groups[line_through(s[i], s[j])];
      g.push_back(static_cast<int>(i));
      g.push_back(static_cast<int>(j));
    }
  for (auto& [line, g] : groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (static_cast<int>(g.size()) >= threshold) out.lines.push_back({line, g});
  }
  return out;
}

namespace {

struct GpSearch {
  int n;
  const std::set<std::array<int, 3>>* edges;
  std::vector<int> chosen, best;
  std::int64_t nodes = 0;

  bool can_add(int v) const {
    for (size_t i = 0; i < chosen.size(); ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j) {
        std::array<int, 3> t{chosen[i], chosen[j], v};
        std::sort(t.begin(), t.end());
        if (edges->count(t)) return false;
      }
    return true;
  }

  void run(int idx) {
    ++nodes;
    if (chosen.size() + static_cast<size_t>(n - idx) <= best.size()) return;
    if (idx == n) {
      best = chosen;
      return;
    }
    if (can_add(idx)) {
      chosen.push_back(idx);
      run(idx + 1);
      chosen.pop_back();
    }
    run(idx + 1);
  }
};

std::vector<int> greedy_triple_free(int n, const std::set<std::array<int, 3>>& edges) {
  GpSearch s{n, &edges, {}, {}, 0};
  for (int v = 0; v < n; ++v)
    if (s.can_add(v)) s.chosen.push_back(v);
  return s.chosen;
}

int disjoint_triple_matching(int n, const std::set<std::array<int, 3>>& edges) {
  std::vector<char> used(static_cast<size_t>(n), 0);
  int m = 0;
  for (const auto& e : edges) {
    if (used[static_cast<size_t>(e[0])] || used[static_cast<size_t>(e[1])] ||
        used[static_cast<size_t>(e[2])])
      continue;
    used[static_cast<size_t>(e[0])] = used[static_cast<size_t>(e[1])] =
        used[static_cast<size_t>(e[2])] = 1;
    ++m;
  }
  return m;
}

}  // namespace

GeneralPositionReport max_general_position(const std::vector<PlanarPoint>& s,
                                           int exact_budget) {
  GeneralPositionReport rep;
  const int n = static_cast<int>(s.size());
  const auto edges = planar_collinear_triples(s);
  const auto greedy = greedy_triple_free(n, edges);
  rep.upper_bound = n - disjoint_triple_matching(n, edges);
  if (n <= exact_budget) {
    GpSearch search{n, &edges, {}, greedy, 0};
    search.run(0);
    rep.witness = search.best;
    rep.size = static_cast<int>(search.best.size());
    rep.lower_bound = rep.size;
    rep.upper_bound = rep.size;
    rep.optimal = true;
    rep.nodes = search.nodes;
  } else {
    rep.witness = greedy;
    rep.size = static_cast<int>(greedy.size());
    rep.lower_bound = rep.size;
    rep.optimal = rep.lower_bound == rep.upper_bound;
  }
  return rep;
}

namespace {

// ceil(eps * n), clamped up to 2: a line through fewer than 2 points is not a
// line of the arrangement
std::pair<int, bool> net_threshold(const Rat& eps, size_t n) {
  Rat raw = eps * static_cast<unsigned long>(n);
  Int t;
  mpz_cdiv_q(t.get_mpz_t(), raw.get_num().get_mpz_t(), raw.get_den().get_mpz_t());
  if (t < 2) return {2, true};
  if (t > static_cast<long>(n) + 1) t = static_cast<long>(n) + 1;
  return {static_cast<int>(t.get_si()), false};
}

}  // namespace

NetCheck check_eps_net(const std::vector<PlanarPoint>& s,
                       const std::vector<PlanarPoint>& t, const Rat& eps, bool weak) {
  NetCheck out;
  if (!weak) {
    for (const auto& p : t)
      if (std::find(s.begin(), s.end(), p) == s.end())
        throw std::invalid_argument("strong net must be a subset of S");
  }
  auto [thr, clamped] = net_threshold(eps, s.size());
  out.threshold = thr;
  out.clamped = clamped;
  const auto rich = rich_lines(s, thr);
  out.rich_count = static_cast<int>(rich.lines.size());
  out.verdict = true;
  for (size_t li = 0; li < rich.lines.size(); ++li) {
    bool hit = false;
    for (const auto& p : t)
      if (on_line(rich.lines[li].line, p)) {
        hit = true;
        break;
      }
    if (!hit) {
      out.verdict = false;
      out.failing_line = static_cast<int>(li);
      break;
    }
  }
  return out;
}

namespace {

constexpr size_t kMaxCoverLines = 256;
using CoverMask = std::bitset<kMaxCoverLines>;

struct CoverSearch {
  std::vector<CoverMask> cand;  // coverage per candidate
  CoverMask all;
  size_t num_lines = 0;
  std::vector<int> chosen, best;
  std::int64_t nodes = 0, max_nodes = 0;
  bool exhausted = true;

  void run(CoverMask covered) {
    if (++nodes > max_nodes) {
      exhausted = false;
      return;
    }
    if (covered == all) {
      best = chosen;
      return;
    }
    if (chosen.size() + 1 >= best.size()) return;
    // branch on the uncovered line with fewest candidates
    size_t pick = kMaxCoverLines;
    size_t fewest = SIZE_MAX;
    for (size_t l = 0; l < num_lines; ++l) {
      if (covered[l]) continue;
      size_t cnt = 0;
      for (const auto& m : cand)
        if (m[l]) ++cnt;
      if (cnt < fewest) {
        fewest = cnt;
        pick = l;
      }
    }
    if (fewest == 0) return;  // uncoverable line
    for (size_t ci = 0; ci < cand.size(); ++ci) {
      if (!cand[ci][pick]) continue;
      chosen.push_back(static_cast<int>(ci));
      run(covered | cand[ci]);
      chosen.pop_back();
    }
  }
};

}  // namespace

HittingSetResult min_hitting_set(const std::vector<PlanarPoint>& s, const Rat& eps,
                                 const HittingSetOptions& opt) {
  HittingSetResult out;
  auto [thr, clamped] = net_threshold(eps, s.size());
  out.threshold = thr;
  out.clamped = clamped;
  const auto rich = rich_lines(s, thr);
  out.rich_count = static_cast<int>(rich.lines.size());
  if (rich.lines.empty()) {
    out.optimal = true;
    return out;
  }
  if (rich.lines.size() > kMaxCoverLines) throw BudgetExceeded("too many rich lines");

  std::vector<NetCandidate> cands;
  for (size_t i = 0; i < s.size(); ++i) {
    NetCandidate c;
    c.kind = CandidateKind::SourcePoint;
    c.point = s[i];
    for (size_t l = 0; l < rich.lines.size(); ++l)
      if (std::binary_search(rich.lines[l].points.begin(), rich.lines[l].points.end(),
                             static_cast<int>(i)))
        c.covers.push_back(static_cast<int>(l));
    if (!c.covers.empty()) cands.push_back(std::move(c));
  }
  if (opt.weak) {
    for (size_t i = 0; i < rich.lines.size(); ++i)
      for (size_t j = i + 1; j < rich.lines.size(); ++j) {
        const auto& l1 = rich.lines[i].line;
        const auto& l2 = rich.lines[j].line;
        Int det = l1.a * l2.b - l2.a * l1.b;
        if (det == 0) continue;
        NetCandidate c;
        c.kind = CandidateKind::Intersection;
        c.point = PlanarPoint{Rat(l1.c * l2.b - l2.c * l1.b) / Rat(det),
                              Rat(l1.a * l2.c - l2.a * l1.c) / Rat(det)};
        for (size_t l = 0; l < rich.lines.size(); ++l)
          if (on_line(rich.lines[l].line, *c.point)) c.covers.push_back(static_cast<int>(l));
        cands.push_back(std::move(c));
      }
    if (opt.projective) {
      std::set<std::pair<Int, Int>> dirs;
      for (const auto& rl : rich.lines) dirs.insert({rl.line.a, rl.line.b});
      for (const auto& [a, b] : dirs) {
        NetCandidate c;
        c.kind = CandidateKind::Infinity;
        c.dir_a = a;
        c.dir_b = b;
        for (size_t l = 0; l < rich.lines.size(); ++l)
          if (rich.lines[l].line.a == a && rich.lines[l].line.b == b)
            c.covers.push_back(static_cast<int>(l));
        cands.push_back(std::move(c));
      }
    }
  }
  // one candidate per distinct coverage set
  std::set<std::vector<int>> seen;
  std::vector<NetCandidate> kept;
  for (auto& c : cands)
    if (seen.insert(c.covers).second) kept.push_back(std::move(c));

  CoverSearch search;
  search.num_lines = rich.lines.size();
  search.max_nodes = opt.max_nodes;
  for (size_t l = 0; l < search.num_lines; ++l) search.all.set(l);
  for (const auto& c : kept) {
    CoverMask m;
    for (int l : c.covers) m.set(static_cast<size_t>(l));
    search.cand.push_back(m);
  }
  // greedy start, also the fallback answer
  {
    CoverMask covered;
    std::vector<int> greedy;
    while (covered != search.all) {
      size_t bi = SIZE_MAX, gain = 0;
      for (size_t ci = 0; ci < search.cand.size(); ++ci) {
        const size_t g = (search.cand[ci] & ~covered).count();
        if (g > gain) {
          gain = g;
          bi = ci;
        }
      }
      if (bi == SIZE_MAX) throw std::runtime_error("uncoverable rich line");
      greedy.push_back(static_cast<int>(bi));
      covered |= search.cand[bi];
    }
    search.best = greedy;
    search.best.push_back(-1);  // sentinel so an equal-size exact answer wins
  }
  search.run(CoverMask{});
  if (!search.best.empty() && search.best.back() == -1) search.best.pop_back();

  out.nodes = search.nodes;
  out.budget_exceeded = !search.exhausted;
  out.optimal = search.exhausted;
  out.size = static_cast<int>(search.best.size());
  for (int ci : search.best) out.witness.push_back(kept[static_cast<size_t>(ci)]);
  out.upper_bound = out.size;
  out.lower_bound = out.optimal ? out.size : 1;
  return out;
}

SwitchReport switching_transform(const std::vector<PlanarPoint>& s,
                                 const std::vector<PlanarPoint>& grid_image,
                                 const std::vector<PlanarPoint>& net,
                                 const RichLineSet& rich, int t) {
  SwitchReport rep;
  std::vector<PlanarPoint> result;
  auto replace_by_lines = [&](const PlanarPoint& q) {
    for (const auto& rl : rich.lines)
      if (on_line(rl.line, q))
        result.push_back(s[static_cast<size_t>(rl.points.front())]);
  };
  for (const auto& q : net) {
    if (std::find(s.begin(), s.end(), q) != s.end()) {
      ++rep.ts;
      result.push_back(q);
    } else if (std::find(grid_image.begin(), grid_image.end(), q) != grid_image.end()) {
      ++rep.tw;
      replace_by_lines(q);
    } else {
      ++rep.tg;
      replace_by_lines(q);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  rep.strong_net = std::move(result);
  rep.bound = 2ll * rep.tg + static_cast<std::int64_t>(t) * rep.tw + rep.ts;
  rep.within_bound = static_cast<std::int64_t>(rep.strong_net.size()) <= rep.bound;
  rep.passes = true;
  for (const auto& rl : rich.lines) {
    bool hit = false;
    for (const auto& p : rep.strong_net)
      if (on_line(rl.line, p)) {
        hit = true;
        break;
      }
    if (!hit) rep.passes = false;
  }
  return rep;
}

namespace {

struct ColorSearch {
  int n;
  const std::vector<std::vector<int>>* edges;
  std::vector<std::vector<int>> vertex_edges;
  std::vector<int> colors;  // -1 unassigned
  std::int64_t nodes = 0, max_nodes = 0;
  bool out_of_budget = false;

  bool edge_state(int e, int& c0, int& c1, int& unassigned, int& last) const {
    c0 = c1 = unassigned = 0;
    last = -1;
    for (int v : (*edges)[static_cast<size_t>(e)]) {
      const int c = colors[static_cast<size_t>(v)];
      if (c == 0) ++c0;
      else if (c == 1) ++c1;
      else {
        ++unassigned;
        last = v;
      }
    }
    return true;
  }

  // returns false on conflict; fills the propagation trail
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t e = 0; e < edges->size(); ++e) {
        int c0, c1, un, last;
        edge_state(static_cast<int>(e), c0, c1, un, last);
        if (un == 0 && (c0 == 0 || c1 == 0)) return false;
        if (un == 1 && (c0 == 0 || c1 == 0)) {
          colors[static_cast<size_t>(last)] = c0 == 0 ? 0 : 1;
          trail.push_back(last);
          changed = true;
        }
      }
    }
    return true;
  }

  bool solve() {
    if (++nodes > max_nodes) {
      out_of_budget = true;
      return false;
    }
    std::vector<int> trail;
    if (!propagate(trail)) {
      for (int v : trail) colors[static_cast<size_t>(v)] = -1;
      return false;
    }
    int pick = -1;
    size_t deg = 0;
    for (int v = 0; v < n; ++v)
      if (colors[static_cast<size_t>(v)] == -1 &&
          (pick == -1 || vertex_edges[static_cast<size_t>(v)].size() > deg)) {
        pick = v;
        deg = vertex_edges[static_cast<size_t>(v)].size();
      }
    if (pick == -1) return true;
    for (int c = 0; c <= 1; ++c) {
      colors[static_cast<size_t>(pick)] = c;
      if (solve()) return true;
      colors[static_cast<size_t>(pick)] = -1;
      if (out_of_budget) break;
    }
    for (int v : trail) colors[static_cast<size_t>(v)] = -1;
    return false;
  }
};

}  // namespace

ColoringReport two_color_cover(int num_vertices, const std::vector<std::vector<int>>& edges,
                               std::int64_t max_nodes) {
  ColoringReport rep;
  for (const auto& e : edges) {
    for (int v : e)
      if (v < 0 || v >= num_vertices) throw std::invalid_argument("edge index out of range");
    if (e.size() < 2) {
      rep.sat = false;
      rep.note = "an edge with fewer than 2 vertices cannot see both colors";
      return rep;
    }
  }
  ColorSearch search;
  search.n = num_vertices;
  search.edges = &edges;
  search.vertex_edges.resize(static_cast<size_t>(num_vertices));
  for (size_t e = 0; e < edges.size(); ++e)
    for (int v : edges[e]) search.vertex_edges[static_cast<size_t>(v)].push_back(static_cast<int>(e));
  search.colors.assign(static_cast<size_t>(num_vertices), -1);
  search.max_nodes = max_nodes;
  rep.sat = search.solve();
  rep.nodes = search.nodes;
  rep.inconclusive = search.out_of_budget;
  if (rep.sat) {
    for (auto& c : search.colors)
      if (c == -1) c = 0;
    rep.colors.assign(search.colors.begin(), search.colors.end());
    // verify the witness line by line
    for (const auto& e : edges) {
      bool has0 = false, has1 = false;
      for (int v : e) (rep.colors[static_cast<size_t>(v)] == 0 ? has0 : has1) = true;
      if (!has0 || !has1) throw std::runtime_error("coloring witness failed verification");
    }
  } else if (!rep.inconclusive) {
    rep.note = "search exhausted";
  }
  return rep;
}

bool lll_check(const Int& big_t, int r) {
  if (big_t < 1 || r < 1) throw std::invalid_argument("need T, r >= 1");
  Rat rhs = Rat(pow_int(Int(2), static_cast<unsigned long>(r - 1)));
  Rat mult = Rat(big_t + 1);
  for (unsigned long n = 8;; n += 8) {
    Rat lower = 0;
    Int fact = 1;
    for (unsigned long i = 1; i <= n; ++i) fact *= i;
    // sum backwards off a common denominator n!
    Int num = 0, part = 1;
    for (unsigned long i = 0; i <= n; ++i) {
      num += fact / part;
      part *= (i + 1);
    }
    lower = Rat(num) / Rat(fact);
    Rat upper = lower + Rat(2) / Rat(fact * Int(static_cast<unsigned long>(n + 1)));
    if (upper * mult < rhs) return true;
    if (lower * mult >= rhs) return false;
  }
}

nlohmann::json rich_lines_to_json(const RichLineSet& r) {
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& rl : r.lines)
    lines.push_back({{"a", rl.line.a.get_str()},
                     {"b", rl.line.b.get_str()},
                     {"c", rl.line.c.get_str()},
                     {"points", rl.points}});
  return {{"threshold", r.threshold}, {"lines", lines}};
}

nlohmann::json net_check_to_json(const NetCheck& c) {
  nlohmann::json j{{"threshold", c.threshold},
                   {"clamped", c.clamped},
                   {"rich_count", c.rich_count},
                   {"verdict", c.verdict}};
  if (c.failing_line) j["failing_line"] = *c.failing_line;
  return j;
}

nlohmann::json hitting_set_to_json(const HittingSetResult& h) {
  nlohmann::json wit = nlohmann::json::array();
  for (const auto& c : h.witness) {
    nlohmann::json e;
    e["kind"] = c.kind == CandidateKind::SourcePoint ? "source"
                : c.kind == CandidateKind::Intersection ? "intersection"
                                                        : "infinity";
    if (c.point) e["point"] = planar_point_to_json(*c.point);
    else e["direction"] = {c.dir_a.get_str(), c.dir_b.get_str()};
    e["covers"] = c.covers;
    wit.push_back(e);
  }
  return {{"threshold", h.threshold}, {"clamped", h.clamped},
          {"rich_count", h.rich_count}, {"size", h.size},
          {"witness", wit}, {"optimal", h.optimal},
          {"nodes", h.nodes}, {"budget_exceeded", h.budget_exceeded}};
}

nlohmann::json coloring_to_json(const ColoringReport& c) {
  return {{"sat", c.sat},
          {"inconclusive", c.inconclusive},
          {"colors", c.colors},
          {"nodes", c.nodes},
          {"note", c.note}};
}

}  // namespace gridgeom
