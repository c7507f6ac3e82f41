#include "gridgeom/construction.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <map>

#include "gridgeom/containers.hpp"

namespace gridgeom {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::GeneralPosition34: return "gp-3and4";
    case Regime::EpsNet: return "eps-net";
    case Regime::WeakNet: return "weak-net";
    case Regime::CoverDecomp: return "cover-decomp";
  }
  return "?";
}

Regime regime_from_name(const std::string& s) {
  if (s == "gp-3and4") return Regime::GeneralPosition34;
  if (s == "eps-net") return Regime::EpsNet;
  if (s == "weak-net") return Regime::WeakNet;
  if (s == "cover-decomp") return Regime::CoverDecomp;
  throw std::invalid_argument("unknown regime: " + s);
}

namespace {

// floor(p * 2^64) saturated to "always" when p >= 1.
struct BernoulliThreshold {
  bool always = false;
  std::uint64_t threshold = 0;

  explicit BernoulliThreshold(const Rat& p) {
    if (p >= 1) {
      always = true;
      return;
    }
    if (p <= 0) return;
    Int scaled = (p.get_num() << 64) / p.get_den();
    threshold = 0;
    for (int limb = 1; limb >= 0; --limb) {
      threshold <<= 32;
      Int part = (scaled >> (32 * limb)) & Int(0xffffffffUL);
      threshold |= part.get_ui();
    }
  }

  bool sample(std::uint64_t u) const { return always || u < threshold; }
};

}  // namespace

bool StableRng::bernoulli(const Rat& p) {
  BernoulliThreshold t(p);
  return t.sample(next());
}

std::uint64_t StableRng::below(std::uint64_t n) {
  // rejection sampling, bias-free and stream-stable
  const std::uint64_t limit = n == 0 ? 0 : (~0ull / n) * n;
  std::uint64_t u;
  do {
    u = next();
  } while (u >= limit);
  return u % n;
}

std::vector<GridPoint> p_random_subset(std::int64_t a, std::int64_t d, const Rat& p,
                                       std::uint64_t seed, const EnumerationBudget& budget) {
  if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0,1]");
  std::int64_t total = 1;
  for (std::int64_t i = 0; i < d; ++i) {
    total *= a;
    if (total > budget.max_points) throw BudgetExceeded("instance too large");
  }
  StableRng rng(seed);
  BernoulliThreshold thr(p);
  std::vector<GridPoint> out;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const std::uint64_t u = rng.next();  // one draw per point, stream-stable
    if (thr.sample(u)) out.push_back(vertex_to_point(static_cast<int>(idx), a, d));
  }
  return out;
}

namespace {

bool is_axis_dir(const PrimitiveDirection& dir) {
  int nz = 0;
  for (auto c : dir.delta) {
    if (c != 0) {
      ++nz;
      if (c != 1) return false;
    }
  }
  return nz == 1;
}

// Groups the active points of s by the grid line through them.
std::map<GridLine, std::vector<int>> line_groups(const std::vector<GridPoint>& s,
                                                 const std::vector<char>& active,
                                                 std::int64_t a, LineMode mode) {
  std::map<GridLine, std::vector<int>> groups;
  for (size_t i = 0; i < s.size(); ++i) {
    if (!active[i]) continue;
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (!active[j]) continue;
      GridLine l = canonical_line(s[i], s[j], a);
      if (mode == LineMode::AxisParallel && !is_axis_dir(l.dir)) continue;
      auto& g = groups[l];
      if (g.empty() || g.back() != static_cast<int>(i)) {
        if (std::find(g.begin(), g.end(), static_cast<int>(i)) == g.end())
          g.push_back(static_cast<int>(i));
      }
      g.push_back(static_cast<int>(j));
    }
  }
  for (auto& [l, g] : groups) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
  }
  return groups;
}

}  // namespace

CleanedSet delete_excess_tuples(const std::vector<GridPoint>& s, std::int64_t a,
                                std::int64_t d, int max_on_line, LineMode mode) {
  if (max_on_line < 2) throw std::invalid_argument("max_on_line must be >= 2");
  std::vector<GridPoint> pts = s;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (const auto& p : pts)
    if (static_cast<std::int64_t>(p.coords.size()) != d || !in_grid(p, a))
      throw std::invalid_argument("point outside grid");

  CleanedSet out;
  std::vector<char> active(pts.size(), 1);
  while (true) {
    auto groups = line_groups(pts, active, a, mode);
    // first violating line in canonical order
    const std::vector<int>* violating = nullptr;
    for (const auto& [line, members] : groups) {
      if (static_cast<int>(members.size()) > max_on_line) {
        violating = &members;
        break;
      }
    }
    if (!violating) break;
    ++out.violations_processed;
    // remove the member lying on the most violating lines; ties by point order
    int best = -1;
    size_t best_count = 0;
    for (int m : *violating) {
      size_t cnt = 0;
      for (const auto& [line, members] : groups) {
        if (static_cast<int>(members.size()) > max_on_line &&
            std::find(members.begin(), members.end(), m) != members.end())
          ++cnt;
      }
      if (cnt > best_count) {
        best_count = cnt;
        best = m;
      }
    }
    active[static_cast<size_t>(best)] = 0;
    out.removed_excess.push_back(pts[static_cast<size_t>(best)]);
  }
  for (size_t i = 0; i < pts.size(); ++i)
    if (active[i]) out.surviving.push_back(pts[i]);

  // certificate: recompute from scratch
  std::vector<char> all(out.surviving.size(), 1);
  out.excess_certificate = true;
  for (const auto& [line, members] : line_groups(out.surviving, all, a, mode))
    if (static_cast<int>(members.size()) > max_on_line) out.excess_certificate = false;
  return out;
}

namespace {

struct AxisGrid {
  std::int64_t a, d, total;
  std::vector<char> member;  // by lex index

  explicit AxisGrid(const std::vector<GridPoint>& s, std::int64_t a_, std::int64_t d_)
      : a(a_), d(d_) {
    total = 1;
    for (std::int64_t i = 0; i < d; ++i) total *= a;
    member.assign(static_cast<size_t>(total), 0);
    for (const auto& p : s) member[static_cast<size_t>(point_to_vertex(p, a))] = 1;
  }

  // points of S on the axis line through lex index g along `axis`
  std::vector<int> line_members(std::int64_t g, std::int64_t axis) const {
    std::int64_t stride = 1;
    for (std::int64_t i = d - 1; i > axis; --i) stride *= a;
    const std::int64_t coord = (g / stride) % a;  // 0-based
    const std::int64_t start = g - coord * stride;
    std::vector<int> out;
    for (std::int64_t c = 0; c < a; ++c) {
      const std::int64_t idx = start + c * stride;
      if (member[static_cast<size_t>(idx)]) out.push_back(static_cast<int>(idx));
    }
    return out;
  }
};

}  // namespace

CleanedSet star_sparsen(const std::vector<GridPoint>& s, std::int64_t a, std::int64_t d,
                        int r, int t, std::uint64_t /*seed*/) {
  if (r < 1 || t < 1) throw std::invalid_argument("need r >= 1 and t >= 1");
  CleanedSet out;
  AxisGrid grid(s, a, d);

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::int64_t g = 0; g < grid.total && !removed; ++g) {
      if (grid.member[static_cast<size_t>(g)]) continue;  // star centers are non-random points
      std::vector<std::vector<int>> full;
      for (std::int64_t axis = 0; axis < d; ++axis) {
        auto mem = grid.line_members(g, axis);
        if (static_cast<int>(mem.size()) == r) full.push_back(std::move(mem));
      }
      if (static_cast<int>(full.size()) < t) continue;
      // star found: remove the least point among the first t lines
      int victim = INT_MAX;
      for (int li = 0; li < t; ++li)
        for (int v : full[static_cast<size_t>(li)]) victim = std::min(victim, v);
      grid.member[static_cast<size_t>(victim)] = 0;
      out.removed_star.push_back(vertex_to_point(victim, a, d));
      removed = true;
    }
  }

  for (std::int64_t g = 0; g < grid.total; ++g)
    if (grid.member[static_cast<size_t>(g)])
      out.surviving.push_back(vertex_to_point(static_cast<int>(g), a, d));

  // certificate: exhaustive star scan
  out.star_certificate = true;
  for (std::int64_t g = 0; g < grid.total; ++g) {
    if (grid.member[static_cast<size_t>(g)]) continue;
    int full = 0;
    for (std::int64_t axis = 0; axis < d; ++axis)
      if (static_cast<int>(grid.line_members(g, axis).size()) == r) ++full;
    if (full >= t) out.star_certificate = false;
  }
  return out;
}

CleanedSet drop_busy_points(const std::vector<GridPoint>& s, std::int64_t a,
                            std::int64_t d, int r, std::int64_t max_lines) {
  CleanedSet out;
  AxisGrid grid(s, a, d);
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::int64_t g = 0; g < grid.total && !removed; ++g) {
      if (!grid.member[static_cast<size_t>(g)]) continue;
      std::int64_t busy = 0;
      for (std::int64_t axis = 0; axis < d; ++axis)
        if (static_cast<int>(grid.line_members(g, axis).size()) >= r) ++busy;
      if (busy > max_lines) {
        grid.member[static_cast<size_t>(g)] = 0;
        out.removed_busy.push_back(vertex_to_point(static_cast<int>(g), a, d));
        removed = true;
      }
    }
  }
  for (std::int64_t g = 0; g < grid.total; ++g)
    if (grid.member[static_cast<size_t>(g)])
      out.surviving.push_back(vertex_to_point(static_cast<int>(g), a, d));
  out.excess_certificate = true;
  out.star_certificate = true;
  return out;
}

ConstructionConfig derive_params(Regime regime, std::int64_t alphabet,
                                 std::int64_t dimension, int r, std::optional<Rat> gamma,
                                 std::optional<Rat> f) {
  ConstructionConfig cfg;
  cfg.regime = regime;
  cfg.alphabet = alphabet;
  cfg.dimension = dimension;
  cfg.r = r;
  cfg.gamma = gamma;
  cfg.f = f;

  const double a = static_cast<double>(alphabet);
  const double dd = static_cast<double>(dimension);
  auto rat_from_double = [](double x) {
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
  };

  switch (regime) {
    case Regime::GeneralPosition34: {
      // p = 1 / (n sqrt(log2 n)) on [n]^3
      const double p = 1.0 / (a * std::sqrt(std::log2(a)));
      cfg.p = rat_from_double(p);
      cfg.full_scale_values = {{"p_formula", "1/(n log^{1/2} n)"}, {"p", p},
                          {"tau_formula", "n^{s-4/3}"},
                          {"eps_formula", "n^{s-1/3+f/2}"}};
      break;
    }
    case Regime::EpsNet: {
      cfg.p = Rat(r, 20 * alphabet);
      cfg.p.canonicalize();
      const double tau = std::pow(a, -1.0 - 0.9 / (r - 1));
      Rat eps = Rat(1) / Rat(pow_int(Int(10), static_cast<unsigned long>(r) *
                                                  static_cast<unsigned long>(r)));
      cfg.full_scale_values = {{"p_formula", "r/(20n)"},
                          {"p", rat_str(cfg.p)},
                          {"tau_formula", "n^{-1-0.9/(r-1)}"},
                          {"tau", tau},
                          {"eps_formula", "10^{-r^2}"},
                          {"eps", rat_str(eps)}};
      break;
    }
    case Regime::WeakNet: {
      // full scale: k = 2^{r^4}, n = k^r -- astronomically large
      const double log2_k = std::pow(static_cast<double>(r), 4);
      const double log2_n = log2_k * r;
      const double log2_p = 4.0 * r * std::log2(static_cast<double>(r)) +
                            log2_n / (2.0 * r * r) - log2_k - log2_n / (r - 1);
      cfg.full_scale_infeasible = true;
      cfg.full_scale_values = {
          {"k_formula", "2^{r^4}"},
          {"log2_k", log2_k},
          {"n_formula", "k^r"},
          {"log2_n", log2_n},
          {"p_formula", "r^{4r} n^{1/2r^2} / (k n^{1/(r-1)})"},
          {"log2_p", log2_p},
          {"tau_formula", "r 2^r / (k n^{1/(r-1)})"},
          {"eps_formula", "10^{-(r+1)}"},
          {"r_exponent_note",
           "the parameter list prints both r = (log n)^{1/5} and (log n)^{1/4}; "
           "1/4 is used here and the discrepancy is recorded"},
          {"r_exponent_used", 0.25}};
      // desk-scale p from the same formula at the given (alphabet, dimension)
      const double p = std::pow(static_cast<double>(r), 4.0 * r) *
                       std::pow(dd, 1.0 / (2.0 * r * r)) /
                       (a * std::pow(dd, 1.0 / (r - 1)));
      cfg.p = rat_from_double(std::clamp(p, 0.0, 1.0));
      cfg.t = std::max(1, static_cast<int>(std::llround(std::sqrt(r))));
      break;
    }
    case Regime::CoverDecomp: {
      const Rat g = gamma.value_or(Rat(1, 2));
      const double log2_n = std::pow(static_cast<double>(r), 4);
      cfg.full_scale_infeasible = true;
      Rat eps = pow_rat(g, r) / 2;
      cfg.full_scale_values = {
          {"n_formula", "2^{r^4}"},
          {"log2_n", log2_n},
          {"eps_formula", "0.5 gamma^r"},
          {"eps", rat_str(eps)},
          {"tau_formula", "r 2^r / n^{1+1/(r-1)}"},
          {"p_formula", "r^{4r} / n^{1+1/(r-1)}"},
          {"m_formula", "10 gamma p n^n"},
          {"busy_threshold_formula", "r^{5r^2-1}"}};
      const double p = std::pow(static_cast<double>(r), 4.0 * r) /
                       std::pow(dd, 1.0 + 1.0 / (r - 1));
      cfg.p = rat_from_double(std::clamp(p, 0.0, 1.0));
      cfg.t = std::max(1, static_cast<int>(std::llround(std::sqrt(r))));
      break;
    }
  }
  if (cfg.p <= 0) cfg.p = Rat(1, 100);
  if (cfg.p > 1) cfg.p = 1;
  return cfg;
}

FirstMomentReport first_moment_check(double container_count_log2, double container_size,
                                     double m, const Rat& p) {
  if (container_count_log2 < 0 || container_size <= 0 || m <= 0)
    throw std::invalid_argument("inputs must be positive");
  FirstMomentReport rep;
  rep.note = "binomial bounded by the Stirling form C(a,b) <= (e a / b)^b";
  if (m > container_size) {
    rep.vacuous = true;
    rep.log2_bound = -std::numeric_limits<double>::infinity();
    rep.bound_below_one = true;
    return rep;
  }
  const double log2p =
      p <= 0 ? -std::numeric_limits<double>::infinity() : std::log2(to_double(p));
  rep.log2_bound = container_count_log2 +
                   m * std::log2(std::exp(1.0) * container_size / m) + m * log2p;
  rep.bound_below_one = rep.log2_bound < 0;
  return rep;
}

nlohmann::json config_to_json(const ConstructionConfig& c) {
  nlohmann::json j{{"regime", regime_name(c.regime)},
                   {"alphabet", c.alphabet},
                   {"dimension", c.dimension},
                   {"r", c.r},
                   {"p", rat_str(c.p)},
                   {"seed", c.seed},
                   {"full_scale_infeasible", c.full_scale_infeasible},
                   {"full_scale_values", c.full_scale_values}};
  if (c.f) j["f"] = rat_str(*c.f);
  if (c.gamma) j["gamma"] = rat_str(*c.gamma);
  if (c.t) j["t"] = *c.t;
  return j;
}

nlohmann::json cleaned_to_json(const CleanedSet& c) {
  auto pts = [](const std::vector<GridPoint>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : v) arr.push_back(p.coords);
    return arr;
  };
  return {{"surviving", pts(c.surviving)},
          {"removed_excess", pts(c.removed_excess)},
          {"removed_star", pts(c.removed_star)},
          {"removed_busy", pts(c.removed_busy)},
          {"excess_certificate", c.excess_certificate},
          {"star_certificate", c.star_certificate},
          {"violations_processed", c.violations_processed}};
}

}  // namespace gridgeom
