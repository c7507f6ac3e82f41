#include "gridgeom/containers.hpp"

#include <algorithm>
#include <cmath>

#include "gridgeom/report.hpp"

namespace gridgeom {

void Hypergraph::validate() const {
  if (r < 2) throw std::invalid_argument("uniformity must be >= 2");
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != r)
      throw std::invalid_argument("non-uniform edge list rejected");
    if (!std::is_sorted(e.begin(), e.end()) ||
        std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge vertices must be sorted and distinct");
    for (int v : e)
      if (v < 0 || v >= num_vertices) throw std::invalid_argument("edge vertex out of range");
  }
}

GridPoint vertex_to_point(int index, std::int64_t a, std::int64_t d) {
  std::vector<std::int64_t> c(static_cast<size_t>(d));
  for (std::int64_t i = d - 1; i >= 0; --i) {
    c[static_cast<size_t>(i)] = index % a + 1;
    index = static_cast<int>(index / a);
  }
  return {std::move(c)};
}

int point_to_vertex(const GridPoint& p, std::int64_t a) {
  std::int64_t idx = 0;
  for (auto c : p.coords) idx = idx * a + (c - 1);
  return static_cast<int>(idx);
}

Hypergraph grid_hypergraph_instance(std::int64_t a, std::int64_t d, int r, LineMode mode,
                                    const EnumerationBudget& budget) {
  Hypergraph h;
  h.r = r;
  std::int64_t n = 1;
  for (std::int64_t i = 0; i < d; ++i) n *= a;
  h.num_vertices = static_cast<int>(n);
  enumerate_rich_lines(a, d, r, mode, [&](const GridLine& line) {
    // all r-subsets of the points on this line
    std::vector<int> pts;
    GridPoint cur = line.base;
    for (std::int64_t j = 0; j < line.count; ++j) {
      pts.push_back(point_to_vertex(cur, a));
      for (size_t i = 0; i < cur.coords.size(); ++i) cur.coords[i] += line.dir.delta[i];
    }
    std::sort(pts.begin(), pts.end());
    std::vector<int> comb(static_cast<size_t>(r));
    std::vector<int> idx(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i;
    const int m = static_cast<int>(pts.size());
    while (true) {
      for (int i = 0; i < r; ++i) comb[static_cast<size_t>(i)] = pts[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      h.edges.push_back(comb);
      int i = r - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == m - r + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }, budget);
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

HypothesisReport check_hypotheses(const DegreeProfile& profile, const ContainerParams& params) {
  if (profile.average_degree == 0) throw std::invalid_argument("empty hypergraph");
  const int r = params.r;
  HypothesisReport rep;
  rep.tau_threshold = Rat(1) / (Rat(200) * Rat(r) * Rat(factorial(static_cast<unsigned long>(r))) *
                                Rat(factorial(static_cast<unsigned long>(r))));
  rep.tau_condition = params.tau < rep.tau_threshold;
  rep.delta_value = compute_delta(profile, r, params.tau);
  rep.delta_threshold = params.eps / (Rat(12) * Rat(factorial(static_cast<unsigned long>(r))));
  rep.delta_condition = rep.delta_value <= rep.delta_threshold;
  const double fact = to_double(Rat(factorial(static_cast<unsigned long>(r))));
  rep.c_constant = 1000.0 * r * fact * fact * fact;
  const double N = to_double(Rat(profile.vertex_count));
  rep.count_budget_log2 = rep.c_constant * N * to_double(params.tau) *
                          std::log2(1.0 / to_double(params.eps)) *
                          std::log2(1.0 / to_double(params.tau));
  return rep;
}

namespace {

std::string hypergraph_fingerprint(const Hypergraph& h) {
  std::string bytes;
  auto push = [&](std::int64_t v) {
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  };
  push(h.r);
  push(h.num_vertices);
  for (const auto& e : h.edges)
    for (int v : e) push(v);
  return hash_hex(stable_hash(bytes));
}

// Max-degree branch-and-prune container search. Branches a vertex in or out
// of the fingerprint; forced-in sets that complete an edge are pruned, and an
// edge missing a single vertex forces that vertex out of the candidate pool.
class Scythe {
 public:
  Scythe(const Hypergraph& h, const Rat& budget, std::uint64_t max_nodes)
      : h_(h), budget_(budget), max_nodes_(max_nodes) {
    status_.assign(static_cast<size_t>(h.num_vertices), 0);
    edge_out_.assign(h.edges.size(), 0);
    edge_f_.assign(h.edges.size(), 0);
    vert_edges_.resize(static_cast<size_t>(h.num_vertices));
    for (size_t e = 0; e < h.edges.size(); ++e)
      for (int v : h.edges[e]) vert_edges_[static_cast<size_t>(v)].push_back(static_cast<int>(e));
    spanned_ = static_cast<std::int64_t>(h.edges.size());
  }

  void run() { rec(); }

  std::vector<std::vector<int>> containers;
  std::vector<std::vector<int>> fingerprints;

 private:
  enum : char { kCandidate = 0, kForcedIn = 1, kOut = 2 };

  void remove_from_pool(int v, std::vector<int>& undo) {
    status_[static_cast<size_t>(v)] = kOut;
    for (int e : vert_edges_[static_cast<size_t>(v)]) {
      if (edge_out_[static_cast<size_t>(e)]++ == 0) --spanned_;
    }
    undo.push_back(v);
  }

  void undo_removals(const std::vector<int>& undo) {
    for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
      status_[static_cast<size_t>(*it)] = kCandidate;
      for (int e : vert_edges_[static_cast<size_t>(*it)])
        if (--edge_out_[static_cast<size_t>(e)] == 0) ++spanned_;
    }
  }

  void rec() {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("container search exceeded node budget");
    if (Rat(spanned_) <= budget_) {
      emit();
      return;
    }
    // Max live-degree candidate, ties by index.
    int best = -1, best_deg = -1;
    for (int v = 0; v < h_.num_vertices; ++v) {
      if (status_[static_cast<size_t>(v)] != kCandidate) continue;
      int deg = 0;
      for (int e : vert_edges_[static_cast<size_t>(v)])
        if (edge_out_[static_cast<size_t>(e)] == 0) ++deg;
      if (deg > best_deg) {
        best_deg = deg;
        best = v;
      }
    }
    if (best < 0) return;  // no candidates; spanned edges all forced-in (pruned earlier)

    // OUT branch.
    {
      std::vector<int> undo;
      remove_from_pool(best, undo);
      rec();
      undo_removals(undo);
    }

    // IN branch with unit propagation.
    {
      status_[static_cast<size_t>(best)] = kForcedIn;
      fp_.push_back(best);
      for (int e : vert_edges_[static_cast<size_t>(best)]) ++edge_f_[static_cast<size_t>(e)];
      std::vector<int> undo;
      bool dead = false;
      bool changed = true;
      while (changed && !dead) {
        changed = false;
        for (size_t e = 0; e < h_.edges.size(); ++e) {
          if (edge_out_[e] != 0) continue;
          if (edge_f_[e] == h_.r) {
            dead = true;  // fingerprint contains a full edge
            break;
          }
          if (edge_f_[e] == h_.r - 1) {
            for (int v : h_.edges[e]) {
              if (status_[static_cast<size_t>(v)] == kCandidate) {
                remove_from_pool(v, undo);
                changed = true;
                break;
              }
            }
          }
        }
      }
      if (!dead) rec();
      undo_removals(undo);
      for (int e : vert_edges_[static_cast<size_t>(best)]) --edge_f_[static_cast<size_t>(e)];
      fp_.pop_back();
      status_[static_cast<size_t>(best)] = kCandidate;
    }
  }

  void emit() {
    std::vector<int> c;
    for (int v = 0; v < h_.num_vertices; ++v)
      if (status_[static_cast<size_t>(v)] != kOut) c.push_back(v);
    containers.push_back(std::move(c));
    std::vector<int> fp = fp_;
    std::sort(fp.begin(), fp.end());
    fingerprints.push_back(std::move(fp));
  }

  const Hypergraph& h_;
  Rat budget_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::vector<char> status_;
  std::vector<int> edge_out_;
  std::vector<int> edge_f_;
  std::vector<std::vector<int>> vert_edges_;
  std::int64_t spanned_ = 0;
  std::vector<int> fp_;
};

Int count_spanned(const Hypergraph& h, const std::vector<int>& container) {
  std::vector<char> in(static_cast<size_t>(h.num_vertices), 0);
  for (int v : container) in[static_cast<size_t>(v)] = 1;
  long c = 0;
  for (const auto& e : h.edges) {
    bool inside = true;
    for (int v : e)
      if (!in[static_cast<size_t>(v)]) {
        inside = false;
        break;
      }
    if (inside) ++c;
  }
  return Int(c);
}

}  // namespace

ContainerFamily build_containers(const Hypergraph& h, const Rat& eps,
                                 const BuildOptions& opts) {
  h.validate();
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  ContainerFamily fam;
  fam.eps = eps;
  fam.parent_edge_count = h.edge_count();
  fam.hypergraph_hash = hypergraph_fingerprint(h);
  const Rat budget = eps * Rat(fam.parent_edge_count);

  Scythe s(h, budget, opts.max_nodes);
  s.run();

  // Canonical order + dedupe (keyed by container).
  std::vector<size_t> order(s.containers.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return s.containers[a] < s.containers[b];
  });
  std::vector<std::vector<int>> conts, fps;
  for (size_t i : order) {
    if (!conts.empty() && conts.back() == s.containers[i]) continue;
    conts.push_back(s.containers[i]);
    fps.push_back(s.fingerprints[i]);
  }

  if (opts.drop_subset_containers && conts.size() <= 20'000) {
    std::vector<char> drop(conts.size(), 0);
    for (size_t i = 0; i < conts.size(); ++i) {
      if (drop[i]) continue;
      for (size_t j = 0; j < conts.size(); ++j) {
        if (i == j || drop[j]) continue;
        if (conts[i].size() <= conts[j].size() &&
            std::includes(conts[j].begin(), conts[j].end(), conts[i].begin(), conts[i].end()) &&
            (conts[i].size() < conts[j].size() || i > j))
          drop[i] = 1;
      }
    }
    std::vector<std::vector<int>> keep_c, keep_f;
    for (size_t i = 0; i < conts.size(); ++i)
      if (!drop[i]) {
        keep_c.push_back(std::move(conts[i]));
        keep_f.push_back(std::move(fps[i]));
      }
    conts = std::move(keep_c);
    fps = std::move(keep_f);
  }

  fam.containers = std::move(conts);
  fam.fingerprints = std::move(fps);
  for (const auto& c : fam.containers) fam.spanned_edges.push_back(count_spanned(h, c));
  fam.rounds = 1;
  return fam;
}

namespace {

// Bron-Kerbosch style enumeration adapted to r-uniform hypergraphs: a vertex
// is blocked once some edge needs only it to be complete inside R.
class MisEnum {
 public:
  MisEnum(const Hypergraph& h, const std::function<void(const std::vector<int>&)>& emit,
          std::uint64_t max_nodes)
      : h_(h), emit_(emit), max_nodes_(max_nodes) {
    in_r_.assign(static_cast<size_t>(h.num_vertices), 0);
    block_.assign(static_cast<size_t>(h.num_vertices), 0);
    edge_r_.assign(h.edges.size(), 0);
    vert_edges_.resize(static_cast<size_t>(h.num_vertices));
    for (size_t e = 0; e < h.edges.size(); ++e)
      for (int v : h.edges[e]) vert_edges_[static_cast<size_t>(v)].push_back(static_cast<int>(e));
  }

  bool run() {
    std::vector<int> p(static_cast<size_t>(h_.num_vertices));
    for (int v = 0; v < h_.num_vertices; ++v) p[static_cast<size_t>(v)] = v;
    // Degenerate: an edge of blocked-from-the-start vertices cannot occur for
    // r >= 2, so all vertices start unblocked.
    rec(p, {});
    return !out_of_budget_;
  }

 private:
  void rec(const std::vector<int>& p, const std::vector<int>& x) {
    if (out_of_budget_) return;
    if (++nodes_ > max_nodes_) {
      out_of_budget_ = true;
      return;
    }
    if (p.empty()) {
      if (x.empty()) emit_(r_);
      return;
    }
    // Prune when some excluded vertex can never be blocked from here on.
    if (!x.empty()) {
      std::vector<char> in_p(static_cast<size_t>(h_.num_vertices), 0);
      for (int v : p) in_p[static_cast<size_t>(v)] = 1;
      for (int xv : x) {
        bool blockable = false;
        for (int e : vert_edges_[static_cast<size_t>(xv)]) {
          bool all = true;
          for (int u : h_.edges[static_cast<size_t>(e)]) {
            if (u == xv) continue;
            if (!in_r_[static_cast<size_t>(u)] && !in_p[static_cast<size_t>(u)]) {
              all = false;
              break;
            }
          }
          if (all) {
            blockable = true;
            break;
          }
        }
        if (!blockable) return;
      }
    }

    const int v = p.front();

    // Include v.
    {
      r_.push_back(v);
      in_r_[static_cast<size_t>(v)] = 1;
      std::vector<int> newly_blocked;
      for (int e : vert_edges_[static_cast<size_t>(v)]) {
        if (++edge_r_[static_cast<size_t>(e)] == h_.r - 1) {
          for (int u : h_.edges[static_cast<size_t>(e)])
            if (!in_r_[static_cast<size_t>(u)]) {
              if (block_[static_cast<size_t>(u)]++ == 0) newly_blocked.push_back(u);
            }
        }
      }
      std::vector<int> np, nx;
      for (int u : p)
        if (u != v && block_[static_cast<size_t>(u)] == 0) np.push_back(u);
      for (int u : x)
        if (block_[static_cast<size_t>(u)] == 0) nx.push_back(u);
      rec(np, nx);
      for (int e : vert_edges_[static_cast<size_t>(v)]) {
        if (edge_r_[static_cast<size_t>(e)]-- == h_.r - 1) {
          for (int u : h_.edges[static_cast<size_t>(e)])
            if (!in_r_[static_cast<size_t>(u)]) --block_[static_cast<size_t>(u)];
        }
      }
      in_r_[static_cast<size_t>(v)] = 0;
      r_.pop_back();
    }

    // Exclude v.
    {
      std::vector<int> np(p.begin() + 1, p.end());
      std::vector<int> nx = x;
      nx.push_back(v);
      rec(np, nx);
    }
  }

  const Hypergraph& h_;
  const std::function<void(const std::vector<int>&)>& emit_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<int> r_;
  std::vector<char> in_r_, block_;
  std::vector<int> edge_r_;
  std::vector<std::vector<int>> vert_edges_;
};

}  // namespace

bool enumerate_maximal_independent_sets(const Hypergraph& h,
                                        const std::function<void(const std::vector<int>&)>& emit,
                                        std::uint64_t max_nodes) {
  h.validate();
  MisEnum en(h, emit, max_nodes);
  return en.run();
}

ContainerVerification verify_containers(const Hypergraph& h, const ContainerFamily& c,
                                        int coverage_budget_vertices) {
  ContainerVerification rep;

  // Sparsity: exact recount.
  rep.sparsity_ok = true;
  rep.max_spanned = 0;
  const Rat budget = c.eps * Rat(h.edge_count());
  for (const auto& cont : c.containers) {
    Int s = count_spanned(h, cont);
    if (s > rep.max_spanned) rep.max_spanned = s;
    if (Rat(s) > budget) rep.sparsity_ok = false;
  }

  // Coverage over all maximal independent sets.
  if (h.num_vertices > coverage_budget_vertices) {
    rep.coverage_complete = false;
    rep.coverage_ok = false;
    return rep;
  }
  std::vector<std::vector<char>> masks;
  for (const auto& cont : c.containers) {
    std::vector<char> m(static_cast<size_t>(h.num_vertices), 0);
    for (int v : cont) m[static_cast<size_t>(v)] = 1;
    masks.push_back(std::move(m));
  }
  rep.coverage_ok = true;
  bool complete = enumerate_maximal_independent_sets(h, [&](const std::vector<int>& mis) {
    ++rep.independent_sets_checked;
    if (!rep.coverage_ok) return;
    for (const auto& m : masks) {
      bool inside = true;
      for (int v : mis)
        if (!m[static_cast<size_t>(v)]) {
          inside = false;
          break;
        }
      if (inside) return;
    }
    rep.coverage_ok = false;
    rep.uncovered_witness = mis;
  });
  rep.coverage_complete = complete;
  if (!complete) rep.coverage_ok = false;
  return rep;
}

IterationResult iterate_containers(const Hypergraph& h, std::int64_t grid_side,
                                   std::int64_t dims, const IterationOptions& opts) {
  h.validate();
  if (opts.stop_size <= 0) throw std::invalid_argument("stop_size must be positive");
  const int max_rounds =
      opts.max_rounds > 0
          ? opts.max_rounds
          : static_cast<int>(std::ceil(12.0 / to_double(opts.f)));

  IterationResult result;
  result.family.eps = opts.eps_override.value_or(Rat(0));
  result.family.parent_edge_count = h.edge_count();

  std::vector<std::vector<int>> open;  // containers still being split
  {
    std::vector<int> all(static_cast<size_t>(h.num_vertices));
    for (int v = 0; v < h.num_vertices; ++v) all[static_cast<size_t>(v)] = v;
    open.push_back(std::move(all));
  }
  std::vector<std::vector<int>> final_containers;
  // anything already at or below the stop size never enters a round
  {
    std::vector<std::vector<int>> still;
    for (auto& c : open) {
      if (static_cast<std::int64_t>(c.size()) <= opts.stop_size)
        final_containers.push_back(std::move(c));
      else
        still.push_back(std::move(c));
    }
    open = std::move(still);
  }

  auto s_of = [&](size_t size) {
    return static_cast<double>(dims) -
           std::log(static_cast<double>(size)) / std::log(static_cast<double>(grid_side));
  };
  auto eps_for = [&](double s) -> Rat {
    if (opts.eps_override) return *opts.eps_override;
    double e = std::pow(static_cast<double>(grid_side),
                        s - 1.0 / 3.0 + to_double(opts.f) / 2.0);
    e = std::min(e, 0.499);
    if (e <= 0) e = 1e-9;
    return Rat(static_cast<long>(e * 1'000'000), 1'000'000);
  };

  int round = 0;
  while (!open.empty()) {
    if (round >= max_rounds)
      throw IterationError("iteration did not contract: round cap " +
                           std::to_string(max_rounds) + " reached");
    ++round;
    IterationRound info;
    info.index = round;
    info.open_containers = open.size();
    info.max_edges = 0;
    info.shrink_factor = 0;

    std::vector<std::vector<int>> next_open;
    for (const auto& cont : open) {
      // Induced subhypergraph on this container.
      std::vector<int> remap(static_cast<size_t>(h.num_vertices), -1);
      for (size_t i = 0; i < cont.size(); ++i) remap[static_cast<size_t>(cont[i])] = static_cast<int>(i);
      Hypergraph sub;
      sub.r = h.r;
      sub.num_vertices = static_cast<int>(cont.size());
      for (const auto& e : h.edges) {
        std::vector<int> me;
        me.reserve(e.size());
        bool inside = true;
        for (int v : e) {
          if (remap[static_cast<size_t>(v)] < 0) {
            inside = false;
            break;
          }
          me.push_back(remap[static_cast<size_t>(v)]);
        }
        if (inside) {
          std::sort(me.begin(), me.end());
          sub.edges.push_back(std::move(me));
        }
      }
      const Int sub_edges = sub.edge_count();
      if (sub_edges > info.max_edges) info.max_edges = sub_edges;
      const double s = s_of(cont.size());
      info.max_s = std::max(info.max_s, s);

      if (static_cast<std::int64_t>(cont.size()) <= opts.stop_size) {
        final_containers.push_back(cont);
        ++info.finalized;
        continue;
      }
      if (sub_edges == 0)
        throw IterationError("iteration did not contract: edge-free container of size " +
                             std::to_string(cont.size()) + " above stop size");

      ContainerFamily fam = build_containers(sub, eps_for(s), opts.build);
      for (const auto& child : fam.containers) {
        if (child.size() == cont.size())
          throw IterationError("iteration did not contract: child equals parent");
        std::vector<int> mapped;
        mapped.reserve(child.size());
        for (int v : child) mapped.push_back(cont[static_cast<size_t>(v)]);
        const double ratio =
            sub_edges == 0 ? 0 : to_double(Rat(count_spanned(h, mapped)) / Rat(sub_edges));
        info.shrink_factor = std::max(info.shrink_factor, ratio);
        next_open.push_back(std::move(mapped));
      }
    }
    result.rounds.push_back(info);
    // Dedupe between rounds to keep the open list canonical.
    std::sort(next_open.begin(), next_open.end());
    next_open.erase(std::unique(next_open.begin(), next_open.end()), next_open.end());
    open = std::move(next_open);
  }

  std::sort(final_containers.begin(), final_containers.end());
  final_containers.erase(std::unique(final_containers.begin(), final_containers.end()),
                         final_containers.end());
  result.family.containers = std::move(final_containers);
  for (const auto& c : result.family.containers)
    result.family.spanned_edges.push_back(count_spanned(h, c));
  result.family.rounds = round;
  result.family.hypergraph_hash = build_containers(h, Rat(1), {}).hypergraph_hash;
  return result;
}

nlohmann::json container_family_to_json(const ContainerFamily& c) {
  nlohmann::json conts = nlohmann::json::array();
  for (size_t i = 0; i < c.containers.size(); ++i) {
    conts.push_back({{"vertices", c.containers[i]},
                     {"spanned_edges", c.spanned_edges[i].get_str()}});
  }
  return {{"header",
           {{"eps", rat_str(c.eps)},
            {"parent_edge_count", c.parent_edge_count.get_str()},
            {"hypergraph_hash", c.hypergraph_hash},
            {"rounds", c.rounds},
            {"budget_reference_log2", c.budget_reference_log2}}},
          {"containers", conts}};
}

}  // namespace gridgeom
