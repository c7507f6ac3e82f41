#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gridgeom/analysis.hpp"
#include "gridgeom/construction.hpp"
#include "gridgeom/containers.hpp"
#include "gridgeom/exact.hpp"
#include "gridgeom/grid.hpp"
#include "gridgeom/line_family.hpp"
#include "gridgeom/projection.hpp"
#include "gridgeom/report.hpp"

namespace gg = gridgeom;
using nlohmann::json;

namespace {

gg::Rat parse_rat(const std::string& s) {
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    const std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    gg::Int num(digits, 10);
    gg::Int den = gg::pow_int(gg::Int(10), s.size() - dot - 1);
    gg::Rat q(num, den);
    q.canonicalize();
    return q;
  }
  gg::Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

// writes the report (plus the spec hash) and a timestamp sidecar; reports
// themselves stay byte-stable across reruns
int emit(json report, const json& resolved_spec, const std::string& out_path,
         bool ok) {
  report["tool_version"] = gg::kToolVersion;
  report["spec"] = resolved_spec;
  report["spec_hash"] = gg::hash_hex(gg::stable_hash(gg::canonical_dump(resolved_spec)));
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output path " + out_path);
    f << text;
    std::ofstream side(out_path + ".time");
    side << std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count()
         << "\n";
  }
  return ok ? 0 : 1;
}

json points_json(const std::vector<gg::GridPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(p.coords);
  return arr;
}

std::vector<gg::PlanarPoint> load_planar(const json& arr) {
  std::vector<gg::PlanarPoint> out;
  for (const auto& e : arr)
    out.push_back({parse_rat(e.at("x").get<std::string>()),
                   parse_rat(e.at("y").get<std::string>())});
  return out;
}

// spec-file defaults: a flag the user did not pass takes its value from the
// spec JSON when present
template <typename T>
void from_spec(const CLI::App& app, const json& spec, const std::string& flag,
               const std::string& key, T& var) {
  if (app.count(flag) == 0 && spec.contains(key)) var = spec.at(key).get<T>();
}

struct Common {
  std::string out_path;
  std::string spec_path;
  json spec = json::object();

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", out_path, "report file (default: stdout)");
    cmd->add_option("--spec", spec_path, "JSON spec file; flags override it");
  }
  void load() {
    if (spec_path.empty()) return;
    std::ifstream f(spec_path);
    if (!f) throw std::invalid_argument("cannot read spec file " + spec_path);
    try {
      f >> spec;
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed spec: ") + e.what());
    }
  }
};

gg::LineMode parse_mode(const std::string& m) {
  if (m == "full") return gg::LineMode::FullLine;
  if (m == "axis") return gg::LineMode::AxisParallel;
  throw std::invalid_argument("mode must be full or axis");
}

json run_clean_pipeline(const gg::ConstructionConfig& cfg, std::int64_t a, std::int64_t d,
                        int r, int t, std::uint64_t seed) {
  json rep;
  auto pts = gg::p_random_subset(a, d, cfg.p, seed);
  rep["random_points"] = static_cast<std::int64_t>(pts.size());
  const gg::LineMode mode = (cfg.regime == gg::Regime::WeakNet ||
                             cfg.regime == gg::Regime::CoverDecomp)
                                ? gg::LineMode::AxisParallel
                                : gg::LineMode::FullLine;
  auto cleaned = gg::delete_excess_tuples(pts, a, d, r, mode);
  rep["excess"] = gg::cleaned_to_json(cleaned);
  auto survivors = cleaned.surviving;
  if (mode == gg::LineMode::AxisParallel) {
    auto starred = gg::star_sparsen(survivors, a, d, r, t, seed);
    rep["star"] = gg::cleaned_to_json(starred);
    survivors = starred.surviving;
  }
  rep["surviving"] = points_json(survivors);
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid collinearity toolkit"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "grid line census and codegrees");
  Common count_c;
  std::int64_t alphabet = 3, dimension = 2;
  int uniformity = 3;
  std::string mode_str = "full";
  bool buckets = false;
  count->add_option("--alphabet,-a", alphabet);
  count->add_option("--dimension,-d", dimension);
  count->add_option("--r", uniformity);
  count->add_option("--mode", mode_str, "full | axis");
  count->add_flag("--buckets", buckets, "include the dyadic bucket census");
  count_c.attach(count);

  // family
  auto* family = app.add_subcommand("family", "supersaturation line families");
  Common family_c;
  std::int64_t fam_n = 16;
  int fam_k = 3;
  std::string fam_s = "2/3", fam_gamma = "1/2", fam_t;
  bool fam_verify = false, fam_incidence = false;
  family->add_option("--n", fam_n);
  family->add_option("--k", fam_k);
  family->add_option("--s", fam_s, "size exponent (k = 3 form)");
  family->add_option("--gamma", fam_gamma, "density parameter (general form)");
  family->add_option("--t", fam_t, "override for the slab parameter t");
  family->add_flag("--verify", fam_verify);
  family->add_flag("--incidence", fam_incidence);
  family_c.attach(family);

  // containers
  auto* containers = app.add_subcommand("containers", "build or iterate containers");
  Common cont_c;
  std::int64_t con_a = 3, con_d = 2;
  int con_r = 3;
  std::string con_eps = "1/2", con_tau, con_f = "1/2";
  std::int64_t con_stop = 0;
  bool con_iterate = false, con_verify = false, con_hypotheses = false;
  containers->add_option("--alphabet,-a", con_a);
  containers->add_option("--dimension,-d", con_d);
  containers->add_option("--r", con_r);
  containers->add_option("--eps", con_eps);
  containers->add_option("--tau", con_tau, "check the container hypotheses at this tau");
  containers->add_flag("--hypotheses", con_hypotheses);
  containers->add_flag("--iterate", con_iterate);
  containers->add_option("--f", con_f, "iteration exponent step");
  containers->add_option("--stop-size", con_stop);
  containers->add_flag("--verify", con_verify);
  cont_c.attach(containers);

  // construct
  auto* construct = app.add_subcommand("construct", "random sets plus cleaning");
  Common cons_c;
  std::string cons_regime = "gp-3and4", cons_p;
  std::int64_t cons_a = 16, cons_d = 3;
  int cons_r = 3, cons_t = 2;
  std::uint64_t cons_seed = 0;
  construct->add_option("--regime", cons_regime);
  construct->add_option("--alphabet,-a", cons_a);
  construct->add_option("--dimension,-d", cons_d);
  construct->add_option("--r", cons_r);
  construct->add_option("--t", cons_t);
  construct->add_option("--p", cons_p, "override the survival probability");
  construct->add_option("--seed", cons_seed);
  cons_c.attach(construct);

  // project
  auto* project = app.add_subcommand("project", "generic planar projection");
  Common proj_c;
  std::int64_t proj_a = 3, proj_d = 2;
  std::string proj_mode = "full";
  std::uint64_t proj_seed = 0;
  project->add_option("--alphabet,-a", proj_a);
  project->add_option("--dimension,-d", proj_d);
  project->add_option("--mode", proj_mode, "full | axis");
  project->add_option("--seed", proj_seed);
  proj_c.attach(project);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "nets, coloring, general position");
  Common ana_c;
  std::string ana_op = "rich", ana_eps = "1/3", ana_points, ana_t_str;
  std::int64_t ana_a = 3, ana_d = 2;
  int ana_threshold = 3, ana_r = 3;
  std::uint64_t ana_seed = 0;
  bool ana_weak = false, ana_projective = false;
  std::string ana_lll_t = "2";
  analyze->add_option("--op", ana_op, "rich | alpha | net | minnet | two-color | lll");
  analyze->add_option("--alphabet,-a", ana_a);
  analyze->add_option("--dimension,-d", ana_d);
  analyze->add_option("--mode", proj_mode, "full | axis (projection of the grid)");
  analyze->add_option("--points", ana_points, "JSON file with planar points");
  analyze->add_option("--threshold", ana_threshold);
  analyze->add_option("--eps", ana_eps);
  analyze->add_option("--net", ana_t_str, "JSON file with the net to check");
  analyze->add_flag("--weak", ana_weak);
  analyze->add_flag("--projective", ana_projective);
  analyze->add_option("--r", ana_r);
  analyze->add_option("--T", ana_lll_t, "the T of the e(T+1) comparison");
  analyze->add_option("--seed", ana_seed);
  ana_c.attach(analyze);

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "grid, random set, clean, project, analyze");
  Common pipe_c;
  std::string pipe_regime = "gp-3and4";
  std::int64_t pipe_n = 8;
  std::uint64_t pipe_seed = 0;
  pipeline->add_option("--regime", pipe_regime);
  pipeline->add_option("--n", pipe_n);
  pipeline->add_option("--seed", pipe_seed);
  pipe_c.attach(pipeline);

  // params
  auto* params = app.add_subcommand("params", "derived parameters per regime");
  Common par_c;
  std::string par_regime = "gp-3and4", par_gamma = "1/2", par_f = "1/2";
  std::int64_t par_a = 16, par_d = 3;
  int par_r = 3;
  params->add_option("--regime", par_regime);
  params->add_option("--alphabet,-a", par_a);
  params->add_option("--dimension,-d", par_d);
  params->add_option("--r", par_r);
  params->add_option("--gamma", par_gamma);
  params->add_option("--f", par_f);
  par_c.attach(params);

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      count_c.load();
      from_spec(*count, count_c.spec, "--alphabet", "alphabet", alphabet);
      from_spec(*count, count_c.spec, "--dimension", "dimension", dimension);
      from_spec(*count, count_c.spec, "--r", "r", uniformity);
      from_spec(*count, count_c.spec, "--mode", "mode", mode_str);
      const auto mode = parse_mode(mode_str);
      const auto h = gg::line_census(alphabet, dimension, uniformity, mode);
      const auto prof = gg::profile_from_census(h);
      json spec{{"command", "count"}, {"alphabet", alphabet}, {"dimension", dimension},
                {"r", uniformity}, {"mode", mode_str}};
      json rep = gg::hypergraph_to_json(h, prof);
      if (buckets) {
        const auto census = gg::bucket_line_census(alphabet, dimension);
        json bj = json::array();
        for (const auto& b : census.buckets) {
          bj.push_back(json{{"t", b.t},
                            {"lines", b.lines.get_str()},
                            {"reference_bound", gg::rat_str(b.reference_bound)},
                            {"exceeds_reference", b.exceeds_reference}});
        }
        rep["buckets"] = {{"premise_met", census.premise_met}, {"buckets", bj}};
      }
      return emit(rep, spec, count_c.out_path, true);
    }

    if (family->parsed()) {
      family_c.load();
      from_spec(*family, family_c.spec, "--n", "n", fam_n);
      from_spec(*family, family_c.spec, "--k", "k", fam_k);
      from_spec(*family, family_c.spec, "--s", "s", fam_s);
      from_spec(*family, family_c.spec, "--gamma", "gamma", fam_gamma);
      from_spec(*family, family_c.spec, "--t", "t", fam_t);
      std::optional<gg::Rat> t_override;
      if (!fam_t.empty()) t_override = parse_rat(fam_t);
      const auto fam = fam_k == 3
                           ? gg::build_family_3d(fam_n, parse_rat(fam_s), t_override)
                           : gg::build_family_general(fam_n, fam_k, parse_rat(fam_gamma),
                                                      t_override);
      json spec{{"command", "family"}, {"n", fam_n}, {"k", fam_k}, {"s", fam_s},
                {"gamma", fam_gamma}, {"t_override", fam_t}};
      json rep{{"u_count", fam.u_count().get_str()},
               {"v_count", fam.v_count().get_str()},
               {"line_count", fam.line_count().get_str()},
               {"t", gg::rat_str(fam.t)},
               {"t_overridden", fam.t_overridden},
               {"default_t_formula", fam.default_t_formula},
               {"default_t_reference", fam.default_t_ref}};
      bool ok = true;
      if (fam_verify) {
        const auto v = gg::verify_family(fam);
        rep["verify"] = gg::family_report_to_json(v);
        ok = v.cap_ok && v.directions_ok && v.cover_ok;
      }
      if (fam_incidence) {
        std::vector<gg::GridPoint> grid_pts;
        std::vector<std::int64_t> idx(static_cast<size_t>(fam_k), 1);
        while (true) {
          grid_pts.push_back({idx});
          size_t pos = idx.size();
          bool done = true;
          while (pos > 0) {
            --pos;
            if (++idx[pos] <= fam_n) {
              done = false;
              break;
            }
            idx[pos] = 1;
          }
          if (done) break;
        }
        const auto inc = gg::incidence_average_bound(grid_pts, fam, fam_k);
        rep["incidence"] = gg::incidence_report_to_json(inc);
        ok = ok && inc.bound_le_truth;
      }
      return emit(rep, spec, family_c.out_path, ok);
    }

    if (containers->parsed()) {
      cont_c.load();
      const auto h = gg::grid_hypergraph_instance(con_a, con_d, con_r, gg::LineMode::FullLine);
      json spec{{"command", "containers"}, {"alphabet", con_a}, {"dimension", con_d},
                {"r", con_r}, {"eps", con_eps}, {"iterate", con_iterate},
                {"f", con_f}, {"stop_size", con_stop}};
      json rep;
      bool ok = true;
      if (con_hypotheses || !con_tau.empty()) {
        const auto profile = gg::codegree_profile(con_a, con_d, con_r, gg::LineMode::FullLine);
        gg::ContainerParams cp;
        cp.r = con_r;
        cp.tau = parse_rat(con_tau.empty() ? "1/1000" : con_tau);
        cp.eps = parse_rat(con_eps);
        const auto hyp = gg::check_hypotheses(profile, cp);
        rep["hypotheses"] = {{"tau_condition", hyp.tau_condition},
                             {"delta_condition", hyp.delta_condition},
                             {"tau_threshold", gg::rat_str(hyp.tau_threshold)},
                             {"delta_value", gg::rat_str(hyp.delta_value)},
                             {"delta_threshold", gg::rat_str(hyp.delta_threshold)},
                             {"c_constant", hyp.c_constant},
                             {"count_budget_log2", hyp.count_budget_log2}};
      }
      if (con_iterate) {
        gg::IterationOptions iopt;
        iopt.f = parse_rat(con_f);
        iopt.stop_size = con_stop;
        const auto res = gg::iterate_containers(h, con_a, con_d, iopt);
        json rounds = json::array();
        for (const auto& r : res.rounds)
          rounds.push_back({{"index", r.index},
                            {"open_containers", r.open_containers},
                            {"finalized", r.finalized},
                            {"max_edges", r.max_edges.get_str()},
                            {"max_s", r.max_s},
                            {"shrink_factor", r.shrink_factor}});
        rep["iteration"] = {{"rounds", rounds},
                            {"family", gg::container_family_to_json(res.family)}};
      } else {
        const auto fam = gg::build_containers(h, parse_rat(con_eps));
        rep["containers"] = gg::container_family_to_json(fam);
        if (con_verify) {
          const auto v = gg::verify_containers(h, fam);
          rep["verify"] = {{"sparsity", v.sparsity_ok},
                           {"coverage_complete", v.coverage_complete},
                           {"coverage_ok", v.coverage_ok},
                           {"independent_sets_checked", v.independent_sets_checked},
                           {"max_spanned", v.max_spanned.get_str()}};
          ok = v.sparsity_ok && (!v.coverage_complete || v.coverage_ok);
        }
      }
      return emit(rep, spec, cont_c.out_path, ok);
    }

    if (construct->parsed()) {
      cons_c.load();
      from_spec(*construct, cons_c.spec, "--regime", "regime", cons_regime);
      from_spec(*construct, cons_c.spec, "--alphabet", "alphabet", cons_a);
      from_spec(*construct, cons_c.spec, "--dimension", "dimension", cons_d);
      from_spec(*construct, cons_c.spec, "--r", "r", cons_r);
      from_spec(*construct, cons_c.spec, "--seed", "seed", cons_seed);
      auto cfg = gg::derive_params(gg::regime_from_name(cons_regime), cons_a, cons_d, cons_r);
      if (!cons_p.empty()) cfg.p = parse_rat(cons_p);
      cfg.seed = cons_seed;
      json spec{{"command", "construct"}, {"regime", cons_regime}, {"alphabet", cons_a},
                {"dimension", cons_d}, {"r", cons_r}, {"seed", cons_seed},
                {"p", gg::rat_str(cfg.p)}, {"t", cons_t}};
      json rep{{"config", gg::config_to_json(cfg)}};
      rep["pipeline"] = run_clean_pipeline(cfg, cons_a, cons_d, cons_r, cons_t, cons_seed);
      return emit(rep, spec, cons_c.out_path, true);
    }

    if (project->parsed()) {
      proj_c.load();
      std::vector<gg::GridPoint> pts;
      std::vector<std::int64_t> idx(static_cast<size_t>(proj_d), 1);
      while (true) {
        pts.push_back({idx});
        size_t pos = idx.size();
        bool done = true;
        while (pos > 0) {
          --pos;
          if (++idx[pos] <= proj_a) {
            done = false;
            break;
          }
          idx[pos] = 1;
        }
        if (done) break;
      }
      const auto mode = parse_mode(proj_mode) == gg::LineMode::FullLine
                            ? gg::ProjectionMode::FullLine
                            : gg::ProjectionMode::AxisOnly;
      const auto img = gg::project_generic(pts, mode, proj_seed);
      json spec{{"command", "project"}, {"alphabet", proj_a}, {"dimension", proj_d},
                {"mode", proj_mode}, {"seed", proj_seed}};
      return emit(gg::planar_image_to_json(img), spec, proj_c.out_path,
                  img.cert.created == 0);
    }

    if (analyze->parsed()) {
      ana_c.load();
      std::vector<gg::PlanarPoint> pts;
      if (!ana_points.empty()) {
        std::ifstream f(ana_points);
        if (!f) throw std::invalid_argument("cannot read points file " + ana_points);
        json arr;
        f >> arr;
        pts = load_planar(arr);
      } else if (ana_op != "lll" && ana_op != "two-color") {
        std::vector<gg::GridPoint> gpts;
        for (std::int64_t x = 1; x <= ana_a; ++x)
          for (std::int64_t y = 1; y <= ana_a; ++y) gpts.push_back({{x, y}});
        const auto mode = parse_mode(proj_mode) == gg::LineMode::FullLine
                              ? gg::ProjectionMode::FullLine
                              : gg::ProjectionMode::AxisOnly;
        pts = gg::project_generic(gpts, mode, ana_seed).points;
      }
      json spec{{"command", "analyze"}, {"op", ana_op}, {"eps", ana_eps},
                {"weak", ana_weak}, {"projective", ana_projective},
                {"threshold", ana_threshold}, {"r", ana_r}, {"T", ana_lll_t},
                {"seed", ana_seed}};
      json rep;
      bool ok = true;
      if (ana_op == "rich") {
        rep = gg::rich_lines_to_json(gg::rich_lines(pts, ana_threshold));
      } else if (ana_op == "alpha") {
        const auto gp = gg::max_general_position(pts);
        rep = {{"alpha", gp.size}, {"witness", gp.witness}, {"optimal", gp.optimal},
               {"lower_bound", gp.lower_bound}, {"upper_bound", gp.upper_bound},
               {"nodes", gp.nodes}};
      } else if (ana_op == "net") {
        std::vector<gg::PlanarPoint> net;
        if (!ana_t_str.empty()) {
          std::ifstream f(ana_t_str);
          if (!f) throw std::invalid_argument("cannot read net file " + ana_t_str);
          json arr;
          f >> arr;
          net = load_planar(arr);
        }
        const auto chk = gg::check_eps_net(pts, net, parse_rat(ana_eps), ana_weak);
        rep = gg::net_check_to_json(chk);
        ok = chk.verdict;
      } else if (ana_op == "minnet") {
        gg::HittingSetOptions opt;
        opt.weak = ana_weak;
        opt.projective = ana_projective;
        rep = gg::hitting_set_to_json(gg::min_hitting_set(pts, parse_rat(ana_eps), opt));
      } else if (ana_op == "two-color") {
        std::vector<std::vector<int>> edges;
        int nv = 0;
        if (!ana_points.empty()) {
          pts = load_planar([&] {
            std::ifstream f(ana_points);
            json arr;
            f >> arr;
            return arr;
          }());
        } else {
          std::vector<gg::GridPoint> gpts;
          for (std::int64_t x = 1; x <= ana_a; ++x)
            for (std::int64_t y = 1; y <= ana_a; ++y) gpts.push_back({{x, y}});
          pts = gg::project_generic(gpts, gg::ProjectionMode::FullLine, ana_seed).points;
        }
        nv = static_cast<int>(pts.size());
        for (const auto& rl : gg::rich_lines(pts, ana_threshold).lines)
          edges.push_back(rl.points);
        const auto col = gg::two_color_cover(nv, edges);
        rep = gg::coloring_to_json(col);
        ok = !col.inconclusive;
      } else if (ana_op == "lll") {
        const gg::Int t(ana_lll_t, 10);
        rep = {{"T", t.get_str()}, {"r", ana_r}, {"holds", gg::lll_check(t, ana_r)}};
      } else {
        throw std::invalid_argument("unknown analyze op: " + ana_op);
      }
      return emit(rep, spec, ana_c.out_path, ok);
    }

    if (pipeline->parsed()) {
      pipe_c.load();
      from_spec(*pipeline, pipe_c.spec, "--regime", "regime", pipe_regime);
      from_spec(*pipeline, pipe_c.spec, "--n", "n", pipe_n);
      from_spec(*pipeline, pipe_c.spec, "--seed", "seed", pipe_seed);
      const auto regime = gg::regime_from_name(pipe_regime);
      const std::int64_t dim = regime == gg::Regime::GeneralPosition34 ? 3 : 2;
      auto cfg = gg::derive_params(regime, pipe_n, dim, 3);
      cfg.seed = pipe_seed;
      json spec{{"command", "pipeline"}, {"regime", pipe_regime}, {"n", pipe_n},
                {"seed", pipe_seed}};
      json rep{{"config", gg::config_to_json(cfg)}};
      const int t = cfg.t.value_or(2);
      rep["clean"] = run_clean_pipeline(cfg, pipe_n, dim, 3, t, pipe_seed);
      std::vector<gg::GridPoint> survivors;
      for (const auto& c : rep["clean"]["surviving"])
        survivors.push_back({c.get<std::vector<std::int64_t>>()});
      if (survivors.size() >= 3 && survivors.size() <= 300) {
        const auto mode = regime == gg::Regime::GeneralPosition34
                              ? gg::ProjectionMode::FullLine
                              : gg::ProjectionMode::AxisOnly;
        const auto img = gg::project_generic(survivors, mode, pipe_seed);
        rep["projection"] = gg::planar_image_to_json(img);
        const auto gp = gg::max_general_position(img.points);
        rep["analysis"] = {{"alpha", gp.size}, {"optimal", gp.optimal}};
      } else {
        rep["projection"] = nullptr;
        rep["analysis"] = {{"note", "survivor count outside the projection budget"}};
      }
      return emit(rep, spec, pipe_c.out_path, true);
    }

    if (params->parsed()) {
      par_c.load();
      const auto cfg = gg::derive_params(gg::regime_from_name(par_regime), par_a, par_d,
                                         par_r, parse_rat(par_gamma), parse_rat(par_f));
      json spec{{"command", "params"}, {"regime", par_regime}, {"alphabet", par_a},
                {"dimension", par_d}, {"r", par_r}, {"gamma", par_gamma}, {"f", par_f}};
      return emit(gg::config_to_json(cfg), spec, par_c.out_path, true);
    }
  } catch (const gg::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
