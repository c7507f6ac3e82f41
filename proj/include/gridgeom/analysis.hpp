#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridgeom/exact.hpp"
#include "gridgeom/projection.hpp"

#include "json.hpp"

namespace gridgeom {

struct RichLine {
  PlanarLine line;
  std::vector<int> points;  // sorted indices into the input set
};

struct RichLineSet {
  int threshold = 0;
  std::vector<RichLine> lines;  // canonical line order, complete
};

/// Every line carrying >= threshold points of s, found by pair bucketing.
RichLineSet rich_lines(const std::vector<PlanarPoint>& s, int threshold);

struct GeneralPositionReport {
  int size = 0;
  std::vector<int> witness;  // triple-free, sorted
  bool optimal = false;
  int lower_bound = 0, upper_bound = 0;
  std::int64_t nodes = 0;
};

/// Largest subset with no 3 collinear points; exact branch and bound up to
/// exact_budget points, greedy with certified bounds above it.
GeneralPositionReport max_general_position(const std::vector<PlanarPoint>& s,
                                           int exact_budget = 60);

struct NetCheck {
  int threshold = 0;  // ceil(eps * |S|), clamped up to 2
  bool clamped = false;
  int rich_count = 0;
  bool verdict = false;
  std::optional<int> failing_line;  // index into the rich line list
};

/// Does T hit every line with >= ceil(eps|S|) points of S? Strong mode
/// requires T to be points of S; weak mode uses exact incidence.
NetCheck check_eps_net(const std::vector<PlanarPoint>& s,
                       const std::vector<PlanarPoint>& t, const Rat& eps, bool weak);

enum class CandidateKind { SourcePoint, Intersection, Infinity };

struct NetCandidate {
  CandidateKind kind = CandidateKind::SourcePoint;
  std::optional<PlanarPoint> point;  // affine candidates
  Int dir_a, dir_b;                  // infinity candidates: the direction class
  std::vector<int> covers;           // rich line indices
};

struct HittingSetResult {
  int threshold = 0;
  bool clamped = false;
  int rich_count = 0;
  int size = 0;
  std::vector<NetCandidate> witness;
  bool optimal = false;
  int lower_bound = 0, upper_bound = 0;
  std::int64_t nodes = 0;
  bool budget_exceeded = false;
};

struct HittingSetOptions {
  bool weak = false;
  bool projective = false;      // admit one point at infinity per direction
  std::int64_t max_nodes = 50'000'000;
};

/// Minimum set of candidates meeting every rich line at the eps threshold.
HittingSetResult min_hitting_set(const std::vector<PlanarPoint>& s, const Rat& eps,
                                 const HittingSetOptions& opt = {});

struct SwitchReport {
  std::vector<PlanarPoint> strong_net;  // subset of s, sorted, deduplicated
  int tg = 0, tw = 0, ts = 0;
  std::int64_t bound = 0;  // 2|T_g| + t|T_w| + |T_s|
  bool within_bound = false;
  bool passes = false;  // strong_net hits every rich line
};

/// Replaces a weak net by points of s: net points already in s stay, net
/// points of grid_image get at most t replacements, all other net points get
/// one s point per covered line.
SwitchReport switching_transform(const std::vector<PlanarPoint>& s,
                                 const std::vector<PlanarPoint>& grid_image,
                                 const std::vector<PlanarPoint>& net,
                                 const RichLineSet& rich, int t);

struct ColoringReport {
  bool sat = false;
  bool inconclusive = false;    // node budget ran out
  std::vector<int> colors;      // 0/1 per vertex when sat
  std::int64_t nodes = 0;
  std::string note;
};

/// Two-colors the vertices so every edge sees both colors, or proves by
/// exhausted search that no such partition exists.
ColoringReport two_color_cover(int num_vertices, const std::vector<std::vector<int>>& edges,
                               std::int64_t max_nodes = 50'000'000);

/// Exact check of e * (T + 1) < 2^{r-1}, by a rational interval around e
/// widened until decisive.
bool lll_check(const Int& big_t, int r);

nlohmann::json rich_lines_to_json(const RichLineSet& r);
nlohmann::json net_check_to_json(const NetCheck& c);
nlohmann::json hitting_set_to_json(const HittingSetResult& h);
nlohmann::json coloring_to_json(const ColoringReport& c);

}  // namespace gridgeom
