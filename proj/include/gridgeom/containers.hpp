#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridgeom/exact.hpp"
#include "gridgeom/grid.hpp"

#include "json.hpp"

namespace gridgeom {

/// Explicit r-uniform hypergraph on vertices 0..num_vertices-1.
struct Hypergraph {
  int r = 0;
  int num_vertices = 0;
  std::vector<std::vector<int>> edges;  // each sorted, r distinct vertices

  void validate() const;
  Int edge_count() const { return Int(static_cast<long>(edges.size())); }
};

/// The collinear hypergraph of [a]^d as an explicit edge list; vertex index
/// is the lexicographic index of the grid point.
Hypergraph grid_hypergraph_instance(std::int64_t a, std::int64_t d, int r, LineMode mode,
                                    const EnumerationBudget& budget = {});

GridPoint vertex_to_point(int index, std::int64_t a, std::int64_t d);
int point_to_vertex(const GridPoint& p, std::int64_t a);

struct ContainerParams {
  int r = 0;
  Rat tau;
  Rat eps;
  int iteration_round = 0;
  int iteration_label = 0;
  bool tau_condition = false;    // tau < 1/(200 r r!^2)
  bool delta_condition = false;  // Delta(H, tau) <= eps / (12 r!)
};

struct HypothesisReport {
  bool tau_condition = false;
  bool delta_condition = false;
  Rat tau_threshold;       // 1/(200 r r!^2)
  Rat delta_value;         // Delta(H, tau)
  Rat delta_threshold;     // eps / (12 r!)
  double c_constant = 0;   // 1000 r r!^3
  double count_budget_log2 = 0;  // c N tau log(1/eps) log(1/tau), reference
};

/// Exact evaluation of the container-theorem hypotheses for a profile.
HypothesisReport check_hypotheses(const DegreeProfile& profile, const ContainerParams& params);

struct ContainerFamily {
  std::vector<std::vector<int>> containers;  // sorted vertex lists, sorted family
  std::vector<std::vector<int>> fingerprints;  // forced-in decisions per container
  std::vector<Int> spanned_edges;
  Rat eps;
  Int parent_edge_count;
  std::string hypergraph_hash;
  int rounds = 0;
  double budget_reference_log2 = 0;
};

struct BuildOptions {
  std::uint64_t max_nodes = 200'000'000;
  bool drop_subset_containers = true;
};

/// Deterministic branch-and-prune container builder. Every independent set
/// of H lands inside some output container and every container spans at most
/// eps * e(H) edges.
ContainerFamily build_containers(const Hypergraph& h, const Rat& eps,
                                 const BuildOptions& opts = {});

/// All maximal independent sets of H, in canonical order.
/// Returns false if the node budget was exhausted (enumeration incomplete).
bool enumerate_maximal_independent_sets(const Hypergraph& h,
                                        const std::function<void(const std::vector<int>&)>& emit,
                                        std::uint64_t max_nodes = 500'000'000);

struct ContainerVerification {
  bool coverage_ok = false;
  bool coverage_complete = false;  // exhaustive enumeration finished
  std::optional<std::vector<int>> uncovered_witness;
  bool sparsity_ok = false;
  Int max_spanned;
  std::uint64_t independent_sets_checked = 0;
};

ContainerVerification verify_containers(const Hypergraph& h, const ContainerFamily& c,
                                        int coverage_budget_vertices = 24);

struct IterationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IterationOptions {
  Rat f = Rat(1, 2);
  std::int64_t stop_size = 0;
  std::optional<Rat> eps_override;
  int max_rounds = 0;  // 0 means ceil(12/f)
  BuildOptions build;
};

struct IterationRound {
  int index = 0;
  std::size_t open_containers = 0;
  std::size_t finalized = 0;
  Int max_edges;
  double max_s = 0;       // s with v = n^{dims - s}
  double shrink_factor = 0;  // max child/parent edge ratio this round
};

struct IterationResult {
  ContainerFamily family;
  std::vector<IterationRound> rounds;
};

/// Iterated container driver over a grid hypergraph instance: repeatedly
/// applies the builder to each open container's induced subhypergraph until
/// every container is at most stop_size vertices. A container whose induced
/// hypergraph has no edges but exceeds stop_size cannot contract; that raises
/// IterationError, as does exceeding the round cap.
IterationResult iterate_containers(const Hypergraph& h, std::int64_t grid_side,
                                   std::int64_t dims, const IterationOptions& opts);

nlohmann::json container_family_to_json(const ContainerFamily& c);

}  // namespace gridgeom
