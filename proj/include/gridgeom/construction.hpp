#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gridgeom/exact.hpp"
#include "gridgeom/grid.hpp"

#include "json.hpp"

namespace gridgeom {

enum class Regime { GeneralPosition34, EpsNet, WeakNet, CoverDecomp };

std::string regime_name(Regime r);
Regime regime_from_name(const std::string& s);

/// Seeded, platform-stable randomness: raw std::mt19937_64 output (the
/// engine's stream is fully specified by the standard) with our own
/// bit-threshold mapping, never std:: distributions.
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // true with probability p (p in [0,1], exact rational threshold).
  bool bernoulli(const Rat& p);
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

struct ConstructionConfig {
  Regime regime = Regime::GeneralPosition34;
  std::int64_t alphabet = 0;
  std::int64_t dimension = 0;
  int r = 0;
  Rat p;                     // survival probability actually used
  std::uint64_t seed = 0;
  std::optional<Rat> f;
  std::optional<Rat> gamma;
  std::optional<int> t;      // star parameter (weak-net / cover regimes)
  bool full_scale_infeasible = false;
  nlohmann::json full_scale_values;  // exact/approximate formula values, reference
};

/// Evaluates the full-scale parameter formulas for a regime and fills in a
/// desk-scale config. Infeasibility is a flag, never an error.
ConstructionConfig derive_params(Regime regime, std::int64_t alphabet,
                                 std::int64_t dimension, int r,
                                 std::optional<Rat> gamma = std::nullopt,
                                 std::optional<Rat> f = std::nullopt);

/// p-random subset of [a]^d: each point kept independently with probability
/// p, reproducible bit-for-bit from the seed.
std::vector<GridPoint> p_random_subset(std::int64_t a, std::int64_t d, const Rat& p,
                                       std::uint64_t seed,
                                       const EnumerationBudget& budget = {});

struct CleanedSet {
  std::vector<GridPoint> surviving;      // sorted
  std::vector<GridPoint> removed_excess; // removed by the (r+1)-deletion
  std::vector<GridPoint> removed_star;   // removed by star sparsening
  std::vector<GridPoint> removed_busy;   // removed by the line-multiplicity pass
  bool excess_certificate = false;  // no line carries > max_on_line survivors
  bool star_certificate = false;    // no residual t-star
  std::int64_t violations_processed = 0;
};

/// Removes one point from each line carrying more than max_on_line points of
/// S until no such line remains; the certificate is recomputed from scratch.
CleanedSet delete_excess_tuples(const std::vector<GridPoint>& s, std::int64_t a,
                                std::int64_t d, int max_on_line,
                                LineMode mode = LineMode::FullLine);

/// Axis-parallel star sparsening: while some grid point outside S lies on at
/// least t axis lines each holding exactly r points of S, one of the star's
/// t*r points is removed (deterministic rule; the seed only labels reports).
CleanedSet star_sparsen(const std::vector<GridPoint>& s, std::int64_t a, std::int64_t d,
                        int r, int t, std::uint64_t seed);

/// Third cleaning pass (cover-decomposition regime): drop surviving points
/// lying on more than max_lines axis lines that carry >= r survivors.
CleanedSet drop_busy_points(const std::vector<GridPoint>& s, std::int64_t a,
                            std::int64_t d, int r, std::int64_t max_lines);

struct FirstMomentReport {
  double log2_bound = 0;
  bool bound_below_one = false;
  bool vacuous = false;  // m > container size
  std::string note;      // states the Stirling bound used
};

/// Union bound 2^{log|C|} * C(size, m) * p^m with C(a,b) <= (ea/b)^b.
FirstMomentReport first_moment_check(double container_count_log2, double container_size,
                                     double m, const Rat& p);

nlohmann::json config_to_json(const ConstructionConfig& c);
nlohmann::json cleaned_to_json(const CleanedSet& c);

}  // namespace gridgeom
