#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gridgeom/exact.hpp"
#include "gridgeom/grid.hpp"

#include "json.hpp"

namespace gridgeom {

struct FamilyDegenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The explicit supersaturation line family: lines whose starting points lie
/// in the box U (first coordinate in [1, floor(n/t)], others in [-n, n]) and
/// whose directions lie in V (first coordinate a prime in (n/t, 2n/t],
/// dominating the other coordinates in absolute value). Lines are counted as
/// (base, direction) pairs, matching how the incidence argument counts them.
struct SupersatFamily {
  std::int64_t n = 0;
  int k = 0;
  Rat t;                    // effective length parameter
  double default_t_ref = 0;   // nominal value of t from the defining formula, reference only
  std::string default_t_formula;
  bool t_overridden = false;
  std::int64_t base1_max = 0;          // floor(n/t)
  std::vector<std::int64_t> primes;    // admissible first coordinates of V

  Int u_count() const;
  Int v_count() const;
  Int line_count() const;  // |L| = |U| * |V|
  Int nonneg_direction_count() const;
};

struct FamilyReport {
  bool cap_ok = false;             // every line carries <= t grid points
  std::int64_t max_points_on_line = 0;
  bool directions_ok = false;      // primality + domination on every direction
  bool cover_ok = false;           // nonnegative directions cover the grid
  std::optional<GridPoint> uncovered_witness;
  // Cover-count range over grid points (all directions), when scanned.
  std::optional<Int> min_cover_count;
  std::optional<Int> max_cover_count;
  Int nonneg_directions;
  // Asymptotic reference values from the incidence count, informational.
  double line_count_reference = 0;
  double cover_lower_reference = 0;
  double cover_upper_reference = 0;
  std::string cover_note;
};

struct IncidenceReport {
  Int family_lines;     // |L|
  Int incidences;       // I(S, L), point-major
  Int incidences_line_major;  // same total recomputed line-major
  Rat average;          // I / |L|
  Rat tuple_lower_bound;     // |L| * C(avg, r) when avg >= r, else 0
  Int tuples_on_family_lines;  // exact count of r-tuples of S on family lines
  bool bound_le_truth = false;
};

/// All primes p with lo < p <= hi, ascending (deterministic trial division).
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

bool is_prime(std::int64_t n);

/// Family of Lemma "every size-n^{3-s} set spans many collinear triples";
/// the nominal t = 2000 n^s is recorded, an override is required at any
/// feasible scale. Throws FamilyDegenerate when floor(n/t) < 2 or the prime
/// window is empty.
SupersatFamily build_family_3d(std::int64_t n, const Rat& s,
                               std::optional<Rat> t_override = std::nullopt);

/// k-dimensional variant with r = k; nominal default t = 10 * 2^{2k} * k / gamma.
/// Requires 0.1 < gamma <= 1.
SupersatFamily build_family_general(std::int64_t n, int k, const Rat& gamma,
                                    std::optional<Rat> t_override = std::nullopt);

struct VerifyOptions {
  // Cap on |U| * |V| pairs for the exact per-line scan.
  std::int64_t max_line_scans = 100'000'000;
  bool scan_cover_counts = true;  // full point-by-point cover census
};

FamilyReport verify_family(const SupersatFamily& f, const VerifyOptions& opts = {});

/// Exact incidence count of S against the family, with the convexity lower
/// bound on collinear r-tuples and the enumerated truth for comparison.
IncidenceReport incidence_average_bound(const std::vector<GridPoint>& s,
                                        const SupersatFamily& f, int r);

nlohmann::json family_to_json(const SupersatFamily& f);
nlohmann::json family_report_to_json(const FamilyReport& r);
nlohmann::json incidence_report_to_json(const IncidenceReport& r);

}  // namespace gridgeom
