#pragma once

// Exhaustive minimal-diameter search for planar integral point sets.
//
// Strategy: iterative deepening on the diameter d. Every set of diameter d
// has a shortest edge of some length m <= d; put that edge at (-m/2, 0),
// (m/2, 0). Every other point then sits at integer distances k, l in [m, d]
// from the endpoints, i.e. on an Erdos curve of the edge (or on the edge's
// line, for position "any"). Candidates are grouped by characteristic and
// extended to full sets by a clique search over the "integral distance in
// [m, d]" relation. Sets are reported once per isometry class.
//
// The hot path runs on 64/128-bit integers; ceilings above
// kMaxSearchCeiling are rejected so that no intermediate can overflow.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ips/exactmath.hpp"
#include "ips/point_set.hpp"
#include "ips/weeding.hpp"

namespace ips {

inline constexpr std::int64_t kMaxSearchCeiling = 10000;

enum class Position { Any, SemiGeneral, General };
const char* to_string(Position p) noexcept;

struct CharFilter {
  enum class Kind { All, Mod4OneOrTwo, Mod4Three, Fixed };
  Kind kind = Kind::All;
  std::int64_t q = 0;  // only for Fixed

  static CharFilter all() { return {}; }
  static CharFilter mod4_one_or_two() { return {Kind::Mod4OneOrTwo, 0}; }
  static CharFilter mod4_three() { return {Kind::Mod4Three, 0}; }
  static CharFilter fixed(std::int64_t q) { return {Kind::Fixed, q}; }

  bool admits(std::int64_t q) const noexcept;
  /// True when no admitted characteristic is of the form 4k+3.
  bool excludes_4k3() const noexcept;
  std::string str() const;
};

enum class Pruning { WeedingOn, WeedingOff };
enum class SearchMode {
  Minimum,    // stop at the first diameter that admits a set
  Inventory,  // collect every conforming set with diameter <= ceiling
};

struct SearchProblem {
  int cardinality = 3;
  std::int64_t diameter_ceiling = 1;
  Position position = Position::General;
  CharFilter char_filter;
  Pruning pruning = Pruning::WeedingOn;
  unsigned workers = 1;
  SearchMode mode = SearchMode::Minimum;
};

struct SearchStats {
  std::uint64_t curve_indices_examined = 0;
  std::uint64_t curve_indices_pruned = 0;
  std::uint64_t candidate_points = 0;  // (k, l) pairs evaluated arithmetically
  std::uint64_t pool_points = 0;       // points admitted into pools (mirrors included)
  std::uint64_t compatibility_tests = 0;
  std::uint64_t cliques_completed = 0;
  std::uint64_t work_units = 0;        // (d, m) units processed

  SearchStats& operator+=(const SearchStats& o);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

/// Point in the 2m-denominator grid of a base edge of length m:
/// (a / 2m, b sqrt(q) / 2m).
struct PoolPoint {
  std::int64_t k = 0;  // distance to (-m/2, 0)
  std::int64_t l = 0;  // distance to (m/2, 0)
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const PoolPoint&, const PoolPoint&) = default;
  friend auto operator<=>(const PoolPoint&, const PoolPoint&) = default;
};

struct CandidatePool {
  std::int64_t base_edge = 0;
  std::int64_t radicand = 0;
  std::vector<PoolPoint> points;       // off the base line, both mirror images
  std::vector<PoolPoint> line_points;  // on the base line, outside the edge
};

struct PoolOptions {
  std::int64_t min_radius = 1;
  bool include_line_points = false;
};

/// Off-line points at integer distances k, l <= d from the endpoints of an
/// edge of length m, with characteristic q. With WeedingOn and a q the
/// parity rules apply to, inadmissible curve indices are skipped before
/// any arithmetic.
CandidatePool build_pool(std::int64_t m, std::int64_t q, std::int64_t d, Pruning pruning,
                         const PoolOptions& opts = {}, SearchStats* stats = nullptr);

/// All pools over base edge m whose characteristic passes `filter`,
/// ordered by characteristic.
std::vector<CandidatePool> build_pools(std::int64_t m, const CharFilter& filter, std::int64_t d, Pruning pruning,
                                       const PoolOptions& opts = {}, SearchStats* stats = nullptr);

struct Compatibility {
  bool ok = false;
  bool coincident = false;
  std::int64_t distance = 0;  // valid when the distance is an integer
};

/// Whether two grid points (same q and base edge m) are at a positive
/// integer distance <= d.
Compatibility compatible(const PoolPoint& p1, const PoolPoint& p2, std::int64_t q, std::int64_t m, std::int64_t d);

struct Witness {
  GridPointSet set;
  std::int64_t diameter = 0;
  std::int64_t min_edge = 0;
  std::int64_t characteristic = 0;
};

struct SearchOutcome {
  std::optional<std::int64_t> min_diameter;  // nullopt: nothing below the ceiling
  std::vector<Witness> witnesses;            // sorted by (diameter, canonical key)
  SearchStats stats;
};

SearchOutcome solve(const SearchProblem& problem);

struct PruningReport {
  SearchOutcome with_weeding;
  SearchOutcome without_weeding;
  bool identical = false;  // same minimum and the same witness sets
};

/// Runs `problem` with and without weeding. Only meaningful when the
/// filter excludes characteristics the parity rules speak about.
PruningReport pruning_report(const SearchProblem& problem);

}  // namespace ips
