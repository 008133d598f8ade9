#pragma once

// Lower bounds on the diameter of a planar integral point set of n points,
// decided in exact integer arithmetic, and the table of known minimal
// diameters d̄(2,n).

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ips/exactmath.hpp"

namespace ips {

enum class BoundVariant {
  ErdosSqrt,        // d >= sqrt(n) / 2
  SolymosiLinear,   // d >= n / 24
  PpsLinear3457,    // d >= 0.3457 n
  PpsLinear5of11,   // d >= 5n / 11
  SemiGeneral54,    // d >= (n / 5)^(5/4)
  Main54,           // d >= (25n / 36)^(5/4), characteristic not 4k+3
};

inline constexpr std::array<BoundVariant, 6> kAllBoundVariants{
    BoundVariant::ErdosSqrt,     BoundVariant::SolymosiLinear, BoundVariant::PpsLinear3457,
    BoundVariant::PpsLinear5of11, BoundVariant::SemiGeneral54,  BoundVariant::Main54};

std::string_view to_string(BoundVariant v) noexcept;
std::optional<BoundVariant> parse_bound_variant(std::string_view name) noexcept;

/// Approximate bound value (display only; at least double precision).
double bound_value(BoundVariant v, std::int64_t n);

/// Exact: d >= bound(n). The 5/4 powers are compared after raising both
/// sides to the fourth power.
bool satisfies_bound(BoundVariant v, std::int64_t n, const BigInt& d);

/// Smallest integer diameter allowed by the bound.
BigInt min_integer_diameter(BoundVariant v, std::int64_t n);

struct KnownDiameter {
  std::int64_t value;
  bool strict_lower_bound;  // true: the minimum exceeds `value`
};

/// Tabulated minimum diameter d̄(2,n), 3 <= n <= 37. The minimizers behind
/// these values have no three points collinear but are in several cases
/// concircular, so they are minima over semi-general sets; the exhaustive
/// general-position minima are larger from n = 4 on (8, 73, 174, ...).
KnownDiameter known_min_diameter(std::int64_t n);

struct StripBound {
  /// The strip width squared is 2 p^(2/5); kept symbolically.
  BigInt width_sq_coefficient;  // 2
  BigInt base;                  // p
  double width_sq_approx;
  /// floor(sqrt(2) p^(4/5) + 3), computed from (k-3)^10 <= 32 p^8.
  BigInt max_cardinality;
};

StripBound strip_count_bound(const BigInt& p);

/// (n - 3)/sqrt(2) >= 25n/36, i.e. the strip bound dominates the main bound.
bool strip_bound_dominates_main(std::int64_t n);

}  // namespace ips
