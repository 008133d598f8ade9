#pragma once

// Erdos curves and the parity rules linking an edge, the curve through a
// third point, and the characteristic of the resulting triangle.
//
// Place an edge of length m with endpoints (-m/2, 0) and (m/2, 0). A point
// at integer distances k and l from the endpoints lies on curve index
// n = k - l, |n| < m. Index 0 is the perpendicular bisector, the rest are
// hyperbola branches. If the characteristic is not 4k+3 the index has the
// parity of m; an even edge with an odd index forces 8k+7.

#include <cstdint>
#include <optional>
#include <vector>

#include "ips/exactmath.hpp"
#include "ips/point_set.hpp"

namespace ips {

/// Which characteristics the caller admits.
enum class CharClass {
  NotThreeMod4,  // 4k+1 and 4k+2 only
  NotSevenMod8,  // everything except 8k+7
  Unrestricted,
};

struct ErdosCurve {
  std::int64_t edge_length;  // m >= 1
  std::int64_t index;        // |index| < m

  ErdosCurve(std::int64_t m, std::int64_t n);
};

struct CurvePoint {
  std::int64_t k;  // distance to the first endpoint
  std::int64_t l;  // distance to the second endpoint, k - index
  BigInt a;        // x = a / denom
  BigInt b;        // y = b sqrt(radicand) / denom, b > 0
  BigInt radicand;
  std::int64_t denom;  // 2m
};

/// s(2m+2n-s)(2n-s)(2m-s) for the triangle with sides m, n, m+n-s.
/// This is 16 S^2, so its squarefree part is the characteristic.
BigInt preweeding_radical(std::int64_t m, std::int64_t n, std::int64_t s);

/// Whether a point on curve `curve_index` of an edge of length
/// `edge_length` can belong to a set of the admitted class.
bool weeding_allows(std::int64_t edge_length, std::int64_t curve_index, CharClass cls);

/// Same rule keyed on a known characteristic q.
bool weeding_allows_char(std::int64_t edge_length, std::int64_t curve_index, const BigInt& q);

/// Points of the curve with k <= max_radius and y > 0; points on the focal
/// line are excluded. With `char_filter`, only points of that characteristic.
std::vector<CurvePoint> enumerate_curve_points(const ErdosCurve& curve, std::int64_t max_radius,
                                               const std::optional<BigInt>& char_filter = std::nullopt);

enum class HeightClass { Any, NotFourKPlusThree };

/// Lower bound on h^2 for the smallest height: a - 1/4 in general, 2a - 1
/// when the characteristic is not 4k+3 (a = shortest side).
BigRat min_height_bound(const IntTriangle& t, HeightClass cls);

/// Exact h^2 of the height dropped onto the longest side.
BigRat min_height_exact(const IntTriangle& t);

/// |M1M2| * |M3M4| - 2 for a semi-general set whose characteristic is not
/// 4k+3. Both edges must be >= 3.
BigInt cardinality_cap(const BigInt& e1, const BigInt& e2);

/// 4 |M1M2| |M1M3|.
BigInt erdos_cardinality_cap(const BigInt& e1, const BigInt& e2);

}  // namespace ips
