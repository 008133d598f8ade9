#pragma once

// Point sets on the Kemnitz grid and their verification.
//
// A GridPointSet stores integer pairs (a_i, b_i) together with a radicand q
// and a common denominator; point i sits at (a_i/denom, b_i*sqrt(q)/denom).
// Every integral point set with characteristic q and an edge of length m
// fits such a grid with denom = 2m.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ips/exactmath.hpp"

namespace ips {

struct GridPoint {
  BigInt a;
  BigInt b;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend bool operator<(const GridPoint& l, const GridPoint& r) {
    return l.a != r.a ? l.a < r.a : l.b < r.b;
  }
};

class GridPointSet {
 public:
  /// Validates (radicand squarefree, denom >= 1, distinct points) and
  /// normalizes: points sorted lexicographically, and the common gcd of
  /// denom and all coordinates divided out.
  GridPointSet(BigInt radicand, BigInt denom, std::vector<GridPoint> points);

  const BigInt& radicand() const noexcept { return radicand_; }
  const BigInt& denom() const noexcept { return denom_; }
  const std::vector<GridPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  QuadRational x(std::size_t i) const;
  QuadRational y(std::size_t i) const;

  friend bool operator==(const GridPointSet&, const GridPointSet&) = default;

 private:
  BigInt radicand_;
  BigInt denom_;
  std::vector<GridPoint> points_;
};

struct PairDistance {
  BigRat squared;               // exact |PiPj|^2
  std::optional<BigRat> value;  // set when the distance is rational
  bool is_integer = false;
};

PairDistance pair_distance(const GridPointSet& set, std::size_t i, std::size_t j);

/// Sides are sorted on construction; `a <= b <= c` afterwards.
struct IntTriangle {
  BigInt a, b, c;

  IntTriangle(BigInt x, BigInt y, BigInt z);

  /// 16*S^2 by Heron; zero for a degenerate triangle.
  BigInt heron16() const;
  bool degenerate() const { return a + b == c; }
};

/// Squarefree q with area commensurable to sqrt(q). Rejects degenerate
/// triangles (no characteristic) with ErrorKind::Degenerate.
BigInt triangle_char(const IntTriangle& t);

/// Common triangle characteristic of an integral set.
BigInt set_characteristic(const GridPointSet& set);

bool collinear(const GridPointSet& set, std::size_t i, std::size_t j, std::size_t k);

/// Requires no collinear sub-triple (ErrorKind::Degenerate otherwise).
bool concircular(const GridPointSet& set, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

enum class PositionClass { NotSemiGeneral, SemiGeneral, General };
enum class Shape { Facher, Rails, Neither, NotApplicable };

const char* to_string(PositionClass p) noexcept;
const char* to_string(Shape s) noexcept;

enum class ViolationKind { NonIntegral, Collinear, Concircular };
const char* to_string(ViolationKind v) noexcept;

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;
};

struct VerificationReport {
  std::size_t cardinality = 0;
  bool is_integral = false;
  std::optional<BigInt> characteristic;
  /// Set when the maximum pairwise distance is rational (always for integral sets).
  std::optional<BigRat> diameter;
  BigRat diameter_squared;
  PositionClass position = PositionClass::NotSemiGeneral;
  bool semi_general = false;
  bool general = false;
  /// Semi-general and characteristic not of the form 4k+3.
  bool restricted_class = false;
  Shape shape = Shape::NotApplicable;
  /// Points on the richest line, and the two-line split when the set is rails.
  std::size_t max_points_on_line = 0;
  std::optional<std::pair<std::size_t, std::size_t>> rails_split;
  std::size_t collinear_triples = 0;
  std::size_t concircular_quadruples = 0;
  std::vector<Violation> violations;
};

VerificationReport classify(const GridPointSet& set);

/// Checks the structure forced by a unit edge: n-1 points on the unit
/// edge's line and the remaining point on its perpendicular bisector.
/// Raises ErrorKind::NotApplicable when no pair is at distance 1.
bool edge_one_structure_check(const GridPointSet& set);

}  // namespace ips
