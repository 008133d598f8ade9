#include "ips/point_set.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace ips {

namespace {

void require_index(const GridPointSet& set, std::size_t i) {
  if (i >= set.size()) {
    throw IpsError(ErrorKind::OutOfRange,
                   "point index " + std::to_string(i) + " out of range (size " + std::to_string(set.size()) + ")");
  }
}

void require_distinct(std::initializer_list<std::size_t> idx) {
  std::set<std::size_t> seen(idx);
  if (seen.size() != idx.size()) throw IpsError(ErrorKind::InvalidArgument, "point indices must be distinct");
}

// sqf(x*y) for squarefree x, y: shared primes pair up into a square.
BigInt squarefree_product(const BigInt& x, const BigInt& y) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return (x / g) * (y / g);
}

// Integer cross product of (Pj - Pi) x (Pk - Pi) in grid units; the true
// value is this times sqrt(q)/denom^2, so the signs agree.
BigInt grid_cross(const GridPoint& pi, const GridPoint& pj, const GridPoint& pk) {
  return (pj.a - pi.a) * (pk.b - pi.b) - (pk.a - pi.a) * (pj.b - pi.b);
}

}  // namespace

const char* to_string(PositionClass p) noexcept {
  switch (p) {
    case PositionClass::NotSemiGeneral: return "not-semi-general";
    case PositionClass::SemiGeneral: return "semi-general";
    case PositionClass::General: return "general";
  }
  return "?";
}

const char* to_string(Shape s) noexcept {
  switch (s) {
    case Shape::Facher: return "facher";
    case Shape::Rails: return "rails";
    case Shape::Neither: return "neither";
    case Shape::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(ViolationKind v) noexcept {
  switch (v) {
    case ViolationKind::NonIntegral: return "non-integral";
    case ViolationKind::Collinear: return "collinear";
    case ViolationKind::Concircular: return "concircular";
  }
  return "?";
}

GridPointSet::GridPointSet(BigInt radicand, BigInt denom, std::vector<GridPoint> points)
    : radicand_(std::move(radicand)), denom_(std::move(denom)), points_(std::move(points)) {
  if (sgn(radicand_) <= 0 || !is_squarefree(radicand_)) {
    throw IpsError(ErrorKind::InvalidArgument, "radicand must be positive and squarefree, got " + to_string(radicand_));
  }
  if (sgn(denom_) <= 0) throw IpsError(ErrorKind::InvalidArgument, "denominator must be >= 1, got " + to_string(denom_));
  std::sort(points_.begin(), points_.end());
  if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
    throw IpsError(ErrorKind::InvalidArgument, "point set contains duplicate points");
  }
  BigInt g = denom_;
  for (const auto& p : points_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.a.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.b.get_mpz_t());
  }
  if (g > 1) {
    denom_ /= g;
    for (auto& p : points_) {
      p.a /= g;
      p.b /= g;
    }
  }
}

QuadRational GridPointSet::x(std::size_t i) const {
  require_index(*this, i);
  return QuadRational(make_rat(points_[i].a, denom_), BigRat(0), radicand_);
}

QuadRational GridPointSet::y(std::size_t i) const {
  require_index(*this, i);
  return QuadRational(BigRat(0), make_rat(points_[i].b, denom_), radicand_);
}

PairDistance pair_distance(const GridPointSet& set, std::size_t i, std::size_t j) {
  require_index(set, i);
  require_index(set, j);
  if (i == j) throw IpsError(ErrorKind::InvalidArgument, "pair_distance needs two distinct indices");
  const auto& p = set.points()[i];
  const auto& r = set.points()[j];
  const BigInt da = p.a - r.a;
  const BigInt db = p.b - r.b;
  const BigInt n = da * da + set.radicand() * db * db;
  PairDistance out;
  out.squared = make_rat(n, set.denom() * set.denom());
  const auto root = isqrt(n);
  if (root.exact) {
    out.value = make_rat(root.root, set.denom());
    out.is_integer = out.value->get_den() == 1;
  }
  return out;
}

IntTriangle::IntTriangle(BigInt x, BigInt y, BigInt z) {
  std::array<BigInt, 3> s{std::move(x), std::move(y), std::move(z)};
  std::sort(s.begin(), s.end());
  if (sgn(s[0]) <= 0) throw IpsError(ErrorKind::InvalidArgument, "triangle sides must be positive");
  if (s[0] + s[1] < s[2]) {
    throw IpsError(ErrorKind::InvalidArgument, "sides " + to_string(s[0]) + ", " + to_string(s[1]) + ", " +
                                                   to_string(s[2]) + " violate the triangle inequality");
  }
  a = std::move(s[0]);
  b = std::move(s[1]);
  c = std::move(s[2]);
}

BigInt IntTriangle::heron16() const {
  return (a + b + c) * (b + c - a) * (a + c - b) * (a + b - c);
}

BigInt triangle_char(const IntTriangle& t) {
  if (t.degenerate()) {
    throw IpsError(ErrorKind::Degenerate, "degenerate triangle (" + to_string(t.a) + ", " + to_string(t.b) + ", " +
                                              to_string(t.c) + ") has no characteristic");
  }
  // Factor the four Heron factors one at a time; each is at most the perimeter.
  const std::array<BigInt, 4> factors{t.a + t.b + t.c, t.b + t.c - t.a, t.a + t.c - t.b, t.a + t.b - t.c};
  BigInt q = 1;
  for (const auto& f : factors) q = squarefree_product(q, squarefree_part(f));
  return q;
}

BigInt set_characteristic(const GridPointSet& set) {
  const std::size_t n = set.size();
  std::vector<std::vector<BigInt>> dist(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = pair_distance(set, i, j);
      if (!d.is_integer) {
        throw IpsError(ErrorKind::Inconsistent,
                       "characteristic needs integral distances; pair (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") is not");
      }
      dist[i][j] = dist[j][i] = d.value->get_num();
    }
  }
  std::optional<BigInt> q;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const IntTriangle t(dist[i][j], dist[j][k], dist[i][k]);
        if (t.degenerate()) continue;
        const BigInt c = triangle_char(t);
        if (!q) {
          q = c;
        } else if (*q != c) {
          throw IpsError(ErrorKind::Inconsistent, "triangles disagree on the characteristic: " + to_string(*q) +
                                                      " vs " + to_string(c));
        }
      }
    }
  }
  if (!q) throw IpsError(ErrorKind::Degenerate, "all points are collinear; characteristic undefined");
  if (*q != set.radicand()) {
    throw IpsError(ErrorKind::Inconsistent, "triangle characteristic " + to_string(*q) + " differs from grid radicand " +
                                                to_string(set.radicand()));
  }
  return *q;
}

bool collinear(const GridPointSet& set, std::size_t i, std::size_t j, std::size_t k) {
  require_index(set, i);
  require_index(set, j);
  require_index(set, k);
  require_distinct({i, j, k});
  const QuadRational cross = (set.x(j) - set.x(i)) * (set.y(k) - set.y(i)) - (set.x(k) - set.x(i)) * (set.y(j) - set.y(i));
  return cross.is_zero();
}

bool concircular(const GridPointSet& set, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::array<std::size_t, 4> idx{i, j, k, l};
  for (auto v : idx) require_index(set, v);
  require_distinct({i, j, k, l});
  for (std::size_t s = 0; s < 4; ++s) {
    std::array<std::size_t, 3> tri{};
    for (std::size_t t = 0, u = 0; t < 4; ++t) {
      if (t != s) tri[u++] = idx[t];
    }
    if (collinear(set, tri[0], tri[1], tri[2])) {
      throw IpsError(ErrorKind::Degenerate, "concircularity is ill-posed with a collinear sub-triple");
    }
  }
  // Rows (x^2 + y^2, x, y, 1); Leibniz expansion in Q(sqrt q).
  const QuadRational one = QuadRational::rational(1, set.radicand());
  std::array<std::array<QuadRational, 4>, 4> m{};
  for (std::size_t r = 0; r < 4; ++r) {
    const QuadRational x = set.x(idx[r]);
    const QuadRational y = set.y(idx[r]);
    m[r] = {x * x + y * y, x, y, one};
  }
  std::array<int, 4> perm{0, 1, 2, 3};
  QuadRational det(set.radicand());
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b];
    }
    QuadRational term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * m[3][perm[3]];
    if (inversions % 2) {
      det -= term;
    } else {
      det += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det.is_zero();
}

VerificationReport classify(const GridPointSet& set) {
  const std::size_t n = set.size();
  if (n < 3) throw IpsError(ErrorKind::InvalidArgument, "classification needs at least 3 points");
  const auto& pts = set.points();
  VerificationReport rep;
  rep.cardinality = n;
  rep.is_integral = true;

  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = pair_distance(set, i, j);
      if (!d.is_integer) {
        rep.is_integral = false;
        rep.violations.push_back({ViolationKind::NonIntegral, {i, j}});
      }
      if (first || d.squared > rep.diameter_squared) {
        rep.diameter_squared = d.squared;
        first = false;
      }
    }
  }
  BigRat root;
  if (rational_sqrt(rep.diameter_squared, &root)) rep.diameter = root;

  bool has_triangle = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (collinear(set, i, j, k)) {
          ++rep.collinear_triples;
          rep.violations.push_back({ViolationKind::Collinear, {i, j, k}});
        } else {
          has_triangle = true;
        }
      }
    }
  }

  if (has_triangle) {
    // Grid area route: every triangle area is (integer) * sqrt(q) / (2 denom^2).
    rep.characteristic = rep.is_integral ? set_characteristic(set) : set.radicand();
  }

  rep.semi_general = rep.collinear_triples == 0;
  if (rep.semi_general) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          for (std::size_t l = k + 1; l < n; ++l) {
            if (concircular(set, i, j, k, l)) {
              ++rep.concircular_quadruples;
              rep.violations.push_back({ViolationKind::Concircular, {i, j, k, l}});
            }
          }
        }
      }
    }
  }
  rep.general = rep.semi_general && rep.concircular_quadruples == 0;
  rep.position = rep.general ? PositionClass::General
                             : (rep.semi_general ? PositionClass::SemiGeneral : PositionClass::NotSemiGeneral);
  rep.restricted_class = rep.is_integral && rep.semi_general && rep.characteristic && *rep.characteristic % 4 != 3;

  // Lines and parallelism survive the linear map (a, b) -> (a/denom, b sqrt(q)/denom),
  // so the integer grid coordinates suffice here.
  std::optional<std::pair<std::size_t, std::size_t>> split;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<std::size_t> on, off;
      for (std::size_t k = 0; k < n; ++k) {
        (k == i || k == j || sgn(grid_cross(pts[i], pts[j], pts[k])) == 0 ? on : off).push_back(k);
      }
      rep.max_points_on_line = std::max(rep.max_points_on_line, on.size());
      if (split || on.size() < 2 || off.size() < 2) continue;
      const BigInt dx = pts[j].a - pts[i].a;
      const BigInt dy = pts[j].b - pts[i].b;
      bool parallel_line = true;
      const auto& o = pts[off[0]];
      for (std::size_t t = 1; t < off.size() && parallel_line; ++t) {
        const auto& p = pts[off[t]];
        parallel_line = sgn(dx * (p.b - o.b) - dy * (p.a - o.a)) == 0;
      }
      if (parallel_line) split = std::minmax(on.size(), off.size());
    }
  }
  rep.rails_split = split;
  if (n == 3) {
    rep.shape = Shape::NotApplicable;
  } else if (rep.max_points_on_line == n - 1) {
    rep.shape = Shape::Facher;
  } else if (split) {
    rep.shape = Shape::Rails;
  } else {
    rep.shape = Shape::Neither;
  }
  return rep;
}

bool edge_one_structure_check(const GridPointSet& set) {
  const std::size_t n = set.size();
  const auto& pts = set.points();
  bool found_unit = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto d = pair_distance(set, i, j);
      if (!d.is_integer || *d.value != 1) continue;
      found_unit = true;
      std::vector<std::size_t> off;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i && k != j && sgn(grid_cross(pts[i], pts[j], pts[k])) != 0) off.push_back(k);
      }
      if (off.size() != 1) continue;
      if (pair_distance(set, off[0], i).squared == pair_distance(set, off[0], j).squared) return true;
    }
  }
  if (!found_unit) throw IpsError(ErrorKind::NotApplicable, "the set has no edge of length 1");
  return false;
}

}  // namespace ips
