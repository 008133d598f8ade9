#include "ips/weeding.hpp"

#include <cstdlib>
#include <string>

namespace ips {

ErdosCurve::ErdosCurve(std::int64_t m, std::int64_t n) : edge_length(m), index(n) {
  if (m < 1) throw IpsError(ErrorKind::InvalidArgument, "edge length must be >= 1");
  if (std::llabs(n) >= m) {
    throw IpsError(ErrorKind::OutOfRange, "curve index " + std::to_string(n) + " out of range for edge " +
                                              std::to_string(m) + " (|index| <= " + std::to_string(m - 1) + ")");
  }
}

BigInt preweeding_radical(std::int64_t m, std::int64_t n, std::int64_t s) {
  if (m < 1 || n < 1 || s < 1 || s > m || 2 * n <= s) {
    throw IpsError(ErrorKind::Degenerate, "preweeding_radical needs m, n, s >= 1, s <= m and 2n > s");
  }
  const BigInt M(static_cast<long>(m)), N(static_cast<long>(n)), S(static_cast<long>(s));
  const BigInt v = S * (2 * M + 2 * N - S) * (2 * N - S) * (2 * M - S);
  if (sgn(v) <= 0) throw IpsError(ErrorKind::Degenerate, "non-positive radical: degenerate configuration");
  return v;
}

bool weeding_allows(std::int64_t edge_length, std::int64_t curve_index, CharClass cls) {
  if (edge_length < 1 || std::llabs(curve_index) >= edge_length) {
    throw IpsError(ErrorKind::OutOfRange, "curve index out of range for the edge");
  }
  const bool edge_even = edge_length % 2 == 0;
  const bool index_even = curve_index % 2 == 0;
  switch (cls) {
    case CharClass::NotThreeMod4: return edge_even == index_even;
    case CharClass::NotSevenMod8: return !(edge_even && !index_even);
    case CharClass::Unrestricted: return true;
  }
  return true;
}

bool weeding_allows_char(std::int64_t edge_length, std::int64_t curve_index, const BigInt& q) {
  const BigInt r8 = q % 8;
  if (r8 % 4 != 3) return weeding_allows(edge_length, curve_index, CharClass::NotThreeMod4);
  if (r8 == 3) return weeding_allows(edge_length, curve_index, CharClass::NotSevenMod8);
  return weeding_allows(edge_length, curve_index, CharClass::Unrestricted);
}

std::vector<CurvePoint> enumerate_curve_points(const ErdosCurve& curve, std::int64_t max_radius,
                                               const std::optional<BigInt>& char_filter) {
  if (max_radius < 1) throw IpsError(ErrorKind::InvalidArgument, "max_radius must be >= 1");
  const std::int64_t m = curve.edge_length;
  const std::int64_t n = curve.index;
  std::vector<CurvePoint> out;
  if (char_filter && !weeding_allows_char(m, n, *char_filter)) return out;
  for (std::int64_t k = 1; k <= max_radius; ++k) {
    const std::int64_t l = k - n;
    if (l < 1 || k + l <= m) continue;  // k + l = m lies on the focal segment
    const BigInt K(static_cast<long>(k)), L(static_cast<long>(l)), M(static_cast<long>(m));
    // (2m y)^2 = 4m^2 k^2 - (m^2 + a)^2 = 16 S^2 of the triangle (m, k, l).
    const BigInt h16 = (M + K + L) * (M + K - L) * (K + L - M) * (L + M - K);
    const auto dec = squarefree_decompose(h16);
    if (char_filter && dec.squarefree_part != *char_filter) continue;
    out.push_back({k, l, K * K - L * L, dec.square_part, dec.squarefree_part, 2 * m});
  }
  return out;
}

BigRat min_height_bound(const IntTriangle& t, HeightClass cls) {
  if (cls == HeightClass::NotFourKPlusThree) return BigRat(2 * t.a - 1);
  return BigRat(t.a) - BigRat(1, 4);
}

BigRat min_height_exact(const IntTriangle& t) {
  if (t.degenerate()) throw IpsError(ErrorKind::Degenerate, "degenerate triangle has zero height");
  // h^2 = a^2 - ((c^2 + a^2 - b^2) / 2c)^2
  const BigRat proj = make_rat(t.c * t.c + t.a * t.a - t.b * t.b, 2 * t.c);
  return BigRat(t.a * t.a) - proj * proj;
}

BigInt cardinality_cap(const BigInt& e1, const BigInt& e2) {
  if (e1 < 3 || e2 < 3) {
    throw IpsError(ErrorKind::OutOfRange, "cardinality_cap applies to edges of length >= 3");
  }
  return e1 * e2 - 2;
}

BigInt erdos_cardinality_cap(const BigInt& e1, const BigInt& e2) {
  if (e1 < 1 || e2 < 1) throw IpsError(ErrorKind::InvalidArgument, "edge lengths must be >= 1");
  return 4 * e1 * e2;
}

}  // namespace ips
