#include "ips/bounds.hpp"

#include <cmath>
#include <string>

namespace ips {

namespace {

void require_n(std::int64_t n) {
  if (n < 3) throw IpsError(ErrorKind::InvalidArgument, "bounds are stated for n >= 3, got " + std::to_string(n));
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

std::string_view to_string(BoundVariant v) noexcept {
  switch (v) {
    case BoundVariant::ErdosSqrt: return "erdos_sqrt";
    case BoundVariant::SolymosiLinear: return "solymosi_linear";
    case BoundVariant::PpsLinear3457: return "pps_linear_0.3457";
    case BoundVariant::PpsLinear5of11: return "pps_linear_5/11";
    case BoundVariant::SemiGeneral54: return "semi_general_54";
    case BoundVariant::Main54: return "main_54";
  }
  return "?";
}

std::optional<BoundVariant> parse_bound_variant(std::string_view name) noexcept {
  for (auto v : kAllBoundVariants) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

double bound_value(BoundVariant v, std::int64_t n) {
  require_n(n);
  const long double x = static_cast<long double>(n);
  switch (v) {
    case BoundVariant::ErdosSqrt: return static_cast<double>(std::sqrt(x) / 2);
    case BoundVariant::SolymosiLinear: return static_cast<double>(x / 24);
    case BoundVariant::PpsLinear3457: return static_cast<double>(x * 3457 / 10000);
    case BoundVariant::PpsLinear5of11: return static_cast<double>(x * 5 / 11);
    case BoundVariant::SemiGeneral54: return static_cast<double>(std::pow(x / 5, 1.25L));
    case BoundVariant::Main54: return static_cast<double>(std::pow(25 * x / 36, 1.25L));
  }
  return 0;
}

bool satisfies_bound(BoundVariant v, std::int64_t n, const BigInt& d) {
  require_n(n);
  if (sgn(d) < 0) throw IpsError(ErrorKind::InvalidArgument, "diameter must be non-negative");
  const BigInt N(static_cast<long>(n));
  switch (v) {
    case BoundVariant::ErdosSqrt: return 4 * d * d >= N;
    case BoundVariant::SolymosiLinear: return 24 * d >= N;
    case BoundVariant::PpsLinear3457: return 10000 * d >= 3457 * N;
    case BoundVariant::PpsLinear5of11: return 11 * d >= 5 * N;
    case BoundVariant::SemiGeneral54: return pow_ui(5, 5) * pow_ui(d, 4) >= pow_ui(N, 5);
    case BoundVariant::Main54: return pow_ui(36, 5) * pow_ui(d, 4) >= pow_ui(25 * N, 5);
  }
  return false;
}

BigInt min_integer_diameter(BoundVariant v, std::int64_t n) {
  BigInt d = static_cast<long>(std::floor(bound_value(v, n)));
  if (d > 0) d -= 1;
  while (!satisfies_bound(v, n, d)) d += 1;
  return d;
}

KnownDiameter known_min_diameter(std::int64_t n) {
  struct Row {
    std::int64_t lo, hi, d;
  };
  static constexpr Row rows[] = {
      {3, 3, 1},      {4, 4, 4},       {5, 6, 8},       {7, 7, 33},      {8, 9, 56},
      {10, 12, 105},  {13, 14, 532},   {15, 18, 735},   {19, 24, 1995},  {25, 27, 9555},
      {28, 28, 10672}, {29, 36, 13975},
  };
  if (n == 37) return {20000, true};
  for (const auto& r : rows) {
    if (n >= r.lo && n <= r.hi) return {r.d, false};
  }
  throw IpsError(ErrorKind::OutOfRange, "no tabulated minimum diameter for n = " + std::to_string(n));
}

StripBound strip_count_bound(const BigInt& p) {
  if (p < 1) throw IpsError(ErrorKind::InvalidArgument, "strip bound needs p >= 1");
  StripBound out;
  out.width_sq_coefficient = 2;
  out.base = p;
  out.width_sq_approx = 2.0 * std::pow(p.get_d(), 0.4);
  // k - 3 <= sqrt(2) p^(4/5)  <=>  (k - 3)^10 <= 32 p^8
  const BigInt rhs = 32 * pow_ui(p, 8);
  BigInt root;
  mpz_root(root.get_mpz_t(), rhs.get_mpz_t(), 10);
  out.max_cardinality = root + 3;
  return out;
}

bool strip_bound_dominates_main(std::int64_t n) {
  if (n <= 3) return false;
  const BigInt N(static_cast<long>(n));
  // 36 (n - 3) >= 25 sqrt(2) n, both sides positive
  return 1296 * (N - 3) * (N - 3) >= 1250 * N * N;
}

}  // namespace ips
