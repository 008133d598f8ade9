#include "ips/exactmath.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

namespace ips {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::RadicandMismatch: return "radicand mismatch";
    case ErrorKind::Degenerate: return "degenerate configuration";
    case ErrorKind::Uncertified: return "uncertified factorization";
    case ErrorKind::Inconsistent: return "inconsistent input";
    case ErrorKind::NotApplicable: return "not applicable";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw IpsError(ErrorKind::DivisionByZero, "rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& v) { return v.get_str(10); }
std::string to_string(const BigRat& v) { return v.get_str(10); }

BigInt parse_bigint(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  if (i == text.size()) throw IpsError(ErrorKind::Parse, "expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw IpsError(ErrorKind::Parse, "expected an integer, got '" + text + "'");
    }
  }
  // mpz_class rejects a leading '+'.
  return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw IpsError(ErrorKind::OutOfRange, "integer does not fit in 64 bits: " + to_string(v));
  return static_cast<std::int64_t>(v.get_si());
}

IsqrtResult isqrt(const BigInt& n) {
  if (sgn(n) < 0) throw IpsError(ErrorKind::InvalidArgument, "isqrt of a negative number");
  IsqrtResult out;
  BigInt rem;
  mpz_sqrtrem(out.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  out.exact = sgn(rem) == 0;
  return out;
}

bool rational_sqrt(const BigRat& v, BigRat* root) {
  if (sgn(v) < 0) return false;
  const auto num = isqrt(v.get_num());
  if (!num.exact) return false;
  const auto den = isqrt(v.get_den());
  if (!den.exact) return false;
  if (root) *root = make_rat(num.root, den.root);
  return true;
}

namespace {

// Accumulates prime powers p^e into the decomposition.
void absorb(SquarefreeDecomp& d, const BigInt& p, unsigned long e) {
  if (e >= 2) {
    BigInt s;
    mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), e / 2);
    d.square_part *= s;
  }
  if (e % 2 == 1) d.squarefree_part *= p;
}

void decompose_u64(std::uint64_t n, std::uint64_t bound, SquarefreeDecomp& d, BigInt& cofactor) {
  auto take = [&](std::uint64_t p) {
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) absorb(d, BigInt(static_cast<unsigned long>(p)), e);
  };
  take(2);
  for (std::uint64_t p = 3; p <= bound && p <= n / p; p += 2) take(p);
  cofactor = BigInt(static_cast<unsigned long>(n));
}

void decompose_big(BigInt n, std::uint64_t bound, SquarefreeDecomp& d, BigInt& cofactor) {
  auto take = [&](unsigned long p) {
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) return;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    absorb(d, BigInt(p), e);
  };
  take(2);
  for (std::uint64_t p = 3; p <= bound; p += 2) {
    if (BigInt(static_cast<unsigned long>(p)) * p > n) break;
    take(static_cast<unsigned long>(p));
  }
  cofactor = n;
}

// Splits a cofactor whose prime factors all exceed `bound`. Returns false
// when no certificate applies.
bool certify_cofactor(const BigInt& c, std::uint64_t bound, SquarefreeDecomp& d) {
  if (c == 1) return true;
  const BigInt b(static_cast<unsigned long>(bound));
  const BigInt b1 = b + 1;
  if (c < b1 * b1) {  // a composite would need two factors > bound
    d.squarefree_part *= c;
    return true;
  }
  if (mpz_perfect_power_p(c.get_mpz_t())) {
    const auto max_k = static_cast<unsigned long>(mpz_sizeinbase(c.get_mpz_t(), 2));
    for (unsigned long k = max_k; k >= 2; --k) {
      BigInt r;
      if (mpz_root(r.get_mpz_t(), c.get_mpz_t(), k) != 0) {
        SquarefreeDecomp inner{1, 1};
        if (!certify_cofactor(r, bound, inner)) return false;
        // c = r^k with r = s^2 * f, f squarefree and coprime to nothing else here.
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), inner.square_part.get_mpz_t(), k);
        d.square_part *= t;
        absorb(d, inner.squarefree_part, k);
        return true;
      }
    }
  }
  if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) {
    d.squarefree_part *= c;
    return true;
  }
  if (c < b1 * b1 * b1) {  // p*q with distinct primes; p^2 was ruled out above
    d.squarefree_part *= c;
    return true;
  }
  return false;
}

}  // namespace

SquarefreeDecomp squarefree_decompose(const BigInt& n, std::uint64_t trial_bound) {
  if (sgn(n) <= 0) throw IpsError(ErrorKind::InvalidArgument, "squarefree_decompose needs n >= 1, got " + to_string(n));
  if (trial_bound < 2) trial_bound = 2;
  SquarefreeDecomp d{1, 1};
  BigInt cofactor;
  if (n.fits_ulong_p()) {
    decompose_u64(n.get_ui(), trial_bound, d, cofactor);
  } else {
    decompose_big(n, trial_bound, d, cofactor);
  }
  if (!certify_cofactor(cofactor, trial_bound, d)) {
    throw IpsError(ErrorKind::Uncertified,
                   "cannot certify the squarefree part of cofactor " + to_string(cofactor));
  }
  return d;
}

BigInt squarefree_part(const BigInt& n, std::uint64_t trial_bound) {
  return squarefree_decompose(n, trial_bound).squarefree_part;
}

bool is_squarefree(const BigInt& n) {
  return sgn(n) > 0 && squarefree_decompose(n).square_part == 1;
}

// ---------------------------------------------------------------------------
// QuadRational

QuadRational::QuadRational(BigInt radicand) : u_(0), v_(0), q_(std::move(radicand)) {
  if (sgn(q_) <= 0 || !is_squarefree(q_)) {
    throw IpsError(ErrorKind::InvalidArgument, "radicand must be a positive squarefree integer, got " + to_string(q_));
  }
}

QuadRational::QuadRational(BigRat rational_part, BigRat radical_coeff, BigInt radicand)
    : QuadRational(std::move(radicand)) {
  u_ = std::move(rational_part);
  v_ = std::move(radical_coeff);
  u_.canonicalize();
  v_.canonicalize();
  if (q_ == 1) {
    u_ += v_;
    v_ = 0;
  }
}

QuadRational QuadRational::rational(BigRat value, BigInt radicand) {
  return QuadRational(std::move(value), BigRat(0), std::move(radicand));
}

int QuadRational::sign() const {
  const int su = sgn(u_);
  const int sv = sgn(v_);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  // Opposite signs: the larger magnitude wins.
  const BigRat uu = u_ * u_;
  const BigRat vvq = v_ * v_ * q_;
  const int c = cmp(uu, vvq);
  if (c == 0) return 0;
  return c > 0 ? su : sv;
}

double QuadRational::approx() const {
  return u_.get_d() + v_.get_d() * std::sqrt(q_.get_d());
}

void QuadRational::check_compatible(const QuadRational& rhs) const {
  if (q_ != rhs.q_ && !is_rational() && !rhs.is_rational()) {
    throw IpsError(ErrorKind::RadicandMismatch,
                   "radicand mismatch: " + to_string(q_) + " vs " + to_string(rhs.q_));
  }
}

void QuadRational::adopt_radicand(const QuadRational& rhs) {
  if (q_ != rhs.q_ && is_rational()) q_ = rhs.q_;
}

QuadRational QuadRational::operator-() const {
  QuadRational r = *this;
  r.u_ = -r.u_;
  r.v_ = -r.v_;
  return r;
}

QuadRational& QuadRational::operator+=(const QuadRational& rhs) {
  check_compatible(rhs);
  adopt_radicand(rhs);
  u_ += rhs.u_;
  v_ += rhs.v_;
  return *this;
}

QuadRational& QuadRational::operator-=(const QuadRational& rhs) {
  check_compatible(rhs);
  adopt_radicand(rhs);
  u_ -= rhs.u_;
  v_ -= rhs.v_;
  return *this;
}

QuadRational& QuadRational::operator*=(const QuadRational& rhs) {
  check_compatible(rhs);
  adopt_radicand(rhs);
  BigRat u = u_ * rhs.u_ + v_ * rhs.v_ * q_;
  BigRat v = u_ * rhs.v_ + v_ * rhs.u_;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

QuadRational& QuadRational::operator/=(const QuadRational& rhs) {
  check_compatible(rhs);
  if (rhs.is_zero()) throw IpsError(ErrorKind::DivisionByZero, "division by zero in Q(sqrt q)");
  adopt_radicand(rhs);
  // Multiply by the conjugate; the norm is nonzero because sqrt(q) is irrational for q > 1.
  const BigRat norm = rhs.u_ * rhs.u_ - rhs.v_ * rhs.v_ * rhs.q_;
  BigRat u = (u_ * rhs.u_ - v_ * rhs.v_ * q_) / norm;
  BigRat v = (v_ * rhs.u_ - u_ * rhs.v_) / norm;
  u_ = std::move(u);
  v_ = std::move(v);
  return *this;
}

bool operator==(const QuadRational& a, const QuadRational& b) {
  if (a.u_ != b.u_ || a.v_ != b.v_) return false;
  return a.is_rational() || a.q_ == b.q_;
}

std::string QuadRational::str() const {
  std::ostringstream os;
  if (is_rational()) {
    os << u_.get_str();
  } else {
    os << u_.get_str() << (sgn(v_) < 0 ? " - " : " + ") << BigRat(abs(v_)).get_str() << "*sqrt(" << q_.get_str() << ")";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QuadRational& v) { return os << v.str(); }

QuadRational quad_arith(const QuadRational& a, const QuadRational& b, QuadOp op) {
  switch (op) {
    case QuadOp::Add: return a + b;
    case QuadOp::Sub: return a - b;
    case QuadOp::Mul: return a * b;
    case QuadOp::Div: return a / b;
  }
  throw IpsError(ErrorKind::InvalidArgument, "unknown operation");
}

}  // namespace ips
