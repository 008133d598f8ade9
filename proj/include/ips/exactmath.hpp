#pragma once

// Exact integer, rational and quadratic-field arithmetic.
//
// BigInt/BigRat are thin aliases over GMP. QuadRational is a number
// u + v*sqrt(q) with rational u, v and squarefree q; q = 1 is folded into
// the rational part so that rational geometry needs no special casing.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ips/error.hpp"

namespace ips {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Builds a rational in lowest terms; throws on a zero denominator.
BigRat make_rat(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

/// Parses a decimal integer with optional sign. Throws ErrorKind::Parse.
BigInt parse_bigint(const std::string& text);

/// Converts to int64 when it fits, throwing OutOfRange otherwise.
std::int64_t to_int64(const BigInt& v);

struct IsqrtResult {
  BigInt root;
  bool exact = false;
};

/// floor(sqrt(n)) and whether n is a perfect square. Rejects n < 0.
IsqrtResult isqrt(const BigInt& n);

/// True iff v is the square of a rational; writes the root when asked.
bool rational_sqrt(const BigRat& v, BigRat* root = nullptr);

struct SquarefreeDecomp {
  BigInt square_part;      // largest s with s^2 | n
  BigInt squarefree_part;  // n / s^2, squarefree

  friend bool operator==(const SquarefreeDecomp&, const SquarefreeDecomp&) = default;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// n = square_part^2 * squarefree_part.
///
/// Trial division runs up to `trial_bound`; the cofactor left over (all of
/// whose prime factors exceed the bound) is then certified by perfect-power
/// extraction, a primality test, or the size argument cofactor < bound^3.
/// A cofactor none of these can settle raises ErrorKind::Uncertified.
SquarefreeDecomp squarefree_decompose(const BigInt& n,
                                      std::uint64_t trial_bound = kDefaultTrialBound);

/// Squarefree part only.
BigInt squarefree_part(const BigInt& n, std::uint64_t trial_bound = kDefaultTrialBound);

bool is_squarefree(const BigInt& n);

class QuadRational {
 public:
  /// Zero in Q(sqrt(radicand)).
  explicit QuadRational(BigInt radicand = 1);
  QuadRational(BigRat rational_part, BigRat radical_coeff, BigInt radicand);

  static QuadRational rational(BigRat value, BigInt radicand = 1);

  const BigRat& rational_part() const noexcept { return u_; }
  const BigRat& radical_coeff() const noexcept { return v_; }
  const BigInt& radicand() const noexcept { return q_; }

  bool is_zero() const noexcept { return sgn(u_) == 0 && sgn(v_) == 0; }
  bool is_rational() const noexcept { return sgn(v_) == 0; }

  /// Exact sign of u + v*sqrt(q); no floating point involved.
  int sign() const;

  /// Value rounded to double, for display and property tests only.
  double approx() const;

  QuadRational operator-() const;
  QuadRational& operator+=(const QuadRational& rhs);
  QuadRational& operator-=(const QuadRational& rhs);
  QuadRational& operator*=(const QuadRational& rhs);
  QuadRational& operator/=(const QuadRational& rhs);

  friend QuadRational operator+(QuadRational a, const QuadRational& b) { return a += b; }
  friend QuadRational operator-(QuadRational a, const QuadRational& b) { return a -= b; }
  friend QuadRational operator*(QuadRational a, const QuadRational& b) { return a *= b; }
  friend QuadRational operator/(QuadRational a, const QuadRational& b) { return a /= b; }

  /// Component-wise; radicands must agree unless both values are rational.
  friend bool operator==(const QuadRational& a, const QuadRational& b);

  std::string str() const;

 private:
  void check_compatible(const QuadRational& rhs) const;
  void adopt_radicand(const QuadRational& rhs);

  BigRat u_;
  BigRat v_;
  BigInt q_;
};

std::ostream& operator<<(std::ostream& os, const QuadRational& v);

enum class QuadOp { Add, Sub, Mul, Div };

/// Functional form of the field operations.
QuadRational quad_arith(const QuadRational& a, const QuadRational& b, QuadOp op);

inline int quad_sign(const QuadRational& a) { return a.sign(); }

}  // namespace ips
