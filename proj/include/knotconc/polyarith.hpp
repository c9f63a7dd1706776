#pragma once

// Exact integer polynomials (dense, ordinary) and integer Laurent polynomials.
// Coefficients are GMP integers; nothing in here touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace knotconc {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense polynomial with integer coefficients, coeffs[i] multiplies t^i.
/// The highest stored coefficient is always nonzero; zero is the empty vector.
class IntPoly {
 public:
  /// Degree of the zero polynomial.
  static constexpr long kZeroDegree = -1;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  /// The monomial c*t^k.
  static IntPoly monomial(const Integer& c, std::size_t k);

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^i, zero beyond the degree.
  Integer operator[](std::size_t i) const;
  const Integer& leading() const;

  /// Positive gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  /// p / content(p), sign chosen so the leading coefficient is positive.
  IntPoly primitive_part() const;
  IntPoly derivative() const;
  /// Coefficient sequence reversed: t^deg * p(1/t).
  IntPoly reversed() const;
  bool is_palindromic() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& c, const IntPoly& a);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Integer Laurent polynomial sum_i coeffs[i] * t^(low + i).
/// Canonical storage: first and last coefficients nonzero; zero has low = 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t low, std::vector<Integer> coeffs);
  LaurentPoly(std::int64_t low, std::initializer_list<long> coeffs);
  /// Same polynomial, exponents starting at 0.
  explicit LaurentPoly(const IntPoly& p);

  std::int64_t low() const noexcept { return low_; }
  /// Highest exponent; equals low() - 1 for zero.
  std::int64_t high() const noexcept { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Span high - low, or IntPoly::kZeroDegree for zero.
  long width() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Integer coeff(std::int64_t exponent) const;

  /// Coefficients shifted to start at t^0. Drops the unit t^low.
  IntPoly to_int_poly() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();
  std::int64_t low_ = 0;
  std::vector<Integer> coeffs_;
};

/// Unit-normalized representative: lowest exponent 0, lowest coefficient > 0.
LaurentPoly normalize(const LaurentPoly& p);

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly negate(const LaurentPoly& p);
LaurentPoly scale(const Integer& c, const LaurentPoly& p);

/// Quotient q with normalize(a) = normalize(b * q), or nullopt when b does not
/// divide a over Z[t, 1/t]. The quotient is returned normalized.
/// Throws DivisionByZero when b is zero.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// p(1/t). Not normalized, so involute(involute(p)) == p.
LaurentPoly involute(const LaurentPoly& p);

/// normalize(p) == normalize(involute(p)).
bool is_symmetric(const LaurentPoly& p);

Rational eval_rational(const IntPoly& p, const Rational& x);
/// Throws EvalAtZero when p has negative exponents and x == 0.
Rational eval_rational(const LaurentPoly& p, const Rational& x);

// Ordinary polynomial helpers over Z, used by root localization.

/// Division of a by b when the quotient is integral; nullopt otherwise.
std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b);

/// Remainder of a under pseudo-division by b, scaled by |lc(b)|^(deg a - deg b + 1)
/// so that its sign agrees with the true rational remainder.
IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

/// Squarefree factorization (Yun): p = c * prod f_i^i. Entry i-1 holds f_i,
/// possibly the constant 1. Nonconstant p only.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

}  // namespace knotconc
