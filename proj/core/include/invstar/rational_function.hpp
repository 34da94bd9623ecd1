#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "invstar/polynomial.hpp"

namespace invstar {

/// Reduced quotient of two polynomials in lambda.
///
/// Canonical form: gcd(numerator, denominator) = 1 and the denominator is
/// monic, so structural equality is mathematical equality.  Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(Rational constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  RationalFunction(I constant) : RationalFunction(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial numerator);  // NOLINT(google-explicit-constructor)
  /// Throws ArithmeticError when the denominator is zero.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  /// deg numerator - deg denominator; empty for zero.  Expansion at infinity
  /// exists iff this is <= 0.
  std::optional<int> order_at_infinity() const;

  /// Coefficient of lambda^-1 in the Laurent expansion at lambda = 0.
  Rational residue_at_zero() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator*=(const Rational& scalar);
  /// Throws ArithmeticError on division by zero.
  RationalFunction& operator/=(const RationalFunction& other);

  RationalFunction inverse() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator*(RationalFunction a, const Rational& s) { return a *= s; }
  friend RationalFunction operator*(const Rational& s, RationalFunction a) { return a *= s; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "(num)/(den)", or just the numerator for polynomials.
  std::string str(std::string_view variable = "lambda") const;

 private:
  struct Reduced {};
  RationalFunction(Polynomial numerator, Polynomial denominator, Reduced)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}

  void normalize();

  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace invstar
