#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invstar/rational.hpp"

namespace invstar {

/// Univariate polynomial over the rationals in the formal parameter lambda.
/// Coefficients are stored by ascending power with trailing zeros stripped,
/// so the zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  /// coefficient * lambda^power
  static Polynomial monomial(const Rational& coefficient, unsigned power);
  static Polynomial variable() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

  /// Coefficient of lambda^power; zero past the degree.
  const Rational& coefficient(std::size_t power) const;
  const Rational& leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Largest k with lambda^k dividing the polynomial.  Zero for the zero polynomial.
  unsigned valuation() const;

  Rational evaluate(const Rational& at) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Divides by the leading coefficient.  The zero polynomial stays zero.
  Polynomial monic() const;

  /// Coefficients reversed with respect to the degree: x^deg p(1/x).
  Polynomial reversed() const;

  /// "2*lambda^2 - lambda + 1/2" style rendering.
  std::string str(std::string_view variable = "lambda") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.  Throws ArithmeticError
/// when b is zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Quotient a/b; throws InternalError when the division leaves a remainder.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor, computed by the subresultant remainder
/// sequence over the integers.  gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace invstar
