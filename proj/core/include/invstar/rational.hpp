#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace invstar {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  explicit Rational(mpq_class value);

  /// Parses "p/q", "p" or "-p/q".  Throws SpecError on anything else.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is one.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  /// Throws ArithmeticError when other is zero.
  Rational& operator/=(const Rational& other);

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  Rational abs() const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  mpq_class value_;
};

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace invstar
