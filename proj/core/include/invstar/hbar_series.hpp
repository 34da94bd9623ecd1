#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "invstar/rational.hpp"
#include "invstar/rational_function.hpp"

namespace invstar {

/// Power series in hbar truncated after hbar^order.
class HbarSeries {
 public:
  explicit HbarSeries(unsigned order);
  HbarSeries(unsigned order, std::vector<Rational> coefficients);

  /// The series 1 + 0*hbar + ... truncated at order.
  static HbarSeries one(unsigned order);
  /// 1 / (1 - ratio*hbar) truncated at order.
  static HbarSeries geometric(const Rational& ratio, unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](std::size_t power) const { return coeffs_.at(power); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  HbarSeries& operator+=(const HbarSeries& other);
  HbarSeries& operator*=(const Rational& scalar);
  friend HbarSeries operator+(HbarSeries a, const HbarSeries& b) { return a += b; }
  /// Truncated Cauchy product; the result has the smaller of the two orders.
  friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
  friend HbarSeries operator*(HbarSeries a, const Rational& s) { return a *= s; }

  /// Multiplies by hbar^k, dropping what falls beyond the order.
  HbarSeries shifted(unsigned k) const;

  friend bool operator==(const HbarSeries&, const HbarSeries&) = default;

  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// First order+1 Taylor coefficients in hbar of f(1/hbar).  Throws
/// ArithmeticError when f has a pole at lambda = infinity.
HbarSeries expand_at_infinity(const RationalFunction& f, unsigned order);

std::ostream& operator<<(std::ostream& os, const HbarSeries& s);

}  // namespace invstar
