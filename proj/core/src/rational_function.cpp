#include "invstar/rational_function.hpp"

#include <ostream>

#include "invstar/errors.hpp"

namespace invstar {

RationalFunction::RationalFunction(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator) : num_(std::move(numerator)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  if (!den_.leading().is_one()) {
    const Rational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<int> RationalFunction::order_at_infinity() const {
  if (is_zero()) return std::nullopt;
  return num_.degree() - den_.degree();
}

Rational RationalFunction::residue_at_zero() const {
  const unsigned pole = den_.valuation();
  if (pole == 0 || is_zero()) return {};
  // den = lambda^pole * q with q(0) != 0; the residue is the coefficient of
  // lambda^(pole-1) in the Taylor series of num/q at zero.
  std::vector<Rational> q(den_.coefficients().begin() + pole, den_.coefficients().end());
  const Rational inv_q0 = q[0].inverse();
  std::vector<Rational> series(pole);
  for (unsigned k = 0; k < pole; ++k) {
    Rational acc = num_.coefficient(k);
    for (unsigned j = 1; j <= k && j < q.size(); ++j) acc -= q[j] * series[k - j];
    series[k] = acc * inv_q0;
  }
  return series[pole - 1];
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    num_ += other.num_;
    if (!den_.is_constant()) normalize();
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  // Henrici: only the common factor of the denominators can cancel.
  const Polynomial g = gcd(den_, other.den_);
  if (g.is_one()) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  const Polynomial a = exact_quotient(den_, g);
  const Polynomial b = exact_quotient(other.den_, g);
  Polynomial n = num_ * b + other.num_ * a;
  Polynomial d = a * other.den_;
  if (n.is_zero()) return *this = RationalFunction();
  const Polynomial h = gcd(n, g);
  if (!h.is_one()) {
    n = exact_quotient(n, h);
    d = exact_quotient(d, h);
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) { return *this += -other; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  if (is_zero() || other.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && other.is_polynomial()) {
    num_ *= other.num_;
    return *this;
  }
  if (other.is_constant()) return *this *= other.num_.leading();
  if (is_constant()) {
    const Rational s = num_.leading();
    *this = other;
    return *this *= s;
  }
  const Polynomial g1 = gcd(num_, other.den_);
  const Polynomial g2 = gcd(other.num_, den_);
  Polynomial n = exact_quotient(num_, g1) * exact_quotient(other.num_, g2);
  Polynomial d = exact_quotient(den_, g2) * exact_quotient(other.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  if (!den_.leading().is_one()) normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& scalar) {
  num_ *= scalar;
  if (num_.is_zero()) den_ = Polynomial(Rational(1));
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ArithmeticError("rational function division by zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) { return *this *= other.inverse(); }

std::string RationalFunction::str(std::string_view variable) const {
  if (is_polynomial()) return num_.str(variable);
  return "(" + num_.str(variable) + ")/(" + den_.str(variable) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace invstar
