#include "invstar/hbar_series.hpp"

#include <algorithm>
#include <ostream>

#include "invstar/errors.hpp"

namespace invstar {

HbarSeries::HbarSeries(unsigned order) : coeffs_(order + 1) {}

HbarSeries::HbarSeries(unsigned order, std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

HbarSeries HbarSeries::one(unsigned order) {
  HbarSeries s(order);
  s.coeffs_[0] = Rational(1);
  return s;
}

HbarSeries HbarSeries::geometric(const Rational& ratio, unsigned order) {
  HbarSeries s(order);
  Rational p(1);
  for (auto& c : s.coeffs_) {
    c = p;
    p *= ratio;
  }
  return s;
}

HbarSeries& HbarSeries::operator+=(const HbarSeries& other) {
  if (other.coeffs_.size() < coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HbarSeries& HbarSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  HbarSeries out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HbarSeries HbarSeries::shifted(unsigned k) const {
  HbarSeries out(order());
  for (std::size_t i = 0; i + k < coeffs_.size(); ++i) out.coeffs_[i + k] = coeffs_[i];
  return out;
}

std::string HbarSeries::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) s += ", ";
    s += coeffs_[i].str();
  }
  return s + "]";
}

HbarSeries expand_at_infinity(const RationalFunction& f, unsigned order) {
  HbarSeries out(order);
  if (f.is_zero()) return out;
  const int dn = f.numerator().degree();
  const int dd = f.denominator().degree();
  if (dn > dd) {
    throw ArithmeticError("pole at infinity: numerator degree " + std::to_string(dn) +
                          " exceeds denominator degree " + std::to_string(dd));
  }
  // f(1/h) = h^(dd-dn) * rev(num)(h) / rev(den)(h), and rev(den)(0) = 1.
  const Polynomial rn = f.numerator().reversed();
  const Polynomial rd = f.denominator().reversed();
  const auto shift = static_cast<unsigned>(dd - dn);
  if (shift > order) return out;
  const unsigned needed = order - shift;
  std::vector<Rational> q(needed + 1);
  const Rational inv0 = rd.coefficient(0).inverse();
  for (unsigned k = 0; k <= needed; ++k) {
    Rational acc = rn.coefficient(k);
    for (unsigned j = 1; j <= k; ++j) {
      const Rational& dj = rd.coefficient(j);
      if (!dj.is_zero()) acc -= dj * q[k - j];
    }
    q[k] = acc * inv0;
  }
  std::vector<Rational> coeffs(order + 1);
  for (unsigned k = 0; k <= needed; ++k) coeffs[k + shift] = q[k];
  return HbarSeries(order, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const HbarSeries& s) { return os << s.str(); }

}  // namespace invstar
