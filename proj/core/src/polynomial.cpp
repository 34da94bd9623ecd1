#include "invstar/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "invstar/errors.hpp"

namespace invstar {

namespace {

const Rational kZero{};

// Integer polynomial, ascending powers, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

mpz_class content(const ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_exact(ZPoly& p, const mpz_class& d) {
  if (d == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

ZPoly primitive_part(ZPoly p) {
  if (p.empty()) return p;
  mpz_class c = content(p);
  if (p.back() < 0) c = -c;
  divide_exact(p, c);
  return p;
}

// Clears denominators and takes the primitive part.
ZPoly to_primitive_integer(std::span<const Rational> q) {
  mpz_class den = 1;
  for (const auto& c : q) {
    const mpz_class d = c.denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly p;
  p.reserve(q.size());
  for (const auto& c : q) p.push_back(c.numerator() * (den / c.denominator()));
  trim(p);
  return primitive_part(std::move(p));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
ZPoly pseudo_remainder(ZPoly r, const ZPoly& b) {
  const int n = degree(b);
  int e = degree(r) - n + 1;
  const mpz_class& lb = b.back();
  while (!r.empty() && degree(r) >= n) {
    const mpz_class t = r.back();
    const int shift = degree(r) - n;
    for (auto& c : r) c *= lb;
    for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i + shift)] -= t * b[static_cast<std::size_t>(i)];
    trim(r);
    --e;
  }
  if (e > 0) {
    mpz_class f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : r) c *= f;
  }
  return r;
}

mpz_class power(const mpz_class& base, int exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

// Subresultant polynomial remainder sequence; returns the primitive gcd.
ZPoly subresultant_gcd(ZPoly a, ZPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  if (b.empty()) return primitive_part(std::move(a));
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  mpz_class g = 1;
  mpz_class h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    if (degree(r) == 0) return ZPoly{mpz_class(1)};
    a = std::move(b);
    const mpz_class divisor = g * power(h, delta);
    divide_exact(r, divisor);
    b = std::move(r);
    g = a.back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = power(g, delta) / power(h, delta - 1);
    }
  }
  return primitive_part(std::move(b));
}

}  // namespace

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& coefficient, unsigned power) {
  Polynomial p;
  if (coefficient.is_zero()) return p;
  p.coeffs_.resize(power + 1);
  p.coeffs_[power] = coefficient;
  return p;
}

const Rational& Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : kZero;
}

const Rational& Polynomial::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

unsigned Polynomial::valuation() const {
  unsigned k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  return coeffs_.empty() ? 0 : k;
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::reversed() const {
  Polynomial r = *this;
  std::reverse(r.coeffs_.begin(), r.coeffs_.end());
  r.trim();
  return r;
}

std::string Polynomial::str(std::string_view variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << variable;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const Rational q = top * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division: " + a.str() + " / " + b.str());
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  const ZPoly g = subresultant_gcd(to_primitive_integer(a.coefficients()), to_primitive_integer(b.coefficients()));
  std::vector<Rational> out;
  out.reserve(g.size());
  for (const auto& c : g) out.emplace_back(c);
  return Polynomial(std::move(out)).monic();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace invstar
