#include "invstar/pbw.hpp"

#include <sstream>

namespace invstar {

PbwMonomial::PbwMonomial(std::vector<Factor> factors) {
  for (const auto& f : factors) append(f.gen, f.exp);
}

PbwMonomial PbwMonomial::from_word(std::span<const GenId> word) {
  PbwMonomial m;
  for (GenId g : word) m.append(g);
  return m;
}

unsigned PbwMonomial::length() const {
  unsigned n = 0;
  for (const auto& f : factors_) n += f.exp;
  return n;
}

int PbwMonomial::degree(const GradedLieAlgebra& alg) const {
  int d = 0;
  for (const auto& f : factors_) d += alg.degree(f.gen) * static_cast<int>(f.exp);
  return d;
}

std::vector<GenId> PbwMonomial::word() const {
  std::vector<GenId> w;
  for (const auto& f : factors_) w.insert(w.end(), f.exp, f.gen);
  return w;
}

bool PbwMonomial::is_ordered(const BasisOrder& order) const {
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    if (!order.less(factors_[i - 1].gen, factors_[i].gen)) return false;
  }
  return true;
}

bool PbwMonomial::has_degree_zero(const GradedLieAlgebra& alg) const {
  for (const auto& f : factors_) {
    if (alg.degree(f.gen) == 0) return true;
  }
  return false;
}

bool PbwMonomial::only_degree_zero(const GradedLieAlgebra& alg) const {
  for (const auto& f : factors_) {
    if (alg.degree(f.gen) != 0) return false;
  }
  return true;
}

bool PbwMonomial::only_negative(const GradedLieAlgebra& alg) const {
  for (const auto& f : factors_) {
    if (alg.degree(f.gen) >= 0) return false;
  }
  return true;
}

bool PbwMonomial::only_positive(const GradedLieAlgebra& alg) const {
  for (const auto& f : factors_) {
    if (alg.degree(f.gen) <= 0) return false;
  }
  return true;
}

void PbwMonomial::append(GenId g, unsigned exp) {
  if (exp == 0) return;
  if (!factors_.empty() && factors_.back().gen == g) {
    factors_.back().exp += exp;
  } else {
    factors_.push_back(Factor{g, exp});
  }
}

void PbwMonomial::pop_back() {
  if (--factors_.back().exp == 0) factors_.pop_back();
}

PbwMonomial PbwMonomial::concatenated(const PbwMonomial& right) const {
  PbwMonomial out = *this;
  for (const auto& f : right.factors_) out.append(f.gen, f.exp);
  return out;
}

std::string PbwMonomial::str(const GradedLieAlgebra& alg) const {
  if (factors_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) s += '*';
    s += alg.generator(factors_[i].gen).name;
    if (factors_[i].exp > 1) s += '^' + std::to_string(factors_[i].exp);
  }
  return s;
}

namespace {

template <typename Coeff>
std::string coeff_str(const Coeff& c) {
  if constexpr (std::is_same_v<Coeff, RationalFunction>) {
    return c.is_polynomial() && c.numerator().degree() <= 0 ? c.str() : "(" + c.str() + ")";
  } else {
    return c.str();
  }
}

template <typename Coeff, typename Range, typename KeyStr>
std::string render(const Range& terms, KeyStr key_str) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << coeff_str<Coeff>(c) << " " << key_str(k);
  }
  return os.str();
}

template <std::size_t K>
std::string tensor_key(const GradedLieAlgebra& alg, const std::array<PbwMonomial, K>& k) {
  std::string s;
  for (std::size_t i = 0; i < K; ++i) {
    if (i != 0) s += " (x) ";
    s += k[i].str(alg);
  }
  return s;
}

}  // namespace

std::string to_string(const GradedLieAlgebra& alg, const UeaElement& e) {
  return render<RationalFunction>(e.terms(), [&](const PbwMonomial& m) { return m.str(alg); });
}

std::string to_string(const GradedLieAlgebra& alg, const TensorElement2& t) {
  return render<RationalFunction>(t.terms(), [&](const auto& k) { return tensor_key<2>(alg, k); });
}

std::string to_string(const GradedLieAlgebra& alg, const TensorElement3& t) {
  return render<RationalFunction>(t.terms(), [&](const auto& k) { return tensor_key<3>(alg, k); });
}

std::string to_string(const GradedLieAlgebra& alg, const RationalTensor2& t) {
  return render<Rational>(t.terms(), [&](const auto& k) { return tensor_key<2>(alg, k); });
}

}  // namespace invstar
