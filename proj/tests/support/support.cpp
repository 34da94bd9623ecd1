#include "support.hpp"

#include <algorithm>
#include <cstdlib>

namespace invstar::test {

std::vector<GenId> parse_word(const GradedLieAlgebra& alg, std::string_view text) {
  std::vector<GenId> out;
  if (text == "1") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find('*', start), text.size());
    std::string_view factor = text.substr(start, stop - start);
    unsigned exp = 1;
    if (const auto caret = factor.find('^'); caret != std::string_view::npos) {
      exp = static_cast<unsigned>(std::stoul(std::string(factor.substr(caret + 1))));
      factor = factor.substr(0, caret);
    }
    const auto g = alg.find(factor);
    if (!g) throw SpecError("unknown generator '" + std::string(factor) + "'");
    out.insert(out.end(), exp, *g);
    start = stop + 1;
  }
  return out;
}

PbwMonomial monomial(const GradedLieAlgebra& alg, std::string_view text) {
  return PbwMonomial::from_word(parse_word(alg, text));
}

Polynomial poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(Rational::parse(s));
  return Polynomial(std::move(c));
}

AlgebraPtr sl2(const Rational& z) { return builtin::sl2(z); }
AlgebraPtr heisenberg(int n, const Rational& w) { return builtin::heisenberg(n, w); }
AlgebraPtr virasoro(const Rational& delta, const Rational& c, int cutoff) {
  return builtin::virasoro(delta, c, cutoff);
}

ElementSampler::ElementSampler(const Uea& uea, std::uint64_t seed, int max_length)
    : uea_(uea), rng_(seed), max_length_(max_length) {}

int ElementSampler::budget(int parts) const {
  const GradedLieAlgebra& alg = uea_.algebra();
  if (!alg.truncated()) return 1 << 20;
  return std::max(1, alg.cutoff() / parts);
}

std::vector<GenId> ElementSampler::word(int budget) {
  const GradedLieAlgebra& alg = uea_.algebra();
  std::uniform_int_distribution<int> length(1, max_length_);
  const int n = length(rng_);
  std::vector<GenId> out;
  int left = budget;
  for (int i = 0; i < n; ++i) {
    std::vector<GenId> allowed;
    for (GenId g = 0; g < static_cast<GenId>(alg.size()); ++g) {
      if (std::abs(alg.degree(g)) <= left) allowed.push_back(g);
    }
    std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
    const GenId g = allowed[pick(rng_)];
    left -= std::abs(alg.degree(g));
    out.push_back(g);
  }
  return out;
}

UeaElement ElementSampler::element(int budget) {
  std::uniform_int_distribution<int> terms(1, 2);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  UeaElement out = uea_.zero();
  const int n = terms(rng_);
  for (int i = 0; i < n; ++i) {
    long a = num(rng_);
    if (a == 0) a = 1;
    out += uea_.normal_form(word(budget), Rational(a) / Rational(den(rng_)));
  }
  return out;
}

namespace {

void record(PropertyResult& r, bool ok, const std::string& what) {
  ++r.cases;
  if (ok) return;
  if (r.failures++ == 0) r.first_failure = what;
}

std::string word_str(const GradedLieAlgebra& alg, const std::vector<GenId>& w) {
  std::string s;
  for (GenId g : w) s += (s.empty() ? "" : " ") + alg.generator(g).name;
  return s;
}

TensorElement3 coproduct_left(const Uea& uea, const TensorElement2& t) {
  TensorElement3 out({uea.order_ptr(), uea.order_ptr(), uea.order_ptr()});
  for (const auto& [k, c] : t.terms()) {
    const TensorElement2 d = uea.coproduct(uea.element(k[0]));
    for (const auto& [k2, c2] : d.terms()) out.add({k2[0], k2[1], k[1]}, c * c2);
  }
  return out;
}

TensorElement3 coproduct_right(const Uea& uea, const TensorElement2& t) {
  TensorElement3 out({uea.order_ptr(), uea.order_ptr(), uea.order_ptr()});
  for (const auto& [k, c] : t.terms()) {
    const TensorElement2 d = uea.coproduct(uea.element(k[1]));
    for (const auto& [k2, c2] : d.terms()) out.add({k[0], k2[0], k2[1]}, c * c2);
  }
  return out;
}

}  // namespace

PropertyResult check_confluence(const Uea& uea, std::size_t cases, std::uint64_t seed) {
  PropertyResult r{"PBW confluence", 0, 0, ""};
  ElementSampler sampler(uea, seed, 5);
  const GradedLieAlgebra& alg = uea.algebra();
  for (std::size_t i = 0; i < cases; ++i) {
    const auto w = sampler.word(sampler.budget(1));
    const UeaElement left = uea.normal_form(w, 1, RewriteStrategy::leftmost);
    const UeaElement right = uea.normal_form(w, 1, RewriteStrategy::rightmost);
    const UeaElement random = uea.normal_form(w, 1, RewriteStrategy::random, seed + i);
    UeaElement direct = uea.zero();
    for (const auto& [m, c] : uea.product_of_word(w)) direct.add(m, RationalFunction(c));
    record(r, left == right && left == random && left == direct, word_str(alg, w));
  }
  return r;
}

PropertyResult check_product_associativity(const Uea& uea, std::size_t cases, std::uint64_t seed) {
  PropertyResult r{"product associativity", 0, 0, ""};
  ElementSampler sampler(uea, seed);
  const GradedLieAlgebra& alg = uea.algebra();
  for (std::size_t i = 0; i < cases; ++i) {
    const int b = sampler.budget(3);
    const UeaElement x = sampler.element(b);
    const UeaElement y = sampler.element(b);
    const UeaElement z = sampler.element(b);
    const UeaElement lhs = uea.multiply(uea.multiply(x, y), z);
    const UeaElement rhs = uea.multiply(x, uea.multiply(y, z));
    record(r, lhs == rhs, to_string(alg, x) + " | " + to_string(alg, y) + " | " + to_string(alg, z));
  }
  return r;
}

PropertyResult check_antipode(const Uea& uea, std::size_t cases, std::uint64_t seed) {
  PropertyResult r{"antipode anti-homomorphism", 0, 0, ""};
  ElementSampler sampler(uea, seed);
  const GradedLieAlgebra& alg = uea.algebra();
  for (std::size_t i = 0; i < cases; ++i) {
    const int b = sampler.budget(2);
    const UeaElement x = sampler.element(b);
    const UeaElement y = sampler.element(b);
    const bool anti = uea.antipode(uea.multiply(x, y)) == uea.multiply(uea.antipode(y), uea.antipode(x));
    const bool involution = uea.antipode(uea.antipode(x)) == x;
    record(r, anti && involution, to_string(alg, x) + " | " + to_string(alg, y));
  }
  return r;
}

PropertyResult check_coassociativity(const Uea& uea, std::size_t cases, std::uint64_t seed) {
  PropertyResult r{"coproduct coassociativity", 0, 0, ""};
  ElementSampler sampler(uea, seed, 4);
  const GradedLieAlgebra& alg = uea.algebra();
  for (std::size_t i = 0; i < cases; ++i) {
    const UeaElement x = sampler.element(sampler.budget(1));
    const TensorElement2 d = uea.coproduct(x);
    record(r, coproduct_left(uea, d) == coproduct_right(uea, d), to_string(alg, x));
  }
  return r;
}

PropertyResult check_coproduct_multiplicativity(const Uea& uea, std::size_t cases, std::uint64_t seed) {
  PropertyResult r{"coproduct multiplicativity", 0, 0, ""};
  ElementSampler sampler(uea, seed);
  const GradedLieAlgebra& alg = uea.algebra();
  for (std::size_t i = 0; i < cases; ++i) {
    const int b = sampler.budget(2);
    const UeaElement x = sampler.element(b);
    const UeaElement y = sampler.element(b);
    const bool ok = uea.coproduct(uea.multiply(x, y)) == uea.multiply(uea.coproduct(x), uea.coproduct(y));
    record(r, ok, to_string(alg, x) + " | " + to_string(alg, y));
  }
  return r;
}

std::vector<PropertyResult> all_properties(const Uea& uea, std::size_t cases, std::uint64_t seed) {
  return {check_confluence(uea, cases, seed), check_product_associativity(uea, cases, seed + 1),
          check_antipode(uea, cases, seed + 2), check_coassociativity(uea, cases, seed + 3),
          check_coproduct_multiplicativity(uea, cases, seed + 4)};
}

}  // namespace invstar::test
