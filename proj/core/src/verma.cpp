#include "invstar/verma.hpp"

namespace invstar {

namespace {

using PolyMap = std::map<PbwMonomial, Polynomial>;

void add_to(PolyMap& acc, const PbwMonomial& m, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

VermaModule::VermaModule(AlgebraPtr alg, VermaSide side, OrderPtr order)
    : alg_(std::move(alg)), side_(side), order_(std::move(order)) {
  if (order_->size() != alg_->size()) throw SpecError("basis order does not match the algebra");
}

bool VermaModule::is_free(GenId g) const {
  const int d = alg_->degree(g);
  return side_ == VermaSide::plus ? d < 0 : d > 0;
}

VermaModule::Shared VermaModule::apply(GenId g, const PbwMonomial& m) const {
  const auto key = std::make_pair(g, m);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const Terms>(apply_uncached(g, m));
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(computed)).first->second;
}

VermaModule::Terms VermaModule::apply_uncached(GenId g, const PbwMonomial& m) const {
  const int d = alg_->degree(g);
  if (m.is_one()) {
    if (is_free(g)) return {{PbwMonomial::generator(g), Polynomial(Rational(1))}};
    if (d != 0) return {};
    const Rational value = side_ == VermaSide::plus ? alg_->character(g) : -alg_->character(g);
    if (value.is_zero()) return {};
    return {{PbwMonomial(), Polynomial::monomial(value, 1)}};
  }
  const GenId u = m.front().gen;
  if (is_free(g) && !order_->less(u, g)) return {{PbwMonomial::generator(g).concatenated(m), Polynomial(Rational(1))}};

  std::vector<Factor> tail(m.factors().begin(), m.factors().end());
  if (--tail.front().exp == 0) tail.erase(tail.begin());
  const PbwMonomial rest(std::move(tail));

  PolyMap acc;
  // u (g rest)
  for (const auto step = apply(g, rest); const auto& [t, c] : *step) {
    for (const auto step = apply(u, t); const auto& [s, e] : *step) add_to(acc, s, c * e);
  }
  // [g, u] rest
  for (const auto& term : alg_->bracket(g, u)) {
    for (const auto step = apply(term.gen, rest); const auto& [s, e] : *step) add_to(acc, s, e * Polynomial(term.coeff));
  }
  Terms out;
  out.reserve(acc.size());
  for (auto& [s, e] : acc) out.emplace_back(s, std::move(e));
  return out;
}

UeaElement VermaModule::act_generator(GenId g, const PbwMonomial& m) const {
  if (!m.is_ordered(*order_)) throw InternalError("verma: monomial is not ordered");
  for (const auto& f : m.factors()) {
    if (!is_free(f.gen)) throw InternalError("verma: monomial has a non-free factor");
  }
  UeaElement out(order_);
  for (const auto step = apply(g, m); const auto& [s, c] : *step) out.add(s, RationalFunction(c));
  return out;
}

UeaElement VermaModule::act_word(std::span<const GenId> word, const UeaElement& m) const {
  UeaElement current = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    UeaElement next(order_);
    for (const auto& [mono, c] : current.terms()) {
      for (const auto step = apply(*it, mono); const auto& [s, e] : *step) next.add(s, c * RationalFunction(e));
    }
    current = std::move(next);
  }
  return current;
}

UeaElement VermaModule::act(const UeaElement& a, const UeaElement& m) const {
  if (!(m.order() == *order_)) throw InternalError("verma: vector is not in the module order");
  UeaElement out(order_);
  for (const auto& [mono, c] : a.terms()) {
    const auto w = mono.word();
    UeaElement part = act_word(w, m);
    part *= c;
    out += part;
  }
  return out;
}

UeaElement verma_act(const GradedLieAlgebra& alg, const UeaElement& a, const UeaElement& m, VermaSide side) {
  // Non-owning alias; the module does not outlive this call.
  AlgebraPtr view(std::shared_ptr<const GradedLieAlgebra>(), &alg);
  VermaModule module(view, side, m.order_ptr());
  return module.act(a, m);
}

}  // namespace invstar
