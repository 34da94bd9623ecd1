#include "invstar/uea.hpp"

#include <algorithm>
#include <random>

namespace invstar {

namespace {

using RationalMap = std::map<PbwMonomial, Rational>;

void add_to(RationalMap& acc, const PbwMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

Uea::Combination to_combination(RationalMap&& acc) {
  Uea::Combination out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.emplace_back(m, std::move(c));
  return out;
}

}  // namespace

Uea::Uea(AlgebraPtr alg, BasisOrder order)
    : alg_(std::move(alg)), order_(std::make_shared<const BasisOrder>(std::move(order))) {
  if (order_->size() != alg_->size()) throw SpecError("basis order does not match the algebra");
}

UeaElement Uea::one() const { return UeaElement(order_, PbwMonomial(), RationalFunction(1)); }

UeaElement Uea::generator(GenId g) const {
  alg_->generator(g);
  return UeaElement(order_, PbwMonomial::generator(g), RationalFunction(1));
}

UeaElement Uea::element(const PbwMonomial& m, const RationalFunction& c) const {
  if (!m.is_ordered(*order_)) throw InternalError("monomial " + m.str(*alg_) + " is not ordered");
  return UeaElement(order_, m, c);
}

Uea::Shared Uea::times_generator(const PbwMonomial& m, GenId g) const {
  if (m.is_one() || m.back().gen == g || order_->less(m.back().gen, g)) {
    PbwMonomial out = m;
    out.append(g);
    return std::make_shared<const Combination>(Combination{{std::move(out), Rational(1)}});
  }
  const auto key = std::make_pair(m, g);
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const Combination>(times_generator_uncached(m, g));
  std::lock_guard lock(mutex_);
  return cache_.emplace(key, std::move(computed)).first->second;
}

// m = m' x with x > g:  m g = (m' g) x + m' [x, g].
Uea::Combination Uea::times_generator_uncached(const PbwMonomial& m, GenId g) const {
  const GenId x = m.back().gen;
  PbwMonomial rest = m;
  rest.pop_back();
  RationalMap acc;
  for (const auto step = times_generator(rest, g); const auto& [t, a] : *step) {
    for (const auto step = times_generator(t, x); const auto& [u, b] : *step) add_to(acc, u, a * b);
  }
  for (const auto& term : alg_->bracket(x, g)) {
    for (const auto step = times_generator(rest, term.gen); const auto& [u, b] : *step) add_to(acc, u, term.coeff * b);
  }
  return to_combination(std::move(acc));
}

Uea::Combination Uea::product(const PbwMonomial& a, const PbwMonomial& b) const {
  if (b.is_one()) return {{a, Rational(1)}};
  if (a.is_one() || a.back().gen == b.front().gen || order_->less(a.back().gen, b.front().gen)) {
    return {{a.concatenated(b), Rational(1)}};
  }
  Combination current{{a, Rational(1)}};
  for (const auto& f : b.factors()) {
    for (unsigned e = 0; e < f.exp; ++e) {
      RationalMap next;
      for (const auto& [t, c] : current) {
        for (const auto step = times_generator(t, f.gen); const auto& [u, d] : *step) add_to(next, u, c * d);
      }
      current = to_combination(std::move(next));
    }
  }
  return current;
}

Uea::Combination Uea::product_of_word(std::span<const GenId> word) const {
  Combination current{{PbwMonomial(), Rational(1)}};
  for (GenId g : word) {
    RationalMap next;
    for (const auto& [t, c] : current) {
      for (const auto step = times_generator(t, g); const auto& [u, d] : *step) add_to(next, u, c * d);
    }
    current = to_combination(std::move(next));
  }
  return current;
}

UeaElement Uea::normal_form(std::span<const GenId> word, const Rational& prefactor, RewriteStrategy strategy,
                            std::uint64_t seed) const {
  for (GenId g : word) alg_->generator(g);
  std::mt19937_64 rng(seed);
  std::map<std::vector<GenId>, Rational> pending;
  if (!prefactor.is_zero()) pending.emplace(std::vector<GenId>(word.begin(), word.end()), prefactor);
  RationalMap done;
  auto push = [&](std::vector<GenId> w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  std::vector<std::size_t> inversions;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::vector<GenId>& w = node.key();
    const Rational c = node.mapped();
    inversions.clear();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (order_->less(w[i + 1], w[i])) inversions.push_back(i);
    }
    if (inversions.empty()) {
      add_to(done, PbwMonomial::from_word(w), c);
      continue;
    }
    std::size_t i = inversions.front();
    if (strategy == RewriteStrategy::rightmost) {
      i = inversions.back();
    } else if (strategy == RewriteStrategy::random) {
      std::uniform_int_distribution<std::size_t> pick(0, inversions.size() - 1);
      i = inversions[pick(rng)];
    }
    // w[i] w[i+1] = w[i+1] w[i] + [w[i], w[i+1]]
    const auto& br = alg_->bracket(w[i], w[i + 1]);
    std::vector<GenId> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    push(std::move(swapped), c);
    for (const auto& t : br) {
      std::vector<GenId> contracted;
      contracted.reserve(w.size() - 1);
      contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      contracted.push_back(t.gen);
      contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      push(std::move(contracted), c * t.coeff);
    }
  }
  UeaElement out(order_);
  for (const auto& [m, c] : done) out.add(m, RationalFunction(c));
  return out;
}

void Uea::require_own_order(const UeaElement& a, const char* op) const {
  if (!(a.order() == *order_)) throw InternalError(std::string(op) + ": element is not in the engine order");
}

UeaElement Uea::multiply(const UeaElement& a, const UeaElement& b) const {
  require_own_order(a, "multiply");
  require_own_order(b, "multiply");
  UeaElement out(order_);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const RationalFunction c = ca * cb;
      for (const auto& [m, r] : product(ma, mb)) out.add(m, c * r);
    }
  }
  return out;
}

template <std::size_t K>
static BasicTensor<K, RationalFunction> multiply_tensors(const Uea& uea, const BasicTensor<K, RationalFunction>& a,
                                                         const BasicTensor<K, RationalFunction>& b) {
  for (std::size_t i = 0; i < K; ++i) {
    if (!(*a.orders()[i] == uea.order()) || !(*b.orders()[i] == uea.order())) {
      throw InternalError("tensor multiply: slot not in the engine order");
    }
  }
  BasicTensor<K, RationalFunction> out(a.orders());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<std::pair<std::array<PbwMonomial, K>, Rational>> acc{{{}, Rational(1)}};
      for (std::size_t i = 0; i < K; ++i) {
        const auto slot = uea.product(ka[i], kb[i]);
        std::vector<std::pair<std::array<PbwMonomial, K>, Rational>> next;
        for (const auto& [key, c] : acc) {
          for (const auto& [m, r] : slot) {
            auto k2 = key;
            k2[i] = m;
            next.emplace_back(std::move(k2), c * r);
          }
        }
        acc = std::move(next);
      }
      const RationalFunction c = ca * cb;
      for (const auto& [key, r] : acc) out.add(key, c * r);
    }
  }
  return out;
}

TensorElement2 Uea::multiply(const TensorElement2& a, const TensorElement2& b) const {
  return multiply_tensors<2>(*this, a, b);
}

TensorElement3 Uea::multiply(const TensorElement3& a, const TensorElement3& b) const {
  return multiply_tensors<3>(*this, a, b);
}

UeaElement Uea::antipode(const UeaElement& a) const {
  require_own_order(a, "antipode");
  UeaElement out(order_);
  for (const auto& [m, c] : a.terms()) {
    std::vector<GenId> w = m.word();
    std::reverse(w.begin(), w.end());
    const RationalFunction signed_c = (w.size() % 2 == 0) ? c : -c;
    for (const auto& [u, r] : product_of_word(w)) out.add(u, signed_c * r);
  }
  return out;
}

TensorElement2 Uea::coproduct(const UeaElement& a) const {
  require_own_order(a, "coproduct");
  TensorElement2 out({order_, order_});
  for (const auto& [m, c] : a.terms()) {
    const auto factors = m.factors();
    std::vector<unsigned> split(factors.size(), 0);
    while (true) {
      PbwMonomial left;
      PbwMonomial right;
      Rational weight(1);
      for (std::size_t i = 0; i < factors.size(); ++i) {
        left.append(factors[i].gen, split[i]);
        right.append(factors[i].gen, factors[i].exp - split[i]);
        weight *= binomial(factors[i].exp, split[i]);
      }
      out.add({left, right}, c * weight);
      std::size_t i = 0;
      while (i < factors.size() && split[i] == factors[i].exp) split[i++] = 0;
      if (i == factors.size()) break;
      ++split[i];
    }
  }
  return out;
}

UeaElement Uea::phi(const UeaElement& a) const {
  if (!order_->phi_admissible(*alg_)) throw InternalError("phi needs an order of the form n_-, g_0, n_+");
  require_own_order(a, "phi");
  UeaElement out(order_);
  for (const auto& [m, c] : a.terms()) {
    if (m.only_degree_zero(*alg_)) out.add(m, c);
  }
  return out;
}

UeaElement Uea::pi(const UeaElement& a) const {
  if (!order_->pi_admissible(*alg_)) throw InternalError("pi needs an order with g_0 last");
  const UeaElement here = express(a);
  UeaElement out(order_);
  for (const auto& [m, c] : here.terms()) {
    if (!m.has_degree_zero(*alg_)) out.add(m, c);
  }
  return out;
}

RationalFunction Uea::char_eval(const UeaElement& a, const Rational& scale) const {
  RationalFunction out;
  for (const auto& [m, c] : a.terms()) {
    Rational value(1);
    for (const auto& f : m.factors()) {
      if (alg_->degree(f.gen) != 0) {
        throw InternalError("char_eval: " + alg_->generator(f.gen).name + " is not in g_0");
      }
      value *= (scale * alg_->character(f.gen)).pow(f.exp);
    }
    out += c * RationalFunction(Polynomial::monomial(value, m.length()));
  }
  return out;
}

UeaElement Uea::express(const UeaElement& a) const {
  if (a.order() == *order_) return a;
  UeaElement out(order_);
  for (const auto& [m, c] : a.terms()) {
    const auto w = m.word();
    for (const auto& [u, r] : product_of_word(w)) out.add(u, c * r);
  }
  return out;
}

}  // namespace invstar
