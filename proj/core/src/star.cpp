#include "invstar/star.hpp"

#include "invstar/hbar_series.hpp"

namespace invstar {

int required_degree(const GradedLieAlgebra& alg, int hbar_order) { return hbar_order * alg.top_degree(); }

StarProduct star_series(const CanonicalElement& f, int hbar_order) {
  if (hbar_order < 0) throw InternalError("negative hbar order");
  const GradedLieAlgebra& alg = f.algebra();
  const Uea& engine = f.engine();
  const int needed = required_degree(alg, hbar_order);
  if (!alg.truncated() && f.max_degree() < needed) {
    throw WindowError("B through hbar^" + std::to_string(hbar_order) + " needs F through degree " +
                      std::to_string(needed) + ", have " + std::to_string(f.max_degree()));
  }
  StarProduct b;
  b.algebra = f.algebra_ptr();
  b.order = engine.order_ptr();
  b.hbar_order = hbar_order;
  b.degree_window = f.max_degree();
  b.complete = !alg.truncated() && f.max_degree() >= needed;
  b.components.assign(static_cast<std::size_t>(hbar_order) + 1, RationalTensor2({b.order, b.order}));

  const auto n_orders = static_cast<unsigned>(hbar_order);
  for (int n = 0; n <= f.max_degree(); ++n) {
    for (const auto& [key, c] : f.component(n).terms()) {
      for (const auto& mono : key) {
        const UeaElement slot = engine.element(mono);
        if (!(engine.pi(slot) == slot)) throw InternalError("F has a representative with a g_0 factor");
      }
      HbarSeries s(n_orders);
      try {
        s = expand_at_infinity(c, n_orders);
      } catch (const ArithmeticError& e) {
        throw InternalError(std::string("F coefficient is not regular at infinity: ") + e.what());
      }
      for (unsigned m = 0; m <= n_orders; ++m) b.components[m].add(key, s[m]);
    }
  }
  return b;
}

RationalTensor2 pointwise_residue(const CanonicalElement& f) {
  const OrderPtr& o = f.engine().order_ptr();
  RationalTensor2 out({o, o});
  for (int n = 0; n <= f.max_degree(); ++n) {
    for (const auto& [key, c] : f.component(n).terms()) out.add(key, c.residue_at_zero());
  }
  return out;
}

RationalTensor2 residue(const CanonicalElement& f) {
  const OrderPtr& o = f.engine().order_ptr();
  RationalTensor2 out({o, o});
  for (int n = 0; n <= f.max_degree(); ++n) {
    for (const auto& [key, c] : f.component(n).terms()) out.add(key, expand_at_infinity(c, 1)[1]);
  }
  return out;
}

RationalTensor2 dual_pairs(const GradedLieAlgebra& alg, const OrderPtr& order, int max_degree) {
  RationalTensor2 out({order, order});
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& pair : dual_basis(alg, d)) {
      for (const auto& t : pair.plus) out.add({PbwMonomial::generator(pair.minus), PbwMonomial::generator(t.gen)}, t.coeff);
    }
  }
  return out;
}

RationalTensor2 transpose(const RationalTensor2& t) {
  RationalTensor2 out({t.orders()[1], t.orders()[0]});
  for (const auto& [key, c] : t.terms()) out.add({key[1], key[0]}, c);
  return out;
}

RationalTensor2 kks_bivector(const GradedLieAlgebra& alg, const OrderPtr& order, int max_degree) {
  const RationalTensor2 uv = dual_pairs(alg, order, max_degree);
  return uv - transpose(uv);
}

FirstOrder first_order(const StarProduct& b) {
  if (b.hbar_order < 1) throw InternalError("first order needs a series through hbar^1");
  const RationalTensor2& b1 = b[1];
  return FirstOrder{b1, b1 - transpose(b1)};
}

}  // namespace invstar
