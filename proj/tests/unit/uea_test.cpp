#include <gtest/gtest.h>

#include "invstar/uea.hpp"
#include "invstar/verma.hpp"
#include "support.hpp"

namespace invstar {
namespace {

using test::monomial;
using test::parse_word;

struct Sl2 : ::testing::Test {
  AlgebraPtr alg = test::sl2(3);
  Uea uea{alg, BasisOrder::phi(*alg)};
  UeaElement e = uea.generator(*alg->find("e"));
  UeaElement f = uea.generator(*alg->find("f"));
  UeaElement h = uea.generator(*alg->find("h"));
  UeaElement nf(std::string_view w) { return uea.normal_form(parse_word(*alg, w)); }
  UeaElement mono(std::string_view w, const RationalFunction& c = 1) { return uea.element(monomial(*alg, w), c); }
};

TEST_F(Sl2, NormalFormOfCommutator) {
  // e f = f e + h
  EXPECT_EQ(nf("e*f"), mono("f*e") + mono("h"));
  // e f^2 = f^2 e + 2 f h - 2 f
  EXPECT_EQ(nf("e*f^2"), mono("f^2*e") + mono("f*h", 2) - mono("f", 2));
  EXPECT_EQ(uea.multiply(h, f), mono("f*h") - mono("f", 2));
  EXPECT_EQ(nf("1"), uea.one());
}

TEST_F(Sl2, ZeroIsAccepted) {
  const UeaElement zero = uea.zero();
  EXPECT_TRUE(uea.multiply(zero, e).is_zero());
  EXPECT_TRUE(uea.antipode(zero).is_zero());
  EXPECT_TRUE(uea.coproduct(zero).is_zero());
  EXPECT_TRUE(uea.normal_form(parse_word(*alg, "e*f"), 0).is_zero());
}

TEST_F(Sl2, ElementRejectsUnorderedMonomial) { EXPECT_THROW(uea.element(monomial(*alg, "e*f")), InternalError); }

TEST_F(Sl2, AntipodeAndCoproduct) {
  EXPECT_EQ(uea.antipode(e), -e);
  // S(f e) = e f = f e + h
  EXPECT_EQ(uea.antipode(mono("f*e")), mono("f*e") + mono("h"));
  const TensorElement2 d = uea.coproduct(mono("f^2"));
  const PbwMonomial one;
  const PbwMonomial f1 = monomial(*alg, "f");
  const PbwMonomial f2 = monomial(*alg, "f^2");
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(d.coefficient({f1, f1}), RationalFunction(2));
  EXPECT_EQ(d.coefficient({f2, one}), RationalFunction(1));
  EXPECT_EQ(d.coefficient({one, f2}), RationalFunction(1));
}

TEST_F(Sl2, PhiAndCharacter) {
  // phi(e f) = h, chi_lambda(h) = 3 lambda
  const UeaElement p = uea.phi(nf("e*f"));
  EXPECT_EQ(p, mono("h"));
  EXPECT_EQ(uea.char_eval(p), RationalFunction(Polynomial::monomial(3, 1)));
  EXPECT_EQ(uea.char_eval(mono("h^2")), RationalFunction(Polynomial::monomial(9, 2)));
  EXPECT_THROW(uea.char_eval(e), InternalError);
}

TEST_F(Sl2, PiDropsDegreeZeroFactors) {
  const Uea pi_uea(alg, BasisOrder::pi(*alg));
  const UeaElement x = pi_uea.normal_form(parse_word(*alg, "e*f"));
  // e f = f e + h; h lies in U g . g_0
  EXPECT_EQ(pi_uea.pi(x), pi_uea.element(monomial(*alg, "f*e")));
  EXPECT_THROW(uea.pi(x), InternalError);
  EXPECT_THROW(pi_uea.phi(x), InternalError);
}

TEST_F(Sl2, ExpressChangesOrder) {
  const Uea other(alg, BasisOrder::phi(*alg, BlockOrder::descending));
  const Uea lowering(alg, BasisOrder::lowering(*alg));
  const UeaElement x = nf("e*f*h");
  const UeaElement y = lowering.express(x);
  EXPECT_EQ(uea.express(y), x);
  EXPECT_EQ(uea.express(other.express(x)), x);
}

TEST(Uea, RewriteStrategiesAgreeOnVirasoro) {
  const auto alg = test::virasoro(1, 1, 6);
  const Uea uea(alg, BasisOrder::pi(*alg));
  const auto w = parse_word(*alg, "L2*L-1*L1*L-2*L0");
  const UeaElement a = uea.normal_form(w, 1, RewriteStrategy::leftmost);
  EXPECT_EQ(a, uea.normal_form(w, 1, RewriteStrategy::rightmost));
  for (std::uint64_t seed = 0; seed < 10; ++seed) EXPECT_EQ(a, uea.normal_form(w, 1, RewriteStrategy::random, seed));
}

TEST(Uea, WindowErrorOnTruncatedAlgebra) {
  const auto alg = test::virasoro(1, 1, 2);
  const Uea uea(alg, BasisOrder::phi(*alg));
  EXPECT_THROW(uea.normal_form(parse_word(*alg, "L2*L1")), WindowError);
}

TEST(Verma, Sl2Actions) {
  const auto alg = test::sl2(3);
  const auto order = std::make_shared<const BasisOrder>(BasisOrder::pi(*alg));
  const VermaModule plus(alg, VermaSide::plus, order);
  const GenId e = *alg->find("e");
  const GenId f = *alg->find("f");
  const GenId h = *alg->find("h");
  const PbwMonomial fm = monomial(*alg, "f");
  const Polynomial lam = Polynomial::variable();
  EXPECT_TRUE(plus.is_free(f));
  EXPECT_FALSE(plus.is_free(e));
  // e . f v = h v = 3 lambda v
  EXPECT_EQ(plus.act_generator(e, fm), UeaElement(order, PbwMonomial(), RationalFunction(Polynomial(3) * lam)));
  // h . f v = (3 lambda - 2) f v
  EXPECT_EQ(plus.act_generator(h, fm), UeaElement(order, fm, RationalFunction(Polynomial(3) * lam - Polynomial(2))));
  EXPECT_TRUE(plus.act_generator(e, PbwMonomial()).is_zero());
  // e . f^2 v = (6 lambda - 2) f v
  EXPECT_EQ(plus.act_generator(e, monomial(*alg, "f^2")),
            UeaElement(order, fm, RationalFunction(Polynomial(6) * lam - Polynomial(2))));

  const VermaModule minus(alg, VermaSide::minus, order);
  const PbwMonomial em = monomial(*alg, "e");
  // in M^-_{-lambda}: f . e v = -h v = 3 lambda v
  EXPECT_EQ(minus.act_generator(f, em), UeaElement(order, PbwMonomial(), RationalFunction(Polynomial(3) * lam)));
  EXPECT_EQ(minus.act_generator(h, PbwMonomial()),
            UeaElement(order, PbwMonomial(), RationalFunction(Polynomial(-3) * lam)));
}

TEST(Verma, ActionIsAModuleAction) {
  const auto alg = test::virasoro(1, 2, 6);
  const auto order = std::make_shared<const BasisOrder>(BasisOrder::pi(*alg));
  const Uea uea(alg, BasisOrder::pi(*alg));
  const VermaModule plus(alg, VermaSide::plus, order);
  const UeaElement v = uea.element(monomial(*alg, "L-2*L-1"));
  const auto w1 = parse_word(*alg, "L1");
  const auto w2 = parse_word(*alg, "L2*L-1");
  const UeaElement a = uea.normal_form(w1);
  const UeaElement b = uea.normal_form(w2);
  // (a b) . v = a . (b . v)
  EXPECT_EQ(plus.act(uea.multiply(a, b), v), plus.act(a, plus.act(b, v)));
  EXPECT_EQ(verma_act(*alg, uea.multiply(a, b), v, VermaSide::plus), plus.act(a, plus.act(b, v)));
}

}  // namespace
}  // namespace invstar
