#include <gtest/gtest.h>

#include "invstar/shapovalov.hpp"
#include "support.hpp"

namespace invstar {
namespace {

using test::monomial;
using test::poly;

struct Frozen {
  const char* x;
  const char* y;
  std::vector<std::string> coeffs;
};

// Raw entries chi_lambda(phi(S(y) x)) from tests/oracle/pairing_oracle.py.
void expect_frozen(const AlgebraPtr& alg, const std::vector<Frozen>& rows) {
  const Shapovalov s(alg);
  for (const auto& row : rows) {
    const PbwMonomial x = monomial(*alg, row.x);
    const UeaElement y = s.pi_engine()->element(monomial(*alg, row.y));
    EXPECT_EQ(s.pairing_entry(x, y), poly(row.coeffs)) << row.x << " vs " << row.y;
    EXPECT_EQ(s.oracle_pairing(x, y), poly(row.coeffs)) << row.x << " vs " << row.y;
  }
}

TEST(Pairing, Sl2Frozen) {
  const std::vector<std::vector<Frozen>> by_z = {
      {
        {"f", "e", {"0", "-1"}},
        {"f^2", "e^2", {"0", "-2", "2"}},
        {"f^3", "e^3", {"0", "-12", "18", "-6"}},
        {"f^4", "e^4", {"0", "-144", "264", "-144", "24"}},
        {"f^2", "e", {}},
      },
      {
        {"f", "e", {"0", "-2"}},
        {"f^2", "e^2", {"0", "-4", "8"}},
        {"f^3", "e^3", {"0", "-24", "72", "-48"}},
        {"f^4", "e^4", {"0", "-288", "1056", "-1152", "384"}},
        {"f^2", "e", {}},
      },
      {
        {"f", "e", {"0", "-5/3"}},
        {"f^2", "e^2", {"0", "-10/3", "50/9"}},
        {"f^3", "e^3", {"0", "-20", "50", "-250/9"}},
        {"f^4", "e^4", {"0", "-240", "2200/3", "-2000/3", "5000/27"}},
        {"f^2", "e", {}},
      },
  };
  const std::vector<Rational> zs = {1, 2, Rational(5) / Rational(3)};
  for (std::size_t i = 0; i < zs.size(); ++i) expect_frozen(test::sl2(zs[i]), by_z[i]);
}

TEST(Pairing, VirasoroFrozen) {
  const std::vector<std::vector<Frozen>> by_params = {
      {
        {"L-1", "L1", {"0", "-2"}},
        {"L-2", "L2", {"0", "-9/2"}},
        {"L-2", "L1^2", {"0", "6"}},
        {"L-1^2", "L2", {"0", "-6"}},
        {"L-1^2", "L1^2", {"0", "4", "8"}},
        {"L-3", "L3", {"0", "-8"}},
        {"L-3", "L1*L2", {"0", "18"}},
        {"L-3", "L1^3", {"0", "-24"}},
        {"L-2*L-1", "L3", {"0", "-10"}},
        {"L-2*L-1", "L1*L2", {"0", "18", "9"}},
        {"L-2*L-1", "L1^3", {"0", "-12", "-36"}},
        {"L-1^3", "L3", {"0", "-24"}},
        {"L-1^3", "L1*L2", {"0", "36", "36"}},
        {"L-1^3", "L1^3", {"0", "-24", "-72", "-48"}},
      },
      {
        {"L-1", "L1", {"0", "-4"}},
        {"L-2", "L2", {"0", "-31/4"}},
        {"L-2", "L1^2", {"0", "12"}},
        {"L-1^2", "L2", {"0", "-12"}},
        {"L-1^2", "L1^2", {"0", "8", "32"}},
        {"L-3", "L3", {"0", "-11"}},
        {"L-3", "L1*L2", {"0", "31"}},
        {"L-3", "L1^3", {"0", "-48"}},
        {"L-2*L-1", "L3", {"0", "-20"}},
        {"L-2*L-1", "L1*L2", {"0", "36", "31"}},
        {"L-2*L-1", "L1^3", {"0", "-24", "-144"}},
        {"L-1^3", "L3", {"0", "-48"}},
        {"L-1^3", "L1*L2", {"0", "72", "144"}},
        {"L-1^3", "L1^3", {"0", "-48", "-288", "-384"}},
      },
  };
  expect_frozen(test::virasoro(1, 1, 4), by_params[0]);
  expect_frozen(test::virasoro(2, Rational(-1) / Rational(2), 4), by_params[1]);
}

TEST(Pairing, HeisenbergFrozen) {
  expect_frozen(test::heisenberg(2, Rational(3) / Rational(2)), {
      {"q1*q2", "p1*p2", {"0", "0", "9/4"}},
      {"q1^2", "p1^2", {"0", "0", "9/2"}},
      {"q1", "p2", {}},
      {"q1^2*q2", "p1^2*p2", {"0", "0", "0", "-27/4"}},
  });
}

TEST(Pairing, SignedEntries) {
  const auto sl2 = test::sl2(1);
  const Shapovalov s(sl2);
  EXPECT_EQ(s.pairing_entry(monomial(*sl2, "f"), s.pi_engine()->element(monomial(*sl2, "e"))), poly({"0", "-1"}));
  const auto vir = test::virasoro(1, 1, 4);
  const Shapovalov v(vir);
  EXPECT_EQ(v.pairing_entry(monomial(*vir, "L-1"), v.pi_engine()->element(monomial(*vir, "L1"))), poly({"0", "-2"}));
}

TEST(Pairing, DualNormalizedMatrices) {
  // y runs over products of the chi-normalized duals, so M^1 = [lambda] on sl2.
  const Shapovalov s(test::sl2(1));
  const auto c1 = s.component(1);
  ASSERT_EQ(c1->pairing.size(), 1u);
  EXPECT_EQ(c1->pairing[0][0], poly({"0", "1"}));
  const auto vir = test::virasoro(1, 1, 4);
  const auto c2 = Shapovalov(vir).component(2);
  const PolynomialMatrix expected = {{poly({"0", "1", "2"}), poly({"0", "4/3"})}, {poly({"0", "3/2"}), poly({"0", "1"})}};
  EXPECT_EQ(c2->pairing, expected);
  EXPECT_EQ(c2->basis.minus[0], monomial(*vir, "L-1^2"));
  EXPECT_EQ(c2->basis.minus[1], monomial(*vir, "L-2"));
  EXPECT_EQ(determinant(c2->pairing), poly({"0", "0", "-1", "2"}));
}

TEST(Pairing, Sl2Determinants) {
  const Shapovalov s(test::sl2(1));
  EXPECT_EQ(determinant(s.component(2)->pairing), poly({"0", "-2", "2"}));
  EXPECT_EQ(determinant(s.component(3)->pairing), poly({"0", "12", "-18", "6"}));
}

TEST(Pairing, BasisOrdering) {
  const auto vir = test::virasoro(1, 1, 4);
  const auto basis = Shapovalov(vir).build_basis(3);
  ASSERT_EQ(basis.minus.size(), 3u);
  EXPECT_EQ(basis.lengths, (std::vector<unsigned>{3, 2, 1}));
  const auto h = test::heisenberg(2, 1);
  EXPECT_EQ(Shapovalov(h).build_basis(2).minus.size(), 3u);
  EXPECT_THROW(Shapovalov(vir).build_basis(5), WindowError);
}

TEST(Pairing, InverseIsExact) {
  const auto vir = test::virasoro(2, 1, 4);
  const Shapovalov s(vir);
  for (int n = 1; n <= 4; ++n) {
    const auto c = s.component(n);
    const std::size_t k = c->pairing.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        RationalFunction sum;
        for (std::size_t l = 0; l < k; ++l) sum += RationalFunction(c->pairing[i][l]) * c->inverse[l][j];
        EXPECT_EQ(sum, RationalFunction(i == j ? 1 : 0)) << n;
      }
    }
  }
}

TEST(Pairing, SingularInputs) {
  EXPECT_THROW(invert_pairing({{Polynomial()}}), SingularCharacterError);
  EXPECT_THROW(Shapovalov(test::heisenberg(1, 0)).component(1), SingularCharacterError);
  EXPECT_THROW(Shapovalov(test::sl2(0)).canonical_element(2), SingularCharacterError);
}

TEST(CanonicalElement, Sl2ClosedForm) {
  const Rational z = Rational(5) / Rational(3);
  const auto alg = test::sl2(z);
  const CanonicalElement f = Shapovalov(alg).canonical_element(6);
  const Polynomial lam = Polynomial::variable();
  for (int n = 1; n <= 6; ++n) {
    Polynomial den(factorial(static_cast<unsigned>(n)));
    for (int j = 0; j < n; ++j) den *= Polynomial(z) * lam - Polynomial(j);
    const RationalFunction expected(Polynomial(n % 2 == 0 ? 1 : -1), den);
    const std::string fn = "f^" + std::to_string(n);
    const std::string en = "e^" + std::to_string(n);
    EXPECT_EQ(f.component(n).coefficient({monomial(*alg, fn), monomial(*alg, en)}), expected) << n;
    EXPECT_EQ(f.component(n).size(), 1u);
  }
  EXPECT_EQ(f.component(0).coefficient({PbwMonomial(), PbwMonomial()}), RationalFunction(1));
}

TEST(CanonicalElement, HeisenbergClosedForm) {
  const auto alg = test::heisenberg(1, 3);
  const CanonicalElement f = Shapovalov(alg).canonical_element(4);
  const Polynomial lam = Polynomial::variable();
  for (int k = 1; k <= 4; ++k) {
    const auto ku = static_cast<unsigned>(k);
    const RationalFunction expected(Polynomial(k % 2 == 0 ? 1 : -1),
                                    Polynomial::monomial(factorial(ku) * Rational(3).pow(ku), ku));
    EXPECT_EQ(f.component(k).coefficient({monomial(*alg, "q1^" + std::to_string(k)), monomial(*alg, "p1^" + std::to_string(k))}),
              expected);
  }
}

TEST(CanonicalElement, ThreadCountDoesNotMatter) {
  const auto alg = test::virasoro(1, 1, 4);
  EXPECT_EQ(Shapovalov(alg).canonical_element(4, 1).tensor(), Shapovalov(alg).canonical_element(4, 4).tensor());
}

TEST(CanonicalElement, TrivialAlgebra) {
  LieAlgebraBuilder b("abelian", 1);
  b.set_character(b.add_generator("z", 0), 1);
  const CanonicalElement f = Shapovalov(b.build()).canonical_element(3);
  EXPECT_EQ(f.tensor().size(), 1u);
}

}  // namespace
}  // namespace invstar
