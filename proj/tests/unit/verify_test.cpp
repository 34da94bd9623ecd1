#include <gtest/gtest.h>

#include "invstar/verify.hpp"
#include "support.hpp"

namespace invstar {
namespace {

using test::monomial;

TEST(Verify, Sl2AssociativityAndInvariance) {
  const CanonicalElement f = Shapovalov(test::sl2(1)).canonical_element(4);
  const auto assoc = check_associativity(f, 4);
  EXPECT_TRUE(assoc.passed) << to_text(assoc);
  EXPECT_GT(assoc.compared, 0u);
  const auto inv = check_invariance(f, 4);
  EXPECT_TRUE(inv.passed) << to_text(inv);
}

TEST(Verify, ThreadedAssociativityAgrees) {
  const CanonicalElement f = Shapovalov(test::virasoro(1, 1, 4)).canonical_element(3);
  const auto one = check_associativity(f, 3, 1);
  const auto four = check_associativity(f, 3, 4);
  EXPECT_TRUE(one.passed);
  EXPECT_EQ(to_text(one), to_text(four));
}

TEST(Verify, FlippedSignIsCaught) {
  const auto alg = test::sl2(1);
  const CanonicalElement f = Shapovalov(alg).canonical_element(4);
  const TensorElement2::Key key{monomial(*alg, "f^2"), monomial(*alg, "e^2")};
  const CanonicalElement bad = f.with_coefficient(key, -f.component(2).coefficient(key));
  const auto assoc = check_associativity(bad, 4);
  EXPECT_FALSE(assoc.passed);
  EXPECT_FALSE(assoc.component.empty());
  EXPECT_FALSE(assoc.difference.empty());
  EXPECT_FALSE(check_invariance(bad, 4).passed);
}

void expect_mutations_caught(const AlgebraPtr& alg, int d) {
  const CanonicalElement f = Shapovalov(alg).canonical_element(d);
  for (int n = 1; n <= d; ++n) {
    for (const auto& [key, c] : f.component(n).terms()) {
      const CanonicalElement bad = f.with_coefficient(key, -c);
      const bool caught = !check_associativity(bad, d).passed || !check_invariance(bad, d).passed;
      EXPECT_TRUE(caught) << alg->name() << " " << key[0].str(*alg) << " (x) " << key[1].str(*alg);
    }
  }
}

TEST(Verify, EverySingleFlipIsCaught) {
  expect_mutations_caught(test::sl2(2), 3);
  expect_mutations_caught(test::heisenberg(2, 1), 2);
  expect_mutations_caught(test::virasoro(1, 1, 3), 3);
  expect_mutations_caught(builtin::random_two_step(5), 2);
}

TEST(Verify, ClosedForms) {
  const auto h = check_closed_forms(Shapovalov(test::heisenberg(2, 1)).canonical_element(4), 4);
  EXPECT_TRUE(h.passed) << to_text(h);
  const auto s = check_closed_forms(Shapovalov(test::sl2(2)).canonical_element(6), 6);
  EXPECT_TRUE(s.passed) << to_text(s);
  const auto v = check_closed_forms(Shapovalov(test::virasoro(1, 1, 4)).canonical_element(2), 2);
  EXPECT_TRUE(v.passed) << to_text(v);
  EXPECT_THROW(check_closed_forms(Shapovalov(builtin::random_two_step(1)).canonical_element(2), 2), SpecError);
}

TEST(Verify, VirasoroTableEntryAtDeltaTwo) {
  // The table entry A/(8D) for L-1^2 (x) L1^2 is off by delta^2.
  const CanonicalElement f = Shapovalov(test::virasoro(2, 1, 4)).canonical_element(2);
  const auto tabulated = check_closed_forms(f, 2);
  EXPECT_FALSE(tabulated.passed);
  EXPECT_EQ(tabulated.component, "B_2 component (-2, 2)");
  EXPECT_TRUE(check_virasoro_corrected_entry(f, 2).passed);
}

TEST(Verify, StructuralChecks) {
  for (const auto& alg : {test::sl2(1), test::heisenberg(1, 1), test::virasoro(1, 1, 4)}) {
    const Shapovalov s(alg);
    const CanonicalElement f = s.canonical_element(4);
    const StarProduct b = star_series(f, alg->truncated() ? 3 : 4);
    EXPECT_TRUE(check_residue(f).passed) << alg->name();
    EXPECT_TRUE(check_first_order(f, b).passed) << alg->name();
    EXPECT_TRUE(check_order_bounds(f).passed) << alg->name();
    EXPECT_TRUE(check_natural_order(b).passed) << alg->name();
    EXPECT_TRUE(check_pairing_structure(f).passed) << alg->name();
    EXPECT_TRUE(check_oracle(s, 3).passed) << alg->name();
  }
  EXPECT_TRUE(check_canonicity(test::sl2(1), 4).passed);
  EXPECT_TRUE(check_canonicity(test::virasoro(1, 1, 4), 3).passed);
}

TEST(Verify, ResidueCheckCatchesWrongDual) {
  const auto alg = test::sl2(1);
  const CanonicalElement f = Shapovalov(alg).canonical_element(1);
  const TensorElement2::Key key{monomial(*alg, "f"), monomial(*alg, "e")};
  EXPECT_FALSE(check_residue(f.with_coefficient(key, -f.component(1).coefficient(key))).passed);
}

TEST(Verify, ReportText) {
  VerificationReport r{"demo", {{"algebra", "sl2"}, {"D", "2"}}, true, 3, "", ""};
  EXPECT_EQ(to_text(r), "demo: pass (algebra=sl2, D=2; 3 compared)");
  r.fail("(1, 2)", "x");
  EXPECT_EQ(to_text(r), "demo: FAIL (algebra=sl2, D=2; 3 compared) at (1, 2): x");
}

TEST(Verify, RandomAlgebras) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    const auto alg = builtin::random_two_step(seed);
    const CanonicalElement f = Shapovalov(alg).canonical_element(3);
    EXPECT_TRUE(check_associativity(f, 3).passed) << seed;
    EXPECT_TRUE(check_invariance(f, 3).passed) << seed;
  }
}

}  // namespace
}  // namespace invstar
