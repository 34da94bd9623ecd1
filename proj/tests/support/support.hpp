#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "invstar/shapovalov.hpp"
#include "invstar/uea.hpp"

namespace invstar::test {

/// "L-2*L-1^2" -> {L-2, L-1, L-1}; "1" -> {}.
std::vector<GenId> parse_word(const GradedLieAlgebra& alg, std::string_view text);
PbwMonomial monomial(const GradedLieAlgebra& alg, std::string_view text);
/// Coefficients from the constant term up, as rational strings.
Polynomial poly(const std::vector<std::string>& coeffs);

/// The four builtin families used throughout the tests.
AlgebraPtr sl2(const Rational& z = 1);
AlgebraPtr heisenberg(int n = 1, const Rational& w = 1);
AlgebraPtr virasoro(const Rational& delta = 1, const Rational& c = 1, int cutoff = 4);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

/// Random elements of U g whose words have total |degree| within a budget,
/// so that truncated algebras never leave their window.
class ElementSampler {
 public:
  ElementSampler(const Uea& uea, std::uint64_t seed, int max_length = 3);

  std::vector<GenId> word(int budget);
  UeaElement element(int budget);
  /// Budget for one of `parts` factors of a product.
  int budget(int parts) const;

  std::mt19937_64& rng() { return rng_; }

 private:
  const Uea& uea_;
  std::mt19937_64 rng_;
  int max_length_;
};

PropertyResult check_confluence(const Uea& uea, std::size_t cases, std::uint64_t seed);
PropertyResult check_product_associativity(const Uea& uea, std::size_t cases, std::uint64_t seed);
/// S(ab) = S(b) S(a) and S(S(a)) = a.
PropertyResult check_antipode(const Uea& uea, std::size_t cases, std::uint64_t seed);
PropertyResult check_coassociativity(const Uea& uea, std::size_t cases, std::uint64_t seed);
PropertyResult check_coproduct_multiplicativity(const Uea& uea, std::size_t cases, std::uint64_t seed);

std::vector<PropertyResult> all_properties(const Uea& uea, std::size_t cases, std::uint64_t seed);

}  // namespace invstar::test
