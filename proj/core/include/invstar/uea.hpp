#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "invstar/pbw.hpp"

namespace invstar {

/// Which out-of-order adjacent pair the word rewriter resolves next.
enum class RewriteStrategy { leftmost, rightmost, random };

/// PBW engine for U g in one fixed BasisOrder.
///
/// Products are computed by inserting generators into ordered monomials and
/// applying ab = ba + [a, b]; the monomial-times-generator table is memoized
/// (thread-safe).  Every element produced carries this engine's order.
class Uea {
 public:
  /// Rational linear combination of ordered monomials.
  using Combination = std::vector<std::pair<PbwMonomial, Rational>>;

  Uea(AlgebraPtr alg, BasisOrder order);
  Uea(const Uea&) = delete;
  Uea& operator=(const Uea&) = delete;

  const GradedLieAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const BasisOrder& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }

  UeaElement zero() const { return UeaElement(order_); }
  UeaElement one() const;
  UeaElement generator(GenId g) const;
  /// Throws InternalError unless m is ordered in this engine's order.
  UeaElement element(const PbwMonomial& m, const RationalFunction& c = RationalFunction(1)) const;

  /// Expands prefactor * w_1 ... w_k into ordered monomials by repeated
  /// rewriting of adjacent out-of-order pairs.  The result does not depend on
  /// the strategy; the strategy only exists so that this can be tested.
  UeaElement normal_form(std::span<const GenId> word, const Rational& prefactor = Rational(1),
                         RewriteStrategy strategy = RewriteStrategy::leftmost, std::uint64_t seed = 0) const;

  UeaElement multiply(const UeaElement& a, const UeaElement& b) const;
  /// Slotwise products; every slot must be in this engine's order.
  TensorElement2 multiply(const TensorElement2& a, const TensorElement2& b) const;
  TensorElement3 multiply(const TensorElement3& a, const TensorElement3& b) const;

  /// Ordered expansion of the product of two ordered monomials.
  Combination product(const PbwMonomial& a, const PbwMonomial& b) const;
  /// Ordered expansion of the letters of word multiplied left to right.
  Combination product_of_word(std::span<const GenId> word) const;

  UeaElement antipode(const UeaElement& a) const;
  TensorElement2 coproduct(const UeaElement& a) const;

  /// Projection onto U g_0 along n_- U g + U g n_+.  Requires a
  /// phi-admissible engine order.
  UeaElement phi(const UeaElement& a) const;
  /// Coset representative in U g / U g . g_0.  Requires a pi-admissible
  /// engine order; a is re-expressed in it first when needed.
  UeaElement pi(const UeaElement& a) const;

  /// Evaluates an element of U g_0 at the character scale*lambda*chi,
  /// extended multiplicatively.
  RationalFunction char_eval(const UeaElement& a, const Rational& scale = Rational(1)) const;

  /// Re-expresses an element given in any order in this engine's order.
  UeaElement express(const UeaElement& a) const;

 private:
  using Shared = std::shared_ptr<const Combination>;

  Shared times_generator(const PbwMonomial& m, GenId g) const;
  Combination times_generator_uncached(const PbwMonomial& m, GenId g) const;
  void require_own_order(const UeaElement& a, const char* op) const;

  AlgebraPtr alg_;
  OrderPtr order_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<PbwMonomial, GenId>, Shared> cache_;
};

using UeaPtr = std::shared_ptr<const Uea>;

}  // namespace invstar
