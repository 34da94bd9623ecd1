#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "invstar/pbw.hpp"

namespace invstar {

/// M^+ is induced from p_+ (n_+ kills the generating vector, g_0 acts by
/// lambda*chi); M^- is induced from p_- (n_- kills it, g_0 acts by -lambda*chi).
enum class VermaSide { plus, minus };

/// Generalized Verma module M^+_lambda or M^-_{-lambda}, realized on U n_-
/// (resp. U n_+) with lambda symbolic.
///
/// The action is computed generator by generator: g (u rest) = u (g rest) +
/// [g, u] rest, until g is a free generator that can be prepended, lies in
/// g_0, or annihilates the generating vector.  It never goes through the
/// projection phi.
class VermaModule {
 public:
  VermaModule(AlgebraPtr alg, VermaSide side, OrderPtr order);
  VermaModule(const VermaModule&) = delete;
  VermaModule& operator=(const VermaModule&) = delete;

  VermaSide side() const { return side_; }
  const OrderPtr& order_ptr() const { return order_; }

  /// Whether g acts freely (n_- for M^+, n_+ for M^-).
  bool is_free(GenId g) const;

  /// g . (m v); m is an ordered monomial in the free generators.
  UeaElement act_generator(GenId g, const PbwMonomial& m) const;
  /// a . (m v) for any element a of U g; a's monomials are applied letter by
  /// letter, rightmost first, so a need not be ordered in any particular way.
  UeaElement act(const UeaElement& a, const UeaElement& m) const;
  /// The letters of word applied rightmost first.
  UeaElement act_word(std::span<const GenId> word, const UeaElement& m) const;

 private:
  using Terms = std::vector<std::pair<PbwMonomial, Polynomial>>;
  using Shared = std::shared_ptr<const Terms>;

  Shared apply(GenId g, const PbwMonomial& m) const;
  Terms apply_uncached(GenId g, const PbwMonomial& m) const;

  AlgebraPtr alg_;
  VermaSide side_;
  OrderPtr order_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<GenId, PbwMonomial>, Shared> cache_;
};

/// a . m in M^+_lambda (side plus) or M^-_{-lambda} (side minus), with the
/// result expressed in m's order.
UeaElement verma_act(const GradedLieAlgebra& alg, const UeaElement& a, const UeaElement& m, VermaSide side);

}  // namespace invstar
