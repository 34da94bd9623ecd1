#pragma once

#include <memory>
#include <vector>

#include "invstar/lie_algebra.hpp"

namespace invstar {

/// Direction used inside one block (n_-, g_0 or n_+) of a preset order.
enum class BlockOrder { ascending, descending };

/// A total order on the generators, used to define PBW monomials.
class BasisOrder {
 public:
  /// n_-, then g_0, then n_+.  Monomials with only g_0 factors span U g_0, so
  /// the projection phi is a filter on this basis.
  static BasisOrder phi(const GradedLieAlgebra& alg, BlockOrder inside = BlockOrder::ascending);
  /// n_-, then n_+, then g_0.  Monomials without g_0 factors represent the
  /// cosets of U g / U g . g_0.
  static BasisOrder pi(const GradedLieAlgebra& alg, BlockOrder inside = BlockOrder::ascending);
  /// n_+, then g_0, then n_-: the mirror of phi, used for M^-.
  static BasisOrder lowering(const GradedLieAlgebra& alg, BlockOrder inside = BlockOrder::ascending);
  /// Arbitrary order given as the sequence of generators from smallest to
  /// largest.  Throws SpecError unless it is a permutation.
  static BasisOrder from_sequence(std::vector<GenId> sequence);

  int rank(GenId g) const { return rank_[static_cast<std::size_t>(g)]; }
  GenId at(int r) const { return sequence_[static_cast<std::size_t>(r)]; }
  std::size_t size() const { return sequence_.size(); }
  const std::vector<GenId>& sequence() const { return sequence_; }

  bool less(GenId a, GenId b) const { return rank(a) < rank(b); }

  /// Every n_- generator precedes every g_0 generator, which precedes n_+.
  bool phi_admissible(const GradedLieAlgebra& alg) const;
  /// Every g_0 generator comes after all n_- and n_+ generators.
  bool pi_admissible(const GradedLieAlgebra& alg) const;

  friend bool operator==(const BasisOrder& a, const BasisOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  explicit BasisOrder(std::vector<GenId> sequence);

  std::vector<GenId> sequence_;
  std::vector<int> rank_;
};

using OrderPtr = std::shared_ptr<const BasisOrder>;

}  // namespace invstar
