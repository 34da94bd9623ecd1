#include "invstar/basis_order.hpp"

#include <algorithm>

#include "invstar/errors.hpp"

namespace invstar {

namespace {

std::vector<GenId> sorted_block(const GradedLieAlgebra& alg, std::vector<GenId> block, BlockOrder inside) {
  std::sort(block.begin(), block.end(), [&](GenId a, GenId b) {
    const int da = alg.degree(a);
    const int db = alg.degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  if (inside == BlockOrder::descending) std::reverse(block.begin(), block.end());
  return block;
}

std::vector<GenId> concat(std::initializer_list<std::vector<GenId>> parts) {
  std::vector<GenId> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

BasisOrder::BasisOrder(std::vector<GenId> sequence) : sequence_(std::move(sequence)), rank_(sequence_.size(), -1) {
  for (std::size_t r = 0; r < sequence_.size(); ++r) {
    const GenId g = sequence_[r];
    if (g < 0 || static_cast<std::size_t>(g) >= sequence_.size() || rank_[static_cast<std::size_t>(g)] != -1) {
      throw SpecError("basis order is not a permutation of the generators");
    }
    rank_[static_cast<std::size_t>(g)] = static_cast<int>(r);
  }
}

BasisOrder BasisOrder::phi(const GradedLieAlgebra& alg, BlockOrder inside) {
  return BasisOrder(concat({sorted_block(alg, alg.negative(), inside), sorted_block(alg, alg.zero(), inside),
                            sorted_block(alg, alg.positive(), inside)}));
}

BasisOrder BasisOrder::pi(const GradedLieAlgebra& alg, BlockOrder inside) {
  return BasisOrder(concat({sorted_block(alg, alg.negative(), inside), sorted_block(alg, alg.positive(), inside),
                            sorted_block(alg, alg.zero(), inside)}));
}

BasisOrder BasisOrder::lowering(const GradedLieAlgebra& alg, BlockOrder inside) {
  return BasisOrder(concat({sorted_block(alg, alg.positive(), inside), sorted_block(alg, alg.zero(), inside),
                            sorted_block(alg, alg.negative(), inside)}));
}

BasisOrder BasisOrder::from_sequence(std::vector<GenId> sequence) { return BasisOrder(std::move(sequence)); }

bool BasisOrder::phi_admissible(const GradedLieAlgebra& alg) const {
  int last_block = -1;
  for (GenId g : sequence_) {
    const int d = alg.degree(g);
    const int block = d < 0 ? 0 : (d == 0 ? 1 : 2);
    if (block < last_block) return false;
    last_block = block;
  }
  return true;
}

bool BasisOrder::pi_admissible(const GradedLieAlgebra& alg) const {
  bool seen_zero = false;
  for (GenId g : sequence_) {
    if (alg.degree(g) == 0) {
      seen_zero = true;
    } else if (seen_zero) {
      return false;
    }
  }
  return true;
}

}  // namespace invstar
