#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "invstar/uea.hpp"
#include "invstar/verma.hpp"

namespace invstar {

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;
using RationalFunctionMatrix = std::vector<std::vector<RationalFunction>>;

/// Knobs that change the bases but, by canonicity, never F itself.
struct BasisOptions {
  /// Direction inside each block of the PBW orders.
  BlockOrder inside = BlockOrder::ascending;
  /// Equal-length monomials sorted by ascending exponent vectors instead of
  /// descending ones.
  bool ascending_ties = false;
};

/// Degree-n PBW bases x_k of U n_- and the mirrored y_k of U n_+.
///
/// x_k = u_{k_1}^{s_1} ... u_{k_r}^{s_r} and y_k = v_{k_1}^{s_1} ... v_{k_r}^{s_r}
/// where chi([u_i, v_j]_0) = delta_ij.  Sorted by non-increasing length.
struct GradedBasis {
  int degree = 0;
  std::vector<PbwMonomial> minus;
  std::vector<UeaElement> plus;
  std::vector<unsigned> lengths;
};

struct DegreeComponent {
  GradedBasis basis;
  PolynomialMatrix pairing;
  RationalFunctionMatrix inverse;
  TensorElement2 tensor;
};

/// det of a square polynomial matrix by fraction-free elimination.
Polynomial determinant(const PolynomialMatrix& m);

/// Exact inverse by fraction-free Gauss-Jordan elimination, checked by
/// multiplying back.  Throws SingularCharacterError when det is identically 0.
RationalFunctionMatrix invert_pairing(const PolynomialMatrix& m);

/// The canonical element F_lambda through some degree: F = 1 (x) 1 +
/// sum_n sum_{kl} (M^n)^{-1}_{lk} x_k (x) y_l, both slots in the PI order.
class CanonicalElement {
 public:
  CanonicalElement(AlgebraPtr alg, UeaPtr engine, std::vector<std::shared_ptr<const DegreeComponent>> data);

  const GradedLieAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const Uea& engine() const { return *engine_; }
  const UeaPtr& engine_ptr() const { return engine_; }
  int max_degree() const { return static_cast<int>(tensors_.size()) - 1; }

  /// Matrices and bases of degree 1 <= n <= max_degree().
  const DegreeComponent& degree_data(int n) const;
  /// The (-n, n) component; 1 (x) 1 for n = 0.
  const TensorElement2& component(int n) const;
  TensorElement2 tensor() const;

  /// Copy with one coefficient replaced (removed for zero).
  CanonicalElement with_coefficient(const TensorElement2::Key& key, const RationalFunction& value) const;

 private:
  AlgebraPtr alg_;
  UeaPtr engine_;
  std::vector<std::shared_ptr<const DegreeComponent>> data_;
  std::vector<TensorElement2> tensors_;
};

/// Pairing machinery for one algebra.  Per-degree results are cached, so
/// asking for a larger F later only computes the new degrees.
class Shapovalov {
 public:
  explicit Shapovalov(AlgebraPtr alg, BasisOptions options = {});

  const GradedLieAlgebra& algebra() const { return *alg_; }
  const AlgebraPtr& algebra_ptr() const { return alg_; }
  const UeaPtr& pi_engine() const { return pi_; }
  const UeaPtr& phi_engine() const { return phi_; }

  /// Throws WindowError when n exceeds a truncated window and
  /// SingularCharacterError when a dual basis does not exist.
  GradedBasis build_basis(int n) const;

  /// chi_lambda(phi(S(y) x)).
  Polynomial pairing_entry(const PbwMonomial& x, const UeaElement& y) const;
  /// Coefficient of v_lambda in S(y) . (x v_lambda), computed in M^+_lambda.
  Polynomial oracle_pairing(const PbwMonomial& x, const UeaElement& y) const;

  PolynomialMatrix pairing_matrix(const GradedBasis& basis) const;
  PolynomialMatrix oracle_matrix(const GradedBasis& basis) const;

  std::shared_ptr<const DegreeComponent> component(int n) const;
  /// Degrees are computed on up to `threads` threads; the result does not
  /// depend on the thread count.
  CanonicalElement canonical_element(int max_degree, unsigned threads = 1) const;

 private:
  AlgebraPtr alg_;
  BasisOptions options_;
  UeaPtr pi_;
  UeaPtr phi_;
  std::unique_ptr<VermaModule> plus_module_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const DegreeComponent>> cache_;
};

}  // namespace invstar
