#pragma once

#include <vector>

#include "invstar/shapovalov.hpp"

namespace invstar {

/// B = sum_m hbar^m B_m with B_0 = 1 (x) 1, each B_m over U n_- (x) U n_+.
///
/// When the algebra is truncated, or F does not reach N * top_degree, only
/// the part of B with slot degrees <= degree_window is known, and complete
/// is false.
struct StarProduct {
  AlgebraPtr algebra;
  OrderPtr order;
  int hbar_order = 0;
  int degree_window = 0;
  bool complete = false;
  std::vector<RationalTensor2> components;

  const RationalTensor2& operator[](int m) const { return components.at(static_cast<std::size_t>(m)); }
};

/// Degree of F needed for B through hbar^N: N times the top generator degree.
int required_degree(const GradedLieAlgebra& alg, int hbar_order);

/// B = pi(F_{1/hbar}), each coefficient expanded at lambda = infinity.
/// Throws WindowError when the algebra is not truncated but F is too short.
StarProduct star_series(const CanonicalElement& f, int hbar_order);

/// Formal residue: the coefficient of lambda^-1 when each coefficient of F
/// is expanded in powers of 1/lambda.
RationalTensor2 residue(const CanonicalElement& f);

/// Pointwise Res_{lambda=0} of each coefficient.  Differs from residue()
/// as soon as a coefficient has poles away from 0 (sl2 from degree 2 on).
RationalTensor2 pointwise_residue(const CanonicalElement& f);

/// sum_i u_i (x) v_i over degrees 1..max_degree, chi([u_i, v_j]_0) = delta_ij.
RationalTensor2 dual_pairs(const GradedLieAlgebra& alg, const OrderPtr& order, int max_degree);

/// sum_i (u_i (x) v_i - v_i (x) u_i).
RationalTensor2 kks_bivector(const GradedLieAlgebra& alg, const OrderPtr& order, int max_degree);

RationalTensor2 transpose(const RationalTensor2& t);

struct FirstOrder {
  RationalTensor2 b1;
  RationalTensor2 skew;
};

/// B_1 and B_1 - B_1^t.  Throws InternalError for an order-0 series.
FirstOrder first_order(const StarProduct& b);

}  // namespace invstar
