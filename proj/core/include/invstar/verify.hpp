#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invstar/star.hpp"

namespace invstar {

/// Outcome of one check.  On failure, `component` names the first offending
/// graded component (slot degrees) and `difference` the nonzero term found
/// there.
struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> parameters;
  bool passed = true;
  std::size_t compared = 0;
  std::string component;
  std::string difference;

  void fail(std::string where, std::string what);
};

/// "name=value" pairs describing an algebra (name, cutoff, character).
std::vector<std::pair<std::string, std::string>> describe(const GradedLieAlgebra& alg);

/// One-line human-readable summary.
std::string to_text(const VerificationReport& report);

/// Both sides of
///   (1 (x) p (x) 1)[(Delta (x) 1)F (F (x) 1)] = (1 (x) p (x) 1)[(1 (x) Delta)F (1 (x) F)]
/// over Q(lambda), on the components with slot-1 degree >= -D and slot-3
/// degree <= D.
///
/// Those components only see F up to degree D: on the left, slot 1 carries
/// deg x_a' + deg x_b >= -D with both terms <= 0, and slot 3 is y_a; on the
/// right, slot 1 is x_a and slot 3 carries deg y_a'' + deg y_b <= D with both
/// terms >= 0.  Every bracket met while normal ordering stays in [-D, D].
VerificationReport check_associativity(const CanonicalElement& f, int max_degree, unsigned threads = 1);

/// Delta(a) F(v_lambda (x) v_-lambda) = 0 in M^+_lambda (x) M^-_{-lambda},
/// for every generator with |deg a| <= D, on components of degree <= D.
VerificationReport check_invariance(const CanonicalElement& f, int max_degree);

/// Agreement with the closed forms known for the builtin families:
/// heisenberg (exp formula), sl2 (product formula, both for F and B) and
/// virasoro (the grade <= 2 table).  N is the hbar order.  Throws
/// SingularCharacterError on the singular locus and SpecError for algebras
/// without a closed form.
VerificationReport check_closed_forms(const CanonicalElement& f, int hbar_order);

/// The L_{-1}^2 (x) L_1^2 coefficient of B for virasoro against
/// hbar^2 A / (8 Delta^2 D).
VerificationReport check_virasoro_corrected_entry(const CanonicalElement& f, int hbar_order);

/// residue(F) = sum u_i (x) v_i through the degree of F.
VerificationReport check_residue(const CanonicalElement& f);

/// B_1 = residue(F) and B_1 - B_1^t = sum u_i ^ v_i.
VerificationReport check_first_order(const CanonicalElement& f, const StarProduct& b);

/// Every nonzero (M^n)^-1_{lk} has order at infinity <= -max(d_k, d_l).
VerificationReport check_order_bounds(const CanonicalElement& f);

/// Every term of B_m has both slot lengths <= m, opposite slot degrees -n, n
/// with n <= m * top_degree (the latter only for non-truncated algebras).
VerificationReport check_natural_order(const StarProduct& b);

/// Pairing matrices: entry degree <= min(d_k, d_l); diagonal entries of
/// degree d_k with leading coefficient +-prod s_i!; det of degree sum d_k.
VerificationReport check_pairing_structure(const CanonicalElement& f);

/// pairing_entry = oracle_pairing on every basis pair of degrees 1..D.
VerificationReport check_oracle(const Shapovalov& s, int max_degree);

/// F computed with two different basis choices, compared after
/// re-expressing both in the default PI order.
VerificationReport check_canonicity(const AlgebraPtr& alg, int max_degree);

}  // namespace invstar
