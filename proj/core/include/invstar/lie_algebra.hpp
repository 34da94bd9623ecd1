#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invstar/rational.hpp"

namespace invstar {

using GenId = int;

struct Generator {
  GenId id = 0;
  std::string name;
  int degree = 0;
};

struct BracketTerm {
  GenId gen = 0;
  Rational coeff;

  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

using BracketValue = std::vector<BracketTerm>;

class LieAlgebraBuilder;

/// A Z-graded Lie algebra restricted to the degree window [-cutoff, cutoff],
/// with structure constants on a homogeneous basis and a character on g_0.
///
/// Brackets are looked up as follows: an explicit entry for (a, b) wins;
/// otherwise the negated explicit entry for (b, a); otherwise zero.  Pairs
/// whose bracket would leave the window are marked out-of-window, and asking
/// for them raises WindowError.
class GradedLieAlgebra {
 public:
  const std::string& name() const { return name_; }
  int cutoff() const { return cutoff_; }

  std::span<const Generator> generators() const { return generators_; }
  const Generator& generator(GenId id) const;
  std::size_t size() const { return generators_.size(); }
  int degree(GenId id) const { return generator(id).degree; }
  std::optional<GenId> find(std::string_view name) const;

  /// Generators of degree d, by increasing id.
  std::vector<GenId> of_degree(int degree) const;
  std::vector<GenId> negative() const;
  std::vector<GenId> zero() const;
  std::vector<GenId> positive() const;

  /// Largest generator degree (0 when n_+ is empty).
  int top_degree() const;

  /// True when some bracket lies outside the window, i.e. the algebra is a
  /// truncation of a larger (typically infinite-dimensional) one.
  bool truncated() const { return !out_of_window_.empty(); }
  bool in_window(GenId a, GenId b) const;

  /// [a, b] as a combination of generators.  Throws WindowError for an
  /// out-of-window pair.
  const BracketValue& bracket(GenId a, GenId b) const;

  /// chi(gen); zero when unset.
  const Rational& character(GenId id) const;

  const std::map<std::pair<GenId, GenId>, BracketValue>& explicit_brackets() const { return explicit_; }
  const std::set<std::pair<GenId, GenId>>& out_of_window_pairs() const { return out_of_window_; }
  const std::map<GenId, Rational>& character_values() const { return character_; }

 private:
  friend class LieAlgebraBuilder;
  GradedLieAlgebra() = default;

  std::string name_;
  int cutoff_ = 1;
  std::vector<Generator> generators_;
  std::map<std::string, GenId, std::less<>> by_name_;
  std::map<std::pair<GenId, GenId>, BracketValue> explicit_;
  std::set<std::pair<GenId, GenId>> out_of_window_;
  std::map<GenId, Rational> character_;
  // Dense lookup table filled at build time.
  std::vector<BracketValue> table_;
  std::vector<char> table_window_;
};

using AlgebraPtr = std::shared_ptr<const GradedLieAlgebra>;

/// Accumulates generators, brackets and a character; no validation happens
/// here beyond name uniqueness and known generators (see validate()).
class LieAlgebraBuilder {
 public:
  LieAlgebraBuilder(std::string name, int cutoff);

  /// Throws SpecError on a duplicate name.
  GenId add_generator(std::string name, int degree);
  GenId id(std::string_view name) const;

  /// Sets the explicit bracket entry for the ordered pair (a, b).
  LieAlgebraBuilder& set_bracket(GenId a, GenId b, BracketValue value);
  /// Sets [a,b] = value and [b,a] = -value.
  LieAlgebraBuilder& set_antisymmetric(GenId a, GenId b, const BracketValue& value);
  LieAlgebraBuilder& mark_out_of_window(GenId a, GenId b);
  LieAlgebraBuilder& set_character(GenId gen, Rational value);

  AlgebraPtr build() const;

 private:
  GradedLieAlgebra alg_;
};

enum class IssueKind {
  degree_out_of_window,
  antisymmetry,
  grading,
  jacobi,
  character_on_nonzero_degree,
  character_on_commutator,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::vector<GenId> generators;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks the structural invariants: degrees inside the window,
/// antisymmetry, grading, Jacobi on in-window triples, and that the character
/// lives on g_0 and kills [g_0, g_0].
ValidationReport validate(const GradedLieAlgebra& alg);

struct DegreeNonsingularity {
  int degree = 0;
  std::size_t minus_dim = 0;
  std::size_t plus_dim = 0;
  bool nondegenerate = false;
};

/// For each 1 <= i <= max_degree, whether (u, v) -> chi([u, v]_0) pairs
/// g_{-i} with g_{+i} nondegenerately.  Throws WindowError when a truncated
/// algebra is asked about degrees past its cutoff.
std::vector<DegreeNonsingularity> check_nonsingular(const GradedLieAlgebra& alg, int max_degree);

/// Dual partner of a degree -d generator u: the element v of g_d with
/// chi([u, v_j]_0) = delta, expanded on the degree-d generators.
struct DualPair {
  GenId minus = 0;
  BracketValue plus;
};

/// Duals for every generator of g_{-d}.  Throws SingularCharacterError when
/// the pairing at degree d is degenerate.
std::vector<DualPair> dual_basis(const GradedLieAlgebra& alg, int d);

namespace builtin {

/// H_n: q_i (degree -1), c (degree 0), p_i (degree 1), [p_i, q_j] = delta_ij c,
/// chi(c) = w.
AlgebraPtr heisenberg(int n, const Rational& w);

/// sl(2): f, h, e with [e,f] = h, [h,e] = 2e, [h,f] = -2f, chi(h) = z.
AlgebraPtr sl2(const Rational& z);

/// Virasoro truncated to L_{-cutoff} .. L_{cutoff} plus the central C:
/// [L_n, L_m] = (n-m) L_{n+m} + delta_{n+m,0} (n^3-n)/12 C,
/// chi(L_0) = delta, chi(C) = c.
AlgebraPtr virasoro(const Rational& delta, const Rational& c, int cutoff);

/// Random graded 2-step nilpotent algebra: central g_0 of dimension 1-2, g_{+-1}
/// of equal dimension 1-2, g_{+-2} of equal dimension 0-1, [g_i, g_{-i}] a
/// random combination of g_0 and all other brackets zero, with a random
/// character.  Samples are redrawn until the character is nonsingular, so
/// the result only depends on the seed.  Generators are z<i> (degree 0),
/// m<d>_<i> (degree -d) and p<d>_<i> (degree d).
AlgebraPtr random_two_step(std::uint64_t seed);

/// Dispatch by name ("heisenberg", "sl2", "virasoro", "random" with a
/// "seed" parameter).  Missing parameters
/// default to n=1, w=1, z=1, delta=1, c=1; cutoff defaults to 4 for
/// virasoro.  Throws SpecError for unknown names or parameters.
AlgebraPtr make(std::string_view name, const std::map<std::string, Rational>& params,
                std::optional<int> cutoff = std::nullopt);

}  // namespace builtin

}  // namespace invstar
