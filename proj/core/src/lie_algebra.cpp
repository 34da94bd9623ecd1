#include "invstar/lie_algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

#include "invstar/errors.hpp"
#include "rational_matrix.hpp"

namespace invstar {

namespace {

const Rational kZero{};
const BracketValue kEmpty{};

void accumulate(std::map<GenId, Rational>& acc, const BracketValue& v, const Rational& scale) {
  for (const auto& t : v) {
    auto& slot = acc[t.gen];
    slot += scale * t.coeff;
    if (slot.is_zero()) acc.erase(t.gen);
  }
}

BracketValue negated(const BracketValue& v) {
  BracketValue out = v;
  for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

std::string gen_list(const GradedLieAlgebra& alg, std::initializer_list<GenId> ids) {
  std::string s = "(";
  bool first = true;
  for (GenId id : ids) {
    if (!first) s += ", ";
    first = false;
    s += alg.generator(id).name;
  }
  return s + ")";
}

// chi([u_i, e_k]) for u_i in g_{-d}, e_k in g_d.
detail::RationalMatrix character_pairing(const GradedLieAlgebra& alg, const std::vector<GenId>& minus,
                                         const std::vector<GenId>& plus) {
  detail::RationalMatrix p(minus.size(), plus.size());
  for (std::size_t i = 0; i < minus.size(); ++i) {
    for (std::size_t k = 0; k < plus.size(); ++k) {
      Rational v;
      for (const auto& t : alg.bracket(minus[i], plus[k])) v += t.coeff * alg.character(t.gen);
      p(i, k) = v;
    }
  }
  return p;
}

}  // namespace

const Generator& GradedLieAlgebra::generator(GenId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= generators_.size()) {
    throw SpecError("unknown generator id " + std::to_string(id));
  }
  return generators_[static_cast<std::size_t>(id)];
}

std::optional<GenId> GradedLieAlgebra::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<GenId> GradedLieAlgebra::of_degree(int degree) const {
  std::vector<GenId> out;
  for (const auto& g : generators_) {
    if (g.degree == degree) out.push_back(g.id);
  }
  return out;
}

std::vector<GenId> GradedLieAlgebra::negative() const {
  std::vector<GenId> out;
  for (const auto& g : generators_) {
    if (g.degree < 0) out.push_back(g.id);
  }
  return out;
}

std::vector<GenId> GradedLieAlgebra::zero() const { return of_degree(0); }

std::vector<GenId> GradedLieAlgebra::positive() const {
  std::vector<GenId> out;
  for (const auto& g : generators_) {
    if (g.degree > 0) out.push_back(g.id);
  }
  return out;
}

int GradedLieAlgebra::top_degree() const {
  int top = 0;
  for (const auto& g : generators_) top = std::max(top, g.degree);
  return top;
}

bool GradedLieAlgebra::in_window(GenId a, GenId b) const {
  return table_window_[static_cast<std::size_t>(a) * generators_.size() + static_cast<std::size_t>(b)] != 0;
}

const BracketValue& GradedLieAlgebra::bracket(GenId a, GenId b) const {
  const std::size_t n = generators_.size();
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n) {
    throw SpecError("bracket of unknown generator");
  }
  const std::size_t idx = static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b);
  if (table_window_[idx] == 0) {
    throw WindowError("cutoff exceeded: [" + generator(a).name + ", " + generator(b).name + "] has degree " +
                      std::to_string(degree(a) + degree(b)) + " outside the window +-" + std::to_string(cutoff_));
  }
  return table_[idx];
}

const Rational& GradedLieAlgebra::character(GenId id) const {
  auto it = character_.find(id);
  return it == character_.end() ? kZero : it->second;
}

LieAlgebraBuilder::LieAlgebraBuilder(std::string name, int cutoff) {
  if (cutoff < 1) throw SpecError("cutoff must be positive");
  alg_.name_ = std::move(name);
  alg_.cutoff_ = cutoff;
}

GenId LieAlgebraBuilder::add_generator(std::string name, int degree) {
  if (name.empty()) throw SpecError("generator with empty name");
  if (alg_.by_name_.count(name) != 0) throw SpecError("duplicate generator name '" + name + "'");
  const auto id = static_cast<GenId>(alg_.generators_.size());
  alg_.by_name_.emplace(name, id);
  alg_.generators_.push_back(Generator{id, std::move(name), degree});
  return id;
}

GenId LieAlgebraBuilder::id(std::string_view name) const {
  auto it = alg_.by_name_.find(name);
  if (it == alg_.by_name_.end()) throw SpecError("unknown generator '" + std::string(name) + "'");
  return it->second;
}

LieAlgebraBuilder& LieAlgebraBuilder::set_bracket(GenId a, GenId b, BracketValue value) {
  alg_.generator(a);
  alg_.generator(b);
  std::map<GenId, Rational> merged;
  for (const auto& t : value) {
    alg_.generator(t.gen);
    merged[t.gen] += t.coeff;
  }
  BracketValue clean;
  for (auto& [g, c] : merged) {
    if (!c.is_zero()) clean.push_back(BracketTerm{g, c});
  }
  alg_.explicit_[{a, b}] = std::move(clean);
  return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::set_antisymmetric(GenId a, GenId b, const BracketValue& value) {
  set_bracket(a, b, value);
  if (a != b) set_bracket(b, a, negated(value));
  return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::mark_out_of_window(GenId a, GenId b) {
  alg_.generator(a);
  alg_.generator(b);
  alg_.out_of_window_.insert({std::min(a, b), std::max(a, b)});
  return *this;
}

LieAlgebraBuilder& LieAlgebraBuilder::set_character(GenId gen, Rational value) {
  alg_.generator(gen);
  if (value.is_zero()) {
    alg_.character_.erase(gen);
  } else {
    alg_.character_[gen] = std::move(value);
  }
  return *this;
}

AlgebraPtr LieAlgebraBuilder::build() const {
  auto alg = std::shared_ptr<GradedLieAlgebra>(new GradedLieAlgebra(alg_));
  const std::size_t n = alg->generators_.size();
  alg->table_.assign(n * n, BracketValue{});
  alg->table_window_.assign(n * n, 1);
  for (const auto& [a, b] : alg->out_of_window_) {
    alg->table_window_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 0;
    alg->table_window_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = 0;
  }
  for (const auto& [key, value] : alg->explicit_) {
    const auto [a, b] = key;
    alg->table_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = value;
    if (alg->explicit_.count({b, a}) == 0) {
      alg->table_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = negated(value);
    }
  }
  return alg;
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::degree_out_of_window: return "degree_out_of_window";
    case IssueKind::antisymmetry: return "antisymmetry";
    case IssueKind::grading: return "grading";
    case IssueKind::jacobi: return "jacobi";
    case IssueKind::character_on_nonzero_degree: return "character_on_nonzero_degree";
    case IssueKind::character_on_commutator: return "character_on_commutator";
  }
  return "unknown";
}

ValidationReport validate(const GradedLieAlgebra& alg) {
  ValidationReport report;
  auto add = [&](IssueKind kind, std::vector<GenId> gens, std::string msg) {
    report.issues.push_back(ValidationIssue{kind, std::move(gens), std::move(msg)});
  };

  for (const auto& g : alg.generators()) {
    if (std::abs(g.degree) > alg.cutoff()) {
      add(IssueKind::degree_out_of_window, {g.id},
          "generator " + g.name + " has degree " + std::to_string(g.degree) + " outside the window");
    }
  }

  const auto& explicit_entries = alg.explicit_brackets();
  for (const auto& [key, value] : explicit_entries) {
    const auto [a, b] = key;
    if (a == b && !value.empty()) {
      add(IssueKind::antisymmetry, {a, b}, "[" + alg.generator(a).name + ", " + alg.generator(a).name + "] != 0");
    }
    if (a < b) {
      auto rev = explicit_entries.find({b, a});
      if (rev != explicit_entries.end()) {
        std::map<GenId, Rational> sum;
        accumulate(sum, value, Rational(1));
        accumulate(sum, rev->second, Rational(1));
        if (!sum.empty()) add(IssueKind::antisymmetry, {a, b}, "bracket" + gen_list(alg, {a, b}) + " is not antisymmetric");
      }
    }
    const int expected = alg.degree(a) + alg.degree(b);
    for (const auto& t : value) {
      if (alg.degree(t.gen) != expected) {
        add(IssueKind::grading, {a, b, t.gen},
            "[" + alg.generator(a).name + ", " + alg.generator(b).name + "] contains " + alg.generator(t.gen).name +
                " of degree " + std::to_string(alg.degree(t.gen)) + ", expected " + std::to_string(expected));
      }
    }
    if (!value.empty() && !alg.in_window(a, b)) {
      add(IssueKind::grading, {a, b}, "pair" + gen_list(alg, {a, b}) + " is marked out-of-window but has a bracket");
    }
  }

  // [x, sum_k t_k g_k] with the inner combination given as a map.
  auto bracket_with = [&](GenId x, const std::map<GenId, Rational>& inner, std::map<GenId, Rational>& acc) -> bool {
    for (const auto& [g, c] : inner) {
      if (!alg.in_window(x, g)) return false;
      accumulate(acc, alg.bracket(x, g), c);
    }
    return true;
  };
  auto as_map = [](const BracketValue& v) {
    std::map<GenId, Rational> m;
    for (const auto& t : v) m[t.gen] += t.coeff;
    return m;
  };
  const auto n = static_cast<GenId>(alg.size());
  for (GenId a = 0; a < n; ++a) {
    for (GenId b = a + 1; b < n; ++b) {
      if (!alg.in_window(a, b)) continue;
      for (GenId c = b + 1; c < n; ++c) {
        if (!alg.in_window(b, c) || !alg.in_window(c, a)) continue;
        std::map<GenId, Rational> j;
        const bool inside = bracket_with(a, as_map(alg.bracket(b, c)), j) &&
                            bracket_with(b, as_map(alg.bracket(c, a)), j) &&
                            bracket_with(c, as_map(alg.bracket(a, b)), j);
        if (inside && !j.empty()) {
          add(IssueKind::jacobi, {a, b, c}, "Jacobi identity fails on " + gen_list(alg, {a, b, c}));
        }
      }
    }
  }

  for (const auto& [g, v] : alg.character_values()) {
    if (alg.degree(g) != 0) {
      add(IssueKind::character_on_nonzero_degree, {g},
          "character assigned to " + alg.generator(g).name + " of nonzero degree");
    }
  }
  const auto g0 = alg.zero();
  for (std::size_t i = 0; i < g0.size(); ++i) {
    for (std::size_t k = i + 1; k < g0.size(); ++k) {
      Rational v;
      for (const auto& t : alg.bracket(g0[i], g0[k])) v += t.coeff * alg.character(t.gen);
      if (!v.is_zero()) {
        add(IssueKind::character_on_commutator, {g0[i], g0[k]},
            "character does not vanish on [" + alg.generator(g0[i]).name + ", " + alg.generator(g0[k]).name + "]");
      }
    }
  }
  return report;
}

std::vector<DegreeNonsingularity> check_nonsingular(const GradedLieAlgebra& alg, int max_degree) {
  if (alg.truncated() && max_degree > alg.cutoff()) {
    throw WindowError("nonsingularity requested through degree " + std::to_string(max_degree) +
                      " but the window ends at " + std::to_string(alg.cutoff()));
  }
  std::vector<DegreeNonsingularity> out;
  for (int d = 1; d <= max_degree; ++d) {
    const auto minus = alg.of_degree(-d);
    const auto plus = alg.of_degree(d);
    DegreeNonsingularity row{d, minus.size(), plus.size(), false};
    if (minus.size() == plus.size()) {
      row.nondegenerate = minus.empty() || detail::rank(character_pairing(alg, minus, plus)) == minus.size();
    }
    out.push_back(row);
  }
  return out;
}

std::vector<DualPair> dual_basis(const GradedLieAlgebra& alg, int d) {
  const auto minus = alg.of_degree(-d);
  const auto plus = alg.of_degree(d);
  if (minus.size() != plus.size()) {
    throw SingularCharacterError("g_" + std::to_string(-d) + " and g_" + std::to_string(d) +
                                 " have different dimensions");
  }
  if (minus.empty()) return {};
  const auto inv = detail::inverse(character_pairing(alg, minus, plus));
  if (!inv) throw SingularCharacterError("character pairing is degenerate at degree " + std::to_string(d));
  std::vector<DualPair> out;
  for (std::size_t j = 0; j < minus.size(); ++j) {
    DualPair pair{minus[j], {}};
    for (std::size_t k = 0; k < plus.size(); ++k) {
      const Rational& c = (*inv)(k, j);
      if (!c.is_zero()) pair.plus.push_back(BracketTerm{plus[k], c});
    }
    out.push_back(std::move(pair));
  }
  return out;
}

namespace builtin {

AlgebraPtr heisenberg(int n, const Rational& w) {
  if (n < 1) throw SpecError("heisenberg needs n >= 1");
  LieAlgebraBuilder b("heisenberg", 1);
  std::vector<GenId> q;
  std::vector<GenId> p;
  for (int i = 1; i <= n; ++i) q.push_back(b.add_generator("q" + std::to_string(i), -1));
  const GenId c = b.add_generator("c", 0);
  for (int i = 1; i <= n; ++i) p.push_back(b.add_generator("p" + std::to_string(i), 1));
  for (std::size_t i = 0; i < q.size(); ++i) b.set_antisymmetric(p[i], q[i], {BracketTerm{c, Rational(1)}});
  b.set_character(c, w);
  return b.build();
}

AlgebraPtr sl2(const Rational& z) {
  LieAlgebraBuilder b("sl2", 1);
  const GenId f = b.add_generator("f", -1);
  const GenId h = b.add_generator("h", 0);
  const GenId e = b.add_generator("e", 1);
  b.set_antisymmetric(e, f, {BracketTerm{h, Rational(1)}});
  b.set_antisymmetric(h, e, {BracketTerm{e, Rational(2)}});
  b.set_antisymmetric(h, f, {BracketTerm{f, Rational(-2)}});
  b.set_character(h, z);
  return b.build();
}

AlgebraPtr virasoro(const Rational& delta, const Rational& c, int cutoff) {
  LieAlgebraBuilder b("virasoro", cutoff);
  std::map<int, GenId> l;
  for (int k = -cutoff; k <= 0; ++k) l[k] = b.add_generator("L" + std::to_string(k), k);
  const GenId central = b.add_generator("C", 0);
  for (int k = 1; k <= cutoff; ++k) l[k] = b.add_generator("L" + std::to_string(k), k);
  for (int n = -cutoff; n <= cutoff; ++n) {
    for (int m = n + 1; m <= cutoff; ++m) {
      if (std::abs(n + m) > cutoff) {
        b.mark_out_of_window(l[n], l[m]);
        continue;
      }
      BracketValue v;
      v.push_back(BracketTerm{l[n + m], Rational(n - m)});
      if (n + m == 0) v.push_back(BracketTerm{central, Rational(n * n * n - n, 12)});
      b.set_antisymmetric(l[n], l[m], v);
    }
  }
  b.set_character(l[0], delta);
  b.set_character(central, c);
  return b.build();
}

AlgebraPtr random_two_step(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto rational = [&] { return Rational(pick(-3, 3), pick(1, 3)); };
  for (int attempt = 0;; ++attempt) {
    LieAlgebraBuilder b("random", 2);
    std::vector<GenId> zero;
    const int dim0 = pick(1, 2);
    for (int i = 1; i <= dim0; ++i) zero.push_back(b.add_generator("z" + std::to_string(i), 0));
    std::map<int, std::vector<GenId>> minus;
    std::map<int, std::vector<GenId>> plus;
    const int dims[3] = {0, pick(1, 2), pick(0, 1)};
    for (int d = 1; d <= 2; ++d) {
      for (int i = 1; i <= dims[d]; ++i) {
        minus[d].push_back(b.add_generator("m" + std::to_string(d) + "_" + std::to_string(i), -d));
        plus[d].push_back(b.add_generator("p" + std::to_string(d) + "_" + std::to_string(i), d));
      }
    }
    for (int d = 1; d <= 2; ++d) {
      for (GenId u : plus[d]) {
        for (GenId v : minus[d]) {
          BracketValue value;
          for (GenId z : zero) {
            const Rational c = rational();
            if (!c.is_zero()) value.push_back(BracketTerm{z, c});
          }
          if (!value.empty()) b.set_antisymmetric(u, v, value);
        }
      }
    }
    for (GenId z : zero) b.set_character(z, rational());
    AlgebraPtr alg = b.build();
    const auto rows = check_nonsingular(*alg, 2);
    if (std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.nondegenerate; })) return alg;
    if (attempt > 1000) throw InternalError("random_two_step: no nonsingular sample");
  }
}

AlgebraPtr make(std::string_view name, const std::map<std::string, Rational>& params, std::optional<int> cutoff) {
  auto get = [&](std::initializer_list<const char*> keys, Rational fallback) {
    for (const char* k : keys) {
      auto it = params.find(k);
      if (it != params.end()) return it->second;
    }
    return fallback;
  };
  auto allow = [&](std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : params) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) {
        throw SpecError("unknown parameter '" + k + "' for builtin " + std::string(name));
      }
    }
  };
  if (name == "heisenberg") {
    allow({"n", "w"});
    const Rational n = get({"n"}, Rational(1));
    if (!n.is_integer() || n.sign() <= 0 || n > Rational(64)) throw SpecError("heisenberg n must be a positive integer");
    return heisenberg(static_cast<int>(n.numerator().get_si()), get({"w"}, Rational(1)));
  }
  if (name == "sl2") {
    allow({"z"});
    return sl2(get({"z"}, Rational(1)));
  }
  if (name == "virasoro") {
    allow({"delta", "Delta", "c"});
    return virasoro(get({"delta", "Delta"}, Rational(1)), get({"c"}, Rational(1)), cutoff.value_or(4));
  }
  if (name == "random") {
    allow({"seed"});
    const Rational seed = get({"seed"}, Rational(0));
    if (!seed.is_integer() || seed.sign() < 0) throw SpecError("random seed must be a non-negative integer");
    return random_two_step(seed.numerator().get_ui());
  }
  throw SpecError("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace builtin

}  // namespace invstar
