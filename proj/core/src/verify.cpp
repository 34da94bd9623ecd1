#include "invstar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "invstar/hbar_series.hpp"

namespace invstar {

void VerificationReport::fail(std::string where, std::string what) {
  if (!passed) return;
  passed = false;
  component = std::move(where);
  difference = std::move(what);
}

std::vector<std::pair<std::string, std::string>> describe(const GradedLieAlgebra& alg) {
  std::vector<std::pair<std::string, std::string>> out{{"algebra", alg.name()},
                                                       {"cutoff", std::to_string(alg.cutoff())}};
  for (const auto& [g, v] : alg.character_values()) out.emplace_back("chi(" + alg.generator(g).name + ")", v.str());
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.check << ": " << (report.passed ? "pass" : "FAIL") << " (";
  for (std::size_t i = 0; i < report.parameters.size(); ++i) {
    if (i != 0) os << ", ";
    os << report.parameters[i].first << "=" << report.parameters[i].second;
  }
  os << "; " << report.compared << " compared)";
  if (!report.passed) os << " at " << report.component << ": " << report.difference;
  return os.str();
}

namespace {

template <std::size_t K>
std::string degrees_str(const GradedLieAlgebra& alg, const std::array<PbwMonomial, K>& key) {
  const auto d = slot_degrees<K>(alg, key);
  std::string s = "(";
  for (std::size_t i = 0; i < K; ++i) s += (i ? ", " : "") + std::to_string(d[i]);
  return s + ")";
}

template <std::size_t K, typename Coeff>
std::string term_str(const GradedLieAlgebra& alg, const std::array<PbwMonomial, K>& key, const Coeff& c) {
  std::string s = c.str() + " ";
  for (std::size_t i = 0; i < K; ++i) s += (i ? " (x) " : "") + key[i].str(alg);
  return s;
}

// First differing term of two tensors, in key order.
template <std::size_t K, typename Coeff>
bool compare_tensors(const GradedLieAlgebra& alg, const BasicTensor<K, Coeff>& got,
                     const BasicTensor<K, Coeff>& expected, VerificationReport& report, const std::string& label) {
  auto it = got.terms().begin();
  auto jt = expected.terms().begin();
  while (it != got.terms().end() || jt != expected.terms().end()) {
    ++report.compared;
    if (jt == expected.terms().end() || (it != got.terms().end() && it->first < jt->first)) {
      report.fail(label + degrees_str<K>(alg, it->first), "unexpected term " + term_str<K>(alg, it->first, it->second));
      return false;
    }
    if (it == got.terms().end() || jt->first < it->first) {
      report.fail(label + degrees_str<K>(alg, jt->first),
                  "missing term " + term_str<K>(alg, jt->first, jt->second));
      return false;
    }
    if (!(it->second == jt->second)) {
      report.fail(label + degrees_str<K>(alg, it->first), "got " + term_str<K>(alg, it->first, it->second) +
                                                             ", expected " + jt->second.str());
      return false;
    }
    ++it;
    ++jt;
  }
  return true;
}

struct Split {
  PbwMonomial left;
  PbwMonomial right;
  Rational weight;
};

std::vector<Split> coproduct_splits(const Uea& engine, const PbwMonomial& m) {
  std::vector<Split> out;
  for (const auto delta = engine.coproduct(engine.element(m)); const auto& [key, c] : delta.terms()) {
    out.push_back(Split{key[0], key[1], c.numerator().coefficient(0)});
  }
  return out;
}

struct FTerm {
  PbwMonomial x;
  PbwMonomial y;
  RationalFunction c;
  int dx = 0;
  int dy = 0;
  std::vector<Split> dx_splits;
  std::vector<Split> dy_splits;
};

std::vector<FTerm> f_terms(const CanonicalElement& f, int max_degree) {
  const GradedLieAlgebra& alg = f.algebra();
  if (f.max_degree() < max_degree) {
    throw WindowError("check needs F through degree " + std::to_string(max_degree) + ", have " +
                      std::to_string(f.max_degree()));
  }
  std::vector<FTerm> out;
  for (int n = 0; n <= max_degree; ++n) {
    for (const auto& [key, c] : f.component(n).terms()) {
      out.push_back(FTerm{key[0], key[1], c, key[0].degree(alg), key[1].degree(alg),
                          coproduct_splits(f.engine(), key[0]), coproduct_splits(f.engine(), key[1])});
    }
  }
  return out;
}

void accumulate_on_threads(std::size_t count, unsigned threads, TensorElement3& total,
                           const std::function<void(std::size_t, TensorElement3&)>& work) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i, total);
    return;
  }
  std::vector<TensorElement3> parts(workers, TensorElement3(total.orders()));
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<std::size_t> next(0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < count; i = next++) work(i, parts[t]);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& p : parts) total += p;
}

}  // namespace

VerificationReport check_associativity(const CanonicalElement& f, int max_degree, unsigned threads) {
  VerificationReport report{"associativity", describe(f.algebra())};
  report.parameters.emplace_back("D", std::to_string(max_degree));
  const GradedLieAlgebra& alg = f.algebra();
  const Uea& engine = f.engine();
  const int d = max_degree;
  const auto terms = f_terms(f, d);
  const OrderPtr& o = engine.order_ptr();

  TensorElement3 lhs({o, o, o});
  accumulate_on_threads(terms.size(), threads, lhs, [&](std::size_t ia, TensorElement3& out) {
    const FTerm& a = terms[ia];
    for (const FTerm& b : terms) {
      const RationalFunction cab = a.c * b.c;
      for (const Split& s : a.dx_splits) {
        if (s.left.degree(alg) + b.dx < -d) continue;
        // x_a'' y_b is already ordered: n_- before n_+, no g_0.
        const PbwMonomial middle = s.right.concatenated(b.y);
        const RationalFunction c = cab * s.weight;
        for (const auto& [m1, r] : engine.product(s.left, b.x)) out.add({m1, middle, a.y}, c * r);
      }
    }
  });

  TensorElement3 rhs({o, o, o});
  accumulate_on_threads(terms.size(), threads, rhs, [&](std::size_t ia, TensorElement3& out) {
    const FTerm& a = terms[ia];
    for (const FTerm& b : terms) {
      const RationalFunction cab = a.c * b.c;
      for (const Split& s : a.dy_splits) {
        if (s.right.degree(alg) + b.dy > d) continue;
        const auto slot3 = engine.product(s.right, b.y);
        const RationalFunction c = cab * s.weight;
        for (const auto& [m2, r2] : engine.product(s.left, b.x)) {
          if (m2.has_degree_zero(alg)) continue;
          for (const auto& [m3, r3] : slot3) out.add({a.x, m2, m3}, c * (r2 * r3));
        }
      }
    }
  });

  compare_tensors<3>(alg, lhs, rhs, report, "component ");
  return report;
}

VerificationReport check_invariance(const CanonicalElement& f, int max_degree) {
  VerificationReport report{"invariance", describe(f.algebra())};
  report.parameters.emplace_back("D", std::to_string(max_degree));
  const GradedLieAlgebra& alg = f.algebra();
  const int d = max_degree;
  const auto terms = f_terms(f, d);
  const OrderPtr& o = f.engine().order_ptr();
  VermaModule plus(f.algebra_ptr(), VermaSide::plus, o);
  VermaModule minus(f.algebra_ptr(), VermaSide::minus, o);

  for (const auto& gen : alg.generators()) {
    const int da = gen.degree;
    if (std::abs(da) > d) continue;
    TensorElement2 out({o, o});
    for (const FTerm& t : terms) {
      if (t.dx + da >= -d) {
        for (const auto moved = plus.act_generator(gen.id, t.x); const auto& [m, c] : moved.terms()) out.add({m, t.y}, t.c * c);
      }
      if (t.dy + da <= d) {
        for (const auto moved = minus.act_generator(gen.id, t.y); const auto& [m, c] : moved.terms()) out.add({t.x, m}, t.c * c);
      }
    }
    ++report.compared;
    if (!out.is_zero()) {
      const auto& [key, c] = *out.terms().begin();
      report.fail("generator " + gen.name + " component " + degrees_str<2>(alg, key), term_str<2>(alg, key, c));
      return report;
    }
  }
  return report;
}

namespace {

GenId named(const GradedLieAlgebra& alg, const std::string& name) {
  const auto g = alg.find(name);
  if (!g) throw SpecError("closed form needs a generator named '" + name + "' in " + alg.name());
  return *g;
}

PbwMonomial ordered(const BasisOrder& order, std::vector<std::pair<GenId, unsigned>> factors) {
  std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
  PbwMonomial m;
  for (const auto& [g, e] : factors) m.append(g, e);
  return m;
}

RationalFunction lambda_power_inverse(const Rational& scale, unsigned k) {
  // 1 / (scale * lambda)^k
  return RationalFunction(Polynomial(Rational(1)), Polynomial::monomial(scale.pow(static_cast<int>(k)), k));
}

void compare_star(const GradedLieAlgebra& alg, const StarProduct& b, const std::vector<RationalTensor2>& expected,
                  int max_slot_degree, VerificationReport& report) {
  for (std::size_t m = 0; m < expected.size() && report.passed; ++m) {
    const RationalTensor2 got = b.components[m].filtered(
        [&](const auto& key) { return key[1].degree(alg) <= max_slot_degree; });
    compare_tensors<2>(alg, got, expected[m], report, "B_" + std::to_string(m) + " component ");
  }
}

void heisenberg_closed_form(const CanonicalElement& f, int n_order, VerificationReport& report) {
  const GradedLieAlgebra& alg = f.algebra();
  const BasisOrder& order = f.engine().order();
  const OrderPtr& o = f.engine().order_ptr();
  std::vector<GenId> q;
  std::vector<GenId> p;
  for (std::size_t i = 1; i <= alg.negative().size(); ++i) {
    q.push_back(named(alg, "q" + std::to_string(i)));
    p.push_back(named(alg, "p" + std::to_string(i)));
  }
  const Rational w = alg.character(named(alg, "c"));
  if (w.is_zero()) throw SingularCharacterError("heisenberg closed form needs w != 0");

  std::vector<RationalTensor2> expected_b(static_cast<std::size_t>(n_order) + 1, RationalTensor2({o, o}));
  // Exponent vectors K with |K| <= max(N, deg F).
  const int top = std::max(n_order, f.max_degree());
  std::vector<std::vector<unsigned>> ks{{}};
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<std::vector<unsigned>> next;
    for (const auto& k : ks) {
      unsigned used = 0;
      for (unsigned e : k) used += e;
      for (unsigned e = 0; used + e <= static_cast<unsigned>(top); ++e) {
        auto k2 = k;
        k2.push_back(e);
        next.push_back(std::move(k2));
      }
    }
    ks = std::move(next);
  }
  std::vector<TensorElement2> expected_f(static_cast<std::size_t>(f.max_degree()) + 1, TensorElement2({o, o}));
  for (const auto& k : ks) {
    unsigned total = 0;
    Rational kfact(1);
    std::vector<std::pair<GenId, unsigned>> xq;
    std::vector<std::pair<GenId, unsigned>> yp;
    for (std::size_t i = 0; i < k.size(); ++i) {
      total += k[i];
      kfact *= factorial(k[i]);
      xq.emplace_back(q[i], k[i]);
      yp.emplace_back(p[i], k[i]);
    }
    const TensorElement2::Key key{ordered(order, xq), ordered(order, yp)};
    const Rational sign = total % 2 == 0 ? Rational(1) : Rational(-1);
    if (static_cast<int>(total) <= f.max_degree()) {
      expected_f[total].add(key, lambda_power_inverse(w, total) * (sign / kfact));
    }
    if (static_cast<int>(total) <= n_order) expected_b[total].add(key, sign / (w.pow(static_cast<int>(total)) * kfact));
  }
  for (int n = 0; n <= f.max_degree() && report.passed; ++n) {
    compare_tensors<2>(alg, f.component(n), expected_f[static_cast<std::size_t>(n)], report,
                       "F component ");
  }
  if (!report.passed) return;
  compare_star(alg, star_series(f, n_order), expected_b, f.max_degree(), report);
}

void sl2_closed_form(const CanonicalElement& f, int n_order, VerificationReport& report) {
  const GradedLieAlgebra& alg = f.algebra();
  const OrderPtr& o = f.engine().order_ptr();
  const GenId fg = named(alg, "f");
  const GenId eg = named(alg, "e");
  const Rational z = alg.character(named(alg, "h"));
  if (z.is_zero()) throw SingularCharacterError("sl2 closed form needs z != 0");

  for (int n = 0; n <= f.max_degree() && report.passed; ++n) {
    // (-1)^n / (n! prod_{j<n} (lambda z - j))
    Polynomial den(factorial(static_cast<unsigned>(n)));
    for (int j = 0; j < n; ++j) den *= Polynomial(std::vector<Rational>{Rational(-j), z});
    TensorElement2 expected({o, o});
    expected.add({PbwMonomial::generator(fg, static_cast<unsigned>(n)), PbwMonomial::generator(eg, static_cast<unsigned>(n))},
                 RationalFunction(Polynomial(Rational(n % 2 == 0 ? 1 : -1)), den));
    compare_tensors<2>(alg, f.component(n), expected, report, "F component ");
  }
  if (!report.passed) return;

  const auto order = static_cast<unsigned>(n_order);
  std::vector<RationalTensor2> expected_b(order + 1, RationalTensor2({o, o}));
  for (unsigned n = 0; n <= order; ++n) {
    // hbar^n (-1)^n / (n! prod_{j<n} (z - j hbar)),  1/(z - j hbar) = (1/z) / (1 - (j/z) hbar)
    HbarSeries s = HbarSeries::one(order);
    for (unsigned j = 0; j < n; ++j) s = s * (HbarSeries::geometric(Rational(static_cast<int>(j)) / z, order) * z.inverse());
    s = s.shifted(n) * (Rational(n % 2 == 0 ? 1 : -1) / Rational(factorial(n)));
    const TensorElement2::Key key{PbwMonomial::generator(fg, n), PbwMonomial::generator(eg, n)};
    for (unsigned m = 0; m <= order; ++m) expected_b[m].add(key, s[m]);
  }
  compare_star(alg, star_series(f, n_order), expected_b, f.max_degree(), report);
}

struct VirasoroData {
  GenId lm1, lm2, l1, l2;
  Rational delta, c, a, b;
};

VirasoroData virasoro_data(const GradedLieAlgebra& alg, const CanonicalElement& f) {
  VirasoroData v{named(alg, "L-1"), named(alg, "L-2"), named(alg, "L1"), named(alg, "L2"),
                 alg.character(named(alg, "L0")), alg.character(named(alg, "C")), {}, {}};
  for (const auto& row : check_nonsingular(alg, 2)) {
    if (!row.nondegenerate) {
      throw SingularCharacterError("virasoro character is singular at degree " + std::to_string(row.degree));
    }
  }
  if (v.delta.is_zero()) throw SingularCharacterError("virasoro closed form needs Delta != 0");
  v.a = Rational(-32) * v.delta.pow(3) - Rational(4) * v.delta.pow(2) * v.c;
  v.b = Rational(20) * v.delta.pow(2) - Rational(2) * v.delta * v.c;
  if (v.a.is_zero()) throw SingularCharacterError("virasoro closed form needs A = -32 Delta^3 - 4 Delta^2 c != 0");
  if (f.max_degree() < 2) throw WindowError("virasoro closed form needs F through degree 2");
  return v;
}

// 1/D = (1/A) sum_k (-hbar B/A)^k
HbarSeries inverse_d(const VirasoroData& v, unsigned order) {
  return HbarSeries::geometric(-v.b / v.a, order) * v.a.inverse();
}

void virasoro_closed_form(const CanonicalElement& f, int n_order, VerificationReport& report, bool corrected) {
  const GradedLieAlgebra& alg = f.algebra();
  const OrderPtr& o = f.engine().order_ptr();
  const VirasoroData v = virasoro_data(alg, f);
  const auto n = static_cast<unsigned>(n_order);
  const HbarSeries inv_d = inverse_d(v, n);

  const PbwMonomial lm1 = PbwMonomial::generator(v.lm1);
  const PbwMonomial lm2 = PbwMonomial::generator(v.lm2);
  const PbwMonomial l1 = PbwMonomial::generator(v.l1);
  const PbwMonomial l2 = PbwMonomial::generator(v.l2);
  const PbwMonomial lm1sq = PbwMonomial::generator(v.lm1, 2);
  const PbwMonomial l1sq = PbwMonomial::generator(v.l1, 2);

  std::vector<std::pair<TensorElement2::Key, HbarSeries>> table;
  table.emplace_back(TensorElement2::Key{PbwMonomial(), PbwMonomial()}, HbarSeries::one(n));
  table.emplace_back(TensorElement2::Key{lm1, l1},
                     HbarSeries::one(n).shifted(1) * (Rational(-1) / (Rational(2) * v.delta)));
  // hbar (8 Delta^2 / D + hbar 4 Delta / D)
  table.emplace_back(TensorElement2::Key{lm2, l2}, (inv_d * (Rational(8) * v.delta.pow(2))).shifted(1) +
                                                       (inv_d * (Rational(4) * v.delta)).shifted(2));
  table.emplace_back(TensorElement2::Key{lm2, l1sq}, (inv_d * (Rational(6) * v.delta)).shifted(2));
  table.emplace_back(TensorElement2::Key{lm1sq, l2}, (inv_d * (Rational(-6) * v.delta)).shifted(2));
  const Rational last = corrected ? v.a / (Rational(8) * v.delta.pow(2)) : v.a / Rational(8);
  table.emplace_back(TensorElement2::Key{lm1sq, l1sq}, (inv_d * last).shifted(2));

  std::vector<RationalTensor2> expected(n + 1, RationalTensor2({o, o}));
  for (const auto& [key, s] : table) {
    for (unsigned m = 0; m <= n; ++m) expected[m].add(key, s[m]);
  }
  const StarProduct b = star_series(f, n_order);
  if (corrected) {
    // Only the one coefficient.
    for (unsigned m = 0; m <= n && report.passed; ++m) {
      ++report.compared;
      const TensorElement2::Key key{lm1sq, l1sq};
      const Rational got = b[static_cast<int>(m)].coefficient(key);
      const Rational want = expected[m].coefficient(key);
      if (!(got == want)) {
        report.fail("B_" + std::to_string(m) + " component (-2, 2)",
                    "got " + got.str() + " L-1^2 (x) L1^2, expected " + want.str());
      }
    }
    return;
  }
  compare_star(alg, b, expected, 2, report);
}

}  // namespace

VerificationReport check_closed_forms(const CanonicalElement& f, int hbar_order) {
  VerificationReport report{"closed-form", describe(f.algebra())};
  report.parameters.emplace_back("N", std::to_string(hbar_order));
  const std::string& name = f.algebra().name();
  if (name == "heisenberg") {
    heisenberg_closed_form(f, hbar_order, report);
  } else if (name == "sl2") {
    sl2_closed_form(f, hbar_order, report);
  } else if (name == "virasoro") {
    virasoro_closed_form(f, hbar_order, report, false);
  } else {
    throw SpecError("no closed form is known for algebra '" + name + "'");
  }
  return report;
}

VerificationReport check_virasoro_corrected_entry(const CanonicalElement& f, int hbar_order) {
  VerificationReport report{"virasoro-corrected-entry", describe(f.algebra())};
  report.parameters.emplace_back("N", std::to_string(hbar_order));
  if (f.algebra().name() != "virasoro") throw SpecError("not a virasoro algebra");
  virasoro_closed_form(f, hbar_order, report, true);
  return report;
}

VerificationReport check_residue(const CanonicalElement& f) {
  VerificationReport report{"residue", describe(f.algebra())};
  report.parameters.emplace_back("D", std::to_string(f.max_degree()));
  compare_tensors<2>(f.algebra(), residue(f), dual_pairs(f.algebra(), f.engine().order_ptr(), f.max_degree()), report,
                     "component ");
  return report;
}

VerificationReport check_first_order(const CanonicalElement& f, const StarProduct& b) {
  VerificationReport report{"first-order", describe(f.algebra())};
  report.parameters.emplace_back("D", std::to_string(f.max_degree()));
  const FirstOrder fo = first_order(b);
  if (!compare_tensors<2>(f.algebra(), fo.b1, residue(f), report, "B_1 vs residue ")) return report;
  compare_tensors<2>(f.algebra(), fo.skew, kks_bivector(f.algebra(), b.order, b.degree_window), report,
                     "B_1 - B_1^t vs KKS ");
  return report;
}

VerificationReport check_order_bounds(const CanonicalElement& f) {
  VerificationReport report{"order-bounds", describe(f.algebra())};
  report.parameters.emplace_back("D", std::to_string(f.max_degree()));
  for (int n = 1; n <= f.max_degree(); ++n) {
    const DegreeComponent& data = f.degree_data(n);
    const auto& d = data.basis.lengths;
    for (std::size_t l = 0; l < d.size(); ++l) {
      for (std::size_t k = 0; k < d.size(); ++k) {
        const RationalFunction& c = data.inverse[l][k];
        ++report.compared;
        if (c.is_zero()) continue;
        const int bound = -static_cast<int>(std::max(d[k], d[l]));
        if (*c.order_at_infinity() > bound) {
          report.fail("degree " + std::to_string(n) + " entry (" + std::to_string(l) + ", " + std::to_string(k) + ")",
                      c.str() + " has order " + std::to_string(*c.order_at_infinity()) + " > " + std::to_string(bound));
          return report;
        }
      }
    }
  }
  return report;
}

VerificationReport check_natural_order(const StarProduct& b) {
  const GradedLieAlgebra& alg = *b.algebra;
  VerificationReport report{"natural-order", describe(alg)};
  report.parameters.emplace_back("N", std::to_string(b.hbar_order));
  for (int m = 0; m <= b.hbar_order; ++m) {
    for (const auto& [key, c] : b[m].terms()) {
      ++report.compared;
      const auto deg = slot_degrees<2>(alg, key);
      const auto um = static_cast<unsigned>(m);
      std::string problem;
      if (key[0].length() > um || key[1].length() > um) problem = "slot length exceeds " + std::to_string(m);
      if (deg[0] != -deg[1]) problem = "slot degrees are not opposite";
      if (!alg.truncated() && deg[1] > m * alg.top_degree()) problem = "slot degree exceeds m * top degree";
      if (!problem.empty()) {
        report.fail("B_" + std::to_string(m) + " component " + degrees_str<2>(alg, key),
                    problem + ": " + term_str<2>(alg, key, c));
        return report;
      }
    }
  }
  return report;
}

VerificationReport check_pairing_structure(const CanonicalElement& f) {
  VerificationReport report{"pairing-structure", describe(f.algebra())};
  report.parameters.emplace_back("D", std::to_string(f.max_degree()));
  for (int n = 1; n <= f.max_degree(); ++n) {
    const DegreeComponent& data = f.degree_data(n);
    const auto& d = data.basis.lengths;
    const std::string where = "degree " + std::to_string(n);
    for (std::size_t k = 0; k < d.size(); ++k) {
      for (std::size_t l = 0; l < d.size(); ++l) {
        ++report.compared;
        const Polynomial& e = data.pairing[k][l];
        if (e.degree() > static_cast<int>(std::min(d[k], d[l]))) {
          report.fail(where + " entry (" + std::to_string(k) + ", " + std::to_string(l) + ")",
                      e.str() + " exceeds degree " + std::to_string(std::min(d[k], d[l])));
          return report;
        }
      }
      Rational s_fact(1);
      for (const auto& fac : data.basis.minus[k].factors()) s_fact *= factorial(fac.exp);
      const Polynomial& diag = data.pairing[k][k];
      if (diag.degree() != static_cast<int>(d[k]) || !(diag.leading().abs() == s_fact)) {
        report.fail(where + " diagonal " + std::to_string(k),
                    diag.str() + " should have degree " + std::to_string(d[k]) + " and leading coefficient +-" +
                        s_fact.str());
        return report;
      }
    }
    ++report.compared;
    const Polynomial det = determinant(data.pairing);
    unsigned sum = 0;
    for (unsigned x : d) sum += x;
    if (det.is_zero() || det.degree() != static_cast<int>(sum)) {
      report.fail(where + " determinant", det.str() + " should have degree " + std::to_string(sum));
      return report;
    }
  }
  return report;
}

VerificationReport check_oracle(const Shapovalov& s, int max_degree) {
  VerificationReport report{"oracle", describe(s.algebra())};
  report.parameters.emplace_back("D", std::to_string(max_degree));
  for (int n = 1; n <= max_degree; ++n) {
    const GradedBasis basis = s.build_basis(n);
    for (std::size_t k = 0; k < basis.minus.size(); ++k) {
      for (std::size_t l = 0; l < basis.plus.size(); ++l) {
        ++report.compared;
        const Polynomial a = s.pairing_entry(basis.minus[k], basis.plus[l]);
        const Polynomial b = s.oracle_pairing(basis.minus[k], basis.plus[l]);
        if (!(a == b)) {
          report.fail("degree " + std::to_string(n) + " entry (" + std::to_string(k) + ", " + std::to_string(l) + ")",
                      "pairing " + a.str() + " vs oracle " + b.str());
          return report;
        }
      }
    }
  }
  return report;
}

VerificationReport check_canonicity(const AlgebraPtr& alg, int max_degree) {
  VerificationReport report{"canonicity", describe(*alg)};
  report.parameters.emplace_back("D", std::to_string(max_degree));
  const Shapovalov reference(alg);
  const Shapovalov other(alg, BasisOptions{BlockOrder::descending, true});
  const CanonicalElement f1 = reference.canonical_element(max_degree);
  const CanonicalElement f2 = other.canonical_element(max_degree);
  const Uea& engine = *reference.pi_engine();
  const OrderPtr& o = engine.order_ptr();
  TensorElement2 moved({o, o});
  for (const auto t2 = f2.tensor(); const auto& [key, c] : t2.terms()) {
    const UeaElement left = engine.express(UeaElement(f2.engine().order_ptr(), key[0], RationalFunction(1)));
    const UeaElement right = engine.express(UeaElement(f2.engine().order_ptr(), key[1], RationalFunction(1)));
    for (const auto& [m1, c1] : left.terms()) {
      for (const auto& [m2, c2] : right.terms()) moved.add({m1, m2}, c * c1 * c2);
    }
  }
  compare_tensors<2>(*alg, moved, f1.tensor(), report, "component ");
  return report;
}

}  // namespace invstar
