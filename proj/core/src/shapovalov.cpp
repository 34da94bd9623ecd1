#include "invstar/shapovalov.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace invstar {

namespace {

struct Candidate {
  std::vector<unsigned> exponents;
  unsigned length = 0;
};

void enumerate(const GradedLieAlgebra& alg, const std::vector<GenId>& gens, std::size_t i, int remaining,
               std::vector<unsigned>& current, std::vector<Candidate>& out) {
  if (i == gens.size()) {
    if (remaining == 0) {
      unsigned length = 0;
      for (unsigned e : current) length += e;
      out.push_back(Candidate{current, length});
    }
    return;
  }
  const int step = -alg.degree(gens[i]);
  for (int e = 0; e * step <= remaining; ++e) {
    current[i] = static_cast<unsigned>(e);
    enumerate(alg, gens, i + 1, remaining - e * step, current, out);
  }
  current[i] = 0;
}

RationalFunctionMatrix to_rational(const PolynomialMatrix& m) {
  RationalFunctionMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& p : m[i]) out[i].emplace_back(p);
  }
  return out;
}

// Fraction-free Gauss-Jordan on [m | I].  Returns the left diagonal value
// (= +-det) and the reduced augmented block, or nothing when singular.
struct Reduced {
  Polynomial pivot;
  bool odd_swaps = false;
  PolynomialMatrix right;
};

std::optional<Reduced> gauss_jordan(const PolynomialMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InternalError("pairing matrix is not square");
  }
  PolynomialMatrix a(n, std::vector<Polynomial>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = Polynomial(Rational(1));
  }
  Polynomial prev(Rational(1));
  bool odd = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k].is_zero()) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      std::swap(a[p], a[k]);
      odd = !odd;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a[i][j] = exact_quotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Polynomial();
    }
    prev = a[k][k];
  }
  Reduced out{prev, odd, PolynomialMatrix(n, std::vector<Polynomial>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a[i][i] == prev)) throw InternalError("fraction-free elimination lost its diagonal");
    for (std::size_t j = 0; j < n; ++j) out.right[i][j] = std::move(a[i][n + j]);
  }
  return out;
}

}  // namespace

Polynomial determinant(const PolynomialMatrix& m) {
  if (m.empty()) return Polynomial(Rational(1));
  const auto r = gauss_jordan(m);
  if (!r) return Polynomial();
  // The final pivot of fraction-free elimination is det of the row-permuted matrix.
  return r->odd_swaps ? -r->pivot : r->pivot;
}

RationalFunctionMatrix invert_pairing(const PolynomialMatrix& m) {
  const std::size_t n = m.size();
  const auto r = gauss_jordan(m);
  if (!r) throw SingularCharacterError("pairing matrix is identically singular");
  RationalFunctionMatrix inv(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = RationalFunction(r->right[i][j], r->pivot);
  }
  const auto mr = to_rational(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RationalFunction s;
      for (std::size_t k = 0; k < n; ++k) s += mr[i][k] * inv[k][j];
      if (!(s == RationalFunction(i == j ? 1 : 0))) throw InternalError("inverse pairing matrix failed the check");
    }
  }
  return inv;
}

CanonicalElement::CanonicalElement(AlgebraPtr alg, UeaPtr engine,
                                   std::vector<std::shared_ptr<const DegreeComponent>> data)
    : alg_(std::move(alg)), engine_(std::move(engine)), data_(std::move(data)) {
  const OrderPtr& o = engine_->order_ptr();
  TensorElement2 unit({o, o});
  unit.add({PbwMonomial(), PbwMonomial()}, RationalFunction(1));
  tensors_.push_back(std::move(unit));
  for (std::size_t n = 1; n < data_.size(); ++n) tensors_.push_back(data_[n]->tensor);
}

const DegreeComponent& CanonicalElement::degree_data(int n) const {
  if (n < 1 || n > max_degree()) throw InternalError("no pairing data for degree " + std::to_string(n));
  return *data_[static_cast<std::size_t>(n)];
}

const TensorElement2& CanonicalElement::component(int n) const {
  if (n < 0 || n > max_degree()) throw InternalError("no component of degree " + std::to_string(n));
  return tensors_[static_cast<std::size_t>(n)];
}

TensorElement2 CanonicalElement::tensor() const {
  TensorElement2 out = tensors_.front();
  for (std::size_t n = 1; n < tensors_.size(); ++n) out += tensors_[n];
  return out;
}

CanonicalElement CanonicalElement::with_coefficient(const TensorElement2::Key& key,
                                                    const RationalFunction& value) const {
  const int n = key[1].degree(*alg_);
  if (n < 0 || n > max_degree() || key[0].degree(*alg_) != -n) {
    throw InternalError("key is not in any component of this element");
  }
  CanonicalElement out = *this;
  out.tensors_[static_cast<std::size_t>(n)].set(key, value);
  return out;
}

Shapovalov::Shapovalov(AlgebraPtr alg, BasisOptions options)
    : alg_(std::move(alg)),
      options_(options),
      pi_(std::make_shared<const Uea>(alg_, BasisOrder::pi(*alg_, options.inside))),
      phi_(std::make_shared<const Uea>(alg_, BasisOrder::phi(*alg_, options.inside))),
      plus_module_(std::make_unique<VermaModule>(alg_, VermaSide::plus, pi_->order_ptr())) {}

GradedBasis Shapovalov::build_basis(int n) const {
  if (n < 1) throw InternalError("graded bases start at degree 1");
  if (alg_->truncated() && n > alg_->cutoff()) {
    throw WindowError("cutoff exceeded: degree " + std::to_string(n) + " needs a window of at least " +
                      std::to_string(n) + ", have " + std::to_string(alg_->cutoff()));
  }
  std::map<GenId, UeaElement> duals;
  for (int d = 1; d <= n; ++d) {
    for (const auto& pair : dual_basis(*alg_, d)) {
      UeaElement v = pi_->zero();
      for (const auto& t : pair.plus) v.add(PbwMonomial::generator(t.gen), RationalFunction(t.coeff));
      duals.emplace(pair.minus, std::move(v));
    }
  }

  std::vector<GenId> gens;
  for (GenId g : pi_->order().sequence()) {
    if (alg_->degree(g) < 0) gens.push_back(g);
  }
  std::vector<Candidate> candidates;
  std::vector<unsigned> current(gens.size(), 0);
  enumerate(*alg_, gens, 0, n, current, candidates);
  const bool ascending = options_.ascending_ties;
  std::sort(candidates.begin(), candidates.end(), [ascending](const Candidate& a, const Candidate& b) {
    if (a.length != b.length) return a.length > b.length;
    return ascending ? a.exponents < b.exponents : a.exponents > b.exponents;
  });

  GradedBasis basis;
  basis.degree = n;
  for (const auto& c : candidates) {
    PbwMonomial x;
    UeaElement y = pi_->one();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (c.exponents[i] == 0) continue;
      x.append(gens[i], c.exponents[i]);
      const UeaElement& v = duals.at(gens[i]);
      for (unsigned e = 0; e < c.exponents[i]; ++e) y = pi_->multiply(y, v);
    }
    basis.minus.push_back(std::move(x));
    basis.plus.push_back(std::move(y));
    basis.lengths.push_back(c.length);
  }
  return basis;
}

Polynomial Shapovalov::pairing_entry(const PbwMonomial& x, const UeaElement& y) const {
  const UeaElement sy = phi_->antipode(phi_->express(y));
  const UeaElement xe = phi_->express(UeaElement(pi_->order_ptr(), x, RationalFunction(1)));
  const RationalFunction value = phi_->char_eval(phi_->phi(phi_->multiply(sy, xe)));
  if (!value.is_polynomial()) throw InternalError("pairing entry is not a polynomial");
  return value.numerator();
}

Polynomial Shapovalov::oracle_pairing(const PbwMonomial& x, const UeaElement& y) const {
  const UeaElement xv = UeaElement(pi_->order_ptr(), x, RationalFunction(1));
  RationalFunction value;
  for (const auto& [mono, c] : y.terms()) {
    // S(w_1 ... w_k) = (-1)^k w_k ... w_1, whose rightmost letter acts first.
    std::vector<GenId> w = mono.word();
    std::reverse(w.begin(), w.end());
    const RationalFunction sign = (w.size() % 2 == 0) ? RationalFunction(1) : RationalFunction(-1);
    value += sign * c * plus_module_->act_word(w, xv).coefficient(PbwMonomial());
  }
  if (!value.is_polynomial()) throw InternalError("oracle pairing is not a polynomial");
  return value.numerator();
}

PolynomialMatrix Shapovalov::pairing_matrix(const GradedBasis& basis) const {
  const std::size_t n = basis.minus.size();
  PolynomialMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) m[k][l] = pairing_entry(basis.minus[k], basis.plus[l]);
  }
  return m;
}

PolynomialMatrix Shapovalov::oracle_matrix(const GradedBasis& basis) const {
  const std::size_t n = basis.minus.size();
  PolynomialMatrix m(n, std::vector<Polynomial>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) m[k][l] = oracle_pairing(basis.minus[k], basis.plus[l]);
  }
  return m;
}

std::shared_ptr<const DegreeComponent> Shapovalov::component(int n) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
  }
  auto data = std::make_shared<DegreeComponent>(
      DegreeComponent{build_basis(n), {}, {}, TensorElement2({pi_->order_ptr(), pi_->order_ptr()})});
  const auto& basis = data->basis;
  data->pairing = pairing_matrix(basis);
  data->inverse = invert_pairing(data->pairing);
  const std::size_t size = basis.minus.size();
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t l = 0; l < size; ++l) {
      const RationalFunction& c = data->inverse[l][k];
      if (c.is_zero()) continue;
      for (const auto& [mono, yc] : basis.plus[l].terms()) data->tensor.add({basis.minus[k], mono}, c * yc);
    }
  }
  std::lock_guard lock(mutex_);
  return cache_.emplace(n, std::move(data)).first->second;
}

CanonicalElement Shapovalov::canonical_element(int max_degree, unsigned threads) const {
  if (max_degree < 0) throw InternalError("negative degree");
  std::vector<std::shared_ptr<const DegreeComponent>> data(static_cast<std::size_t>(max_degree) + 1);
  if (alg_->truncated() && max_degree > alg_->cutoff()) {
    throw WindowError("cutoff exceeded: F through degree " + std::to_string(max_degree) + " needs a window of " +
                      std::to_string(max_degree) + ", have " + std::to_string(alg_->cutoff()));
  }
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(max_degree)));
  if (workers <= 1) {
    for (int n = 1; n <= max_degree; ++n) data[static_cast<std::size_t>(n)] = component(n);
  } else {
    std::atomic<int> next(max_degree);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int n = next--; n >= 1; n = next--) data[static_cast<std::size_t>(n)] = component(n);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return CanonicalElement(alg_, pi_, std::move(data));
}

}  // namespace invstar
