#pragma once

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "invstar/basis_order.hpp"
#include "invstar/errors.hpp"
#include "invstar/rational_function.hpp"

namespace invstar {

struct Factor {
  GenId gen = 0;
  unsigned exp = 1;

  friend auto operator<=>(const Factor&, const Factor&) = default;
};

/// Product g_1^{s_1} ... g_r^{s_r} with the generators strictly increasing in
/// some ambient BasisOrder.  The monomial itself does not know the order; the
/// element or tensor holding it does.
class PbwMonomial {
 public:
  PbwMonomial() = default;
  explicit PbwMonomial(std::vector<Factor> factors);

  static PbwMonomial generator(GenId g, unsigned exp = 1) { return PbwMonomial({Factor{g, exp}}); }
  /// Groups runs of equal adjacent letters; does not reorder.
  static PbwMonomial from_word(std::span<const GenId> word);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  /// Total number of factors counted with multiplicity.
  unsigned length() const;
  int degree(const GradedLieAlgebra& alg) const;
  /// The letters with multiplicity, left to right.
  std::vector<GenId> word() const;

  bool is_ordered(const BasisOrder& order) const;
  bool has_degree_zero(const GradedLieAlgebra& alg) const;
  bool only_degree_zero(const GradedLieAlgebra& alg) const;
  bool only_negative(const GradedLieAlgebra& alg) const;
  bool only_positive(const GradedLieAlgebra& alg) const;

  /// Multiplies by g on the right, assuming g is not smaller than the last factor.
  void append(GenId g, unsigned exp = 1);
  /// Removes one copy of the last factor.
  void pop_back();
  const Factor& back() const { return factors_.back(); }
  const Factor& front() const { return factors_.front(); }
  PbwMonomial concatenated(const PbwMonomial& right) const;

  /// "f^2*e"; "1" for the empty monomial.
  std::string str(const GradedLieAlgebra& alg) const;

  friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

namespace detail {
inline bool coefficient_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coefficient_is_zero(const RationalFunction& c) { return c.is_zero(); }
}  // namespace detail

/// Finite linear combination of PBW monomials of one ambient order.  Zero
/// coefficients are never stored.
template <typename Coeff>
class BasicElement {
 public:
  using Terms = std::map<PbwMonomial, Coeff>;

  explicit BasicElement(OrderPtr order) : order_(std::move(order)) {}
  BasicElement(OrderPtr order, const PbwMonomial& m, const Coeff& c) : order_(std::move(order)) { add(m, c); }

  const BasisOrder& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const PbwMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add(const PbwMonomial& m, const Coeff& c) {
    if (detail::coefficient_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (detail::coefficient_is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicElement& operator+=(const BasicElement& other) {
    require_same_order(other);
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
  }
  BasicElement& operator-=(const BasicElement& other) {
    require_same_order(other);
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
  }
  template <typename Scalar>
  BasicElement& operator*=(const Scalar& s) {
    Terms out;
    for (auto& [m, c] : terms_) {
      Coeff v = c * s;
      if (!detail::coefficient_is_zero(v)) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
  }
  BasicElement operator-() const {
    BasicElement r(order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend BasicElement operator+(BasicElement a, const BasicElement& b) { return a += b; }
  friend BasicElement operator-(BasicElement a, const BasicElement& b) { return a -= b; }

  friend bool operator==(const BasicElement& a, const BasicElement& b) {
    return *a.order_ == *b.order_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_order(const BasicElement& other) const {
    if (!(*order_ == *other.order_)) throw InternalError("elements with different ambient orders");
  }

  OrderPtr order_;
  Terms terms_;
};

/// Finite linear combination of K-fold tensors of PBW monomials, one ambient
/// order per slot.
template <std::size_t K, typename Coeff>
class BasicTensor {
 public:
  using Key = std::array<PbwMonomial, K>;
  using Terms = std::map<Key, Coeff>;
  using Orders = std::array<OrderPtr, K>;

  explicit BasicTensor(Orders orders) : orders_(std::move(orders)) {}

  const Orders& orders() const { return orders_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Coeff coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coeff{} : it->second;
  }

  void add(const Key& k, const Coeff& c) {
    if (detail::coefficient_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (detail::coefficient_is_zero(it->second)) terms_.erase(it);
    }
  }
  /// Overwrites (or removes, for zero) the coefficient.
  void set(const Key& k, const Coeff& c) {
    if (detail::coefficient_is_zero(c)) {
      terms_.erase(k);
    } else {
      terms_[k] = c;
    }
  }

  BasicTensor& operator+=(const BasicTensor& other) {
    require_same_orders(other);
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  BasicTensor& operator-=(const BasicTensor& other) {
    require_same_orders(other);
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  friend BasicTensor operator-(BasicTensor a, const BasicTensor& b) { return a -= b; }
  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) { return a += b; }

  template <typename Pred>
  BasicTensor filtered(Pred keep) const {
    BasicTensor out(orders_);
    for (const auto& [k, c] : terms_) {
      if (keep(k)) out.terms_.emplace(k, c);
    }
    return out;
  }

  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    for (std::size_t i = 0; i < K; ++i) {
      if (!(*a.orders_[i] == *b.orders_[i])) return false;
    }
    return a.terms_ == b.terms_;
  }

 private:
  void require_same_orders(const BasicTensor& other) const {
    for (std::size_t i = 0; i < K; ++i) {
      if (!(*orders_[i] == *other.orders_[i])) throw InternalError("tensors with different slot orders");
    }
  }

  Orders orders_;
  Terms terms_;
};

using UeaElement = BasicElement<RationalFunction>;
using TensorElement2 = BasicTensor<2, RationalFunction>;
using TensorElement3 = BasicTensor<3, RationalFunction>;
using RationalTensor2 = BasicTensor<2, Rational>;

/// Degrees of each slot of a tensor key.
template <std::size_t K>
std::array<int, K> slot_degrees(const GradedLieAlgebra& alg, const std::array<PbwMonomial, K>& key) {
  std::array<int, K> out{};
  for (std::size_t i = 0; i < K; ++i) out[i] = key[i].degree(alg);
  return out;
}

std::string to_string(const GradedLieAlgebra& alg, const UeaElement& e);
std::string to_string(const GradedLieAlgebra& alg, const TensorElement2& t);
std::string to_string(const GradedLieAlgebra& alg, const TensorElement3& t);
std::string to_string(const GradedLieAlgebra& alg, const RationalTensor2& t);

}  // namespace invstar
