#pragma once

// Small dense matrices over Q for the degree-wise character pairings.

#include <optional>
#include <vector>

#include "invstar/rational.hpp"

namespace invstar::detail {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

inline std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    const Rational inv = m(r, col).inverse();
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Gauss-Jordan inverse; empty when singular or not square.
inline std::optional<RationalMatrix> inverse(RationalMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(col, j), m(pivot, j));
      std::swap(inv(col, j), inv(pivot, j));
    }
    const Rational p = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace invstar::detail
