// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mdssd/error.hpp"
#include "mdssd/gf.hpp"

namespace mdssd {

/// Dense row-major matrix of field elements.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Element> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Element> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  /// The submatrix formed by the given columns, in the given order.
  Matrix columns(std::span<const std::size_t> idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

/// Rank by Gaussian elimination (the argument is consumed).
inline std::size_t rank_in_place(const Field& F, Matrix& a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    const Element inv = F.inv(a(r, c));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      const Element f = F.neg(F.mul(a(i, c), inv));
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = F.add(a(i, j), F.mul(f, a(r, j)));
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const Field& F, Matrix a) { return rank_in_place(F, a); }

inline Element dot(const Field& F, std::span<const Element> x, std::span<const Element> y) {
  if (x.size() != y.size()) throw Error(Errc::LengthMismatch, "dot product of unequal lengths");
  Element acc = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], y[i]));
  return acc;
}

inline Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::LengthMismatch, "matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Element x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = F.add(out(i, j), F.mul(x, b(l, j)));
    }
  return out;
}

/// G Gᵀ.
inline Matrix gram(const Field& F, const Matrix& g) {
  Matrix out(g.rows(), g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.rows(); ++j) out(i, j) = out(j, i) = dot(F, g.row(i), g.row(j));
  return out;
}

}  // namespace mdssd
