/*
   Copyright 2026 The exactreal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "exactreal/core/poly.hpp"
#include "exactreal/core/rational.hpp"

namespace exactreal {

/// Dense row-major matrix over an exact field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, F(0)) {}
  Matrix(std::size_t r, std::size_t c, std::vector<F> data) : rows_(r), cols_(c), a_(std::move(data)) {
    if (a_.size() != r * c) throw InputError("matrix data length does not match its shape");
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    std::vector<F> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw InputError("matrix rows have different lengths");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix diagonal(const std::vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<F>>& cols) {
    const std::size_t c = cols.size(), r = c ? cols[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      if (cols[j].size() != r) throw InputError("matrix columns have different lengths");
      for (std::size_t i = 0; i < r; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<F>& data() const { return a_; }

  F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const { return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  std::vector<F> column(std::size_t j) const {
    std::vector<F> v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class G, class Fn>
  Matrix<G> map(Fn fn) const {
    std::vector<G> v;
    v.reserve(a_.size());
    for (const auto& x : a_) v.push_back(fn(x));
    return Matrix<G>(rows_, cols_, std::move(v));
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] + b.a_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) c.a_[k] = a.a_[k] - b.a_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const F& s, const Matrix& m) {
    Matrix c = m;
    for (auto& x : c.a_) x = s * x;
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
      if (!(a.a_[k] == b.a_[k])) return false;
    return true;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
    std::vector<F> out(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + (*this)(i, j) * v[j];
    return out;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> a_;
};

template <class F>
void require_square(const Matrix<F>& m) {
  if (!m.is_square()) throw InputError("square matrix required");
}

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s = s + a[i] * b[i];
  return s;
}

/// Determinant by Gaussian elimination with exact division.
template <class F>
F det(Matrix<F> m) {
  require_square(m);
  const std::size_t n = m.rows();
  F d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    const F inv = F(1) / m(c, c);
    d = d * m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
    }
  }
  return d;
}

template <class F>
F trace(const Matrix<F>& m) {
  require_square(m);
  F t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// det(x I - M) by Faddeev-LeVerrier, cross-checked against determinants at
/// n + 1 integer points.
template <class F>
Poly<F> char_poly(const Matrix<F>& m) {
  require_square(m);
  const std::size_t n = m.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) = mk(i, i) + c[n - k + 1];
    c[n - k] = -trace(m * mk) / F(static_cast<int>(k));
  }
  Poly<F> p(std::move(c));
  for (std::size_t k = 0; k <= n; ++k) {
    const F x0(static_cast<int>(k));
    Matrix<F> xm = Matrix<F>::identity(n);
    for (std::size_t i = 0; i < n; ++i) xm(i, i) = x0;
    if (!(det(xm - m) == p.template eval<F>(x0))) throw std::logic_error("characteristic polynomial check failed");
  }
  return p;
}

template <class F>
struct RowEchelon {
  Matrix<F> r;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
template <class F>
RowEchelon<F> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const F inv = F(1) / m(row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).pivots.size();
}

/// Basis of {v : M v = 0}, one vector per free column with that entry 1.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  const RowEchelon<F> e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.r(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  require_square(m);
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  const RowEchelon<F> e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw MathError("matrix is singular");
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.r(i, n + j);
  return inv;
}

template <class F>
struct GeneralSolution {
  bool consistent = false;
  std::vector<F> particular;
  std::vector<std::vector<F>> nullspace;
};

/// Particular solution (free variables zero) plus a fundamental system, or
/// consistent = false.
template <class F>
GeneralSolution<F> solve_general(const Matrix<F>& m, const std::vector<F>& rhs) {
  if (rhs.size() != m.rows()) throw InputError("right-hand side length does not match the matrix");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const RowEchelon<F> e = rref(aug);
  GeneralSolution<F> out;
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return out;
  out.consistent = true;
  out.particular.assign(m.cols(), F(0));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) out.particular[e.pivots[k]] = e.r(k, m.cols());
  out.nullspace = nullspace(m);
  return out;
}

}  // namespace exactreal
