#pragma once

#include "simplex_lab/errors.hpp"
#include "simplex_lab/ring.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace simplex_lab {

/// Dense row-major matrix over a scalar ring.
template <Scalar T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// [this | other]
  Matrix hconcat(const Matrix& other) const {
    if (other.rows_ != rows_) throw PreconditionError("hconcat: row counts differ");
    Matrix out(rows_, cols_ + other.cols_, data_.empty() ? other.data_.front() : data_.front());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

namespace detail {

// Bareiss fraction-free elimination. Every division is by the previous
// pivot and is exact, so this is safe for LaurentPoly.
template <ExactScalar T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.rows();
  const T& like = m(0, 0);
  T prev = RingTraits<T>::embed(Rational(1), like);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (RingTraits<T>::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && RingTraits<T>::is_zero(m(p, k))) ++p;
      if (p == n) return RingTraits<T>::embed(Rational(0), like);
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

inline Complex lu_determinant(Matrix<Complex> m) {
  const std::size_t n = m.rows();
  Complex det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == Complex(0.0, 0.0)) return {0.0, 0.0};
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Determinant of a square matrix: Bareiss for exact rings, partially
/// pivoted LU for Complex.
template <Scalar T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw PreconditionError("determinant: matrix must be square and non-empty");
  if constexpr (RingTraits<T>::exact)
    return detail::bareiss_determinant(m);
  else
    return detail::lu_determinant(m);
}

/// Exact rank by fraction-free elimination with column skipping.
template <ExactScalar T>
std::size_t rank_exact(Matrix<T> m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const T like = m(0, 0);
  T prev = RingTraits<T>::embed(Rational(1), like);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && RingTraits<T>::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(rank, p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m(i, j) = (m(rank, c) * m(i, j) - m(i, c) * m(rank, j)) / prev;
      m(i, c) = RingTraits<T>::embed(Rational(0), like);
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

}  // namespace simplex_lab
