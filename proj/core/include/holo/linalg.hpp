#ifndef HOLO_LINALG_HPP
#define HOLO_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <holo/rat.hpp>

namespace holo {

// Dense matrix over an exact field (Rat, ModInt, RatFun).
template <class F>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const F& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const F& zero() const { return zero_; }

 private:
  std::size_t rows_, cols_;
  F zero_;
  std::vector<F> data_;
};

template <class F, class IsZero>
struct EchelonResult {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

// in-place reduced row echelon form; is_zero decides exact zero tests
template <class F, class IsZero>
EchelonResult<F, IsZero> rref(Matrix<F>& m, IsZero is_zero) {
  EchelonResult<F, IsZero> res;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m.at(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    F inv = m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      F f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

// basis of the right nullspace, one vector per free column
template <class F, class IsZero>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& one, IsZero is_zero) {
  auto ech = rref(m, is_zero);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<F> v(m.cols(), m.zero());
    v[free_col] = one;
    for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
      v[ech.pivot_cols[r]] = m.zero() - m.at(r, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// fraction-free Bareiss determinant over the integers
inline Int bareiss_det(std::vector<std::vector<Int>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_det: not square");
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace holo

#endif
