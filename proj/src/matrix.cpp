#include "wqh/matrix.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace wqh {

namespace {

constexpr double kApproxPivotFloor = 1e-12;

bool negligible(const Scalar& s) {
  if (s.is_exact()) return s.is_zero();
  return std::abs(s.to_complex()) < kApproxPivotFloor;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = m.rows();
    double best = -1.0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (negligible(m(i, c))) continue;
      if (m(i, c).is_exact()) {
        p = i;
        break;
      }
      double mag = std::abs(m(i, c).to_complex());
      if (mag > best) {
        best = mag;
        p = i;
      }
    }
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Scalar inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Matrix m(rows, cols);
  m(i, j) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y.is_zero()) continue;
        c(i, j) += x * y;
      }
    }
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::conj() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.conj();
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("Matrix::block");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("Matrix::set_block");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

bool Matrix::is_exact() const {
  for (const auto& x : data_)
    if (!x.is_exact()) return false;
  return true;
}

Matrix Matrix::to_approx() const {
  Matrix t = *this;
  for (auto& x : t.data_) x = x.to_approx();
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) {
      if (a.data_[k].backend() != b.data_[k].backend() && (a.data_[k] - b.data_[k]).is_zero()) continue;
      return false;
    }
  return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const Scalar& y = b(p, q);
          if (y.is_zero()) continue;
          k(i * b.rows() + p, j * b.cols() + q) = x * y;
        }
    }
  return k;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  Matrix t = m;
  return rref(t).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  auto pivots = rref(aug);
  for (std::size_t i = pivots.size(); i < aug.rows(); ++i)
    for (std::size_t j = n; j < aug.cols(); ++j)
      if (!negligible(aug(i, j))) return std::nullopt;
  for (std::size_t c : pivots)
    if (c >= n) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = aug(i, n + j);
  return x;
}

Matrix null_space(const Matrix& m) {
  Matrix t = m;
  auto pivots = rref(t);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -t(i, free_cols[k]);
  }
  return basis;
}

std::optional<Matrix> right_inverse(const Matrix& m) {
  Matrix t = m;
  auto pivots = rref(t);
  if (pivots.size() != m.rows()) return std::nullopt;
  // Columns at pivot positions form an invertible square submatrix.
  Matrix sub(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < pivots.size(); ++k) sub(i, k) = m(i, pivots[k]);
  auto inv = inverse(sub);
  if (!inv) return std::nullopt;
  Matrix r(m.cols(), m.rows());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < m.rows(); ++j) r(pivots[k], j) = (*inv)(k, j);
  return r;
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero() && b(i, j).is_zero()) continue;
      worst = std::max(worst, deviation(a(i, j), b(i, j)));
    }
  return worst;
}

bool matrices_close(const Matrix& a, const Matrix& b, const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!tol.close(a(i, j), b(i, j))) return false;
  return true;
}

Matrix flip(std::size_t m, std::size_t n) {
  // (x (x) y) at index i*n + j goes to (y (x) x) at index j*m + i.
  Matrix p(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) p(j * m + i, i * n + j) = 1;
  return p;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
  }
  return os << "]";
}

}  // namespace wqh
