#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "wqh/scalar.hpp"

namespace wqh {

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data);

  static Matrix identity(std::size_t n);
  static Matrix scalar(const Scalar& s) { return Matrix(1, 1, {s}); }
  /// Matrix unit E_{ij} of the given shape.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  Matrix transpose() const;
  Matrix conj() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  bool is_zero() const;
  bool is_identity() const;
  bool is_exact() const;
  Matrix to_approx() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal direct sum.
Matrix direct_sum(const std::vector<Matrix>& blocks);

std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; std::nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Solves a * x = b; std::nullopt if inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Basis of the right null space, as columns.
Matrix null_space(const Matrix& m);
/// A right inverse r with m * r = I, for m of full row rank; std::nullopt otherwise.
std::optional<Matrix> right_inverse(const Matrix& m);

/// Worst entrywise |a - b|; +inf on a shape mismatch.
double max_deviation(const Matrix& a, const Matrix& b);
/// Equality under the tolerance policy.
bool matrices_close(const Matrix& a, const Matrix& b, const Tolerance& tol);

/// Permutation matrix of the flip V (x) W -> W (x) V for dim V = m, dim W = n.
Matrix flip(std::size_t m, std::size_t n);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace wqh
