#pragma once

#include <cstddef>
#include <vector>

#include "holomatch/scalar.hpp"

namespace holomatch {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Kronecker product a ⊗ b.
Matrix kron(const Matrix& a, const Matrix& b);
/// a^{⊗k}; the 1×1 identity when k = 0.
Matrix kron_power(const Matrix& a, unsigned k);

struct Echelon {
  Matrix reduced;                       // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
};

/// Exact reduced row echelon form by Gauss–Jordan elimination.
Echelon row_reduce(Matrix m);

/// Rank over ℚ(i, √2).
std::size_t exact_rank(const Matrix& m);

Scalar determinant(Matrix m);

/// Inverse of a square matrix; throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);

}  // namespace holomatch
