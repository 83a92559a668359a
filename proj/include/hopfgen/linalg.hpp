#pragma once

#include "hopfgen/scalar.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hopfgen {

// Dense row-major matrix over Q. Sizes here are at most a few hundred.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// In-place reduced row echelon form; returns pivot columns in order.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Some solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Basis of {x : m x = 0}.
std::vector<Vec> nullspace(const Matrix& m);

// Row space basis (reduced echelon rows) of the given vectors.
std::vector<Vec> row_basis(const std::vector<Vec>& vectors, std::size_t dim);

}  // namespace hopfgen
