#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "eqconic/quadext.hpp"

namespace eqconic {

using Vec = std::vector<QuadExt>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<QuadExt>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);
  static Matrix from_columns(const std::vector<Vec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  QuadExt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadExt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;
  Vec operator*(const Vec& v) const;
  Matrix operator*(const QuadExt& s) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  bool operator==(const Matrix& other) const = default;

  /// Reduced row echelon form; `pivots` receives the pivot columns.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector per free column, read off the RREF.
  std::vector<Vec> kernel() const;
  QuadExt determinant() const;
  /// Throws InputError for singular matrices.
  Matrix inverse() const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadExt> data_;
};

using Mat3 = Matrix;
using Mat6 = Matrix;

/// True if A == s*B for some nonzero scalar s.
bool projectively_equal(const Matrix& a, const Matrix& b);

/// The RREF row basis of span(vectors); equal spans give equal results.
std::vector<Vec> span_basis(const std::vector<Vec>& vectors);

}  // namespace eqconic
