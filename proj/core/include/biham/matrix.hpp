#pragma once

#include <biham/rational.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace biham {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const noexcept { return entries_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_skew() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator-() const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;

  bool operator==(const Matrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Rational& s, const Matrix& m);

// Block-diagonal assembly.
Matrix direct_sum(const Matrix& a, const Matrix& b);

std::size_t mat_rank(const Matrix& m);
std::vector<std::vector<Rational>> mat_nullspace(const Matrix& m);
Rational determinant(const Matrix& m);

}  // namespace biham
