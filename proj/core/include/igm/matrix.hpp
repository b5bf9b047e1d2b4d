#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace igm {

// Dense row-major matrix of doubles. Orders in this library stay below ~250
// rows, so there is no need for blocking or sparse storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  explicit Matrix(const std::vector<std::vector<double>>& rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<double> multiply(const Matrix& m, std::span<const double> x);

/// Adds `value` to every entry.
Matrix add_scalar(Matrix m, double value);

std::vector<double> row_sums(const Matrix& m);
double max_abs(const Matrix& m);
/// Maximum absolute row sum.
double norm_inf(const Matrix& m);
double norm_inf(std::span<const double> x);
/// max_ij |a_ij - b_ij|; matrices must have equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace igm
