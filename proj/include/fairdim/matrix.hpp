#ifndef FAIRDIM_MATRIX_HPP
#define FAIRDIM_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fairdim {

/*
 Dense real matrix, row-major.

 Every entry is finite: the constructors reject NaN and Inf, so anything
 holding a Matrix can assume clean numbers. Values are immutable through the
 public interface except via operator(), which callers use while building a
 result in place.
*/
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);  // zero-filled
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  // Column vector from values.
  static Matrix column(std::initializer_list<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const double> data() const { return entries_; }

  Matrix transpose() const;
  // Rows listed in `indices`, in that order.
  Matrix select_rows(std::span<const std::size_t> indices) const;
  // Leading `count` columns.
  Matrix leading_columns(std::size_t count) const;

  bool operator==(const Matrix&) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

Matrix matmul(const Matrix& a, const Matrix& b);
// a^T b without materializing the transpose.
Matrix matmul_transposed_lhs(const Matrix& a, const Matrix& b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

double frobenius_norm_sq(const Matrix& a);
double frobenius_norm(const Matrix& a);
double trace(const Matrix& a);

// X^T X / divisor, symmetrized.
Matrix scaled_gram(const Matrix& x, std::size_t divisor);

// Largest |a_ij - a_ji|; zero for symmetric input.
double max_asymmetry(const Matrix& a);

}  // namespace fairdim

#endif
