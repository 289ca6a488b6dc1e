#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "urlab/rational.hpp"

namespace urlab {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix. Rows and columns are both at least 1.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix unit with a single 1 at (i, j), zero-based.
  static Matrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static Matrix from_rows(const std::vector<Vector>& rows);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Row-major copy of the entries.
  const Vector& entries() const { return data_; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Vector data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

Matrix direct_sum(std::span<const Matrix> blocks);

/// Kronecker product; row index of the result is (i_a * rows_b + i_b).
Matrix kron(const Matrix& a, const Matrix& b);

enum class JordanOrientation { upper, lower };

/// J^p(eigenvalue) for upper (1s on the superdiagonal), J_p(eigenvalue) for lower.
Matrix jordan_block(std::size_t p, const Rational& eigenvalue, JordanOrientation orientation);

/// (ad A - lambda)^k applied to X, i.e. k iterations of X -> AX - XA - lambda X.
Matrix ad_shift_power(const Matrix& a, const Rational& lambda, std::size_t k, const Matrix& x);

/// Sizes (d_1, ..., d_l) of a block partition; every size is positive.
class BlockPartition {
 public:
  BlockPartition() = default;
  explicit BlockPartition(std::vector<std::size_t> sizes);

  std::size_t count() const { return sizes_.size(); }
  std::size_t total() const { return total_; }
  std::size_t size(std::size_t i) const { return sizes_.at(i); }
  std::size_t offset(std::size_t i) const;
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  BlockPartition reversed() const;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::size_t total_ = 0;
};

/// Copy of block (i, j) (zero-based) of M under the given row/column partitions.
Matrix block_view(const Matrix& m, const BlockPartition& rows, const BlockPartition& cols, std::size_t i,
                  std::size_t j);

/// True iff every block of M off the `shift`-th block superdiagonal is zero.
bool is_i_diagonal(const Matrix& m, const BlockPartition& part, std::size_t shift);

}  // namespace urlab
