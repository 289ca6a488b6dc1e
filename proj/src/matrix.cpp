#include "urlab/matrix.hpp"

#include <numeric>
#include <ostream>
#include <string>

#include "urlab/errors.hpp"

namespace urlab {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ragged matrix literal");
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = 1;
  }
  return out;
}

Matrix Matrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  Matrix out(rows, cols);
  out(i, j) = 1;
  return out;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) {
    throw DimensionMismatch("from_rows needs at least one row");
  }
  Matrix out(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) {
      throw DimensionMismatch("ragged rows");
    }
    for (std::size_t j = 0; j < out.cols_; ++j) {
      out(i, j) = rows[i][j];
    }
  }
  return out;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) { return from_rows(cols).transpose(); }

bool Matrix::is_zero() const {
  for (const auto& q : data_) {
    if (!q.is_zero()) {
      return false;
    }
  }
  return true;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i] = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out(j, i) = (*this)(i, j);
    }
  }
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionMismatch("block out of range");
  }
  Matrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      out(i, j) = (*this)(r0 + i, c0 + j);
    }
  }
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw DimensionMismatch("block out of range");
  }
  for (std::size_t i = 0; i < b.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("matrix sum shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!other.data_[k].is_zero()) {
      data_[k] += other.data_[k];
    }
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("matrix difference shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!other.data_[k].is_zero()) {
      data_[k] -= other.data_[k];
    }
  }
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    for (auto& q : data_) {
      q = 0;
    }
    return *this;
  }
  for (auto& q : data_) {
    if (!q.is_zero()) {
      q *= s;
    }
  }
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& q : out.data_) {
    if (!q.is_zero()) {
      q = -q;
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw DimensionMismatch("matrix product shape mismatch");
  }
  Matrix out(a.rows_, b.cols_);
  // Most operands are block-sparse; skip zero entries of the left factor.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) {
          out(i, j) += aik * bkj;
        }
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) {
    throw DimensionMismatch("matrix-vector shape mismatch");
  }
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) {
        out[i] += a(i, k) * v[k];
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : ", [");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      os << (j == 0 ? "" : ", ") << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix direct_sum(std::span<const Matrix> blocks) {
  if (blocks.empty()) {
    throw DimensionMismatch("direct sum of nothing");
  }
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) {
        continue;
      }
      out.set_block(i * b.rows(), j * b.cols(), a(i, j) * b);
    }
  }
  return out;
}

Matrix jordan_block(std::size_t p, const Rational& eigenvalue, JordanOrientation orientation) {
  Matrix out(p, p);
  for (std::size_t i = 0; i < p; ++i) {
    out(i, i) = eigenvalue;
    if (i + 1 < p) {
      if (orientation == JordanOrientation::upper) {
        out(i, i + 1) = 1;
      } else {
        out(i + 1, i) = 1;
      }
    }
  }
  return out;
}

Matrix ad_shift_power(const Matrix& a, const Rational& lambda, std::size_t k, const Matrix& x) {
  if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
    throw DimensionMismatch("ad_shift_power needs square operands of equal size");
  }
  Matrix out = x;
  for (std::size_t step = 0; step < k && !out.is_zero(); ++step) {
    out = commutator(a, out) - lambda * out;
  }
  return out;
}

BlockPartition::BlockPartition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  for (auto s : sizes_) {
    if (s == 0) {
      throw DimensionMismatch("block sizes must be positive");
    }
  }
  total_ = std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::size_t BlockPartition::offset(std::size_t i) const {
  if (i > sizes_.size()) {
    throw DimensionMismatch("block index out of range");
  }
  return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
}

BlockPartition BlockPartition::reversed() const {
  return BlockPartition(std::vector<std::size_t>(sizes_.rbegin(), sizes_.rend()));
}

Matrix block_view(const Matrix& m, const BlockPartition& rows, const BlockPartition& cols, std::size_t i,
                  std::size_t j) {
  if (m.rows() != rows.total() || m.cols() != cols.total()) {
    throw DimensionMismatch("partition does not match matrix shape");
  }
  if (i >= rows.count() || j >= cols.count()) {
    throw DimensionMismatch("block index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range");
  }
  return m.block(rows.offset(i), cols.offset(j), rows.size(i), cols.size(j));
}

bool is_i_diagonal(const Matrix& m, const BlockPartition& part, std::size_t shift) {
  if (m.rows() != part.total() || m.cols() != part.total()) {
    throw DimensionMismatch("partition does not match matrix shape");
  }
  for (std::size_t i = 0; i < part.count(); ++i) {
    for (std::size_t j = 0; j < part.count(); ++j) {
      if (j == i + shift) {
        continue;
      }
      if (!block_view(m, part, part, i, j).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace urlab
