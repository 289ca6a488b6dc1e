#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "urlab/matrix.hpp"

namespace urlab {

/// Reduced row-echelon form of a list of row vectors; zero rows are dropped.
struct RowEchelon {
  std::size_t cols = 0;
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;  // pivots[r] is the pivot column of rows[r]
};

RowEchelon rref(std::vector<Vector> rows, std::size_t cols);
RowEchelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column of rref(M) with a 1 in that column.
std::vector<Vector> nullspace(const Matrix& m);
std::vector<Vector> nullspace(const RowEchelon& echelon);

std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Verdict on linear independence of same-shape matrices viewed as flat vectors.
struct IndependenceCertificate {
  bool independent = true;
  std::optional<Vector> relation;  // first nonzero coordinate is 1
  std::size_t rank = 0;
};

IndependenceCertificate independence_certificate(std::span<const Matrix> mats);

/// Subspace of F^ambient held as an RREF basis: basis[i] has a 1 at pivots[i] and 0 at every
/// other pivot, so coordinates of a member are read off at the pivot positions.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates relative to basis(); valid only for members.
  Vector coordinates(const Vector& v) const;
  /// Non-pivot positions: the unit vectors there span a complement.
  std::vector<std::size_t> complement_positions() const;
  /// Linear map with kernel exactly this subspace: v -> complement coordinates of v.
  Vector quotient_coordinates(const Vector& v) const;
  /// Embeds quotient coordinates back as the matching combination of complement unit vectors.
  Vector lift(const Vector& quotient_coords) const;
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0 for every M in mats}; all matrices share the column count.
Subspace joint_nullspace(std::span<const Matrix> mats, std::size_t ambient);

/// Matrix of M restricted to an M-invariant subspace, in the subspace's coordinates.
Matrix restrict_to(const Matrix& m, const Subspace& s);

/// Matrix of the map induced by M on F^ambient / S, in complement coordinates.
Matrix induced_on_quotient(const Matrix& m, const Subspace& s);

/// Incrementally maintained RREF span used for closures and intertwiner systems.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t cols) : cols_(cols) {}
  /// Reduces v against the current rows; returns true iff v was outside the span (and adds it).
  bool insert(Vector v);
  bool contains(Vector v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  RowEchelon echelon() const;

 private:
  void reduce(Vector& v) const;
  std::size_t cols_;
  std::vector<Vector> rows_;  // each row has leading 1 at pivots_[r], rows kept fully reduced
  std::vector<std::size_t> pivots_;
};

}  // namespace urlab
