#include "urlab/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "urlab/errors.hpp"

namespace urlab {

namespace {

void axpy(Vector& target, const Rational& factor, const Vector& source) {
  for (std::size_t k = 0; k < target.size(); ++k) {
    if (!source[k].is_zero()) {
      target[k] -= factor * source[k];
    }
  }
}

void scale(Vector& v, const Rational& s) {
  for (auto& q : v) {
    if (!q.is_zero()) {
      q *= s;
    }
  }
}

}  // namespace

RowEchelon rref(std::vector<Vector> rows, std::size_t cols) {
  RowEchelon out;
  out.cols = cols;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < cols && lead_row < rows.size(); ++col) {
    std::size_t pick = lead_row;
    while (pick < rows.size() && rows[pick][col].is_zero()) {
      ++pick;
    }
    if (pick == rows.size()) {
      continue;
    }
    std::swap(rows[lead_row], rows[pick]);
    const Rational inv = Rational(1) / rows[lead_row][col];
    scale(rows[lead_row], inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != lead_row && !rows[r][col].is_zero()) {
        const Rational f = rows[r][col];
        axpy(rows[r], f, rows[lead_row]);
      }
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  rows.resize(lead_row);
  out.rows = std::move(rows);
  return out;
}

RowEchelon rref(const Matrix& m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
  }
  return rref(std::move(rows), m.cols());
}

std::size_t rank(const Matrix& m) { return rref(m).rows.size(); }

std::vector<Vector> nullspace(const RowEchelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) {
    is_pivot[p] = true;
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    Vector v(e.cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (!e.rows[r][f].is_zero()) {
        v[e.pivots[r]] = -e.rows[r][f];
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> nullspace(const Matrix& m) { return nullspace(rref(m)); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<Vector> rows(n, Vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = m(i, j);
    }
    rows[i][n + i] = 1;
  }
  RowEchelon e = rref(std::move(rows), 2 * n);
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) {
    return std::nullopt;
  }
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = e.rows[i][n + j];
    }
  }
  return out;
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("determinant of a non-square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<Vector> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = m.row(i);
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && a[pick][col].is_zero()) {
      ++pick;
    }
    if (pick == n) {
      return Rational(0);
    }
    if (pick != col) {
      std::swap(a[pick], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        const Rational f = a[r][col] * inv;
        axpy(a[r], f, a[col]);
      }
    }
  }
  return det;
}

IndependenceCertificate independence_certificate(std::span<const Matrix> mats) {
  IndependenceCertificate cert;
  if (mats.empty()) {
    return cert;
  }
  const std::size_t len = mats.front().rows() * mats.front().cols();
  for (const auto& m : mats) {
    if (m.rows() != mats.front().rows() || m.cols() != mats.front().cols()) {
      throw DimensionMismatch("independence_certificate needs equal shapes");
    }
  }
  // Columns are the flattened matrices; a kernel vector is a linear relation.
  std::vector<Vector> rows(len, Vector(mats.size()));
  for (std::size_t c = 0; c < mats.size(); ++c) {
    const Vector& flat = mats[c].entries();
    for (std::size_t k = 0; k < len; ++k) {
      rows[k][c] = flat[k];
    }
  }
  const RowEchelon e = rref(std::move(rows), mats.size());
  cert.rank = e.rows.size();
  cert.independent = cert.rank == mats.size();
  if (!cert.independent) {
    Vector rel = nullspace(e).front();
    const auto first = std::find_if(rel.begin(), rel.end(), [](const Rational& q) { return !q.is_zero(); });
    scale(rel, Rational(1) / *first);
    cert.relation = std::move(rel);
  }
  return cert;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
  Subspace s(ambient);
  if (vectors.empty()) {
    return s;
  }
  RowEchelon e = rref(vectors, ambient);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  std::vector<Vector> units(ambient, Vector(ambient));
  for (std::size_t i = 0; i < ambient; ++i) {
    units[i][i] = 1;
  }
  return span(units, ambient);
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector out(basis_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    out[i] = v[pivots_[i]];
  }
  return out;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) {
    throw DimensionMismatch("vector length differs from ambient dimension");
  }
  for (const auto& q : quotient_coordinates(v)) {
    if (!q.is_zero()) {
      return false;
    }
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [this](const Vector& v) { return contains(v); });
}

std::vector<std::size_t> Subspace::complement_positions() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) {
    is_pivot[p] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ambient_; ++k) {
    if (!is_pivot[k]) {
      out.push_back(k);
    }
  }
  return out;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  // v = sum_i v[p_i] b_i + sum_f q_f e_f, because e_f vanishes at every pivot.
  Vector residual = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational c = v[pivots_[i]];
    if (!c.is_zero()) {
      axpy(residual, c, basis_[i]);
    }
  }
  const auto comp = complement_positions();
  Vector out(comp.size());
  for (std::size_t k = 0; k < comp.size(); ++k) {
    out[k] = residual[comp[k]];
  }
  return out;
}

Vector Subspace::lift(const Vector& quotient_coords) const {
  const auto comp = complement_positions();
  if (quotient_coords.size() != comp.size()) {
    throw DimensionMismatch("quotient coordinate length mismatch");
  }
  Vector out(ambient_);
  for (std::size_t k = 0; k < comp.size(); ++k) {
    out[comp[k]] = quotient_coords[k];
  }
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(all, ambient_);
}

Subspace joint_nullspace(std::span<const Matrix> mats, std::size_t ambient) {
  std::vector<Vector> rows;
  for (const auto& m : mats) {
    if (m.cols() != ambient) {
      throw DimensionMismatch("joint_nullspace column mismatch");
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Vector r = m.row(i);
      if (std::any_of(r.begin(), r.end(), [](const Rational& q) { return !q.is_zero(); })) {
        rows.push_back(std::move(r));
      }
    }
  }
  if (rows.empty()) {
    return Subspace::whole(ambient);
  }
  return Subspace::span(nullspace(rref(std::move(rows), ambient)), ambient);
}

Matrix restrict_to(const Matrix& m, const Subspace& s) {
  if (s.dim() == 0) {
    throw DimensionMismatch("restriction to the zero subspace");
  }
  std::vector<Vector> cols;
  for (const auto& b : s.basis()) {
    const Vector image = m * b;
    if (!s.contains(image)) {
      throw DimensionMismatch("subspace is not invariant under the operator");
    }
    cols.push_back(s.coordinates(image));
  }
  return Matrix::from_columns(cols);
}

Matrix induced_on_quotient(const Matrix& m, const Subspace& s) {
  const auto comp = s.complement_positions();
  if (comp.empty()) {
    throw DimensionMismatch("quotient by the whole space");
  }
  std::vector<Vector> cols;
  for (auto f : comp) {
    cols.push_back(s.quotient_coordinates(m.column(f)));
  }
  return Matrix::from_columns(cols);
}

void SpanBuilder::reduce(Vector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[pivots_[r]];
    if (!c.is_zero()) {
      axpy(v, c, rows_[r]);
    }
  }
}

bool SpanBuilder::contains(Vector v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
}

bool SpanBuilder::insert(Vector v) {
  if (v.size() != cols_) {
    throw DimensionMismatch("span vector length mismatch");
  }
  reduce(v);
  const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return !q.is_zero(); });
  if (lead == v.end()) {
    return false;
  }
  const std::size_t p = static_cast<std::size_t>(lead - v.begin());
  scale(v, Rational(1) / v[p]);
  for (auto& row : rows_) {
    if (!row[p].is_zero()) {
      const Rational f = row[p];
      axpy(row, f, v);
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

RowEchelon SpanBuilder::echelon() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  RowEchelon e;
  e.cols = cols_;
  for (auto i : order) {
    e.rows.push_back(rows_[i]);
    e.pivots.push_back(pivots_[i]);
  }
  return e;
}

}  // namespace urlab
