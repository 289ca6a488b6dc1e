#include "urlab/phi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "urlab/errors.hpp"

namespace urlab {

Matrix phi(std::size_t a, std::size_t b, const Matrix& y) {
  if (y.rows() != a || y.cols() != b) {
    throw DimensionMismatch("phi: Y must be a x b");
  }
  Matrix out(a, b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      Rational v;
      if (i + 1 < a) {
        v += y(i + 1, j);
      }
      if (j > 0) {
        v -= y(i, j - 1);
      }
      out(i, j) = v;
    }
  }
  return out;
}

Matrix phi_power(std::size_t a, std::size_t b, const Matrix& y, std::size_t k) {
  Matrix out = y;
  for (std::size_t i = 0; i < k; ++i) {
    out = phi(a, b, out);
  }
  return out;
}

std::vector<Matrix> phi_kernel_basis(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) {
    throw std::invalid_argument("phi_kernel_basis: sizes must be positive");
  }
  std::vector<Matrix> out;
  const std::size_t m = std::min(a, b);
  for (std::size_t k = 0; k < m; ++k) {
    Matrix y(a, b);
    for (std::size_t r = 0; r + k < m; ++r) {
      if (a <= b) {
        y(r, b - a + r + k) = 1;
      } else {
        y(r, r + k) = 1;
      }
    }
    out.push_back(std::move(y));
  }
  return out;
}

std::vector<Matrix> PhiFamily::t_matrices() const {
  std::vector<Matrix> out;
  for (const auto& t : Ts) {
    out.push_back(t.t);
  }
  return out;
}

namespace {

void fill_ts(PhiFamily& f) {
  f.Ts.clear();
  for (std::size_t i = 0; i < f.n; ++i) {
    for (std::size_t j = i + 1; j < f.n; ++j) {
      f.Ts.push_back({i, j, f.Ps[i] * f.Qs[j] - f.Ps[j] * f.Qs[i]});
    }
  }
}

}  // namespace

PhiFamily build_phi_family(const Matrix& P, const Matrix& Q) {
  if (P.cols() != Q.rows()) {
    throw DimensionMismatch("P must be a x b and Q must be b x c");
  }
  PhiFamily f;
  f.a = P.rows();
  f.b = P.cols();
  f.c = Q.cols();
  f.n = std::max(f.a + f.b - 1, f.b + f.c - 1);
  f.P = P;
  f.Q = Q;
  Matrix p = P;
  Matrix q = Q;
  for (std::size_t i = 0; i < f.n; ++i) {
    f.Ps.push_back(p);
    f.Qs.push_back(q);
    p = phi(f.a, f.b, p);
    q = phi(f.b, f.c, q);
  }
  if (!p.is_zero() || !q.is_zero()) {
    throw std::logic_error("Phi^n did not vanish");
  }
  fill_ts(f);
  return f;
}

bool lidep_predict(const Matrix& P, const Matrix& Q) {
  if (P.cols() != Q.rows()) {
    throw DimensionMismatch("P must be a x b and Q must be b x c");
  }
  const std::size_t a = P.rows();
  const std::size_t b = P.cols();
  const std::size_t c = Q.cols();
  const std::size_t n = std::max(a + b - 1, b + c - 1);
  if (n == 1) {
    return true;
  }
  const bool p_corner = !P(a - 1, 0).is_zero();
  const bool q_corner = !Q(b - 1, 0).is_zero();
  const bool p_above = a >= 2 && !P(a - 2, 0).is_zero();
  const bool q_right = c >= 2 && !Q(b - 1, 1).is_zero();
  auto is = [&](std::size_t x, std::size_t y, std::size_t z) { return a == x && b == y && c == z; };
  const bool in_set = is(n, 1, n) || is(n - 1, 2, n - 1) || is(n, 1, n - 1) || is(n - 1, 1, n);
  const int holds = int(p_corner && q_corner && in_set) + int(!p_corner && p_above && q_corner && is(n, 1, n)) +
                    int(p_corner && !q_corner && q_right && is(n, 1, n));
  return holds == 1;
}

bool lidep_bruteforce(const Matrix& P, const Matrix& Q) {
  const auto ts = build_phi_family(P, Q).t_matrices();
  return independence_certificate(ts).independent;
}

Fieln2Result fieln2_family_unchecked(std::size_t n, const std::vector<Rational>& p, const std::vector<Rational>& q,
                                     const Rational& z, const Rational& w, Sampler& fill) {
  if (n < 2 || p.size() != n - 1 || q.size() != n - 1) {
    throw std::invalid_argument("fieln2_family: n >= 2 and p, q of length n-1");
  }
  const std::size_t r = n - 1;
  PhiFamily f;
  f.a = r;
  f.b = 2;
  f.c = r;
  f.n = n;
  auto star = [&] { return fill.small_rational(); };
  for (std::size_t i = 0; i < n; ++i) {
    // Rows/columns below are 1-based to match the displayed shapes.
    Matrix P(r, 2);
    if (i == 0) {
      for (std::size_t row = 1; row <= r; ++row) {
        P(row - 1, 0) = row == r ? z : star();
        P(row - 1, 1) = star();
      }
    } else {
      const std::size_t low = n - i;  // row holding (0, -p_i z)
      for (std::size_t row = 1; row + 1 < low; ++row) {
        P(row - 1, 0) = star();
        P(row - 1, 1) = star();
      }
      if (low >= 2) {
        P(low - 2, 0) = z;
        P(low - 2, 1) = star();
      }
      P(low - 1, 1) = -p[i - 1] * z;
    }
    Matrix Q(2, r);
    if (i == 0) {
      for (std::size_t col = 1; col <= r; ++col) {
        Q(0, col - 1) = star();
        Q(1, col - 1) = col == 1 ? w : star();
      }
    } else {
      const Rational sign_top = (i - 1) % 2 == 0 ? Rational(1) : Rational(-1);
      Q(0, i - 1) = sign_top * q[i - 1] * w;
      for (std::size_t col = i + 1; col <= r; ++col) {
        Q(0, col - 1) = star();
      }
      if (i + 1 <= r) {
        Q(1, i) = -sign_top * w;
        for (std::size_t col = i + 2; col <= r; ++col) {
          Q(1, col - 1) = star();
        }
      }
    }
    f.Ps.push_back(std::move(P));
    f.Qs.push_back(std::move(Q));
  }
  f.P = f.Ps.front();
  f.Q = f.Qs.front();
  fill_ts(f);
  Fieln2Result out{std::move(f), {}};
  out.certificate = independence_certificate(out.family.t_matrices());
  return out;
}

Fieln2Result fieln2_family(std::size_t n, const std::vector<Rational>& p, const std::vector<Rational>& q,
                           const Rational& z, const Rational& w, Sampler& fill) {
  if (z.is_zero() || w.is_zero()) {
    throw HypothesisViolated("z and w must be nonzero");
  }
  for (std::size_t j = 0; j < std::min(p.size(), q.size()); ++j) {
    if ((p[j] + q[j]).is_zero()) {
      throw HypothesisViolated("p_" + std::to_string(j + 1) + " + q_" + std::to_string(j + 1) + " = 0");
    }
  }
  return fieln2_family_unchecked(n, p, q, z, w, fill);
}

ReduccionInstance make_reduccion_instance(const std::vector<std::size_t>& sizes, const Rational& lambda,
                                          const Rational& alpha, Sampler& fill) {
  if (sizes.size() != 4 || std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; })) {
    throw std::invalid_argument("reduccion needs four positive block sizes");
  }
  if (lambda.is_zero()) {
    throw HypothesisViolated("reduccion needs lambda != 0");
  }
  const BlockPartition part(sizes);
  std::vector<Matrix> diag;
  for (std::size_t i = 0; i < 4; ++i) {
    diag.push_back(jordan_block(sizes[i], alpha - Rational(static_cast<long>(i)) * lambda, JordanOrientation::upper));
  }
  ReduccionInstance inst{sizes, lambda, alpha, direct_sum(diag), Matrix(part.total(), part.total())};
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    Matrix blk(sizes[i], sizes[i + 1]);
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t c = 0; c < blk.cols(); ++c) {
        blk(r, c) = fill.small_rational();
      }
    }
    blk(sizes[i] - 1, 0) = 1;
    inst.X.set_block(part.offset(i), part.offset(i + 1), blk);
  }
  return inst;
}

namespace {

bool block14_nonzero(const Matrix& m, const BlockPartition& part) {
  return !block_view(m, part, part, 0, 3).is_zero();
}

}  // namespace

ReduccionResult reduccion_scan(const ReduccionInstance& inst, bool full_closure) {
  const BlockPartition part(inst.sizes);
  const std::size_t d = part.total();
  ReduccionResult result;
  SpanBuilder span(d * d);
  std::vector<Matrix> elements;
  auto add = [&](const Matrix& m) {
    if (!span.insert(m.entries())) {
      return false;
    }
    elements.push_back(m);
    if (result.all_14_blocks_zero && block14_nonzero(m, part)) {
      result.all_14_blocks_zero = false;
      result.witness = m;
    }
    return true;
  };
  add(inst.A);
  add(inst.X);
  bool stop = !full_closure && !result.all_14_blocks_zero;
  for (std::size_t i = 1; i < elements.size() && !stop; ++i) {
    if (elements.size() > d * d || i > kClosureRoundCap * d) {
      throw std::logic_error("closure failed to stabilise");
    }
    for (std::size_t j = 0; j < i && !stop; ++j) {
      add(commutator(elements[j], elements[i]));
      stop = !full_closure && !result.all_14_blocks_zero;
    }
  }
  result.closure_dim = span.dim();
  result.complete = !stop;
  return result;
}

namespace {

/// Block with some entries left free.
struct Pattern {
  std::vector<std::vector<std::optional<Rational>>> cells;  // nullopt = free

  Pattern(std::size_t r, std::size_t c) : cells(r, std::vector<std::optional<Rational>>(c, Rational(0))) {}

  void add(std::size_t i, std::size_t j, const Rational& v) {
    if (cells[i][j]) {
      *cells[i][j] += v;
    }
  }
  void free(std::size_t i, std::size_t j) { cells[i][j].reset(); }

  bool matches(const Matrix& m) const {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = 0; j < cells[i].size(); ++j) {
        if (cells[i][j] && *cells[i][j] != m(i, j)) {
          return false;
        }
      }
    }
    return true;
  }
};

// A fixed value landing on a free cell leaves it free.
void add_g(Pattern& p, const Rational& v) {
  const std::size_t r = p.cells.size();
  const std::size_t c = p.cells[0].size();
  for (std::size_t i = 0; i + 1 < r; ++i) {
    p.free(i, c - 1);
  }
  p.add(r - 1, c - 1, v);
}

void add_h(Pattern& p, const Rational& v) {
  for (std::size_t j = 1; j < p.cells[0].size(); ++j) {
    p.free(0, j);
  }
  p.add(0, 0, v);
}

}  // namespace

std::optional<std::string> reduccion_chain_mismatch(const ReduccionInstance& inst) {
  const auto& s = inst.sizes;
  const BlockPartition part(s);
  auto D = [&](std::size_t i, std::size_t j) {
    const Rational sign = (s[j] - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * binomial(s[i] + s[j] - 2, s[i] - 1);
  };
  const std::size_t m = std::max({s[0] + s[1], s[1] + s[2], s[2] + s[3]});
  auto delta = [&](std::size_t i) { return s[i] + s[i + 1] == m; };

  const Matrix Z = ad_shift_power(inst.A, inst.lambda, m - 2, inst.X);
  if (!is_i_diagonal(Z, part, 1)) {
    return "Z is not 1-diagonal";
  }
  for (std::size_t i = 0; i < 3; ++i) {
    Pattern f(s[i], s[i + 1]);
    if (delta(i)) {
      f.add(0, s[i + 1] - 1, D(i, i + 1));
    }
    if (!f.matches(block_view(Z, part, part, i, i + 1))) {
      std::ostringstream os;
      os << "Z(" << i + 1 << "," << i + 2 << ") = " << block_view(Z, part, part, i, i + 1);
      return os.str();
    }
  }
  const Matrix U = commutator(inst.X, Z);
  if (!is_i_diagonal(U, part, 2)) {
    return "U is not 2-diagonal";
  }
  for (std::size_t i = 0; i < 2; ++i) {
    Pattern u(s[i], s[i + 2]);
    if (delta(i + 1)) {
      add_g(u, D(i + 1, i + 2));
    }
    if (delta(i)) {
      add_h(u, -D(i, i + 1));
    }
    if (!u.matches(block_view(U, part, part, i, i + 2))) {
      std::ostringstream os;
      os << "U(" << i + 1 << "," << i + 3 << ") = " << block_view(U, part, part, i, i + 2);
      return os.str();
    }
  }
  return std::nullopt;
}

Lemma1Verdict lemma1_check(const Matrix& X1, const Matrix& X2, const Matrix& Y1, const Matrix& Y2) {
  const std::size_t a = X1.rows();
  const std::size_t b1 = X1.cols();
  const std::size_t b2 = X2.rows();
  const std::size_t c = X2.cols();
  if (Y1.rows() != b1 || Y1.cols() != c || Y2.rows() != a || Y2.cols() != b2) {
    throw DimensionMismatch("lemma1: shapes must be a x b1, b2 x c, b1 x c, a x b2");
  }
  if (X1(a - 1, 0) != Rational(1) || X2(b2 - 1, 0) != Rational(1)) {
    throw HypothesisViolated("X1 and X2 must be lowest matrices");
  }
  if (!phi(b1, c, Y1).is_zero() || !phi(a, b2, Y2).is_zero()) {
    throw HypothesisViolated("Y1 and Y2 must lie in the kernel of Phi");
  }
  if (Y1.is_zero() && Y2.is_zero()) {
    throw HypothesisViolated("(Y1, Y2) must be nonzero");
  }
  Lemma1Verdict v;
  v.z_zero = (X1 * Y1 - Y2 * X2).is_zero();
  v.a_le_b2 = a <= b2;
  v.c_le_b1 = c <= b1;
  if (v.c_le_b1) {
    v.mu1 = Y1(0, 0);
  }
  if (v.a_le_b2) {
    v.nu1 = Y2(0, b2 - a);
  }
  v.conclusion_holds =
      !v.z_zero || (v.a_le_b2 && v.c_le_b1 && v.mu1 == v.nu1 && !v.mu1->is_zero());
  return v;
}

}  // namespace urlab
