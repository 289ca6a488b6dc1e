#include "urlab/representation.hpp"

#include <algorithm>
#include <sstream>

#include "urlab/errors.hpp"
#include "urlab/polynomial.hpp"

namespace urlab {

namespace {

Matrix power(const Matrix& m, std::size_t k) {
  Matrix out = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) {
    out = out * m;
  }
  return out;
}

/// Upper-triangular Toeplitz matrix sum_k t_k J^k.
Matrix toeplitz(const Vector& t) {
  const std::size_t d = t.size();
  Matrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t k = 0; r + k < d; ++k) {
      out(r, r + k) = t[k];
    }
  }
  return out;
}

std::vector<Matrix> first_superdiagonal(const Matrix& m, const BlockPartition& part) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i + 1 < part.count(); ++i) {
    out.push_back(block_view(m, part, part, i, i + 1));
  }
  return out;
}

/// Toeplitz coefficient vectors of T_1, ..., T_l normalizing the chain of blocks M_1..M_{l-1}.
std::vector<Vector> normalizing_coefficients(const std::vector<Matrix>& blocks) {
  std::vector<Vector> coeffs;
  const Matrix& first = blocks.front();
  const std::size_t a = first.rows();
  const Rational& corner = first(a - 1, 0);
  if (corner.is_zero()) {
    throw NotStandard("first block has zero bottom-left entry; cannot normalize");
  }
  // T_1 m = t_0 M_{a,1} e_a for the first column m of M_1, solved from the bottom row up.
  Vector t1(a);
  t1[0] = 1;
  for (std::size_t k = 1; k < a; ++k) {
    Rational acc;
    for (std::size_t j = 0; j < k; ++j) {
      acc += t1[j] * first(a - 1 - k + j, 0);
    }
    t1[k] = -acc / corner;
  }
  coeffs.push_back(std::move(t1));
  // Last row of M_i' = e_1 forces the coefficients of T_{i+1} = t^{(i)}_0 * (last row of M_i).
  for (const auto& blk : blocks) {
    if (blk(blk.rows() - 1, 0).is_zero()) {
      throw NotStandard("superdiagonal block has zero bottom-left entry; cannot normalize");
    }
    Vector next(blk.cols());
    for (std::size_t k = 0; k < blk.cols(); ++k) {
      next[k] = coeffs.back()[0] * blk(blk.rows() - 1, k);
    }
    coeffs.push_back(std::move(next));
  }
  return coeffs;
}

Matrix conjugator_from(const std::vector<Vector>& coeffs) {
  std::vector<Matrix> blocks;
  for (const auto& t : coeffs) {
    blocks.push_back(toeplitz(t));
  }
  return direct_sum(blocks);
}

Matrix standard_x(const BlockPartition& part, const Rational& alpha, const Rational& lambda) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < part.count(); ++i) {
    blocks.push_back(
        jordan_block(part.size(i), alpha - Rational(static_cast<long>(i)) * lambda, JordanOrientation::upper));
  }
  return direct_sum(blocks);
}

std::optional<RepParams> params_from_standard(const Representation& rep) {
  if (!rep.partition || !rep.alpha || rep.partition->count() != 3 ||
      rep.algebra->spec().kind != AlgebraKind::single) {
    return std::nullopt;
  }
  const auto& part = *rep.partition;
  RepParams p;
  p.n = rep.algebra->spec().n;
  p.lambda = rep.algebra->lambda();
  p.alpha = *rep.alpha;
  p.a = part.size(0);
  p.b = part.size(1);
  p.c = part.size(2);
  p.M = block_view(rep.v_image(0), part, part, 0, 1);
  p.N = block_view(rep.v_image(0), part, part, 1, 2);
  try {
    p.validate();
  } catch (const ParamViolation&) {
    return std::nullopt;
  }
  return p;
}

void require_verified(const Representation& rep, const char* what) {
  if (!rep.verified) {
    throw RepresentationCheckFailed(std::string(what) + " produced a map that is not a representation");
  }
}

}  // namespace

void RepParams::validate() const {
  const bool branch1 = a + b == n + 1 && c <= a;
  const bool branch2 = c + b == n + 1 && a <= c;
  if (a == 0 || b == 0 || c == 0 || !(branch1 || branch2)) {
    throw ParamViolation("(a,b,c) = (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                         ") violates a+b=n+1,c<=a or c+b=n+1,a<=c for n=" + std::to_string(n));
  }
  if (M.rows() != a || M.cols() != b || N.rows() != b || N.cols() != c) {
    throw ParamViolation("M must be a x b and N must be b x c");
  }
  if (M(a - 1, 0).is_zero()) {
    throw ParamViolation("M_{a,1} must be nonzero");
  }
  if (N(b - 1, 0).is_zero()) {
    throw ParamViolation("N_{b,1} must be nonzero");
  }
}

bool RepParams::is_normalized() const {
  for (std::size_t k = 0; k < b; ++k) {
    if (M(a - 1, k) != Rational(k == 0 ? 1 : 0)) {
      return false;
    }
  }
  for (std::size_t r = 0; r < a; ++r) {
    if (M(r, 0) != Rational(r + 1 == a ? 1 : 0)) {
      return false;
    }
  }
  for (std::size_t k = 0; k < c; ++k) {
    if (N(b - 1, k) != Rational(k == 0 ? 1 : 0)) {
      return false;
    }
  }
  return true;
}

std::string RepParams::fingerprint() const {
  std::ostringstream os;
  os << "n=" << n << " lambda=" << lambda << " alpha=" << alpha << " abc=(" << a << "," << b << "," << c
     << ") M=" << M << " N=" << N;
  return os.str();
}

Matrix Representation::apply(const GElement& y) const {
  if (y.coords.size() != images.size()) {
    throw DimensionMismatch("element does not belong to the represented algebra");
  }
  Matrix out(dim(), dim());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!y.coords[i].is_zero()) {
      out += y.coords[i] * images[i];
    }
  }
  return out;
}

VerifyResult verify_representation(const GAlgebra& alg, const std::vector<Matrix>& images) {
  if (images.size() != alg.dim()) {
    throw DimensionMismatch("need one image per basis element");
  }
  const std::size_t d = images.front().rows();
  for (std::size_t a = 0; a < alg.dim(); ++a) {
    for (std::size_t b = a + 1; b < alg.dim(); ++b) {
      Matrix lhs(d, d);
      const GElement& br = alg.bracket_basis(a, b);
      for (std::size_t k = 0; k < alg.dim(); ++k) {
        if (!br.coords[k].is_zero()) {
          lhs += br.coords[k] * images[k];
        }
      }
      if (lhs != commutator(images[a], images[b])) {
        return {false, std::make_pair(a, b)};
      }
    }
  }
  return {};
}

Representation make_representation(std::shared_ptr<const GAlgebra> alg, std::vector<Matrix> images) {
  if (images.size() != alg->dim()) {
    throw DimensionMismatch("need one image per basis element");
  }
  for (const auto& m : images) {
    if (!m.is_square() || m.rows() != images.front().rows()) {
      throw DimensionMismatch("images must be square of one size");
    }
  }
  Representation rep;
  rep.algebra = std::move(alg);
  rep.images = std::move(images);
  rep.verified = verify_representation(*rep.algebra, rep.images).ok;
  return rep;
}

Representation conjugate(const Representation& rep, const Matrix& t) {
  const auto t_inv = inverse(t);
  if (!t_inv) {
    throw std::invalid_argument("conjugating matrix is singular");
  }
  Representation out;
  out.algebra = rep.algebra;
  out.verified = rep.verified;
  for (const auto& m : rep.images) {
    out.images.push_back(t * m * *t_inv);
  }
  if (out.x_image() == rep.x_image()) {
    out.partition = rep.partition;
    out.alpha = rep.alpha;
    out.params = params_from_standard(out);
  }
  return out;
}

Representation build_R(const RepParams& params) {
  params.validate();
  auto alg = std::make_shared<const GAlgebra>(build_g(params.n, params.lambda));
  const BlockPartition part({params.a, params.b, params.c});
  const Matrix a_mat = standard_x(part, params.alpha, params.lambda);
  Matrix x0(part.total(), part.total());
  x0.set_block(0, params.a, params.M);
  x0.set_block(params.a, params.a + params.b, params.N);

  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < params.n; ++k) {
    gens.push_back(ad_shift_power(a_mat, params.lambda, k, x0));
  }
  std::vector<Matrix> wedges = extend_from_V(*alg, gens);

  std::vector<Matrix> images;
  images.push_back(a_mat);
  images.insert(images.end(), gens.begin(), gens.end());
  images.insert(images.end(), wedges.begin(), wedges.end());

  Representation rep = make_representation(alg, std::move(images));
  require_verified(rep, "build_R");
  rep.partition = part;
  rep.alpha = params.alpha;
  rep.params = params;
  return rep;
}

StandardCheck check_standard(const Representation& rep) {
  const GAlgebra& alg = *rep.algebra;
  if (alg.spec().kind != AlgebraKind::single) {
    return {false, "standard shape is defined for the single-block algebra"};
  }
  if (!rep.partition || !rep.alpha) {
    return {false, "no block partition / alpha attached"};
  }
  const auto& part = *rep.partition;
  const std::size_t n = alg.spec().n;
  if (part.count() <= 2) {
    return {false, "needs more than two blocks"};
  }
  if (part.total() != rep.dim()) {
    return {false, "partition total differs from dimension"};
  }
  for (std::size_t i = 0; i + 1 < part.count(); ++i) {
    if (part.size(i) + part.size(i + 1) > n + 1) {
      return {false, "adjacent blocks exceed n+1"};
    }
  }
  if (rep.x_image() != standard_x(part, *rep.alpha, alg.lambda())) {
    return {false, "R(x) is not the block Jordan matrix"};
  }
  for (std::size_t k = 0; k < alg.gen_count(); ++k) {
    if (!is_i_diagonal(rep.v_image(k), part, 1)) {
      return {false, "R(" + alg.name(alg.v_index(k)) + ") is not 1-diagonal"};
    }
  }
  for (const auto& blk : first_superdiagonal(rep.v_image(0), part)) {
    if (blk(blk.rows() - 1, 0).is_zero()) {
      return {false, "a superdiagonal block of R(v0) has zero bottom-left entry"};
    }
  }
  return {true, {}};
}

bool is_normalized_standard(const Representation& rep) {
  if (!check_standard(rep).standard) {
    return false;
  }
  const auto blocks = first_superdiagonal(rep.v_image(0), *rep.partition);
  for (const auto& blk : blocks) {
    for (std::size_t k = 0; k < blk.cols(); ++k) {
      if (blk(blk.rows() - 1, k) != Rational(k == 0 ? 1 : 0)) {
        return false;
      }
    }
  }
  const Matrix& first = blocks.front();
  for (std::size_t r = 0; r < first.rows(); ++r) {
    if (first(r, 0) != Rational(r + 1 == first.rows() ? 1 : 0)) {
      return false;
    }
  }
  return true;
}

Normalized normalize(const Representation& rep) {
  const StandardCheck check = check_standard(rep);
  if (!check.standard) {
    throw NotStandard("normalize: " + check.reason);
  }
  const Matrix t = conjugator_from(normalizing_coefficients(first_superdiagonal(rep.v_image(0), *rep.partition)));
  Representation out = conjugate(rep, t);
  return {std::move(out), t};
}

std::pair<RepParams, Matrix> normalize_params(const RepParams& params) {
  params.validate();
  const auto coeffs = normalizing_coefficients({params.M, params.N});
  const Matrix t1 = toeplitz(coeffs[0]);
  const Matrix t2 = toeplitz(coeffs[1]);
  const Matrix t3 = toeplitz(coeffs[2]);
  RepParams out = params;
  out.M = t1 * params.M * *inverse(t2);
  out.N = t2 * params.N * *inverse(t3);
  return {out, conjugator_from(coeffs)};
}

bool is_extreme(const RepParams& params) {
  const RepParams p = params.is_normalized() ? params : normalize_params(params).first;
  if (p.n % 2 == 0 || p.a != 1 || p.c != 1) {
    return false;
  }
  // N is b x 1; the even rows (1-based) are indices 1, 3, ...
  for (std::size_t i = 1; i < p.b; i += 2) {
    if (!p.N(i, 0).is_zero()) {
      return false;
    }
  }
  return true;
}

Representation dualize(const Representation& rep) {
  const StandardCheck check = check_standard(rep);
  if (!check.standard) {
    throw NotStandard("dualize: " + check.reason);
  }
  const std::size_t d = rep.dim();
  Representation out;
  out.algebra = rep.algebra;
  for (const auto& m : rep.images) {
    // (C (-R^T) C^{-1})(i, j) with C = D P, D = diag((-1)^i), P the anti-diagonal permutation.
    Matrix dual(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const Rational& e = m(d - 1 - j, d - 1 - i);
        if (!e.is_zero()) {
          dual(i, j) = (i + j) % 2 == 0 ? -e : e;
        }
      }
    }
    out.images.push_back(std::move(dual));
  }
  out.verified = verify_representation(*out.algebra, out.images).ok;
  require_verified(out, "dualize");
  const std::size_t ell = rep.partition->count();
  out.partition = rep.partition->reversed();
  out.alpha = Rational(static_cast<long>(ell - 1)) * rep.algebra->lambda() - *rep.alpha;
  const StandardCheck dual_check = check_standard(out);
  if (!dual_check.standard) {
    throw RepresentationCheckFailed("dual is not standard: " + dual_check.reason);
  }
  out.params = params_from_standard(out);
  return out;
}

Representation standardize_with_blocks(const Representation& rep, const std::vector<Subspace>& blocks) {
  const Matrix& x = rep.x_image();
  const std::size_t d = rep.dim();
  std::vector<Vector> columns;
  std::vector<std::size_t> sizes;
  std::optional<Rational> alpha;
  for (const auto& blk : blocks) {
    const Matrix local = restrict_to(x, blk);
    const std::size_t k = blk.dim();
    Rational trace;
    for (std::size_t i = 0; i < k; ++i) {
      trace += local(i, i);
    }
    const Rational beta = trace / Rational(static_cast<long>(k));
    if (!alpha) {
      alpha = beta;
    }
    const Matrix nil = x - beta * Matrix::identity(d);
    const Matrix top = power(nil, k - 1);
    const auto gen = std::find_if(blk.basis().begin(), blk.basis().end(), [&](const Vector& v) {
      const Vector img = top * v;
      return std::any_of(img.begin(), img.end(), [](const Rational& q) { return !q.is_zero(); });
    });
    if (gen == blk.basis().end() || !restrict_to(power(nil, k), blk).is_zero()) {
      throw NotStandard("block does not carry a single Jordan block of R(x)");
    }
    // Chain e_1 = N^{k-1} w, ..., e_k = w gives the upper Jordan block J^k(beta).
    std::vector<Vector> chain(k);
    Vector cur = *gen;
    for (std::size_t i = k; i-- > 0;) {
      chain[i] = cur;
      cur = nil * cur;
    }
    columns.insert(columns.end(), chain.begin(), chain.end());
    sizes.push_back(k);
  }
  if (columns.size() != d) {
    throw NotStandard("blocks do not fill the module");
  }
  const Matrix p = Matrix::from_columns(columns);
  const auto p_inv = inverse(p);
  if (!p_inv) {
    throw NotStandard("blocks are not independent");
  }
  Representation out = conjugate(rep, *p_inv);
  out.partition = BlockPartition(sizes);
  out.alpha = alpha;
  const StandardCheck check = check_standard(out);
  if (!check.standard) {
    throw NotStandard("standardize: " + check.reason);
  }
  out.params = params_from_standard(out);
  return out;
}

Representation standardize(const Representation& rep) {
  const Rational& lambda = rep.algebra->lambda();
  if (lambda.is_zero()) {
    throw NotStandard("eigenvalue blocks need lambda != 0");
  }
  const Matrix& x = rep.x_image();
  const RationalRoots spec = rational_roots(characteristic_polynomial(x));
  if (!spec.splits) {
    throw IrrationalSpectrum("R(x) has a non-rational eigenvalue");
  }
  const auto has = [&](const Rational& e) {
    return std::find(spec.roots.begin(), spec.roots.end(), e) != spec.roots.end();
  };
  std::optional<Rational> alpha;
  for (const auto& e : spec.roots) {
    if (!has(e + lambda)) {
      if (alpha) {
        throw NotStandard("eigenvalues of R(x) are not a single lambda-string");
      }
      alpha = e;
    }
  }
  if (!alpha) {
    throw NotStandard("eigenvalues of R(x) are not a single lambda-string");
  }
  std::vector<Subspace> blocks;
  const std::size_t d = rep.dim();
  for (std::size_t i = 0; i < spec.roots.size(); ++i) {
    const Rational beta = *alpha - Rational(static_cast<long>(i)) * lambda;
    if (!has(beta)) {
      throw NotStandard("eigenvalues of R(x) are not a single lambda-string");
    }
    const Matrix gen_eig = power(x - beta * Matrix::identity(d), d);
    blocks.push_back(Subspace::span(nullspace(gen_eig), d));
  }
  return standardize_with_blocks(rep, blocks);
}

Representation build_S_family(const SFamilySpec& spec) {
  if (const auto* s = std::get_if<SAlpha>(&spec)) {
    TwoBlocksS two;
    two.lambda = s->lambda;
    two.mu = s->mu;
    two.alpha = s->alpha;
    return build_S_family(two);
  }
  if (const auto* s = std::get_if<TwoBlocksS>(&spec)) {
    if (s->a + s->b != s->n + 1 || s->b + s->c != s->m + 1) {
      throw ParamViolation("two-block S needs a+b = n+1 and b+c = m+1");
    }
    if (s->M.rows() != s->a || s->M.cols() != s->b || s->N.rows() != s->b || s->N.cols() != s->c) {
      throw ParamViolation("M must be a x b and N must be b x c");
    }
    if (s->M(s->a - 1, 0).is_zero() || s->N(s->b - 1, 0).is_zero()) {
      throw ParamViolation("M_{a,1} and N_{b,1} must be nonzero");
    }
    AlgebraSpec as;
    as.kind = AlgebraKind::two_blocks;
    as.n = s->n;
    as.m = s->m;
    as.lambda = s->lambda;
    as.mu = s->mu;
    auto alg = std::make_shared<const GAlgebra>(build_g_variant(as));
    const Matrix blocks[] = {jordan_block(s->a, s->alpha, JordanOrientation::upper),
                             jordan_block(s->b, s->alpha - s->lambda, JordanOrientation::upper),
                             jordan_block(s->c, s->alpha - s->lambda - s->mu, JordanOrientation::upper)};
    const Matrix a_mat = direct_sum(blocks);
    const std::size_t d = s->a + s->b + s->c;
    Matrix m_block(d, d);
    m_block.set_block(0, s->a, s->M);
    Matrix n_block(d, d);
    n_block.set_block(s->a, s->a + s->b, s->N);
    std::vector<Matrix> gens;
    for (std::size_t k = 0; k < s->n; ++k) {
      gens.push_back(ad_shift_power(a_mat, s->lambda, k, m_block));
    }
    // The w-string shifts by the eigenvalue gap mu between the second and third blocks.
    for (std::size_t k = 0; k < s->m; ++k) {
      gens.push_back(ad_shift_power(a_mat, s->mu, k, n_block));
    }
    std::vector<Matrix> images{a_mat};
    images.insert(images.end(), gens.begin(), gens.end());
    const auto wedges = extend_from_V(*alg, gens);
    images.insert(images.end(), wedges.begin(), wedges.end());
    Representation rep = make_representation(alg, std::move(images));
    require_verified(rep, "build_S_family");
    rep.partition = BlockPartition({s->a, s->b, s->c});
    rep.alpha = s->alpha;
    return rep;
  }
  const auto& t = std::get<DiagonalT>(spec);
  if (t.exponents.size() < 2) {
    throw ParamViolation("diagonal T needs n >= 2 exponents");
  }
  if (t.beta == t.gamma) {
    throw ExtremeDegeneracy("beta == gamma puts Lambda^2(V) inside the kernel");
  }
  AlgebraSpec as;
  as.kind = AlgebraKind::diagonal;
  as.n = t.exponents.size();
  as.lambda = t.lambda;
  as.exponents = t.exponents;
  auto alg = std::make_shared<const GAlgebra>(build_g_variant(as));
  const std::size_t p = t.exponents.back() + 2;
  Matrix x(p, p);
  for (std::size_t k = 0; k < p; ++k) {
    x(k, k) = t.alpha - Rational(static_cast<long>(k)) * t.lambda;
  }
  const Matrix shift = jordan_block(p, 0, JordanOrientation::upper);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k + 1 < t.exponents.size(); ++k) {
    gens.push_back(power(shift, t.exponents[k]));
  }
  gens.push_back(t.beta * Matrix::unit(p, p, 0, p - 2) + t.gamma * Matrix::unit(p, p, 1, p - 1));
  std::vector<Matrix> images{x};
  images.insert(images.end(), gens.begin(), gens.end());
  const auto wedges = extend_from_V(*alg, gens);
  images.insert(images.end(), wedges.begin(), wedges.end());
  Representation rep = make_representation(alg, std::move(images));
  require_verified(rep, "build_S_family");
  rep.partition = BlockPartition(std::vector<std::size_t>(p, 1));
  rep.alpha = t.alpha;
  return rep;
}

Representation build_sl2_tensor() {
  auto alg = std::make_shared<const GAlgebra>(build_g(3, 0));
  const Matrix e{{0, 1}, {0, 0}};
  const Matrix f{{0, 0}, {1, 0}};
  // Multiplication by t on (1, t, t^2).
  const Matrix t_mult = jordan_block(3, 0, JordanOrientation::lower);
  const Matrix x = kron(e, Matrix::identity(3));
  const Matrix v0 = kron(f, t_mult);
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < 3; ++k) {
    gens.push_back(ad_shift_power(x, 0, k, v0));
  }
  std::vector<Matrix> images{x};
  images.insert(images.end(), gens.begin(), gens.end());
  const auto wedges = extend_from_V(*alg, gens);
  images.insert(images.end(), wedges.begin(), wedges.end());
  Representation rep = make_representation(alg, std::move(images));
  require_verified(rep, "build_sl2_tensor");
  return rep;
}

std::vector<Subspace> sl2_tensor_degree_blocks() {
  std::vector<Subspace> blocks;
  for (std::size_t deg = 3; deg-- > 0;) {
    Vector plus(6);
    Vector minus(6);
    plus[deg] = 1;
    minus[3 + deg] = 1;
    blocks.push_back(Subspace::span({plus, minus}, 6));
  }
  return blocks;
}

RepParams recover_sl2_params() {
  const Representation standard = standardize_with_blocks(build_sl2_tensor(), sl2_tensor_degree_blocks());
  const Normalized norm = normalize(standard);
  if (!norm.rep.params) {
    throw NotStandard("tensor module did not standardize to a three-block rep");
  }
  return *norm.rep.params;
}

}  // namespace urlab
