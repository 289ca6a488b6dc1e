#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "urlab/lie_algebra.hpp"
#include "urlab/linalg.hpp"
#include "urlab/matrix.hpp"

namespace urlab {

/// Data (n, lambda, alpha, a, b, c, M, N) of the three-block family R_{a,b,c,M,N,alpha}.
struct RepParams {
  std::size_t n = 2;
  Rational lambda;
  Rational alpha;
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t c = 1;
  Matrix M{{1}};  // a x b
  Matrix N{{1}};  // b x c

  /// Throws ParamViolation unless (a+b = n+1, c <= a) or (c+b = n+1, a <= c), the shapes match,
  /// and the bottom-left corners M_{a,1}, N_{b,1} are nonzero.
  void validate() const;
  /// Last rows of M, N are first unit vectors and the first column of M is the last unit vector.
  bool is_normalized() const;
  std::string fingerprint() const;

  friend bool operator==(const RepParams&, const RepParams&) = default;
};

/// A linear map g -> gl(d) given on the basis of g, plus the block data it was built from.
struct Representation {
  std::shared_ptr<const GAlgebra> algebra;
  std::vector<Matrix> images;  // one per basis element of g, in the algebra's order
  std::optional<BlockPartition> partition;
  std::optional<Rational> alpha;     // standard parameter when the rep is in block form
  std::optional<RepParams> params;   // set for the R_{a,b,c,M,N,alpha} family
  bool verified = false;

  std::size_t dim() const { return images.front().rows(); }
  const Matrix& image(std::size_t idx) const { return images.at(idx); }
  const Matrix& x_image() const { return images.at(algebra->x_index()); }
  const Matrix& v_image(std::size_t k) const { return images.at(algebra->v_index(k)); }
  Matrix apply(const GElement& y) const;
};

struct VerifyResult {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // first basis pair that fails
};

/// Checks R([y, z]) = [R(y), R(z)] exactly on every pair of basis elements.
VerifyResult verify_representation(const GAlgebra& alg, const std::vector<Matrix>& images);

/// Wraps arbitrary images; `verified` reflects verify_representation.
Representation make_representation(std::shared_ptr<const GAlgebra> alg, std::vector<Matrix> images);

/// y -> T R(y) T^{-1}. Block metadata is dropped unless T commutes with R(x).
Representation conjugate(const Representation& rep, const Matrix& t);

Representation build_R(const RepParams& params);

/// The standard shape of a rep relative to its partition and alpha, for a single-block algebra.
struct StandardCheck {
  bool standard = false;
  std::string reason;
};

StandardCheck check_standard(const Representation& rep);
bool is_normalized_standard(const Representation& rep);

struct Normalized {
  Representation rep;
  Matrix conjugator;
};

/// Conjugates a standard rep by the block-diagonal Toeplitz matrix that makes every first
/// superdiagonal block of R(v_0) have last row e_1 and the first block have first column e_last.
/// The conjugator's (1,1) entry is fixed to 1, so normalized input yields the identity.
Normalized normalize(const Representation& rep);

/// Normalizes the parameter tuple alone (same conjugator as normalize(build_R(params))).
std::pair<RepParams, Matrix> normalize_params(const RepParams& params);

/// Extreme type of a normalized tuple: n odd, a = c = 1 and N_{i,1} = 0 for all even i.
/// Non-normalized input is normalized first.
bool is_extreme(const RepParams& params);

/// Dual y -> -R(y)^T conjugated by the signed anti-diagonal permutation, which is standard
/// relative to the reversed partition and (l-1) lambda - alpha. Throws NotStandard otherwise.
Representation dualize(const Representation& rep);

/// Puts a rep isomorphic to a standard one (lambda != 0) into standard form, using the
/// generalized eigenspaces of R(x) as blocks. Throws NotStandard when that is impossible.
Representation standardize(const Representation& rep);

/// Same, with the blocks supplied (R(x)-invariant, each carrying one Jordan block).
Representation standardize_with_blocks(const Representation& rep, const std::vector<Subspace>& blocks);

/// S_{a,b,c,M,N,alpha} over the two-block algebra: a+b = n+1, b+c = m+1.
struct TwoBlocksS {
  std::size_t n = 1;
  std::size_t m = 1;
  Rational lambda;
  Rational mu;
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t c = 1;
  Matrix M{{1}};
  Matrix N{{1}};
  Rational alpha;
};

/// The 3-dimensional faithful S_alpha (n = m = 1).
struct SAlpha {
  Rational lambda;
  Rational mu;
  Rational alpha;
};

/// T over the diagonal algebra: x -> diag(alpha - k lambda), v_k -> J^{i_k}, v_n -> beta E_{1,p-1} + gamma E_{2,p}.
struct DiagonalT {
  std::vector<std::size_t> exponents;
  Rational lambda;
  Rational alpha;
  Rational beta;
  Rational gamma;
};

using SFamilySpec = std::variant<TwoBlocksS, SAlpha, DiagonalT>;

Representation build_S_family(const SFamilySpec& spec);

/// sl(2) weight-1 irreducible tensored with the regular rep of F[t]/(t^3), restricted to the
/// copy of g(n=3, lambda=0) generated by x = E(x)1 and v_0 = F(x)t. Basis u_+(x)1, u_+(x)t,
/// u_+(x)t^2, u_-(x)1, u_-(x)t, u_-(x)t^2.
Representation build_sl2_tensor();

/// t-degree components of the tensor module, highest degree first.
std::vector<Subspace> sl2_tensor_degree_blocks();

/// Standard parameters of the tensor module: standardize along the t-grading, then normalize.
RepParams recover_sl2_params();

}  // namespace urlab
