#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "urlab/linalg.hpp"
#include "urlab/matrix.hpp"
#include "urlab/sampler.hpp"

namespace urlab {

/// Phi_{a,b}(Y) = J^a(0) Y - Y J^b(0) for Y of shape a x b.
Matrix phi(std::size_t a, std::size_t b, const Matrix& y);
Matrix phi_power(std::size_t a, std::size_t b, const Matrix& y, std::size_t k);

/// min(a, b) band matrices spanning ker Phi_{a,b}: right-justified when a <= b, top-justified
/// otherwise. Element k (0-based) carries the (k+1)-th band parameter.
std::vector<Matrix> phi_kernel_basis(std::size_t a, std::size_t b);

struct TEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  Matrix t;
};

/// P_i, Q_i and T_{i,j} = P_i Q_j - P_j Q_i for 0 <= i < j <= n-1.
struct PhiFamily {
  std::size_t a = 1, b = 1, c = 1;
  std::size_t n = 1;
  Matrix P{{0}};
  Matrix Q{{0}};
  std::vector<Matrix> Ps;
  std::vector<Matrix> Qs;
  std::vector<TEntry> Ts;

  std::vector<Matrix> t_matrices() const;
};

/// Builds P_i = Phi^i(P), Q_i = Phi^i(Q) with n = max(a+b-1, b+c-1); checks P_n = Q_n = 0.
PhiFamily build_phi_family(const Matrix& P, const Matrix& Q);

/// The three-condition predicate on corner entries and (a, b, c). For n = 1 the T-set is empty,
/// hence independent, and the predicate returns true.
bool lidep_predict(const Matrix& P, const Matrix& Q);
/// Rank test of the T-set.
bool lidep_bruteforce(const Matrix& P, const Matrix& Q);

struct Fieln2Result {
  PhiFamily family;
  IndependenceCertificate certificate;
};

/// Matrices P_i in M_{(n-1) x 2}, Q_i in M_{2 x (n-1)} with the prescribed zero/sign pattern and
/// sampled free entries. Throws HypothesisViolated when some p_j + q_j = 0 or z w = 0.
Fieln2Result fieln2_family(std::size_t n, const std::vector<Rational>& p, const std::vector<Rational>& q,
                           const Rational& z, const Rational& w, Sampler& fill);
/// Same construction without the hypothesis check, for probing what happens when it fails.
Fieln2Result fieln2_family_unchecked(std::size_t n, const std::vector<Rational>& p, const std::vector<Rational>& q,
                                     const Rational& z, const Rational& w, Sampler& fill);

struct ReduccionInstance {
  std::vector<std::size_t> sizes;  // d_1..d_4
  Rational lambda;
  Rational alpha;
  Matrix A{{0}};
  Matrix X{{0}};
};

ReduccionInstance make_reduccion_instance(const std::vector<std::size_t>& sizes, const Rational& lambda,
                                          const Rational& alpha, Sampler& fill);

struct ReduccionResult {
  bool all_14_blocks_zero = true;
  std::optional<Matrix> witness;
  std::size_t closure_dim = 0;  // dimension reached; final only when complete
  bool complete = false;
};

inline constexpr std::size_t kClosureRoundCap = 200;

/// Lie closure of {A, X}; stops at the first element with a nonzero (1,4) block unless
/// full_closure is set.
ReduccionResult reduccion_scan(const ReduccionInstance& inst, bool full_closure = false);

/// Checks Z = (ad A - lambda)^{m-2} X and U = [X, Z] against the block formulas with
/// D_{i,j} = (-1)^{d_j - 1} C(d_i + d_j - 2, d_i - 1). Returns a description of the first
/// mismatch, or nothing.
std::optional<std::string> reduccion_chain_mismatch(const ReduccionInstance& inst);

struct Lemma1Verdict {
  bool z_zero = false;
  bool a_le_b2 = false;
  bool c_le_b1 = false;
  std::optional<Rational> mu1;  // Y1(1,1) when c <= b1
  std::optional<Rational> nu1;  // Y2(1, b2 - a + 1) when a <= b2
  /// Vacuously true when Z != 0.
  bool conclusion_holds = false;
};

/// X1 (a x b1), X2 (b2 x c) lowest; Y1 (b1 x c), Y2 (a x b2) in ker Phi, not both zero.
/// Throws HypothesisViolated / DimensionMismatch when the preconditions fail.
Lemma1Verdict lemma1_check(const Matrix& X1, const Matrix& X2, const Matrix& Y1, const Matrix& Y2);

}  // namespace urlab
