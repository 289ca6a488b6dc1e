#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "urlab/linalg.hpp"
#include "urlab/representation.hpp"

namespace urlab {

/// 0 = U_0 < U_1 < ... < U_l = U, each step an RREF basis in the ambient space.
struct Filtration {
  std::vector<Subspace> steps;          // U_1, ..., U_l
  std::vector<std::size_t> layer_dims;  // dim U_i / U_{i-1}
  std::size_t length() const { return steps.size(); }
};

/// Successive annihilators of [g, g]; [g, g] comes from derived_ideal, not from a formula.
Filtration length_filtration(const Representation& rep);

/// Socle series; each socle is the sum of the joint eigenspaces of g on the subspace killed by
/// [g, g]. Throws IrrationalSpectrum when an eigenvalue is not rational.
Filtration socle_series(const Representation& rep);

bool is_uniserial(const Representation& rep);

struct AnalysisReport {
  std::size_t length = 0;
  std::vector<std::size_t> length_layers;
  bool uniserial = false;
  std::vector<std::size_t> socle_layers;
  std::vector<GElement> kernel_basis;
  bool faithful = false;
  bool relatively_faithful = false;
  std::size_t kernel_meets_v_dim = 0;
  bool wedges_in_kernel = false;  // Lambda^2 V contained in ker R
  /// For standard reps: "some d_i + d_{i+1} = n + 1", and whether it agrees with ker R meets V = 0.
  std::optional<bool> funk_predicate;
  std::optional<bool> funk_consistent;
  bool negative_certified = false;  // set when a comparison certified non-isomorphism
};

struct AnalysisOptions {
  bool uniseriality = true;
};

AnalysisReport kernel_and_flags(const Representation& rep, const AnalysisOptions& options = {});

struct IsomorphismResult {
  std::optional<Matrix> intertwiner;  // T with T R_A(y) = R_B(y) T for every basis y
  std::size_t solution_dim = 0;       // dimension of the space of all such T (invertible or not)
  bool certified_negative = false;    // solution_dim == 0
  std::size_t attempts = 0;
};

inline constexpr std::size_t kIsomorphismAttempts = 32;
inline constexpr long kIsomorphismCoeffBound = 10;

/// Solves the intertwiner equations exactly, then samples seeded integer combinations of the
/// solution basis for an invertible element. The stream depends only on (seed, the two reps).
IsomorphismResult isomorphism_search(const Representation& a, const Representation& b, std::uint64_t seed = 0);

struct NilpotencyReport {
  std::size_t degree = 0;         // least m with (ad x - 2 lambda)^m = 0 on Lambda^2 V
  Rational witness_coefficient;   // C(2n-4, n-1) - C(2n-4, n-2)
  bool witness_matches = false;   // (ad x - 2 lambda)^{2n-4}(v_0^v_1) equals coeff * v_{n-1}^v_{n-2}
};

/// For the single-block algebra with n >= 2; throws std::invalid_argument otherwise.
NilpotencyReport lambda2_nilpotency_degree(const GAlgebra& alg);

}  // namespace urlab
