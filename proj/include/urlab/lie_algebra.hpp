#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urlab/matrix.hpp"

namespace urlab {

/// Which x-action on V the semidirect product uses.
enum class AlgebraKind {
  single,      // one lower Jordan block J_n(lambda)
  two_blocks,  // J_n(lambda) (+) J_m(mu), generators v_0.. then w_0..
  diagonal,    // x v_k = i_k lambda v_k with 1 = i_1 < ... < i_n
};

struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::single;
  std::size_t n = 1;
  std::size_t m = 0;  // two_blocks only
  Rational lambda;
  Rational mu;                          // two_blocks only
  std::vector<std::size_t> exponents;   // diagonal only

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// Basis element of g: x, a generator V(i) of V, or a wedge W(i, j) with i < j.
struct BasisLabel {
  enum class Tag { x, v, w };
  Tag tag = Tag::x;
  std::size_t i = 0;
  std::size_t j = 0;

  static BasisLabel x() { return {Tag::x, 0, 0}; }
  static BasisLabel v(std::size_t k) { return {Tag::v, k, 0}; }
  /// Wedge v_i ^ v_j stored with i < j; callers normalise the order and sign.
  static BasisLabel w(std::size_t i, std::size_t j);

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Coordinates of an element of g over the basis x, V(0..N-1), W(i<j) in lexicographic order.
struct GElement {
  Vector coords;

  bool is_zero() const;
  friend bool operator==(const GElement&, const GElement&) = default;
};

/// Structure constants of g = <x> |x L(V), with L(V) = V (+) Lambda^2 V free 2-step nilpotent.
class GAlgebra {
 public:
  explicit GAlgebra(const AlgebraSpec& spec);

  const AlgebraSpec& spec() const { return spec_; }
  std::size_t dim() const { return labels_.size(); }
  /// Number of generators of V (n, n + m, or the number of exponents).
  std::size_t gen_count() const { return gens_; }
  std::size_t wedge_count() const { return gens_ * (gens_ - 1) / 2; }
  const Rational& lambda() const { return spec_.lambda; }

  std::size_t x_index() const { return 0; }
  std::size_t v_index(std::size_t k) const;
  std::size_t w_index(std::size_t i, std::size_t j) const;
  std::size_t index_of(const BasisLabel& label) const;
  const BasisLabel& label(std::size_t idx) const { return labels_.at(idx); }
  const std::string& name(std::size_t idx) const { return names_.at(idx); }
  std::optional<std::size_t> find_name(const std::string& name) const;

  /// Matrix of x on V in the generator basis; column k holds [x, V(k)].
  const Matrix& x_action() const { return x_on_v_; }

  GElement zero() const;
  GElement basis(std::size_t idx) const;
  const GElement& bracket_basis(std::size_t a, std::size_t b) const;
  GElement bracket(const GElement& a, const GElement& b) const;

 private:
  GElement compute_bracket(std::size_t a, std::size_t b) const;
  /// Adds coeff * (u ^ v) for generator-space vectors u, v into out.
  void add_wedge(GElement& out, const Rational& coeff, const Vector& u, const Vector& v) const;

  AlgebraSpec spec_;
  std::size_t gens_ = 0;
  Matrix x_on_v_;
  std::vector<BasisLabel> labels_;
  std::vector<std::string> names_;
  std::vector<GElement> table_;  // dim x dim, row-major
};

/// g with x acting by the lower Jordan block J_n(lambda).
GAlgebra build_g(std::size_t n, const Rational& lambda);

/// Two-block or diagonal variants; throws std::invalid_argument on malformed specs.
GAlgebra build_g_variant(const AlgebraSpec& spec);

struct DerivedSeries {
  std::vector<GElement> first;   // basis of [g, g]
  std::vector<GElement> second;  // basis of [[g, g], [g, g]]
  /// True when [g,g] = V (+) Lambda^2 V and [[g,g],[g,g]] = Lambda^2 V on the nose.
  bool matches_v_plus_wedge = false;
  /// The V (+) Lambda^2 V identity is only claimed for lambda != 0.
  bool formula_asserted = false;
};

/// Both derived ideals, computed by spanning brackets rather than by formula.
DerivedSeries derived_ideal(const GAlgebra& alg);

/// Unique Lie extension of a linear map V -> gl(d) to L(V), after checking
/// [Omega(V), [Omega(V), Omega(V)]] = 0 on all generator triples. Returns the wedge images
/// in the algebra's wedge order; throws HypothesisViolated naming the first failing triple.
std::vector<Matrix> extend_from_V(const GAlgebra& alg, std::span<const Matrix> generator_images);

}  // namespace urlab
