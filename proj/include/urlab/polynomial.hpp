#pragma once

#include <vector>

#include "urlab/matrix.hpp"

namespace urlab {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs);
  static Polynomial linear_root(const Rational& root);  // t - root

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vector& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  struct DivMod;
  DivMod divmod(const Polynomial& divisor) const;

 private:
  void trim();
  Vector coeffs_;
};

struct Polynomial::DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

Polynomial gcd(Polynomial a, Polynomial b);

/// det(t I - M), via the Faddeev-LeVerrier recursion.
Polynomial characteristic_polynomial(const Matrix& m);

/// Distinct rational roots of p, ascending, and whether p splits into linear factors over Q.
struct RationalRoots {
  std::vector<Rational> roots;
  bool splits = false;
};

RationalRoots rational_roots(const Polynomial& p);

}  // namespace urlab
