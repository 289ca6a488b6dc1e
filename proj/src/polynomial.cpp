#include "urlab/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "urlab/errors.hpp"

namespace urlab {

Polynomial::Polynomial(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::linear_root(const Rational& root) { return Polynomial(Vector{-root, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return {};
  }
  Vector out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    return {};
  }
  Vector out = coeffs_;
  const Rational inv = Rational(1) / leading();
  for (auto& q : out) {
    q *= inv;
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  Vector out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vector out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    out[i] += a.coeffs_[i];
  }
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
    out[i] -= b.coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial::DivMod Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  Vector rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size();
  if (rem.size() < dd) {
    return {Polynomial{}, *this};
  }
  Vector quot(rem.size() - dd + 1);
  const Rational inv = Rational(1) / divisor.leading();
  for (std::size_t k = rem.size(); k-- >= dd;) {
    const Rational f = rem[k] * inv;
    quot[k - (dd - 1)] = f;
    if (f.is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < dd; ++j) {
      rem[k - (dd - 1) + j] -= f * divisor.coeffs_[j];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) {
    throw DimensionMismatch("characteristic polynomial of a non-square matrix");
  }
  const std::size_t n = m.rows();
  Vector c(n + 1);
  c[n] = 1;
  Matrix acc(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) {
      acc(i, i) += c[n - k + 1];
    }
    const Matrix am = m * acc;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) {
      trace += am(i, i);
    }
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(c));
}

namespace {

// Roots of a squarefree polynomial are simple, so Durand-Kerner converges cleanly; each
// approximation is then snapped to the only admissible denominators and checked exactly.
std::vector<std::complex<long double>> approximate_roots(const Polynomial& monic_poly) {
  const int deg = monic_poly.degree();
  std::vector<std::complex<long double>> coeff(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= deg; ++k) {
    coeff[static_cast<std::size_t>(k)] = monic_poly.coeffs()[static_cast<std::size_t>(k)].to_long_double();
  }
  long double bound = 0;
  for (int k = 0; k < deg; ++k) {
    bound = std::max(bound, std::abs(coeff[static_cast<std::size_t>(k)]));
  }
  bound += 1;
  std::vector<std::complex<long double>> z(static_cast<std::size_t>(deg));
  const std::complex<long double> seed(0.4L, 0.9L);
  for (int k = 0; k < deg; ++k) {
    z[static_cast<std::size_t>(k)] = bound * std::pow(seed, k);
  }
  auto eval = [&](std::complex<long double> t) {
    std::complex<long double> acc = 0;
    for (int k = deg; k >= 0; --k) {
      acc = acc * t + coeff[static_cast<std::size_t>(k)];
    }
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      std::complex<long double> denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != i) {
          denom *= z[i] - z[j];
        }
      }
      if (std::abs(denom) == 0) {
        denom = 1e-30L;
      }
      const auto delta = eval(z[i]) / denom;
      z[i] -= delta;
      change = std::max(change, std::abs(delta) / (1 + std::abs(z[i])));
    }
    if (change < 1e-17L) {
      break;
    }
  }
  return z;
}

Polynomial primitive_integer(const Polynomial& p) {
  mpz_class lcm_den = 1;
  for (const auto& q : p.coeffs()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.denominator().get_mpz_t());
  }
  Vector out;
  out.reserve(p.coeffs().size());
  mpz_class g = 0;
  for (const auto& q : p.coeffs()) {
    mpz_class v = q.numerator() * (lcm_den / q.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.emplace_back(mpq_class(v));
  }
  for (auto& q : out) {
    q /= Rational(mpq_class(g));
  }
  return Polynomial(std::move(out));
}

}  // namespace

RationalRoots rational_roots(const Polynomial& p) {
  RationalRoots out;
  if (p.is_zero()) {
    throw std::domain_error("roots of the zero polynomial");
  }
  if (p.degree() == 0) {
    out.splits = true;
    return out;
  }
  Polynomial squarefree = p.divmod(gcd(p, p.derivative())).quotient;
  Polynomial remaining = primitive_integer(squarefree);
  // Any rational root p/q of a primitive integer polynomial has q dividing the leading coefficient.
  const Rational lead = remaining.leading();
  std::vector<Rational> found;
  for (const auto& z : approximate_roots(remaining.monic())) {
    if (remaining.degree() <= 0) {
      break;
    }
    const long double scaled = std::round(z.real() * lead.to_long_double());
    if (!std::isfinite(scaled)) {
      continue;
    }
    mpz_class num;
    mpz_set_d(num.get_mpz_t(), static_cast<double>(scaled));
    for (long nudge : {0L, -1L, 1L}) {
      const Rational candidate = Rational(mpq_class(num + nudge)) / lead;
      if (remaining(candidate).is_zero()) {
        found.push_back(candidate);
        remaining = remaining.divmod(Polynomial::linear_root(candidate)).quotient;
        break;
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  out.roots = std::move(found);
  out.splits = remaining.degree() == 0;
  return out;
}

}  // namespace urlab
