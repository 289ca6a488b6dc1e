#include "urlab/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace urlab {

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    s.remove_prefix(1);
  }
  if (s.empty()) {
    return false;
  }
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      return false;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num.front() == '+') {
    num.remove_prefix(1);
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
  }
  return Rational(mpq_class(p, q));
}

std::string Rational::str() const { return value_.get_str(10); }

long double Rational::to_long_double() const {
  // mpq_get_d is double precision; good enough to seed numeric root finding.
  return static_cast<long double>(value_.get_d());
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

Rational binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return Rational(0);
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(mpq_class(out));
}

}  // namespace urlab
