#include "urlab/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "urlab/errors.hpp"
#include "urlab/linalg.hpp"

namespace urlab {

BasisLabel BasisLabel::w(std::size_t i, std::size_t j) {
  if (i >= j) {
    throw std::invalid_argument("wedge labels need i < j");
  }
  return {Tag::w, i, j};
}

bool GElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.is_zero(); });
}

namespace {

Matrix x_action_for(const AlgebraSpec& spec, std::size_t gens) {
  Matrix out(gens, gens);
  switch (spec.kind) {
    case AlgebraKind::single:
      out = jordan_block(spec.n, spec.lambda, JordanOrientation::lower);
      break;
    case AlgebraKind::two_blocks: {
      const Matrix blocks[] = {jordan_block(spec.n, spec.lambda, JordanOrientation::lower),
                               jordan_block(spec.m, spec.mu, JordanOrientation::lower)};
      out = direct_sum(blocks);
      break;
    }
    case AlgebraKind::diagonal:
      for (std::size_t k = 0; k < gens; ++k) {
        out(k, k) = Rational(static_cast<long>(spec.exponents[k])) * spec.lambda;
      }
      break;
  }
  return out;
}

std::size_t generator_count(const AlgebraSpec& spec) {
  switch (spec.kind) {
    case AlgebraKind::single:
      return spec.n;
    case AlgebraKind::two_blocks:
      return spec.n + spec.m;
    case AlgebraKind::diagonal:
      return spec.exponents.size();
  }
  return 0;
}

std::string generator_name(const AlgebraSpec& spec, std::size_t k) {
  switch (spec.kind) {
    case AlgebraKind::single:
      return "v" + std::to_string(k);
    case AlgebraKind::two_blocks:
      return k < spec.n ? "v" + std::to_string(k) : "w" + std::to_string(k - spec.n);
    case AlgebraKind::diagonal:
      return "v" + std::to_string(k + 1);  // v_1..v_n, matching the exponent indexing
  }
  return {};
}

void validate(const AlgebraSpec& spec) {
  switch (spec.kind) {
    case AlgebraKind::single:
      if (spec.n < 1) {
        throw std::invalid_argument("build_g needs n >= 1");
      }
      break;
    case AlgebraKind::two_blocks:
      if (spec.n < 1 || spec.m < 1) {
        throw std::invalid_argument("two-block algebra needs n, m >= 1");
      }
      break;
    case AlgebraKind::diagonal:
      if (spec.exponents.empty() || spec.exponents.front() != 1) {
        throw std::invalid_argument("diagonal exponents must start at 1");
      }
      for (std::size_t k = 1; k < spec.exponents.size(); ++k) {
        if (spec.exponents[k] <= spec.exponents[k - 1]) {
          throw std::invalid_argument("diagonal exponents must be strictly increasing");
        }
      }
      break;
  }
}

}  // namespace

GAlgebra::GAlgebra(const AlgebraSpec& spec)
    : spec_((validate(spec), spec)), gens_(generator_count(spec)), x_on_v_(x_action_for(spec, gens_)) {
  labels_.push_back(BasisLabel::x());
  names_.emplace_back("x");
  for (std::size_t k = 0; k < gens_; ++k) {
    labels_.push_back(BasisLabel::v(k));
    names_.push_back(generator_name(spec_, k));
  }
  for (std::size_t i = 0; i < gens_; ++i) {
    for (std::size_t j = i + 1; j < gens_; ++j) {
      labels_.push_back(BasisLabel::w(i, j));
      names_.push_back(generator_name(spec_, i) + "^" + generator_name(spec_, j));
    }
  }
  const std::size_t d = labels_.size();
  table_.assign(d * d, zero());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      GElement ab = compute_bracket(a, b);
      GElement ba = ab;
      for (auto& q : ba.coords) {
        q = -q;
      }
      table_[a * d + b] = std::move(ab);
      table_[b * d + a] = std::move(ba);
    }
  }
}

std::size_t GAlgebra::v_index(std::size_t k) const {
  if (k >= gens_) {
    throw std::out_of_range("generator index out of range");
  }
  return 1 + k;
}

std::size_t GAlgebra::w_index(std::size_t i, std::size_t j) const {
  if (i >= j || j >= gens_) {
    throw std::out_of_range("wedge index out of range");
  }
  // Wedges (i, j) with smaller i come first; row i starts after sum_{r<i} (gens - 1 - r).
  const std::size_t before = i * (2 * gens_ - i - 1) / 2;
  return 1 + gens_ + before + (j - i - 1);
}

std::size_t GAlgebra::index_of(const BasisLabel& label) const {
  switch (label.tag) {
    case BasisLabel::Tag::x:
      return x_index();
    case BasisLabel::Tag::v:
      return v_index(label.i);
    case BasisLabel::Tag::w:
      return w_index(label.i, label.j);
  }
  return 0;
}

std::optional<std::size_t> GAlgebra::find_name(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - names_.begin());
}

GElement GAlgebra::zero() const { return GElement{Vector(labels_.size())}; }

GElement GAlgebra::basis(std::size_t idx) const {
  GElement e = zero();
  e.coords.at(idx) = 1;
  return e;
}

const GElement& GAlgebra::bracket_basis(std::size_t a, std::size_t b) const {
  return table_.at(a * labels_.size() + b);
}

GElement GAlgebra::bracket(const GElement& a, const GElement& b) const {
  if (a.coords.size() != dim() || b.coords.size() != dim()) {
    throw DimensionMismatch("bracket operands do not belong to this algebra");
  }
  GElement out = zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.coords[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < dim(); ++j) {
      if (b.coords[j].is_zero() || i == j) {
        continue;
      }
      const Rational f = a.coords[i] * b.coords[j];
      const GElement& e = bracket_basis(i, j);
      for (std::size_t k = 0; k < dim(); ++k) {
        if (!e.coords[k].is_zero()) {
          out.coords[k] += f * e.coords[k];
        }
      }
    }
  }
  return out;
}

void GAlgebra::add_wedge(GElement& out, const Rational& coeff, const Vector& u, const Vector& v) const {
  for (std::size_t i = 0; i < gens_; ++i) {
    if (u[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < gens_; ++j) {
      if (i == j || v[j].is_zero()) {
        continue;
      }
      const Rational f = coeff * u[i] * v[j];
      if (i < j) {
        out.coords[w_index(i, j)] += f;
      } else {
        out.coords[w_index(j, i)] -= f;
      }
    }
  }
}

GElement GAlgebra::compute_bracket(std::size_t a, std::size_t b) const {
  GElement out = zero();
  const BasisLabel& la = labels_[a];
  const BasisLabel& lb = labels_[b];
  auto unit = [this](std::size_t k) {
    Vector e(gens_);
    e[k] = 1;
    return e;
  };
  using Tag = BasisLabel::Tag;
  if (la.tag == Tag::x && lb.tag == Tag::v) {
    for (std::size_t i = 0; i < gens_; ++i) {
      out.coords[v_index(i)] = x_on_v_(i, lb.i);
    }
  } else if (la.tag == Tag::x && lb.tag == Tag::w) {
    // x(u ^ w) = xu ^ w + u ^ xw
    add_wedge(out, 1, x_on_v_.column(lb.i), unit(lb.j));
    add_wedge(out, 1, unit(lb.i), x_on_v_.column(lb.j));
  } else if (la.tag == Tag::v && lb.tag == Tag::v) {
    add_wedge(out, 1, unit(la.i), unit(lb.i));
  } else if (lb.tag == Tag::x) {
    GElement flipped = compute_bracket(b, a);
    for (auto& q : flipped.coords) {
      q = -q;
    }
    return flipped;
  }
  // [V, Lambda^2 V] = 0 and Lambda^2 V is abelian.
  return out;
}

GAlgebra build_g(std::size_t n, const Rational& lambda) {
  AlgebraSpec spec;
  spec.kind = AlgebraKind::single;
  spec.n = n;
  spec.lambda = lambda;
  return GAlgebra(spec);
}

GAlgebra build_g_variant(const AlgebraSpec& spec) { return GAlgebra(spec); }

DerivedSeries derived_ideal(const GAlgebra& alg) {
  const std::size_t d = alg.dim();
  auto span_of_brackets = [&](const std::vector<GElement>& gens) {
    SpanBuilder span(d);
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        span.insert(alg.bracket(gens[a], gens[b]).coords);
      }
    }
    std::vector<GElement> out;
    for (auto& row : span.echelon().rows) {
      out.push_back(GElement{std::move(row)});
    }
    return out;
  };
  std::vector<GElement> all;
  for (std::size_t i = 0; i < d; ++i) {
    all.push_back(alg.basis(i));
  }
  DerivedSeries out;
  out.first = span_of_brackets(all);
  out.second = span_of_brackets(out.first);

  // Compare against V (+) Lambda^2 V and Lambda^2 V.
  std::vector<Vector> v_plus_wedge;
  std::vector<Vector> wedge_only;
  for (std::size_t i = 1; i < d; ++i) {
    v_plus_wedge.push_back(alg.basis(i).coords);
    if (alg.label(i).tag == BasisLabel::Tag::w) {
      wedge_only.push_back(alg.basis(i).coords);
    }
  }
  auto as_subspace = [d](const std::vector<GElement>& els) {
    std::vector<Vector> vs;
    for (const auto& e : els) {
      vs.push_back(e.coords);
    }
    return Subspace::span(vs, d);
  };
  out.matches_v_plus_wedge = as_subspace(out.first) == Subspace::span(v_plus_wedge, d) &&
                             as_subspace(out.second) == Subspace::span(wedge_only, d);
  out.formula_asserted = !alg.lambda().is_zero();
  return out;
}

std::vector<Matrix> extend_from_V(const GAlgebra& alg, std::span<const Matrix> images) {
  const std::size_t gens = alg.gen_count();
  if (images.size() != gens) {
    throw DimensionMismatch("need one image per generator of V");
  }
  for (const auto& m : images) {
    if (!m.is_square() || m.rows() != images.front().rows()) {
      throw DimensionMismatch("generator images must be square of equal size");
    }
  }
  std::vector<Matrix> wedges;
  wedges.reserve(alg.wedge_count());
  for (std::size_t i = 0; i < gens; ++i) {
    for (std::size_t j = i + 1; j < gens; ++j) {
      wedges.push_back(commutator(images[i], images[j]));
    }
  }
  // [Omega(v_a), [Omega(v_b), Omega(v_c)]] with b < c covers every triple up to sign.
  for (std::size_t b = 0; b < gens; ++b) {
    for (std::size_t c = b + 1; c < gens; ++c) {
      const Matrix& inner = wedges[alg.w_index(b, c) - 1 - gens];
      for (std::size_t a = 0; a < gens; ++a) {
        if (!commutator(images[a], inner).is_zero()) {
          throw HypothesisViolated("[Omega(" + alg.name(alg.v_index(a)) + "), [Omega(" + alg.name(alg.v_index(b)) +
                                   "), Omega(" + alg.name(alg.v_index(c)) + ")]] != 0");
        }
      }
    }
  }
  return wedges;
}

}  // namespace urlab
