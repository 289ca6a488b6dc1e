#include "urlab/analysis.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "urlab/errors.hpp"
#include "urlab/polynomial.hpp"

namespace urlab {

namespace {

std::vector<Matrix> derived_images(const Representation& rep) {
  std::vector<Matrix> out;
  for (const auto& z : derived_ideal(*rep.algebra).first) {
    out.push_back(rep.apply(z));
  }
  return out;
}

/// Matrix of v -> quotient_coordinates(v) for the subspace s.
Matrix quotient_map(const Subspace& s) {
  const auto comp = s.complement_positions();
  Matrix q(comp.size(), s.ambient());
  for (std::size_t r = 0; r < comp.size(); ++r) {
    q(r, comp[r]) = 1;
    for (std::size_t i = 0; i < s.pivots().size(); ++i) {
      const Rational& f = s.basis()[i][comp[r]];
      if (!f.is_zero()) {
        q(r, s.pivots()[i]) -= f;
      }
    }
  }
  return q;
}

Filtration finish(std::vector<Subspace> steps) {
  Filtration f;
  std::size_t prev = 0;
  for (const auto& s : steps) {
    f.layer_dims.push_back(s.dim() - prev);
    prev = s.dim();
  }
  f.steps = std::move(steps);
  return f;
}

/// Joint eigenspaces of commuting operators (given in coordinates of a common space).
std::vector<Subspace> joint_eigenspaces(const std::vector<Matrix>& ops, std::size_t dim) {
  std::vector<Subspace> pieces{Subspace::whole(dim)};
  for (const auto& op : ops) {
    std::vector<Subspace> next;
    for (const auto& piece : pieces) {
      const Matrix local = restrict_to(op, piece);
      const RationalRoots roots = rational_roots(characteristic_polynomial(local));
      if (!roots.splits) {
        throw IrrationalSpectrum("an operator on the socle candidate has a non-rational eigenvalue");
      }
      for (const auto& mu : roots.roots) {
        const Matrix shifted = local - mu * Matrix::identity(local.rows());
        std::vector<Vector> vecs;
        for (const auto& coords : nullspace(shifted)) {
          Vector v(dim);
          for (std::size_t i = 0; i < coords.size(); ++i) {
            if (coords[i].is_zero()) {
              continue;
            }
            for (std::size_t k = 0; k < dim; ++k) {
              v[k] += coords[i] * piece.basis()[i][k];
            }
          }
          vecs.push_back(std::move(v));
        }
        next.push_back(Subspace::span(vecs, dim));
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

void check_rep(const Representation& rep) {
  if (!rep.verified) {
    throw std::invalid_argument("analysis needs a verified representation");
  }
}

}  // namespace

Filtration length_filtration(const Representation& rep) {
  check_rep(rep);
  const std::size_t d = rep.dim();
  const std::vector<Matrix> derived = derived_images(rep);
  std::vector<Subspace> steps;
  Subspace current(d);
  while (current.dim() < d) {
    std::vector<Matrix> conditions;
    const Matrix q = quotient_map(current);
    for (const auto& z : derived) {
      conditions.push_back(q * z);
    }
    Subspace next = joint_nullspace(conditions, d);
    if (next.dim() <= current.dim()) {
      throw std::logic_error("annihilator filtration stalled: [g,g] does not act nilpotently");
    }
    steps.push_back(next);
    current = std::move(next);
  }
  return finish(std::move(steps));
}

Filtration socle_series(const Representation& rep) {
  check_rep(rep);
  const std::size_t d = rep.dim();
  const auto derived = derived_ideal(*rep.algebra).first;
  std::vector<Subspace> steps;
  Subspace current(d);
  while (current.dim() < d) {
    // Work in F^d / current via complement coordinates.
    std::vector<Matrix> quot;
    for (const auto& m : rep.images) {
      quot.push_back(current.dim() == 0 ? m : induced_on_quotient(m, current));
    }
    const std::size_t qd = quot.front().rows();
    std::vector<Matrix> derived_q;
    for (const auto& z : derived) {
      Matrix acc(qd, qd);
      for (std::size_t i = 0; i < z.coords.size(); ++i) {
        if (!z.coords[i].is_zero()) {
          acc += z.coords[i] * quot[i];
        }
      }
      derived_q.push_back(std::move(acc));
    }
    const Subspace killed = joint_nullspace(derived_q, qd);
    std::vector<Matrix> local_ops;
    for (const auto& m : quot) {
      local_ops.push_back(restrict_to(m, killed));
    }
    std::vector<Vector> socle_vectors;
    for (const auto& piece : joint_eigenspaces(local_ops, killed.dim())) {
      for (const auto& coords : piece.basis()) {
        Vector v(qd);
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (coords[i].is_zero()) {
            continue;
          }
          for (std::size_t k = 0; k < qd; ++k) {
            v[k] += coords[i] * killed.basis()[i][k];
          }
        }
        socle_vectors.push_back(current.dim() == 0 ? v : current.lift(v));
      }
    }
    Subspace next = current.sum(Subspace::span(socle_vectors, d));
    if (next.dim() <= current.dim()) {
      throw std::logic_error("socle series stalled");
    }
    steps.push_back(next);
    current = std::move(next);
  }
  return finish(std::move(steps));
}

bool is_uniserial(const Representation& rep) {
  const auto layers = socle_series(rep).layer_dims;
  return std::all_of(layers.begin(), layers.end(), [](std::size_t k) { return k == 1; });
}

AnalysisReport kernel_and_flags(const Representation& rep, const AnalysisOptions& options) {
  check_rep(rep);
  const GAlgebra& alg = *rep.algebra;
  AnalysisReport report;

  const Filtration lf = length_filtration(rep);
  report.length = lf.length();
  report.length_layers = lf.layer_dims;
  if (options.uniseriality) {
    const Filtration soc = socle_series(rep);
    report.socle_layers = soc.layer_dims;
    report.uniserial = std::all_of(soc.layer_dims.begin(), soc.layer_dims.end(), [](std::size_t k) { return k == 1; });
  }

  // Columns of the linear map g -> gl(d) are the flattened images.
  const std::size_t flat = rep.dim() * rep.dim();
  auto kernel_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> rows(flat, Vector(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const Vector& e = rep.image(idx[c]).entries();
      for (std::size_t k = 0; k < flat; ++k) {
        rows[k][c] = e[k];
      }
    }
    return nullspace(rref(std::move(rows), idx.size()));
  };
  std::vector<std::size_t> all(alg.dim());
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    all[i] = i;
  }
  for (auto& coords : kernel_of(all)) {
    report.kernel_basis.push_back(GElement{std::move(coords)});
  }
  report.faithful = report.kernel_basis.empty();

  std::vector<std::size_t> v_idx;
  for (std::size_t k = 0; k < alg.gen_count(); ++k) {
    v_idx.push_back(alg.v_index(k));
  }
  report.kernel_meets_v_dim = kernel_of(v_idx).size();

  report.wedges_in_kernel = true;
  for (std::size_t i = 1 + alg.gen_count(); i < alg.dim(); ++i) {
    if (!rep.image(i).is_zero()) {
      report.wedges_in_kernel = false;
    }
  }
  // Lambda^2 V = 0 cannot be properly contained in itself.
  report.relatively_faithful = report.kernel_meets_v_dim == 0 && !report.wedges_in_kernel;

  if (check_standard(rep).standard) {
    const auto& part = *rep.partition;
    bool predicate = false;
    for (std::size_t i = 0; i + 1 < part.count(); ++i) {
      predicate = predicate || part.size(i) + part.size(i + 1) == alg.spec().n + 1;
    }
    report.funk_predicate = predicate;
    report.funk_consistent = predicate == (report.kernel_meets_v_dim == 0);
  }
  return report;
}

IsomorphismResult isomorphism_search(const Representation& a, const Representation& b, std::uint64_t seed) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("isomorphism_search needs equal dimensions");
  }
  if (a.images.size() != b.images.size()) {
    throw DimensionMismatch("representations of different algebras");
  }
  const std::size_t d = a.dim();
  const std::size_t unknowns = d * d;
  // Stage 1: T R_A(x) = R_B(x) T over all d^2 unknowns (T flattened row-major).
  std::vector<Vector> rows;
  const Matrix& ax = a.x_image();
  const Matrix& bx = b.x_image();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vector row(unknowns);
      for (std::size_t k = 0; k < d; ++k) {
        if (!ax(k, j).is_zero()) {
          row[i * d + k] += ax(k, j);
        }
        if (!bx(i, k).is_zero()) {
          row[k * d + j] -= bx(i, k);
        }
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<Matrix> space;
  for (const auto& flat : nullspace(rref(std::move(rows), unknowns))) {
    Matrix t(d, d);
    for (std::size_t k = 0; k < unknowns; ++k) {
      t(k / d, k % d) = flat[k];
    }
    space.push_back(std::move(t));
  }
  // Stage 2: impose the remaining basis elements on the combination coefficients.
  if (!space.empty()) {
    std::vector<Vector> eqs(unknowns * (a.images.size() - 1), Vector(space.size()));
    std::size_t block = 0;
    for (std::size_t y = 0; y < a.images.size(); ++y) {
      if (y == a.algebra->x_index()) {
        continue;
      }
      for (std::size_t s = 0; s < space.size(); ++s) {
        const Matrix defect = space[s] * a.image(y) - b.image(y) * space[s];
        for (std::size_t k = 0; k < unknowns; ++k) {
          eqs[block * unknowns + k][s] = defect.entries()[k];
        }
      }
      ++block;
    }
    std::vector<Matrix> reduced;
    for (const auto& coeffs : nullspace(rref(std::move(eqs), space.size()))) {
      Matrix t(d, d);
      for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (!coeffs[s].is_zero()) {
          t += coeffs[s] * space[s];
        }
      }
      reduced.push_back(std::move(t));
    }
    space = std::move(reduced);
  }

  IsomorphismResult result;
  result.solution_dim = space.size();
  result.certified_negative = space.empty();
  if (space.empty()) {
    return result;
  }
  auto accept = [&](const Matrix& t) {
    if (determinant(t).is_zero()) {
      return false;
    }
    for (std::size_t y = 0; y < a.images.size(); ++y) {
      if (t * a.image(y) != b.image(y) * t) {
        throw std::logic_error("intertwiner solve produced a non-solution");
      }
    }
    return true;
  };
  if (space.size() == 1) {
    result.attempts = 1;
    if (accept(space.front())) {
      result.intertwiner = space.front();
    }
    return result;
  }
  // Seed from (seed, a cheap fingerprint of both reps) so results do not depend on call order.
  std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                      static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(space.size())};
  for (const auto* rep : {&a, &b}) {
    for (const auto& m : rep->images) {
      unsigned long h = 0;
      for (const auto& q : m.entries()) {
        h = h * 1000003UL + mpz_fdiv_ui(q.numerator().get_mpz_t(), 2147483647UL) * 31UL +
            mpz_fdiv_ui(q.denominator().get_mpz_t(), 2147483647UL);
      }
      material.push_back(static_cast<std::uint32_t>(h ^ (h >> 32)));
    }
  }
  std::seed_seq seq(material.begin(), material.end());
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long> coeff(-kIsomorphismCoeffBound, kIsomorphismCoeffBound);
  for (std::size_t attempt = 0; attempt < kIsomorphismAttempts; ++attempt) {
    ++result.attempts;
    Matrix t(d, d);
    for (const auto& basis : space) {
      const long c = coeff(rng);
      if (c != 0) {
        t += Rational(c) * basis;
      }
    }
    if (accept(t)) {
      result.intertwiner = std::move(t);
      break;
    }
  }
  return result;
}

NilpotencyReport lambda2_nilpotency_degree(const GAlgebra& alg) {
  if (alg.spec().kind != AlgebraKind::single || alg.spec().n < 2) {
    throw std::invalid_argument("lambda2_nilpotency_degree needs the single-block algebra with n >= 2");
  }
  const std::size_t n = alg.spec().n;
  const GElement x = alg.basis(alg.x_index());
  const Rational two_lambda = Rational(2) * alg.lambda();
  auto step = [&](const GElement& y) {
    GElement out = alg.bracket(x, y);
    for (std::size_t k = 0; k < out.coords.size(); ++k) {
      out.coords[k] -= two_lambda * y.coords[k];
    }
    return out;
  };
  std::vector<GElement> current;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      current.push_back(alg.basis(alg.w_index(i, j)));
    }
  }
  NilpotencyReport report;
  while (std::any_of(current.begin(), current.end(), [](const GElement& e) { return !e.is_zero(); })) {
    for (auto& e : current) {
      e = step(e);
    }
    ++report.degree;
  }
  report.witness_coefficient = binomial(2 * n - 4, n - 1) - binomial(2 * n - 4, n - 2);
  GElement w = alg.basis(alg.w_index(0, 1));
  for (std::size_t k = 0; k < 2 * n - 4; ++k) {
    w = step(w);
  }
  // v_{n-1} ^ v_{n-2} = -(v_{n-2} ^ v_{n-1})
  GElement expected = alg.zero();
  expected.coords[alg.w_index(n - 2, n - 1)] = -report.witness_coefficient;
  report.witness_matches = w == expected && !report.witness_coefficient.is_zero();
  return report;
}

}  // namespace urlab
