#include <gtest/gtest.h>

#include <stdexcept>

#include "urlab/linalg.hpp"
#include "urlab/polynomial.hpp"
#include "urlab/sampler.hpp"

using namespace urlab;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Sampler& s, long bound = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = s.integer(-bound, bound);
    }
  }
  return m;
}

// Plain forward elimination, no back substitution: rank only.
std::size_t naive_rank(std::vector<Vector> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) {
      ++p;
    }
    if (p == rows.size()) {
      continue;
    }
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] -= f * rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST(Rational, LowestTermsAndSign) {
  const Rational q(6, -4);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(q.denominator(), 2);
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_EQ(Rational(0, 7).str(), "0");
}

TEST(Rational, ParseAndRender) {
  EXPECT_EQ(Rational::parse("-1/3"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse(" 4/8 "), Rational(1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("abc"), std::exception);
  EXPECT_THROW(Rational::parse("1/2/3"), std::exception);
}

TEST(Rational, ParseRenderRoundTrip) {
  Sampler s(3, {0});
  for (int i = 0; i < 200; ++i) {
    const Rational q(s.integer(-1000, 1000), s.integer(1, 999));
    EXPECT_EQ(Rational::parse(q.str()), q);
  }
}

TEST(Rational, ArithmeticIsExact) {
  Rational acc;
  for (long k = 1; k <= 50; ++k) {
    acc += Rational(1, k * (k + 1));
  }
  EXPECT_EQ(acc, Rational(50, 51));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  // Beyond 64 bits.
  Rational big(1);
  for (int i = 0; i < 40; ++i) {
    big *= Rational(1000);
  }
  EXPECT_EQ((big + Rational(1)) - big, Rational(1));
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(4, 2), Rational(6));
  EXPECT_EQ(binomial(8, 3), Rational(56));
  EXPECT_EQ(binomial(2, 5), Rational(0));
  EXPECT_EQ(binomial(0, 0), Rational(1));
}

TEST(Matrix, JordanBlocks) {
  EXPECT_EQ(jordan_block(1, 5, JordanOrientation::upper), (Matrix{{5}}));
  EXPECT_EQ(jordan_block(2, 0, JordanOrientation::upper), (Matrix{{0, 1}, {0, 0}}));
  EXPECT_EQ(jordan_block(3, -1, JordanOrientation::lower), (Matrix{{-1, 0, 0}, {1, -1, 0}, {0, 1, -1}}));
}

TEST(Matrix, ShapeChecks) {
  EXPECT_THROW(Matrix(0, 2), std::exception);
  EXPECT_THROW(Matrix(2, 2) * Matrix(3, 3), std::exception);
  EXPECT_THROW(Matrix(2, 2) + Matrix(2, 3), std::exception);
}

TEST(Matrix, AdShiftPowerWorkedCase) {
  const std::vector<Matrix> blocks{jordan_block(2, 0, JordanOrientation::upper),
                                   jordan_block(1, -1, JordanOrientation::upper),
                                   jordan_block(1, -2, JordanOrientation::upper)};
  const Matrix a = direct_sum(blocks);
  const Matrix x = Matrix::unit(4, 4, 1, 2) + Matrix::unit(4, 4, 2, 3);
  EXPECT_EQ(ad_shift_power(a, 1, 0, x), x);
  EXPECT_EQ(ad_shift_power(a, 1, 1, x), Matrix::unit(4, 4, 0, 2));
  EXPECT_TRUE(ad_shift_power(a, 1, 3, Matrix(4, 4)).is_zero());
}

TEST(Matrix, AdShiftPowerComposes) {
  Sampler s(11, {1});
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(4, 4, s);
    const Matrix x = random_matrix(4, 4, s);
    const Rational lambda(s.integer(-3, 3), s.integer(1, 3));
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(ad_shift_power(a, lambda, k + 1, x), ad_shift_power(a, lambda, 1, ad_shift_power(a, lambda, k, x)));
    }
  }
}

TEST(Matrix, AdNilpotencyOnOffDiagonalBlock) {
  // ad of J^a(0) (+) J^b(0) kills the (1,2) strip after a+b-1 steps.
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = 1; b <= 5; ++b) {
      const std::vector<Matrix> blocks{jordan_block(a, 0, JordanOrientation::upper),
                                       jordan_block(b, 0, JordanOrientation::upper)};
      const Matrix A = direct_sum(blocks);
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) {
          const Matrix y = Matrix::unit(a + b, a + b, i, a + j);
          EXPECT_TRUE(ad_shift_power(A, 0, a + b - 1, y).is_zero());
        }
      }
      const Matrix corner = Matrix::unit(a + b, a + b, a - 1, a);
      EXPECT_FALSE(ad_shift_power(A, 0, a + b - 2, corner).is_zero());
    }
  }
}

TEST(Matrix, BlockViewAndDiagonality) {
  const BlockPartition one_one({1, 1});
  EXPECT_TRUE(is_i_diagonal(Matrix::identity(2), one_one, 0));
  const BlockPartition part({2, 1, 1});
  const Matrix e13 = Matrix::unit(4, 4, 0, 2);
  EXPECT_EQ(block_view(e13, part, part, 0, 1), (Matrix{{1}, {0}}));
  EXPECT_TRUE(block_view(e13, part, part, 0, 2).is_zero());
  EXPECT_TRUE(is_i_diagonal(e13, part, 1));
  const Matrix rv0 = Matrix::unit(4, 4, 1, 2) + Matrix::unit(4, 4, 2, 3);
  EXPECT_TRUE(is_i_diagonal(rv0, part, 1));
  EXPECT_FALSE(is_i_diagonal(Matrix::unit(4, 4, 0, 3), part, 1));
  EXPECT_THROW(block_view(e13, part, part, 3, 0), std::exception);
}

TEST(Linalg, RrefNullspaceInverse) {
  const Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE((m * ns[0] == Vector{0, 0, 0}));
  EXPECT_FALSE(inverse(m).has_value());
  EXPECT_TRUE(determinant(m).is_zero());
  const Matrix g{{2, 1}, {7, 4}};
  ASSERT_TRUE(inverse(g).has_value());
  EXPECT_EQ(*inverse(g) * g, Matrix::identity(2));
  EXPECT_EQ(determinant(g), Rational(1));
}

TEST(Linalg, RandomProperties) {
  Sampler s(5, {2});
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = s.integer(1, 6);
    const std::size_t c = s.integer(1, 6);
    const Matrix m = random_matrix(r, c, s, 2);
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.size(), c);
    for (const auto& v : ns) {
      const Vector img = m * v;
      EXPECT_TRUE(std::all_of(img.begin(), img.end(), [](const Rational& q) { return q.is_zero(); }));
    }
    const Matrix a = random_matrix(4, 4, s);
    const Matrix b = random_matrix(4, 4, s);
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
    if (const auto inv = inverse(a)) {
      EXPECT_EQ(a * *inv, Matrix::identity(4));
    } else {
      EXPECT_TRUE(determinant(a).is_zero());
    }
  }
}

TEST(Linalg, IndependenceCertificateExamples) {
  const Matrix e11{{1, 0}, {0, 0}};
  const Matrix e12{{0, 1}, {0, 0}};
  const std::vector<Matrix> two{e11, e12};
  const auto ok = independence_certificate(two);
  EXPECT_TRUE(ok.independent);
  EXPECT_EQ(ok.rank, 2u);

  const Matrix x{{1, 2}, {3, 4}};
  const std::vector<Matrix> dep{x, Rational(2) * x};
  const auto bad = independence_certificate(dep);
  EXPECT_FALSE(bad.independent);
  ASSERT_TRUE(bad.relation.has_value());
  EXPECT_EQ(*bad.relation, (Vector{1, Rational(-1, 2)}));

  const auto empty = independence_certificate(std::vector<Matrix>{});
  EXPECT_TRUE(empty.independent);
  EXPECT_EQ(empty.rank, 0u);
  EXPECT_THROW(independence_certificate(std::vector<Matrix>{Matrix(2, 2), Matrix(3, 3)}), std::exception);
}

TEST(Linalg, IndependenceAgreesWithNaiveElimination) {
  Sampler s(9, {3});
  for (int batch = 0; batch < 60; ++batch) {
    const std::size_t r = s.integer(1, 8);
    const std::size_t c = s.integer(1, 8);
    const std::size_t count = s.integer(1, 30);
    std::vector<Matrix> mats;
    std::vector<Vector> flat;
    for (std::size_t k = 0; k < count; ++k) {
      // Sparse-ish entries make dependent batches common.
      Matrix m(r, c);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
          m(i, j) = s.integer(0, 3) == 0 ? Rational(s.integer(-2, 2)) : Rational(0);
        }
      }
      mats.push_back(m);
      flat.push_back(m.entries());
    }
    const auto cert = independence_certificate(mats);
    const std::size_t oracle = naive_rank(flat);
    EXPECT_EQ(cert.rank, oracle);
    EXPECT_EQ(cert.independent, oracle == count);
    if (cert.relation) {
      const Vector& rel = *cert.relation;
      Matrix sum(r, c);
      for (std::size_t k = 0; k < count; ++k) {
        sum += rel[k] * mats[k];
      }
      EXPECT_TRUE(sum.is_zero());
      const auto first = std::find_if(rel.begin(), rel.end(), [](const Rational& q) { return !q.is_zero(); });
      ASSERT_NE(first, rel.end());
      EXPECT_EQ(*first, Rational(1));
    }
  }
}

TEST(Linalg, SubspaceQuotientAndRestriction) {
  // span(e1) inside F^3 is invariant under an upper triangular map.
  const Subspace s = Subspace::span({{1, 0, 0}}, 3);
  EXPECT_EQ(s.dim(), 1u);
  EXPECT_TRUE(s.contains(Vector{5, 0, 0}));
  EXPECT_FALSE(s.contains(Vector{0, 1, 0}));
  EXPECT_EQ(s.complement_positions(), (std::vector<std::size_t>{1, 2}));
  const Matrix m{{2, 1, 0}, {0, 3, 1}, {0, 0, 4}};
  EXPECT_EQ(restrict_to(m, s), (Matrix{{2}}));
  EXPECT_EQ(induced_on_quotient(m, s), (Matrix{{3, 1}, {0, 4}}));
  EXPECT_THROW(restrict_to(m, Subspace::span({{0, 1, 0}}, 3)), std::exception);
  const Subspace t = Subspace::span({{0, 1, 1}, {0, 2, 2}}, 3);
  EXPECT_EQ(t.dim(), 1u);
  EXPECT_EQ(s.sum(t).dim(), 2u);
  EXPECT_TRUE(s.sum(t).contains(t));
}

TEST(Linalg, JointNullspace) {
  const std::vector<Matrix> mats{Matrix::unit(3, 3, 0, 1), Matrix::unit(3, 3, 0, 2)};
  const Subspace k = joint_nullspace(mats, 3);
  EXPECT_EQ(k, Subspace::span({{1, 0, 0}}, 3));
  EXPECT_EQ(joint_nullspace(std::vector<Matrix>{}, 2).dim(), 2u);
}

TEST(Polynomial, CharacteristicPolynomialAndRoots) {
  const Matrix m{{2, 1, 0}, {0, 2, 0}, {0, 0, -1}};
  // (t-2)^2 (t+1) = t^3 - 3t^2 + 4
  const Polynomial p = characteristic_polynomial(m);
  EXPECT_EQ(p, Polynomial(Vector{4, 0, -3, 1}));
  const RationalRoots r = rational_roots(p);
  EXPECT_TRUE(r.splits);
  EXPECT_EQ(r.roots, (Vector{-1, 2}));
  const RationalRoots irr = rational_roots(characteristic_polynomial(Matrix{{0, 2}, {1, 0}}));
  EXPECT_FALSE(irr.splits);
  const RationalRoots frac = rational_roots(Polynomial(Vector{Rational(-1, 3), 0, 3}) * Polynomial::linear_root(Rational(-1, 2)));
  EXPECT_TRUE(frac.splits);
  EXPECT_EQ(frac.roots, (Vector{Rational(-1, 2), Rational(-1, 3), Rational(1, 3)}));
}
