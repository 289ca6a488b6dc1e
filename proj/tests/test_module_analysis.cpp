#include <gtest/gtest.h>

#include "urlab/analysis.hpp"
#include "urlab/errors.hpp"
#include "urlab/sweep.hpp"

using namespace urlab;

namespace {

RepParams worked() {
  RepParams p;
  p.n = 2;
  p.lambda = 1;
  p.alpha = 0;
  p.a = 2;
  p.b = 1;
  p.c = 1;
  p.M = Matrix{{0}, {1}};
  p.N = Matrix{{1}};
  return p;
}

/// x acting by a fixed matrix, all of L(V) acting by zero.
Representation x_only(std::size_t n, const Rational& lambda, const Matrix& x) {
  auto alg = std::make_shared<const GAlgebra>(build_g(n, lambda));
  std::vector<Matrix> images(alg->dim(), Matrix(x.rows(), x.cols()));
  images[0] = x;
  return make_representation(alg, images);
}

}  // namespace

TEST(LengthFiltration, WorkedCase) {
  const Representation r = build_R(worked());
  const Filtration f = length_filtration(r);
  EXPECT_EQ(f.length(), 3u);
  EXPECT_EQ(f.layer_dims, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(f.steps.front(), Subspace::span({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
  for (const auto& step : f.steps) {
    for (const auto& m : r.images) {
      for (const auto& v : step.basis()) {
        EXPECT_TRUE(step.contains(m * v));
      }
    }
  }
}

TEST(LengthFiltration, TrivialModule) {
  const Representation r = x_only(2, 1, Matrix{{0}});
  ASSERT_TRUE(r.verified);
  EXPECT_EQ(length_filtration(r).length(), 1u);
}

TEST(Socle, WorkedCaseAndDirectSum) {
  const Representation r = build_R(worked());
  EXPECT_EQ(socle_series(r).layer_dims, (std::vector<std::size_t>{1, 1, 1, 1}));
  EXPECT_TRUE(is_uniserial(r));
  const Representation two = x_only(2, 1, Matrix(2, 2));
  EXPECT_FALSE(is_uniserial(two));
  EXPECT_EQ(socle_series(two).layer_dims, (std::vector<std::size_t>{2}));
}

TEST(Socle, IrrationalSpectrumIsRejected) {
  const Representation r = x_only(2, 1, Matrix{{0, 2}, {1, 0}});
  ASSERT_TRUE(r.verified);
  EXPECT_THROW(socle_series(r), IrrationalSpectrum);
}

TEST(Socle, LayersSumToDimension) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const auto& t : enumerate_triples(n)) {
      Sampler s(23, {long(n), long(t[0]), long(t[1]), long(t[2])});
      const Representation r = build_R(sample_params(n, t, Rational(-1), Rational(1, 3), s));
      const Filtration soc = socle_series(r);
      std::size_t total = 0;
      for (const auto d : soc.layer_dims) {
        EXPECT_GE(d, 1u);
        total += d;
      }
      EXPECT_EQ(total, r.dim());
      EXPECT_TRUE(is_uniserial(r));
      EXPECT_TRUE(is_uniserial(normalize(r).rep));
      EXPECT_TRUE(is_uniserial(dualize(r)));
    }
  }
}

TEST(Flags, WorkedCaseFaithful) {
  const AnalysisReport r = kernel_and_flags(build_R(worked()));
  EXPECT_TRUE(r.faithful);
  EXPECT_TRUE(r.relatively_faithful);
  EXPECT_TRUE(r.kernel_basis.empty());
  EXPECT_EQ(r.length, 3u);
  EXPECT_TRUE(r.uniserial);
  ASSERT_TRUE(r.funk_consistent.has_value());
  EXPECT_TRUE(*r.funk_consistent);
}

TEST(Flags, NotFaithfulButRelativelyFaithful) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Sampler s(seed, {3, 1, 1});
    const Representation rep = build_R(sample_params(3, {3, 1, 1}, 0, 1, s));
    const AnalysisReport r = kernel_and_flags(rep);
    EXPECT_FALSE(r.faithful);
    EXPECT_TRUE(r.relatively_faithful);
    EXPECT_EQ(r.kernel_meets_v_dim, 0u);
    for (const auto& k : r.kernel_basis) {
      EXPECT_TRUE(rep.apply(k).is_zero());
    }
  }
}

TEST(Flags, ExtremeType) {
  RepParams p;
  p.n = 3;
  p.lambda = 1;
  p.alpha = 0;
  p.a = 1;
  p.b = 3;
  p.c = 1;
  p.M = Matrix{{1, 0, 0}};
  p.N = Matrix{{Rational(5, 2)}, {0}, {1}};
  const AnalysisReport r = kernel_and_flags(build_R(p));
  EXPECT_TRUE(r.wedges_in_kernel);
  EXPECT_FALSE(r.relatively_faithful);
  EXPECT_EQ(r.kernel_basis.size(), 3u);
}

TEST(Flags, AdjacentSumPredicateMatchesKernel) {
  // Four blocks where no adjacent pair reaches n+1: R(v_{n-1}) vanishes.
  RepParams p;
  p.n = 3;
  p.lambda = 1;
  p.a = 2;
  p.b = 2;
  p.c = 2;
  p.M = Matrix{{1, 0}, {1, 0}};
  p.N = Matrix{{0, 0}, {1, 0}};
  const AnalysisReport r = kernel_and_flags(build_R(p));
  ASSERT_TRUE(r.funk_predicate.has_value());
  EXPECT_TRUE(*r.funk_predicate);
  EXPECT_TRUE(*r.funk_consistent);

  const std::vector<Matrix> blocks{Matrix{{0}}, Matrix{{-1}}, Matrix{{-2}}};
  const Matrix x = direct_sum(blocks);
  const Matrix v0 = Matrix::unit(3, 3, 0, 1) + Matrix::unit(3, 3, 1, 2);
  auto alg = std::make_shared<const GAlgebra>(build_g(2, 1));
  std::vector<Matrix> images{x, v0, ad_shift_power(x, 1, 1, v0)};
  images.push_back(commutator(images[1], images[2]));
  Representation small = make_representation(alg, images);
  ASSERT_TRUE(small.verified);
  small.partition = BlockPartition({1, 1, 1});
  small.alpha = Rational(0);
  const AnalysisReport rs = kernel_and_flags(small);
  ASSERT_TRUE(rs.funk_predicate.has_value());
  EXPECT_FALSE(*rs.funk_predicate);  // 1 + 1 < n + 1 = 3
  EXPECT_EQ(rs.kernel_meets_v_dim, 1u);
  EXPECT_TRUE(*rs.funk_consistent);
}

TEST(Isomorphism, SelfAndAlphaShift) {
  const Representation r = build_R(worked());
  const IsomorphismResult self = isomorphism_search(r, r);
  ASSERT_TRUE(self.intertwiner.has_value());
  EXPECT_GE(self.solution_dim, 1u);
  RepParams shifted = worked();
  shifted.alpha = Rational(1, 2);
  const IsomorphismResult none = isomorphism_search(r, build_R(shifted));
  EXPECT_FALSE(none.intertwiner.has_value());
  EXPECT_TRUE(none.certified_negative);
  EXPECT_EQ(none.solution_dim, 0u);
}

TEST(Isomorphism, DeterministicForSeed) {
  const Representation a = build_R(worked());
  const Representation b = normalize(conjugate(a, Matrix{{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 5}})).rep;
  const auto r1 = isomorphism_search(a, b, 99);
  const auto r2 = isomorphism_search(a, b, 99);
  ASSERT_TRUE(r1.intertwiner.has_value());
  EXPECT_EQ(*r1.intertwiner, *r2.intertwiner);
  EXPECT_THROW(isomorphism_search(a, build_sl2_tensor()), DimensionMismatch);
}

TEST(Nilpotency, DegreeAndWitness) {
  // -Catalan(n-2) = C(2n-4, n-1) - C(2n-4, n-2).
  const std::vector<long> neg_catalan{-1, -1, -2, -5, -14, -42};
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Rational lambda : {Rational(0), Rational(1), Rational(-3, 2)}) {
      const NilpotencyReport r = lambda2_nilpotency_degree(build_g(n, lambda));
      EXPECT_EQ(r.degree, 2 * n - 3);
      EXPECT_EQ(r.witness_coefficient, Rational(neg_catalan[n - 2]));
      EXPECT_TRUE(r.witness_matches);
    }
  }
  EXPECT_THROW(lambda2_nilpotency_degree(build_g(1, 1)), std::invalid_argument);
}
