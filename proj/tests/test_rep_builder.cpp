#include <gtest/gtest.h>

#include "urlab/analysis.hpp"
#include "urlab/errors.hpp"
#include "urlab/representation.hpp"
#include "urlab/sampler.hpp"
#include "urlab/sweep.hpp"

using namespace urlab;

namespace {

RepParams worked(const Matrix& m = Matrix{{0}, {1}}, const Matrix& n = Matrix{{1}}) {
  RepParams p;
  p.n = 2;
  p.lambda = 1;
  p.alpha = 0;
  p.a = 2;
  p.b = 1;
  p.c = 1;
  p.M = m;
  p.N = n;
  return p;
}

Matrix e(std::size_t i, std::size_t j) { return Matrix::unit(4, 4, i - 1, j - 1); }

}  // namespace

TEST(BuildR, WorkedVector) {
  const Representation r = build_R(worked());
  ASSERT_TRUE(r.verified);
  EXPECT_EQ(r.dim(), 4u);
  const std::vector<Matrix> blocks{jordan_block(2, 0, JordanOrientation::upper), Matrix{{-1}}, Matrix{{-2}}};
  EXPECT_EQ(r.x_image(), direct_sum(blocks));
  EXPECT_EQ(r.v_image(0), e(2, 3) + e(3, 4));
  EXPECT_EQ(r.v_image(1), e(1, 3));
  EXPECT_EQ(r.image(r.algebra->w_index(0, 1)), -e(1, 4));
}

TEST(BuildR, ParamViolations) {
  RepParams p = worked();
  p.c = 3;
  p.N = Matrix{{1, 0, 0}};
  EXPECT_THROW(build_R(p), ParamViolation);  // c > a
  p = worked(Matrix{{1}, {0}});
  EXPECT_THROW(build_R(p), ParamViolation);  // zero corner of M
  p = worked(Matrix{{0}, {1}}, Matrix{{0}});
  EXPECT_THROW(build_R(p), ParamViolation);
  p = worked(Matrix{{0, 1}, {1, 0}});
  EXPECT_THROW(build_R(p), ParamViolation);  // shape
}

TEST(BuildR, BlockShapesForSampledParams) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& t : enumerate_triples(n)) {
      Sampler s(kDefaultSeed, {long(n), long(t[0]), long(t[1]), long(t[2])});
      const RepParams p = sample_params(n, t, Rational(1, 2), Rational(-2), s);
      const Representation r = build_R(p);
      ASSERT_TRUE(r.verified) << p.fingerprint();
      const BlockPartition& part = *r.partition;
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_TRUE(is_i_diagonal(r.v_image(k), part, 1));
      }
      for (std::size_t i = 1 + n; i < r.algebra->dim(); ++i) {
        EXPECT_TRUE(is_i_diagonal(r.image(i), part, 2));
      }
      EXPECT_EQ(kernel_and_flags(r, {false}).kernel_meets_v_dim, 0u);
    }
  }
}

TEST(Verify, ZeroMapAndCorruption) {
  const auto alg = std::make_shared<const GAlgebra>(build_g(2, 1));
  EXPECT_TRUE(verify_representation(*alg, std::vector<Matrix>(alg->dim(), Matrix(3, 3))).ok);
  Representation r = build_R(worked());
  EXPECT_TRUE(verify_representation(*r.algebra, r.images).ok);
  r.images[r.algebra->v_index(1)] = Rational(2) * e(1, 3);
  const VerifyResult bad = verify_representation(*r.algebra, r.images);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->first, r.algebra->x_index());
  EXPECT_EQ(bad.witness->second, r.algebra->v_index(0));
}

TEST(Normalize, IdentityOnNormalizedInput) {
  const Representation r = build_R(worked());
  const Normalized n = normalize(r);
  EXPECT_EQ(n.conjugator, Matrix::identity(4));
  EXPECT_EQ(n.rep.images, r.images);
}

TEST(Normalize, WorkedScaling) {
  const Representation r = build_R(worked(Matrix{{0}, {3}}, Matrix{{2}}));
  const Normalized n = normalize(r);
  ASSERT_TRUE(n.rep.params.has_value());
  EXPECT_EQ(n.rep.params->M, (Matrix{{0}, {1}}));
  EXPECT_EQ(n.rep.params->N, (Matrix{{1}}));
  for (std::size_t y = 0; y < r.images.size(); ++y) {
    EXPECT_EQ(n.conjugator * r.image(y), n.rep.image(y) * n.conjugator);
  }
}

TEST(Normalize, PropertiesOnSampledParams) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& t : enumerate_triples(n)) {
      Sampler s(17, {long(n), long(t[0]), long(t[1]), long(t[2])});
      const RepParams p = sample_params(n, t, 0, 1, s);
      const Representation r = build_R(p);
      const Normalized once = normalize(r);
      ASSERT_TRUE(once.rep.params.has_value());
      EXPECT_TRUE(once.rep.params->is_normalized());
      EXPECT_TRUE(is_normalized_standard(once.rep));
      EXPECT_EQ(normalize(once.rep).rep.images, once.rep.images);
      EXPECT_EQ(normalize_params(p).first, *once.rep.params);
      EXPECT_EQ(normalize_params(p).second, once.conjugator);
      // T commutes with R(x), so it is block diagonal with Toeplitz blocks.
      EXPECT_EQ(once.conjugator * r.x_image(), r.x_image() * once.conjugator);
      EXPECT_EQ(once.conjugator(0, 0), Rational(1));
      const IsomorphismResult iso = isomorphism_search(r, once.rep);
      EXPECT_TRUE(iso.intertwiner.has_value());
    }
  }
}

TEST(Extreme, Predicate) {
  RepParams p;
  p.n = 3;
  p.lambda = 1;
  p.a = 1;
  p.b = 3;
  p.c = 1;
  p.M = Matrix{{1, 0, 0}};
  p.N = Matrix{{4}, {0}, {1}};
  EXPECT_TRUE(is_extreme(p));
  p.N = Matrix{{4}, {2}, {1}};
  EXPECT_FALSE(is_extreme(p));
  EXPECT_FALSE(is_extreme(worked()));
}

TEST(Dual, WorkedCase) {
  const Representation r = build_R(worked());
  const Representation d = dualize(r);
  EXPECT_TRUE(d.verified);
  EXPECT_TRUE(check_standard(d).standard) << check_standard(d).reason;
  EXPECT_EQ(d.partition->sizes(), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(*d.alpha, Rational(2));
  EXPECT_TRUE(kernel_and_flags(d).faithful);
  EXPECT_TRUE(isomorphism_search(r, dualize(d)).intertwiner.has_value());
}

TEST(Dual, RejectsNonStandardInput) {
  const Representation t = build_sl2_tensor();
  EXPECT_THROW(dualize(t), NotStandard);
}

TEST(Standardize, RecoversScrambledRep) {
  const Representation r = build_R(worked(Matrix{{2}, {3}}, Matrix{{-1}}));
  const Matrix t{{1, 2, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 1, 1}};
  const Representation scrambled = conjugate(r, t);
  EXPECT_FALSE(scrambled.partition.has_value());
  const Representation back = standardize(scrambled);
  EXPECT_TRUE(check_standard(back).standard);
  EXPECT_EQ(normalize(back).rep.params, normalize(r).rep.params);
}

TEST(SFamily, SAlpha) {
  const Rational l(1), m(3), a(1, 2);
  const Representation s = build_S_family(SAlpha{l, m, a});
  ASSERT_TRUE(s.verified);
  const std::vector<Matrix> diag{Matrix{{a}}, Matrix{{a - l}}, Matrix{{a - l - m}}};
  EXPECT_EQ(s.x_image(), direct_sum(diag));
  EXPECT_EQ(s.v_image(0), Matrix::unit(3, 3, 0, 1));
  EXPECT_EQ(s.v_image(1), Matrix::unit(3, 3, 1, 2));
  EXPECT_EQ(s.image(s.algebra->w_index(0, 1)), Matrix::unit(3, 3, 0, 2));
  const AnalysisReport rep = kernel_and_flags(s);
  EXPECT_TRUE(rep.faithful);
  EXPECT_TRUE(rep.uniserial);
}

TEST(SFamily, TwoBlocksKillsVWedges) {
  TwoBlocksS t;
  t.n = 3;
  t.m = 2;
  t.lambda = 2;
  t.mu = -1;
  t.a = 2;
  t.b = 2;
  t.c = 1;
  t.M = Matrix{{1, 2}, {1, 0}};
  t.N = Matrix{{3}, {1}};
  t.alpha = 0;
  const Representation s = build_S_family(t);
  ASSERT_TRUE(s.verified);
  const GAlgebra& g = *s.algebra;
  for (std::size_t i = 0; i < t.n; ++i) {
    for (std::size_t j = i + 1; j < t.n; ++j) {
      EXPECT_TRUE(s.image(g.w_index(i, j)).is_zero());
    }
  }
  const AnalysisReport rep = kernel_and_flags(s);
  EXPECT_FALSE(rep.faithful);
  EXPECT_TRUE(rep.uniserial);
  EXPECT_THROW(build_S_family(TwoBlocksS{3, 2, 2, -1, 1, 2, 1, Matrix{{1, 2}}, Matrix{{1}, {1}}, 0}), ParamViolation);
}

TEST(SFamily, DiagonalT) {
  const Representation t2 = build_S_family(DiagonalT{{1, 2}, 1, 0, 1, 2});
  ASSERT_TRUE(t2.verified);
  EXPECT_EQ(t2.dim(), 4u);
  const AnalysisReport r2 = kernel_and_flags(t2);
  EXPECT_TRUE(r2.faithful);
  EXPECT_TRUE(r2.relatively_faithful);

  const Representation t3 = build_S_family(DiagonalT{{1, 2, 4}, 1, 0, 1, 2});
  const AnalysisReport r3 = kernel_and_flags(t3);
  EXPECT_FALSE(r3.faithful);
  EXPECT_TRUE(r3.relatively_faithful);
  EXPECT_THROW(build_S_family(DiagonalT{{1, 2}, 1, 0, 5, 5}), ExtremeDegeneracy);
}

TEST(Sl2Tensor, ShapeAndRecoveredParams) {
  const Representation t = build_sl2_tensor();
  ASSERT_TRUE(t.verified);
  EXPECT_EQ(t.dim(), 6u);
  const RepParams p = recover_sl2_params();
  EXPECT_EQ(p.a, 2u);
  EXPECT_EQ(p.b, 2u);
  EXPECT_EQ(p.c, 2u);
  EXPECT_TRUE(p.is_normalized());
  EXPECT_EQ(p.M, (Matrix{{0, 0}, {1, 0}}));
  EXPECT_EQ(p.N, (Matrix{{0, 0}, {1, 0}}));
  const AnalysisReport r = kernel_and_flags(t);
  EXPECT_TRUE(r.faithful);
  EXPECT_TRUE(r.uniserial);
  EXPECT_TRUE(isomorphism_search(t, build_R(p)).intertwiner.has_value());
}
