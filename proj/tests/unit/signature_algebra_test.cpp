#include <gtest/gtest.h>

#include <algorithm>

#include "holomatch/errors.hpp"
#include "holomatch/generators.hpp"
#include "holomatch/signature_algebra.hpp"
#include "test_random.hpp"

namespace holomatch {
namespace {

BooleanSignature equality4() {
  BooleanSignature s(4);
  s[0b0000] = 1;
  s[0b1111] = 1;
  return s;
}

// Least failing (α, P) by direct evaluation of every residual.
std::optional<std::pair<Index, Index>> naive_mgi_witness(const BooleanSignature& s) {
  const unsigned n = s.arity();
  std::optional<std::pair<std::vector<unsigned>, std::vector<unsigned>>> best;
  std::optional<std::pair<Index, Index>> out;
  for (Index a = 0; a < s.size(); ++a)
    for (Index p = 1; p < s.size(); ++p) {
      if (mgi_residual(s, a, positions_of(p, n)).is_zero()) continue;
      auto key = std::make_pair(positions_of(a, n), positions_of(p, n));
      if (!best || key < *best) {
        best = key;
        out = std::make_pair(a, p);
      }
    }
  return out;
}

BooleanSignature random_parity_signature(testing::Rng& rng, unsigned n, bool complex_entries) {
  BooleanSignature s(n);
  const unsigned par = static_cast<unsigned>(testing::uniform_int(rng, 0, 1));
  for (Index a = 0; a < s.size(); ++a)
    if (parity(a) == par && testing::uniform_int(rng, 0, 2) != 0)
      s[a] = complex_entries ? testing::random_scalar(rng, 3) : testing::small_integer_scalar(rng);
  return s;
}

TEST(Parity, Examples) {
  EXPECT_EQ(check_parity(signature(gamma1(true))).kind, ParityKind::kEven);
  EXPECT_EQ(check_parity(BooleanSignature(1, {5, 0})).kind, ParityKind::kEven);
  EXPECT_EQ(check_parity(BooleanSignature(1, {0, 5})).kind, ParityKind::kOdd);
  EXPECT_EQ(check_parity(BooleanSignature(2)).kind, ParityKind::kZero);
  ParityVerdict v = check_parity(BooleanSignature(1, {1, 1}));
  EXPECT_EQ(v.kind, ParityKind::kViolated);
  EXPECT_EQ(v.even_witness, 0U);
  EXPECT_EQ(v.odd_witness, 1U);
}

TEST(MgiResidual, Examples) {
  BooleanSignature zero(4);
  EXPECT_TRUE(mgi_residual(zero, 0b0110, {1, 3}).is_zero());
  EXPECT_EQ(mgi_residual(equality4(), 0b1000, {1, 2, 3, 4}), Scalar(-1));
  BooleanSignature g = signature(gamma1(true));
  for (Index a = 0; a < 16; ++a)
    for (Index p = 1; p < 16; ++p) ASSERT_TRUE(mgi_residual(g, a, positions_of(p, 4)).is_zero());
}

TEST(MgiResidual, RejectsMalformedPositions) {
  BooleanSignature s = equality4();
  EXPECT_THROW(mgi_residual(s, 0, {}), PreconditionError);
  EXPECT_THROW(mgi_residual(s, 0, {2, 1}), PreconditionError);
  EXPECT_THROW(mgi_residual(s, 0, {1, 1}), PreconditionError);
  EXPECT_THROW(mgi_residual(s, 0, {0}), PreconditionError);
  EXPECT_THROW(mgi_residual(s, 0, {5}), PreconditionError);
}

TEST(CheckMgi, EqualityFourFailsWithExpectedWitness) {
  MgiVerdict v = check_mgi(equality4());
  ASSERT_FALSE(v.pass);
  EXPECT_EQ(v.alpha, 0b1000U);
  EXPECT_EQ(v.positions, 0b1111U);
  EXPECT_EQ(v.residual, Scalar(-1));
}

TEST(CheckMgi, ZeroAndLadderPass) {
  EXPECT_TRUE(check_mgi(BooleanSignature(5)).pass);
  EXPECT_TRUE(check_mgi(signature(gamma1(true))).pass);
}

// The row-major corner order is not a counterclockwise order, and its signature
// is not a matchgate signature.
TEST(CheckMgi, RowMajorLadderOrderFails) {
  MgiVerdict v = check_mgi(signature(gamma1(false)));
  ASSERT_FALSE(v.pass);
  EXPECT_EQ(v.alpha, 0b1000U);
  EXPECT_EQ(v.positions, 0b1111U);
  EXPECT_EQ(v.residual, Scalar(2));
}

TEST(CheckMgi, RandomGateSignaturesPass) {
  Rng rng(301);
  for (int t = 0; t < 200; ++t) {
    Matchgate g = random_plane_gate(rng, 12, 8);
    BooleanSignature s = signature(g);
    ASSERT_NE(check_parity(s).kind, ParityKind::kViolated);
    MgiVerdict v = check_mgi(s);
    ASSERT_TRUE(v.pass) << "trial " << t;
  }
}

TEST(CheckMgi, WitnessMatchesNaiveSweep) {
  testing::Rng rng(302);
  for (int t = 0; t < 60; ++t) {
    const unsigned n = static_cast<unsigned>(testing::uniform_int(rng, 2, 5));
    BooleanSignature s = random_parity_signature(rng, n, t % 2 == 1);
    if (t % 5 == 0) s[0] = s[0] + Scalar(1), s[1] = 2;  // break parity sometimes
    MgiVerdict v = check_mgi(s);
    auto naive = naive_mgi_witness(s);
    ASSERT_EQ(v.pass, !naive.has_value());
    if (naive) {
      EXPECT_EQ(v.alpha, naive->first);
      EXPECT_EQ(v.positions, naive->second);
      EXPECT_EQ(v.residual, mgi_residual(s, v.alpha, positions_of(v.positions, n)));
      EXPECT_FALSE(v.residual.is_zero());
    }
  }
}

TEST(CheckMgi, LargeRationalsUseGenericPath) {
  BooleanSignature s = equality4();
  s[0b1111] = Rational(mpq_class("123456789012345678901234567/7"));
  MgiVerdict v = check_mgi(s);
  ASSERT_FALSE(v.pass);
  EXPECT_EQ(v.residual, -s[0b1111]);
  BooleanSignature g = signature(gamma1(true));
  g = Scalar(Rational(mpq_class("98765432109876543210987/3"))) * g;
  EXPECT_TRUE(check_mgi(g).pass);
}

TEST(CheckMgi, CapAndSampling) {
  BooleanSignature s(13);
  s[0] = 1;
  s[s.size() - 1] = 1;
  EXPECT_THROW(check_mgi(s), CapExceeded);
  MgiOptions opt;
  opt.allow_sampling = true;
  opt.samples = 20000;
  MgiVerdict v = check_mgi(s, opt);
  EXPECT_FALSE(v.exhaustive);
  EXPECT_EQ(v.checked <= opt.samples, true);
}

TEST(BlockSymmetry, Examples) {
  BooleanSignature g = signature(gamma1(true));
  EXPECT_TRUE(is_blockwise_symmetric(BlockView(g, 2)).symmetric);
  BooleanSignature planted(4);
  planted[0b0100] = 1;
  SymmetryVerdict v = is_blockwise_symmetric(BlockView(planted, 2));
  EXPECT_FALSE(v.symmetric);
  EXPECT_EQ(v.swap_block, 0U);
  EXPECT_EQ(v.index, 0b0001U);
  EXPECT_THROW(BlockView(planted, 3), PreconditionError);
}

TEST(MatrixForm, LadderLayout) {
  BooleanSignature g = signature(gamma1(true));
  Matrix m = matrix_form(BlockView(g, 2));
  ASSERT_EQ(m.rows(), 4U);
  ASSERT_EQ(m.cols(), 4U);
  for (Index r = 0; r < 4; ++r)
    for (Index c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), g[(r << 2) | c]);
  EXPECT_EQ(exact_rank(m), 4U);
  EXPECT_TRUE(matrix_form(BlockView(BooleanSignature(6), 2)).is_zero());
}

TEST(MatrixForm, TensorSquareHasRankOne) {
  BooleanSignature g = signature(random_plane_gate(*std::make_unique<Rng>(303), 8, 3));
  BooleanSignature gg = tensor(g, g);
  Matrix m = matrix_form(BlockView(gg, g.arity()));
  EXPECT_EQ(exact_rank(m), g.is_zero() ? 0U : 1U);
}

TEST(MatrixForm, IsLinear) {
  testing::Rng rng(304);
  for (int t = 0; t < 20; ++t) {
    BooleanSignature a = random_parity_signature(rng, 6, true);
    BooleanSignature b = random_parity_signature(rng, 6, true);
    EXPECT_EQ(matrix_form(BlockView(a + b, 2)),
              matrix_form(BlockView(a, 2)) + matrix_form(BlockView(b, 2)));
  }
}

TEST(ExactRank, IndependentRows) {
  testing::Rng rng(305);
  for (std::size_t q = 1; q <= 4; ++q) {
    Matrix m(q, 8);
    for (std::size_t r = 0; r < q; ++r)
      for (std::size_t c = 0; c < 8; ++c) {
        if (c < r) continue;  // row r starts at column r with a nonzero entry
        m(r, c) = c == r ? testing::random_nonzero_scalar(rng) : testing::random_scalar(rng);
      }
    EXPECT_EQ(exact_rank(m), q);
    EXPECT_EQ(exact_rank(m.transpose()), q);
  }
  EXPECT_EQ(exact_rank(Matrix(3, 5)), 0U);
}

BooleanSignature random_block_power(testing::Rng& rng, std::size_t q, unsigned ell, unsigned n) {
  std::vector<std::vector<Scalar>> rows(q, std::vector<Scalar>(std::size_t{1} << ell));
  for (auto& row : rows)
    for (auto& x : row) x = testing::small_integer_scalar(rng, 4);
  BooleanSignature s(ell * n);
  for (Index a = 0; a < s.size(); ++a)
    for (const auto& row : rows) {
      Scalar p = 1;
      for (unsigned j = 0; j < n; ++j) p *= row[block_of(a, ell, n, j)];
      s[a] += p;
    }
  return s;
}

TEST(DetIdentities, Examples) {
  EXPECT_THROW(check_det_identities(BlockView(BooleanSignature(4), 2)), PreconditionError);
  EXPECT_TRUE(check_det_identities(BlockView(BooleanSignature(6), 2)).pass);
  testing::Rng rng(306);
  BooleanSignature planted = random_block_power(rng, 3, 2, 3);
  ASSERT_EQ(exact_rank(matrix_form(BlockView(planted, 2))), 3U);
  DetVerdict v = check_det_identities(BlockView(planted, 2));
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.det.is_zero());
}

TEST(DetIdentities, TensorPowersOfGateSignaturesPass) {
  Rng rng(307);
  for (int t = 0; t < 20; ++t) {
    BooleanSignature g = signature(random_plane_gate(rng, 8, 3));
    BooleanSignature s = tensor(tensor(g, g), g);
    BlockView v(s, g.arity());
    EXPECT_TRUE(is_blockwise_symmetric(v).symmetric);
    EXPECT_TRUE(check_det_identities(v).pass);
    EXPECT_LE(exact_rank(matrix_form(v)), 1U);
  }
}

TEST(MinPair, LadderWeights) {
  BooleanSignature g = signature(gamma1(true));
  auto any = find_min_weight_pair(BlockView(g, 2), false);
  ASSERT_TRUE(any);
  EXPECT_EQ(any->weight, 1U);
  EXPECT_EQ(any->sigma, 0b00U);
  EXPECT_EQ(any->tau, 0b01U);
  auto same = find_min_weight_pair(BlockView(g, 2), true);
  ASSERT_TRUE(same);
  EXPECT_EQ(same->weight, 2U);
  EXPECT_EQ(same->sigma, 0b00U);
  EXPECT_EQ(same->tau, 0b11U);
  BooleanSignature rm = signature(gamma1(false));
  EXPECT_EQ(find_min_weight_pair(BlockView(rm, 2), false)->weight, 1U);
  EXPECT_EQ(find_min_weight_pair(BlockView(rm, 2), true)->weight, 2U);
}

TEST(MinPair, RankOneHasNone) {
  BooleanSignature g(2, {1, 0, 0, 3});
  BooleanSignature s = tensor(g, g);
  EXPECT_FALSE(find_min_weight_pair(BlockView(s, 2), false).has_value());
}

}  // namespace
}  // namespace holomatch
