#include <gtest/gtest.h>

#include "holomatch/decompose.hpp"
#include "holomatch/errors.hpp"
#include "holomatch/generators.hpp"
#include "oracles.hpp"

namespace holomatch {
namespace {

// Signature of block_expand(core, gadget) by repeated contraction.
BooleanSignature expanded_by_contraction(const BooleanSignature& core, const BooleanSignature& gadget) {
  BooleanSignature cur = core;
  for (unsigned k = 0; k < core.arity(); ++k) cur = oracle::contract(cur, gadget, {{1, gadget.arity()}});
  return cur;
}

Matchgate wire() {
  Matchgate g(2);
  g.add_edge(0, 1, 1);
  g.set_externals({0, 1});
  return g;
}

struct Instance {
  Matchgate gate;
  BooleanSignature sig;
  unsigned n, ell;
};

std::vector<Instance> instances(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) {
    const unsigned n = static_cast<unsigned>(rng.range(3, 4));
    const unsigned ell = static_cast<unsigned>(rng.range(1, 3));
    Matchgate g = random_block_gate(rng, n, ell);
    BooleanSignature s = signature(g);
    out.push_back({std::move(g), std::move(s), n, ell});
  }
  return out;
}

TEST(BlockExpand, EdgeCoreWithWire) {
  Matchgate core(2);
  core.add_edge(0, 1, 5);
  core.set_externals({0, 1});
  EXPECT_EQ(signature(block_expand(core, wire())), BooleanSignature(2, {5, 0, 0, 1}));

  // wire plus an external with an internal pendant of weight 3: (3, 0) ⊗ wire
  Matchgate gadget(4);
  gadget.add_edge(0, 1, 3);
  gadget.add_edge(2, 3, 1);
  gadget.set_externals({0, 2, 3});
  const BooleanSignature s = signature(block_expand(core, gadget));
  BooleanSignature expect(4);
  expect[0b0000] = 45;
  expect[0b0101] = 9;
  EXPECT_EQ(s, expect);
}

TEST(BlockExpand, MatchesContractionAndIsSymmetric) {
  Rng rng(501);
  for (int k = 0; k < 40; ++k) {
    const unsigned n = static_cast<unsigned>(rng.range(2, 4));
    const unsigned ell = static_cast<unsigned>(rng.range(1, 2));
    Matchgate core = random_symmetric_core(rng, n);
    Matchgate gadget = random_gadget(rng, ell);
    Matchgate g = block_expand(core, gadget);
    ASSERT_EQ(g.arity(), n * ell);
    BooleanSignature s = signature(g);
    EXPECT_EQ(s, expanded_by_contraction(signature(core), signature(gadget)));
    EXPECT_TRUE(is_blockwise_symmetric(BlockView(s, ell)).symmetric);
  }
}

TEST(BlockExpand, RejectsAsymmetricCore) {
  Matchgate core = gamma1(true);
  EXPECT_THROW(block_expand(core, wire()), PreconditionError);
}

TEST(BlockExpand, RankAtMostTwoAndDetIdentities) {
  for (const Instance& in : instances(502, 40)) {
    BlockView v(in.sig, in.ell);
    EXPECT_LE(exact_rank(matrix_form(v)), 2U);
    EXPECT_TRUE(check_det_identities(v).pass);
  }
}

TEST(SymmetricCore, FamiliesAreSymmetricMatchgates) {
  const Scalar a = Rational(2, 3), b = -3;
  for (unsigned n = 1; n <= 5; ++n)
    for (CoreFamily f : {CoreFamily::kStar, CoreFamily::kPendants, CoreFamily::kPaths}) {
      BooleanSignature s = signature(symmetric_core(f, n, a, b));
      EXPECT_TRUE(is_blockwise_symmetric(BlockView(s, 1)).symmetric);
      EXPECT_TRUE(check_mgi(s).pass);
    }
  EXPECT_EQ(signature(symmetric_core(CoreFamily::kTriangle, 3, a)),
            BooleanSignature(3, {0, a, a, 0, a, 0, 0, 1}));
  // [3ab, 0, a, 0] by Hamming weight
  EXPECT_EQ(signature(symmetric_core(CoreFamily::kWheel3, 3, a, b)),
            BooleanSignature(3, {3 * a * b, 0, 0, a, 0, a, a, 0}));
  EXPECT_EQ(signature(symmetric_core(CoreFamily::kPendants, 2, a)), BooleanSignature(2, {a * a, 0, 0, 0}));
  EXPECT_EQ(signature(symmetric_core(CoreFamily::kPaths, 2, a)), BooleanSignature(2, {0, 0, 0, a * a}));
}

TEST(CondensedSignature, Examples) {
  EXPECT_EQ(condensed_signature(BooleanSignature(2, {4, 0, 0, 7})), (std::vector<Scalar>{4, 7}));
  EXPECT_EQ(condensed_signature(BooleanSignature(2, {0, 4, 7, 0})), (std::vector<Scalar>{4, 7}));
  EXPECT_EQ(condensed_signature(BooleanSignature(3, {1, 0, 0, 2, 0, 3, 4, 0})),
            (std::vector<Scalar>{1, 2, 3, 4}));
  EXPECT_THROW(condensed_signature(BooleanSignature(2, {1, 1, 0, 0})), PreconditionError);
}

TEST(Decompose, ZeroAndInadmissible) {
  Decomposition d = decompose(BlockView(BooleanSignature(6), 2));
  EXPECT_EQ(d.rank, 0U);
  EXPECT_TRUE(reconstruct_all(d).is_zero());
  BooleanSignature g1 = signature(gamma1(true));
  EXPECT_THROW(decompose(BlockView(g1, 2)), PreconditionError);
  BooleanSignature g3 = tensor(tensor(g1, g1), g1);  // not blockwise symmetric for ℓ = 2
  EXPECT_THROW(decompose(BlockView(g3, 2)), PreconditionError);
  BooleanSignature eq(3, {1, 0, 0, 0, 0, 0, 0, 1});  // parity violated
  EXPECT_THROW(decompose(BlockView(eq, 1)), PreconditionError);
}

TEST(Decompose, RoundTripAndWitnesses) {
  int ranks[3] = {0, 0, 0};
  int odd_theta = 0;
  for (const Instance& in : instances(503, 60)) {
    BlockView v(in.sig, in.ell);
    Decomposition d = decompose(v);
    ++ranks[d.rank];
    ASSERT_EQ(reconstruct_all(d), in.sig);
    if (d.rank == 2) {
      EXPECT_EQ(weight(d.theta ^ d.eta), 1U);
      EXPECT_NE(parity(d.theta), parity(d.eta));
      EXPECT_TRUE(d.g[d.theta].is_one());
      EXPECT_TRUE(d.g[d.eta].is_one());
      odd_theta += static_cast<int>(parity(d.theta));
      Matchgate cw = condensed_witness(in.gate, v, d);
      EXPECT_EQ(cw.arity(), in.ell + 1);
      EXPECT_EQ(condensed_signature(signature(cw)), d.g);
      Matchgate core = core_witness(in.gate, d);
      EXPECT_EQ(core.arity(), in.n);
      BooleanSignature cs = signature(core);
      EXPECT_EQ(cs, d.core);
      EXPECT_TRUE(is_blockwise_symmetric(BlockView(cs, 1)).symmetric);
      EXPECT_THROW(condensed_witness(in.gate, v, d, WitnessMode::kRankOne), PreconditionError);
    } else if (d.rank == 1) {
      EXPECT_TRUE(blocks_share_parity(v));
      EXPECT_TRUE(d.g[d.beta].is_one());
      EXPECT_EQ(d.core.support().size(), 1U);
      EXPECT_EQ(d.core[parity(d.beta) ? d.core.size() - 1 : 0], d.base);
      Matchgate cw = condensed_witness(in.gate, v, d, WitnessMode::kRankOne);
      EXPECT_EQ(condensed_signature(signature(cw)), d.g);
      EXPECT_THROW(core_witness(in.gate, d), PreconditionError);
    }
  }
  EXPECT_GT(ranks[1], 0);
  EXPECT_GT(ranks[2], 0);
  // both pivot parities occur in this sample
  EXPECT_GT(odd_theta, 0);
  EXPECT_LT(odd_theta, ranks[2]);
}

TEST(Reconstruct, Examples) {
  Rng rng(504);
  Matchgate g = block_expand(symmetric_core(CoreFamily::kStar, 3, 2), random_gadget(rng, 2));
  while (exact_rank(matrix_form(BlockView(signature(g), 2))) != 2)
    g = block_expand(symmetric_core(CoreFamily::kStar, 3, 2), random_gadget(rng, 2));
  BooleanSignature s = signature(g);
  Decomposition d = decompose(BlockView(s, 2));
  EXPECT_EQ(reconstruct(d, {d.theta, d.theta, d.theta}), s[repeat_block(d.theta, 2, 3)]);
  for (Index a = 0; a < 4; ++a)
    if (d.g[a].is_zero()) EXPECT_TRUE(reconstruct(d, {a, d.theta, d.eta}).is_zero());
  EXPECT_THROW(reconstruct(d, {0, 0}), PreconditionError);
  EXPECT_THROW(reconstruct(d, {0, 0, 4}), PreconditionError);
}

TEST(CondensedWitness, RejectsMismatchedGate) {
  for (const Instance& in : instances(505, 20)) {
    BlockView v(in.sig, in.ell);
    Decomposition d = decompose(v);
    if (d.rank != 2) continue;
    Matchgate other = scale_gate(in.gate, 2);
    EXPECT_THROW(condensed_witness(other, v, d), PreconditionError);
    EXPECT_THROW(core_witness(other, d), PreconditionError);
    return;
  }
  FAIL() << "no rank-2 instance drawn";
}

}  // namespace
}  // namespace holomatch
