#include <gtest/gtest.h>

#include "holomatch/embedding.hpp"
#include "holomatch/errors.hpp"
#include "holomatch/generators.hpp"
#include "holomatch/matchgate.hpp"
#include "oracles.hpp"

namespace holomatch {
namespace {

Matchgate single_edge(const Scalar& w, bool both_external = true) {
  Matchgate g(2);
  g.add_edge(0, 1, w);
  g.set_externals(both_external ? std::vector<unsigned>{0, 1} : std::vector<unsigned>{1});
  return g;
}

Matchgate triangle_all_external() {
  Matchgate g(3);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 2);
  g.add_edge(2, 0, 3);
  set_rotation_from_points(g, {{0, 0}, {2, 0}, {0, 2}});
  g.set_externals({0, 1, 2});
  return g;
}

TEST(PerfMatch, Examples) {
  EXPECT_EQ(perfmatch_bruteforce(single_edge(5)), Scalar(5));
  Matchgate tri = triangle_all_external();
  EXPECT_EQ(perfmatch_bruteforce(tri), Scalar(0));
  EXPECT_EQ(perfmatch_bruteforce(grid_gate(2, 3)), Scalar(3));
  EXPECT_EQ(perfmatch_bruteforce(Matchgate(0)), Scalar(1));
}

TEST(PerfMatch, IsolatedVertexGivesZero) {
  Matchgate g(4);
  g.add_edge(0, 1, 1);
  g.add_edge(1, 2, 1);
  EXPECT_EQ(perfmatch_bruteforce(g), Scalar(0));
}

TEST(PerfMatch, AgreesWithEdgeSubsetOracle) {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    Matchgate g = random_plane_graph(rng, 10);
    ASSERT_EQ(perfmatch_bruteforce(g), oracle::perfmatch_edge_subsets(g));
  }
}

TEST(Matchgate, RejectsBadEdgesAndExternals) {
  Matchgate g(3);
  g.add_edge(0, 1, 1);
  EXPECT_THROW(g.add_edge(1, 0, 2), PreconditionError);
  EXPECT_THROW(g.add_edge(2, 2, 1), PreconditionError);
  EXPECT_THROW(g.add_edge(0, 3, 1), PreconditionError);
  EXPECT_THROW(g.set_externals({0, 0}), PreconditionError);
  EXPECT_THROW(g.set_rotation_system({{1}, {0, 2}, {}}), PreconditionError);
}

TEST(Signature, SingleEdge) {
  Scalar w(Rational(-3, 4));
  BooleanSignature s = signature(single_edge(w));
  EXPECT_EQ(s, BooleanSignature(2, {w, 0, 0, 1}));
}

TEST(Signature, LadderGateInCounterclockwiseOrder) {
  BooleanSignature s = signature(gamma1(true));
  BooleanSignature want(4);
  want[0b0000] = 1;
  want[0b1010] = 1;
  want[0b0101] = 1;
  want[0b1111] = -1;
  EXPECT_EQ(s, want);
}

TEST(Signature, LadderGateInRowMajorOrder) {
  BooleanSignature s = signature(gamma1(false));
  BooleanSignature want(4);
  want[0b0000] = 1;
  want[0b1001] = 1;
  want[0b0110] = 1;
  want[0b1111] = -1;
  EXPECT_EQ(s, want);
}

TEST(Signature, PendantGate) {
  Scalar lambda(Rational(7, 3));
  EXPECT_EQ(signature(single_edge(lambda, false)), BooleanSignature(1, {lambda, 0}));
}

TEST(Signature, AgreesWithDeletionOracle) {
  Rng rng(102);
  for (int t = 0; t < 200; ++t) {
    Matchgate g = random_plane_gate(rng, 9, 5);
    ASSERT_EQ(signature(g), oracle::signature_by_deletion(g));
  }
}

TEST(Surgery, PendantSwapsEntries) {
  Scalar lambda(5);
  Matchgate g = single_edge(lambda, false);
  Matchgate h = attach_pendant(g, 1, 1, PendantMode::kTransfer);
  EXPECT_EQ(signature(h), BooleanSignature(1, {0, lambda}));
  EXPECT_EQ(signature(h), oracle::signature_by_deletion(h));
  EXPECT_TRUE(euler_check(h));
}

TEST(Surgery, PendantOnInternalVertexFails) {
  EXPECT_THROW(attach_pendant(single_edge(1, false), 0, 1, PendantMode::kKeep),
               PreconditionError);
}

TEST(Surgery, PendantThenDeleteRestoresSignature) {
  Rng rng(103);
  for (int t = 0; t < 50; ++t) {
    Matchgate g = random_plane_gate(rng, 8, 4);
    const unsigned v = g.externals()[rng.below(g.arity())];
    Matchgate h = attach_pendant(g, v, random_weight(rng), PendantMode::kKeep);
    ASSERT_TRUE(euler_check(h));
    ASSERT_TRUE(external_corners(h).has_value());
    ASSERT_EQ(signature(remove_vertices(h, {h.vertex_count() - 1})), signature(g));
  }
}

TEST(Surgery, UnitPathIsAnIdentityWire) {
  Rng rng(104);
  for (int t = 0; t < 50; ++t) {
    Matchgate g = random_plane_gate(rng, 8, 4);
    const unsigned v = g.externals()[rng.below(g.arity())];
    Matchgate h = attach_path2(g, v, 1, 1, PathMode::kEndExternal);
    ASSERT_TRUE(euler_check(h));
    ASSERT_EQ(signature(h), signature(g));
  }
}

TEST(Surgery, PathWeightsScaleEntriesByParity) {
  Scalar r(Rational(2, 5));
  Matchgate lone(1);
  lone.set_externals({0});
  Matchgate h = attach_path2(lone, 0, r.inverse(), 1, PathMode::kEndExternal);
  EXPECT_EQ(signature(h), BooleanSignature(1, {0, r.inverse()}));
  Matchgate g = single_edge(3, false);
  Matchgate k = attach_path2(g, 1, r.inverse(), 7, PathMode::kEndExternal);
  EXPECT_EQ(signature(k), BooleanSignature(1, {21, 0}));
  EXPECT_THROW(attach_path2(g, 0, 1, 1, PathMode::kKeep), PreconditionError);
}

TEST(Compose, TwoSingleEdges) {
  Matchgate a = single_edge(2), b = single_edge(3);
  Matchgate c = compose(a, b, {{1, 0}});
  EXPECT_EQ(c.arity(), 2U);
  BooleanSignature s = signature(c);
  EXPECT_EQ(s, oracle::signature_by_deletion(c));
  EXPECT_EQ(s, oracle::contract(signature(a), signature(b), {{2, 1}}));
}

TEST(Compose, EmptyPairingIsTensorProduct) {
  Matchgate a = single_edge(2), b = triangle_all_external();
  Matchgate c = compose(a, b, {});
  EXPECT_EQ(signature(c), tensor(signature(a), signature(b)));
  EXPECT_TRUE(external_corners(c).has_value());
}

TEST(Compose, DuplicatePairingFails) {
  Matchgate a = single_edge(2), b = single_edge(3);
  EXPECT_THROW(compose(a, b, {{1, 0}, {1, 1}}), PreconditionError);
  EXPECT_THROW(compose(a, b, {{0, 0}, {1, 0}}), PreconditionError);
}

TEST(Compose, CrossingPairingFailsPlanarity) {
  Matchgate a = triangle_all_external(), b = triangle_all_external();
  EXPECT_NO_THROW(compose(a, b, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_THROW(compose(a, b, {{0, 0}, {1, 1}, {2, 2}}), PlanarityError);
}

TEST(Compose, MatchesTensorContractionOnRandomGates) {
  Rng rng(105);
  for (int t = 0; t < 200; ++t) {
    Matchgate a = random_plane_gate(rng, 7, 4);
    Matchgate b = random_plane_gate(rng, 7, 4);
    const unsigned k = static_cast<unsigned>(rng.range(0, std::min(a.arity(), b.arity())));
    std::vector<std::pair<unsigned, unsigned>> pairs, positions;
    for (unsigned q = 0; q < k; ++q) {
      pairs.emplace_back(a.externals()[a.arity() - 1 - q], b.externals()[q]);
      positions.emplace_back(a.arity() - q, q + 1);
    }
    Matchgate c = compose(a, b, pairs);
    ASSERT_TRUE(euler_check(c));
    ASSERT_TRUE(external_corners(c).has_value());
    ASSERT_EQ(signature(c), oracle::contract(signature(a), signature(b), positions));
  }
}

TEST(Embedding, LadderExternalsAreCounterclockwise) {
  EXPECT_TRUE(external_corners(gamma1(true)).has_value());
  EXPECT_FALSE(external_corners(gamma1(false)).has_value());
  EXPECT_TRUE(euler_check(gamma1(true)));
}

TEST(Embedding, CrossedDrawingFailsEuler) {
  Matchgate k4(4);
  for (unsigned u = 0; u < 4; ++u)
    for (unsigned v = u + 1; v < 4; ++v) k4.add_edge(u, v, 1);
  set_rotation_from_points(k4, {{0, 0}, {1, 1}, {1, 0}, {0, 1}});
  EXPECT_FALSE(euler_check(k4));
  set_rotation_from_points(k4, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  EXPECT_TRUE(euler_check(k4));
}

}  // namespace
}  // namespace holomatch
