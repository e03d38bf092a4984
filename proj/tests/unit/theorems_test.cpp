#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quadlab/domination.hpp"
#include "quadlab/generators.hpp"
#include "quadlab/orthogonality.hpp"
#include "quadlab/sweep.hpp"
#include "quadlab/theorems.hpp"
#include "test_util.hpp"

namespace quadlab {
namespace {

using namespace quadlab::fixtures;

std::string describe(const VerifierResult& r) {
  std::string s = r.name + ":";
  for (const auto& c : r.conditions) s += " [" + c.name + "=" + (c.value ? "1" : "0") + "]";
  return s;
}

bool condition(const std::vector<Condition>& cs, std::string_view name) {
  for (const auto& c : cs)
    if (c.name == name) return c.value;
  ADD_FAILURE() << "missing condition " << name;
  return false;
}

TEST(Classify, Examples) {
  auto tr = classify(augment(qr7(), true, true));
  EXPECT_EQ(rule_id(tr.rule), "transmitter-receiver");
  EXPECT_TRUE(tr.verdict);

  tr = classify(transitive_triple());
  EXPECT_EQ(tr.rule, Rule::TransmitterReceiver);
  EXPECT_FALSE(condition(tr.conditions, "gamma(T-{s,t})>2"));
  EXPECT_FALSE(tr.verdict);

  tr = classify(qr7());
  EXPECT_EQ(tr.rule, Rule::Regular);
  EXPECT_FALSE(tr.verdict);

  tr = classify(rot11());
  EXPECT_EQ(tr.rule, Rule::Regular);
  EXPECT_TRUE(tr.verdict);

  EXPECT_EQ(classify(single_arc()).rule, Rule::TrivialSmall);
  EXPECT_TRUE(classify(single_arc()).verdict);
  EXPECT_EQ(classify(random_tournament(1, Seed{0})).rule, Rule::TrivialSmall);
  // The 3-cycle has out-degree-1 vertices but is below the 4-vertex threshold.
  EXPECT_EQ(classify(three_cycle()).rule, Rule::Regular);
  EXPECT_TRUE(classify(three_cycle()).verdict);
}

TEST(Classify, BranchSpecificExamples) {
  EXPECT_EQ(classify(augment(qr7(), true, false)).rule, Rule::TransmitterOnly);
  EXPECT_EQ(classify(augment(qr7(), false, true)).rule, Rule::ReceiverOnly);

  // Two 3-cycles, the first beating the second: not strong, no special vertex.
  TournamentBuilder b(6);
  b.orient(2, 0);
  b.orient(5, 3);
  const Tournament two_cycles = b.build();
  const auto tr = classify(two_cycles);
  EXPECT_EQ(tr.rule, Rule::NotStrong);
  EXPECT_EQ(tr.verdict, is_quadrangular(two_cycles));
}

TEST(Classify, TrivialSmallOnlyForTinyInputs) {
  for (std::size_t n = 3; n <= 5; ++n)
    for (const auto& t : all_tournaments(n)) EXPECT_NE(classify(t).rule, Rule::TrivialSmall);
}

TEST(Classify, MatchesOracleExhaustiveSix) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : all_tournaments(n)) ASSERT_EQ(classify(t).verdict, oracle::quadrangular(oracle::matrix_of(t)));
}

TEST(Classify, MatchesOracleOnRandomTournaments) {
  for (std::uint64_t s = 0; s < 2000; ++s) {
    const Tournament t = random_tournament(3 + s % 12, Seed{s * 31 + 1});
    ASSERT_EQ(classify(t).verdict, oracle::quadrangular(oracle::matrix_of(t))) << "seed " << s;
  }
}

TEST(Classify, MatchesOracleOnNamedInstances) {
  for (const auto& t : named_instances()) EXPECT_EQ(classify(t).verdict, oracle::quadrangular(oracle::matrix_of(t)));
}

TEST(Verifiers, TransmitterReceiverExamples) {
  auto r = verify_transmitter_receiver(augment(qr7(), true, true));
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_TRUE(condition(r.conditions, "statement"));
  EXPECT_TRUE(condition(r.conditions, "oracle"));

  r = verify_transmitter_receiver(augment(three_cycle(), true, true));
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_FALSE(condition(r.conditions, "statement"));
  EXPECT_FALSE(condition(r.conditions, "oracle"));

  EXPECT_EQ(error_code([] { verify_transmitter_receiver(qr7()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_transmitter_receiver(single_arc()); }), Errc::HypothesisNotSatisfied);
}

TEST(Verifiers, HypothesisErrors) {
  EXPECT_EQ(error_code([] { verify_transmitter_only(augment(qr7(), true, true)); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_receiver_only(qr7()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_not_strong(qr7()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_not_strong(transitive_triple()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_outdeg_one(three_cycle()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_indeg_one(qr7()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_degree_lemmas(qr7()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_degree_lemmas(transitive_triple()); }), Errc::HypothesisNotSatisfied);
  EXPECT_EQ(error_code([] { verify_regular(transitive_triple()); }), Errc::NotRegular);
  EXPECT_EQ(error_code([] { verify_rotational_dichotomy(qr7(), Symbol::make(7, {3, 5, 6})); }),
            Errc::HypothesisNotSatisfied);
}

TEST(Verifiers, DegreeLemmaExamples) {
  auto r = verify_degree_lemmas(three_cycle());
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_TRUE(condition(r.conditions, "O(1)=V-{0,1}"));

  r = verify_degree_lemmas(single_arc());
  EXPECT_TRUE(r.passed) << describe(r);
}

TEST(Verifiers, SubtournamentDegreeExamples) {
  auto r = verify_subtournament_degrees(three_cycle());
  EXPECT_TRUE(r.passed) << describe(r);

  r = verify_subtournament_degrees(rot11());
  EXPECT_TRUE(r.passed) << describe(r);
  const Tournament sub = induced(rot11(), rot11().outset(0));
  for (Vertex x = 0; x < sub.size(); ++x) EXPECT_NE(sub.out_degree(x), 1U);
}

TEST(Verifiers, RegularExamples) {
  auto r = verify_regular(qr7());
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_FALSE(condition(r.conditions, "out-quadrangular"));
  EXPECT_FALSE(condition(r.conditions, "in-quadrangular"));
  EXPECT_FALSE(condition(r.conditions, "quadrangular"));

  r = verify_regular(rot11());
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_TRUE(condition(r.conditions, "quadrangular"));

  std::size_t regular5 = 0;
  for (const auto& t : all_tournaments(5)) {
    if (!t.is_regular()) continue;
    ++regular5;
    EXPECT_TRUE(verify_regular(t).passed);
  }
  EXPECT_EQ(regular5, 24U);
}

TEST(Verifiers, RotationalDichotomyExamples) {
  auto r = verify_rotational_dichotomy(u_n(7), Symbol::make(7, {1, 2, 3}));
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_FALSE(condition(r.conditions, "every pair of outsets meets"));
  EXPECT_TRUE(condition(r.conditions, "isomorphic to U_n"));

  r = verify_rotational_dichotomy(qr7(), Symbol::make(7, {1, 2, 4}));
  EXPECT_TRUE(r.passed) << describe(r);
  EXPECT_TRUE(condition(r.conditions, "every pair of outsets meets"));
  EXPECT_FALSE(is_isomorphic(qr7(), u_n(7)));

  r = verify_rotational_dichotomy(rot11(), Symbol::make(11, {1, 3, 4, 5, 9}));
  EXPECT_TRUE(r.passed) << describe(r);
  const Tournament t = rot11();
  for (Vertex u = 0; u < 11; ++u)
    for (Vertex v = u + 1; v < 11; ++v) EXPECT_GE((t.outset(u) & t.outset(v)).count(), 2U);
}

TEST(Verifiers, UnWitness) {
  for (std::size_t n : {5U, 7U, 9U, 11U}) {
    const auto r = quadrangularity_both(u_n(n));
    EXPECT_FALSE(r.verdict());
    const auto m = oracle::matrix_of(u_n(n));
    EXPECT_EQ(oracle::common_out(m, 0, (n - 3) / 2), 1U);
  }
}

// Exhaustive agreement of every verifier at n <= 6; n = 7 runs in the
// acceptance suite and the CLI.
TEST(Verifiers, ExhaustiveSweepAgrees) {
  const SweepReport rep = sweep_exhaustive(6, 1);
  EXPECT_EQ(rep.instances, 1U + 2 + 8 + 64 + 1024 + 32768);
  ASSERT_TRUE(rep.ok()) << rep.first_failure->verifier;
  for (const auto& tally : rep.tallies) EXPECT_EQ(tally.checked, tally.passed) << tally.name;
  EXPECT_EQ(rep.tally("classify").checked, rep.instances);
  EXPECT_GT(rep.tally("outdeg_one").checked, 0U);
  EXPECT_GT(rep.tally("degree_lemmas").checked, 0U);
}

TEST(Verifiers, NoQuadrangularTournamentWithMiddleDegreesUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : all_tournaments(n)) {
      if (!oracle::quadrangular(oracle::matrix_of(t))) continue;
      const std::size_t dp = t.min_out_degree();
      const std::size_t dm = t.min_in_degree();
      EXPECT_TRUE(dp != 2 && dp != 3 && dm != 2 && dm != 3);
    }
  }
}

TEST(Verifiers, NamedAndRotationalSweeps) {
  const auto named = named_instances();
  EXPECT_TRUE(sweep_instances(named, 1).ok());
  const std::size_t orders[] = {3, 5, 7, 9, 11};
  const SweepReport rot = sweep_rotational(orders, 1);
  EXPECT_TRUE(rot.ok());
  EXPECT_EQ(rot.instances, 2U + 4 + 8 + 16 + 32);
}

TEST(Verifiers, ApplicabilityMatchesThrowing) {
  for (const auto& t : all_tournaments(4)) {
    for (Theorem th : kAllTheorems) {
      if (applicable(th, t)) {
        EXPECT_NO_THROW(verify(th, t));
      } else {
        EXPECT_THROW(verify(th, t), Error) << theorem_id(th);
      }
    }
  }
}

}  // namespace
}  // namespace quadlab
