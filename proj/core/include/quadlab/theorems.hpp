#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadlab/generators.hpp"
#include "quadlab/tournament.hpp"

namespace quadlab {

struct Condition {
  std::string name;
  bool value = false;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Which characterisation decided a classification.
enum class Rule {
  TrivialSmall,         // n <= 2
  TransmitterReceiver,  // both special vertices
  TransmitterOnly,
  ReceiverOnly,
  NotStrong,            // neither special vertex, not strongly connected
  OutDegreeOne,         // n >= 4
  InDegreeOne,          // n >= 4
  Regular,
  DirectOracle,
};

std::string_view rule_id(Rule rule) noexcept;

struct ClassificationTrace {
  Rule rule = Rule::DirectOracle;
  std::vector<Condition> conditions;
  bool verdict = false;
};

/// Decides quadrangularity through the first characterisation whose
/// hypothesis matches (order as in Rule). Only DirectOracle scans pairs of
/// the whole tournament.
ClassificationTrace classify(const Tournament& t);

/// The individually verifiable statements. Each verifier evaluates the
/// statement's own conditions and, separately, the direct definition, and
/// passes only when they agree (or when the stated implication holds).
enum class Theorem {
  TransmitterReceiver,
  TransmitterOnly,
  ReceiverOnly,
  NotStrong,
  OutDegreeOne,
  InDegreeOne,
  DegreeLemmas,
  SubtournamentDegrees,
  ClosedUnion,
  Regular,
};

std::string_view theorem_id(Theorem theorem) noexcept;
inline constexpr Theorem kAllTheorems[] = {
    Theorem::TransmitterReceiver, Theorem::TransmitterOnly, Theorem::ReceiverOnly,
    Theorem::NotStrong,           Theorem::OutDegreeOne,    Theorem::InDegreeOne,
    Theorem::DegreeLemmas,        Theorem::SubtournamentDegrees, Theorem::ClosedUnion,
    Theorem::Regular,
};

struct VerifierResult {
  std::string name;
  bool passed = false;
  /// Statement-side conditions followed by "statement" and "oracle" verdicts
  /// for the iff verifiers.
  std::vector<Condition> conditions;
};

/// Whether the statement's hypothesis holds for `t`.
bool applicable(Theorem theorem, const Tournament& t);

/// Throws HypothesisNotSatisfied (or NotRegular) naming the failed hypothesis.
VerifierResult verify(Theorem theorem, const Tournament& t);

VerifierResult verify_transmitter_receiver(const Tournament& t);
VerifierResult verify_transmitter_only(const Tournament& t);
VerifierResult verify_receiver_only(const Tournament& t);
VerifierResult verify_not_strong(const Tournament& t);
VerifierResult verify_outdeg_one(const Tournament& t);
VerifierResult verify_indeg_one(const Tournament& t);
VerifierResult verify_degree_lemmas(const Tournament& t);
VerifierResult verify_subtournament_degrees(const Tournament& t);
VerifierResult verify_closed_union(const Tournament& t);
VerifierResult verify_regular(const Tournament& t);

/// Rotational tournaments are either isomorphic to U_n or have every pair
/// of outsets meeting; quadrangular ones with n > 3 always take the second
/// branch. `t` must equal rotational(sym). Throws SizeLimitExceeded when the
/// isomorphism branch is needed above the isomorphism bound.
VerifierResult verify_rotational_dichotomy(const Tournament& t, const Symbol& sym);

}  // namespace quadlab
