#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadlab/theorems.hpp"
#include "quadlab/tournament.hpp"

namespace quadlab {

struct VerifierTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
};

struct Disagreement {
  std::string verifier;
  Tournament instance;
  std::vector<Condition> conditions;
};

/// Pass counts of every verifier over a corpus, plus the first disagreeing
/// instance in corpus order.
struct SweepReport {
  std::uint64_t instances = 0;
  std::vector<VerifierTally> tallies;  // fixed order, see sweep_verifier_names()
  std::optional<Disagreement> first_failure;

  bool ok() const noexcept { return !first_failure.has_value(); }
  const VerifierTally& tally(std::string_view name) const;
  void merge(SweepReport&& later);
};

/// "classify" (classifier vs direct oracle) followed by every theorem_id().
std::vector<std::string> sweep_verifier_names();

/// Runs the classifier and every applicable verifier on one tournament.
SweepReport sweep_one(const Tournament& t);

/// All labelled tournaments of order 1..n_max (n_max <= kMaxEnumerationOrder).
SweepReport sweep_exhaustive(std::size_t n_max, std::size_t threads = 0);

SweepReport sweep_instances(std::span<const Tournament> corpus, std::size_t threads = 0);

/// Named instances: QR_7, U_n for odd n <= 11, the order-11 quadrangular
/// rotational tournament, and their transmitter/receiver augmentations.
std::vector<Tournament> named_instances();

/// Every symbol of each odd order in `orders` (each <= 11, the isomorphism
/// bound for U_n checks): rotational dichotomy, symbol
/// criterion against the direct oracle, and the regular verifier.
SweepReport sweep_rotational(std::span<const std::size_t> orders, std::size_t threads = 0);

}  // namespace quadlab
