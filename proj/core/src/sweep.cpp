#include "quadlab/sweep.hpp"

#include <stdexcept>

#include "quadlab/generators.hpp"
#include "quadlab/orthogonality.hpp"
#include "quadlab/parallel.hpp"
#include "quadlab/symbol_search.hpp"

namespace quadlab {

namespace {

SweepReport empty_report(std::vector<std::string> names) {
  SweepReport r;
  for (auto& n : names) r.tallies.push_back({std::move(n), 0, 0});
  return r;
}

void record(SweepReport& r, std::size_t slot, const Tournament& t, VerifierResult result) {
  auto& tally = r.tallies[slot];
  ++tally.checked;
  if (result.passed) {
    ++tally.passed;
  } else if (!r.first_failure) {
    r.first_failure = Disagreement{tally.name, t, std::move(result.conditions)};
  }
}

std::vector<std::string> rotational_names() { return {"rotational_dichotomy", "symbol_criterion", "regular"}; }

}  // namespace

const VerifierTally& SweepReport::tally(std::string_view name) const {
  for (const auto& t : tallies) {
    if (t.name == name) return t;
  }
  throw std::out_of_range("no verifier named " + std::string(name));
}

void SweepReport::merge(SweepReport&& later) {
  instances += later.instances;
  if (tallies.empty()) tallies = later.tallies;
  else {
    for (std::size_t i = 0; i < tallies.size(); ++i) {
      tallies[i].checked += later.tallies[i].checked;
      tallies[i].passed += later.tallies[i].passed;
    }
  }
  if (!first_failure && later.first_failure) first_failure = std::move(later.first_failure);
}

std::vector<std::string> sweep_verifier_names() {
  std::vector<std::string> names{"classify"};
  for (Theorem th : kAllTheorems) names.emplace_back(theorem_id(th));
  return names;
}

SweepReport sweep_one(const Tournament& t) {
  SweepReport r = empty_report(sweep_verifier_names());
  r.instances = 1;

  const ClassificationTrace trace = classify(t);
  const bool oracle = is_quadrangular(t);
  VerifierResult cls{"classify", trace.verdict == oracle, trace.conditions};
  cls.conditions.push_back({"rule=" + std::string(rule_id(trace.rule)), true});
  cls.conditions.push_back({"classifier", trace.verdict});
  cls.conditions.push_back({"oracle", oracle});
  record(r, 0, t, std::move(cls));

  std::size_t slot = 1;
  for (Theorem th : kAllTheorems) {
    if (applicable(th, t)) record(r, slot, t, verify(th, t));
    ++slot;
  }
  return r;
}

SweepReport sweep_exhaustive(std::size_t n_max, std::size_t threads) {
  SweepReport total = empty_report(sweep_verifier_names());
  threads = resolve_threads(threads);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const std::uint64_t count = tournament_count(n);
    auto parts = map_ranges(count, 256, threads, [n](std::uint64_t b, std::uint64_t e) {
      SweepReport part = empty_report(sweep_verifier_names());
      for (std::uint64_t i = b; i < e; ++i) part.merge(sweep_one(tournament_at(n, i)));
      return part;
    });
    for (auto& p : parts) total.merge(std::move(p));
  }
  return total;
}

SweepReport sweep_instances(std::span<const Tournament> corpus, std::size_t threads) {
  SweepReport total = empty_report(sweep_verifier_names());
  auto parts = map_ranges(corpus.size(), 64, resolve_threads(threads), [&](std::uint64_t b, std::uint64_t e) {
    SweepReport part = empty_report(sweep_verifier_names());
    for (std::uint64_t i = b; i < e; ++i) part.merge(sweep_one(corpus[i]));
    return part;
  });
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

std::vector<Tournament> named_instances() {
  std::vector<Tournament> out;
  const Tournament qr7 = quadratic_residue(7);
  const Tournament q11 = rotational(Symbol::make(11, {1, 3, 4, 5, 9}));
  out.push_back(qr7);
  out.push_back(q11);
  for (std::size_t n = 3; n <= 11; n += 2) out.push_back(u_n(n));
  for (const Tournament& base : {qr7, q11, u_n(3), u_n(5)}) {
    out.push_back(augment(base, true, true));
    out.push_back(augment(base, true, false));
    out.push_back(augment(base, false, true));
  }
  return out;
}

SweepReport sweep_rotational(std::span<const std::size_t> orders, std::size_t threads) {
  SweepReport total = empty_report(rotational_names());
  threads = resolve_threads(threads);
  for (std::size_t n : orders) {
    auto parts = map_ranges(symbol_count(n), 64, threads, [n](std::uint64_t b, std::uint64_t e) {
      SweepReport part = empty_report(rotational_names());
      for (std::uint64_t i = b; i < e; ++i) {
        const Symbol sym = symbol_at(n, i);
        const Tournament t = rotational(sym);
        ++part.instances;
        record(part, 0, t, verify_rotational_dichotomy(t, sym));
        if (n > 3) {
          const SymbolCriterion crit = symbol_criterion(sym);
          const bool oracle = is_quadrangular(t);
          record(part, 1, t,
                 VerifierResult{"symbol_criterion", crit.verdict == oracle,
                                {{"criterion", crit.verdict}, {"oracle", oracle}}});
        }
        record(part, 2, t, verify_regular(t));
      }
      return part;
    });
    for (auto& p : parts) total.merge(std::move(p));
  }
  return total;
}

}  // namespace quadlab
