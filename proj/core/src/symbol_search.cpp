#include "quadlab/symbol_search.hpp"

#include <string>

#include "quadlab/error.hpp"
#include "quadlab/parallel.hpp"
#include "quadlab/tournament.hpp"

namespace quadlab {

namespace {

void require_search_order(std::size_t n) {
  if (n <= 3 || n % 2 == 0) {
    throw Error(Errc::EvenOrTooSmall, "search order must be odd and > 3, got " + std::to_string(n));
  }
}

}  // namespace

std::vector<std::size_t> difference_subset_counts(const Symbol& sym) {
  const std::size_t n = sym.order();
  const std::size_t half = (n - 1) / 2;
  std::vector<std::size_t> counts(half + 1, 0);
  const auto& s = sym.members();
  // A 2-subset {a, b} realises a-b and b-a; since n is odd exactly one of
  // the two lies in [1, half].
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const std::size_t d = (s[j] - s[i]) % n;
      counts[d <= half ? d : n - d] += 1;
    }
  }
  return counts;
}

SymbolCriterion symbol_criterion(const Symbol& sym) {
  if (sym.order() <= 3) throw Error(Errc::TooSmall, "symbol criterion needs n > 3");
  const auto counts = difference_subset_counts(sym);
  for (std::size_t m = 1; m < counts.size(); ++m) {
    if (counts[m] < 2) return {false, m};
  }
  return {true, std::nullopt};
}

std::uint64_t symbol_count(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::EvenOrTooSmall, "order must be odd and >= 3, got " + std::to_string(n));
  const std::size_t half = (n - 1) / 2;
  if (half >= 64) throw Error(Errc::SizeLimitExceeded, "too many symbols to index");
  return std::uint64_t{1} << half;
}

Symbol symbol_at(std::size_t n, std::uint64_t index) {
  if (index >= symbol_count(n)) throw Error(Errc::SizeLimitExceeded, "symbol index out of range");
  const std::size_t half = (n - 1) / 2;
  std::vector<std::size_t> members;
  members.reserve(half);
  for (std::size_t d = 1; d <= half; ++d) {
    const bool flip = (index >> (half - d)) & 1U;
    members.push_back(flip ? n - d : d);
  }
  return Symbol::make(n, std::move(members));
}

std::vector<Symbol> enumerate_symbols(std::size_t n) {
  const std::uint64_t total = symbol_count(n);
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(symbol_at(n, i));
  return out;
}

SearchResult search(std::size_t n, const SearchOptions& options) {
  require_search_order(n);
  if (n > options.max_n) {
    throw Error(Errc::SizeLimitExceeded, "search limited to n <= " + std::to_string(options.max_n));
  }
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = symbol_count(n);

  SearchResult result;
  result.n = n;
  if (options.first_only) {
    for (std::uint64_t i = 0; i < total; ++i) {
      ++result.examined;
      Symbol sym = symbol_at(n, i);
      if (symbol_criterion(sym).verdict) {
        result.hits.push_back(std::move(sym));
        break;
      }
    }
  } else {
    // Partition on the top bits of the choice vector; merge in range order.
    const std::size_t threads = resolve_threads(options.threads);
    auto parts = map_ranges(total, 64, threads, [n](std::uint64_t b, std::uint64_t e) {
      std::vector<Symbol> hits;
      for (std::uint64_t i = b; i < e; ++i) {
        Symbol sym = symbol_at(n, i);
        if (symbol_criterion(sym).verdict) hits.push_back(std::move(sym));
      }
      return hits;
    });
    for (auto& part : parts) {
      for (auto& s : part) result.hits.push_back(std::move(s));
    }
    result.examined = total;
  }
  result.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

Symbol family_symbol(std::size_t n) {
  if (n % 4 != 3) throw Error(Errc::WrongResidueClass, std::to_string(n) + " is not 3 mod 4");
  if (n < 11) throw Error(Errc::TooSmall, "family defined for n >= 11, got " + std::to_string(n));
  std::vector<std::size_t> members;
  for (std::size_t i = 1; i <= n - 2; i += 2) {
    if (i != (n + 3) / 2) members.push_back(i);
  }
  members.push_back((n - 3) / 2);
  return Symbol::make(n, std::move(members));
}

std::vector<std::vector<Symbol>> group_by_isomorphism(const std::vector<Symbol>& hits) {
  std::vector<std::vector<Symbol>> classes;
  std::vector<Tournament> reps;
  for (const auto& sym : hits) {
    const Tournament t = rotational(sym);
    bool placed = false;
    for (std::size_t c = 0; c < classes.size() && !placed; ++c) {
      if (is_isomorphic(reps[c], t)) {
        classes[c].push_back(sym);
        placed = true;
      }
    }
    if (!placed) {
      classes.push_back({sym});
      reps.push_back(t);
    }
  }
  return classes;
}

}  // namespace quadlab
