#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "quadlab/generators.hpp"

namespace quadlab {

struct SymbolCriterion {
  bool verdict = false;
  /// Smallest m in [1, (n-1)/2] realised by fewer than two distinct 2-subsets.
  std::optional<std::size_t> failing_m;
};

/// For every m in [1, (n-1)/2], at least two distinct 2-subsets {i, j} of S
/// have i - j ≡ m (mod n) under some labelling. Equivalent to
/// quadrangularity of rotational(sym). Throws TooSmall for n <= 3.
SymbolCriterion symbol_criterion(const Symbol& sym);

/// Number of 2-subsets of S realising each difference m in [1, (n-1)/2];
/// index 0 unused.
std::vector<std::size_t> difference_subset_counts(const Symbol& sym);

/// One binary choice per complementary pair {d, n-d}, d = 1..(n-1)/2:
/// choice 0 takes d, 1 takes n-d. The choice for d = 1 is the most
/// significant bit of the index, so index order is lexicographic order of
/// the choice vector and index 0 is the symbol of U_n.
std::uint64_t symbol_count(std::size_t n);
Symbol symbol_at(std::size_t n, std::uint64_t index);
std::vector<Symbol> enumerate_symbols(std::size_t n);

inline constexpr std::size_t kDefaultSearchLimit = 31;

struct SearchOptions {
  std::size_t max_n = kDefaultSearchLimit;
  std::size_t threads = 0;  // 0: resolve_threads()
  bool first_only = false;  // stop at the lexicographically first hit
};

struct SearchResult {
  std::size_t n = 0;
  std::vector<Symbol> hits;  // in enumeration order
  std::uint64_t examined = 0;
  std::chrono::microseconds elapsed{0};
};

/// Filters enumerate_symbols(n) by symbol_criterion. Throws EvenOrTooSmall
/// (n even or n <= 3) and SizeLimitExceeded (n > options.max_n).
SearchResult search(std::size_t n, const SearchOptions& options = {});

/// {odd i <= n-2, i != (n+3)/2} ∪ {(n-3)/2}; a quadrangular symbol for
/// n ≡ 3 (mod 4), n >= 11. Throws WrongResidueClass / TooSmall.
Symbol family_symbol(std::size_t n);

/// Partitions hits into isomorphism classes of their rotational tournaments,
/// keeping enumeration order inside and across classes. n <= 12 only.
std::vector<std::vector<Symbol>> group_by_isomorphism(const std::vector<Symbol>& hits);

}  // namespace quadlab
