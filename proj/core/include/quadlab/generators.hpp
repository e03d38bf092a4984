#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "quadlab/tournament.hpp"

namespace quadlab {

/// Difference set of a rotational tournament on Z_n: n odd, (n-1)/2 members
/// in [1, n-1], never both i and n-i.
class Symbol {
 public:
  /// Throws InvalidSymbol naming the offending member or pair.
  static Symbol make(std::size_t n, std::vector<std::size_t> members);

  std::size_t order() const noexcept { return n_; }
  /// Sorted ascending.
  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool contains(std::size_t d) const noexcept;

  friend bool operator==(const Symbol&, const Symbol&) = default;

 private:
  Symbol(std::size_t n, std::vector<std::size_t> members) : n_(n), members_(std::move(members)) {}

  std::size_t n_ = 0;
  std::vector<std::size_t> members_;
};

struct Seed {
  std::uint64_t value = 0;
};

/// i -> j iff (j - i) mod n is in the symbol.
Tournament rotational(const Symbol& sym);

/// Rotational tournament with symbol {1, ..., (n-1)/2}. Throws EvenOrTooSmall.
Tournament u_n(std::size_t n);

/// Nonzero quadratic residues mod p. Throws NotPrime / WrongResidueClass.
Symbol quadratic_residue_symbol(std::size_t p);
Tournament quadratic_residue(std::size_t p);

/// Independent fair coin per pair, from std::mt19937_64 seeded with `seed`.
/// Pairs (u, v), u < v, are visited in lexicographic order and consume one
/// 64-bit output each; the top bit set means u -> v. mt19937_64 output is
/// fixed by the standard, so corpora are identical on every platform.
Tournament random_tournament(std::size_t n, Seed seed);

/// Appends a transmitter (label n) and/or a receiver (the last label).
/// When both are added the transmitter beats the receiver.
Tournament augment(const Tournament& t, bool add_transmitter, bool add_receiver);

// Exhaustive labelled enumeration. Pairs (u, v), u < v, are ordered
// lexicographically and the first pair is the most significant bit of the
// index; bit 1 means u -> v. Index order is lexicographic order of the
// orientation bit-string.
inline constexpr std::size_t kMaxEnumerationOrder = 7;

std::uint64_t tournament_count(std::size_t n);
Tournament tournament_at(std::size_t n, std::uint64_t index);

/// Calls fn for indices [first, last). Any subrange may be handed to a
/// different worker; output for a given range is deterministic.
void for_each_tournament(std::size_t n, std::uint64_t first, std::uint64_t last,
                         const std::function<void(std::uint64_t, const Tournament&)>& fn);

/// Whole stream, collected. Throws SizeLimitExceeded for n > kMaxEnumerationOrder.
std::vector<Tournament> all_tournaments(std::size_t n);

}  // namespace quadlab
