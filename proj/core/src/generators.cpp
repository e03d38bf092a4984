#include "quadlab/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "quadlab/error.hpp"

namespace quadlab {

namespace {

void require_odd_order(std::size_t n) {
  if (n < 3 || n % 2 == 0) throw Error(Errc::EvenOrTooSmall, "order must be odd and >= 3, got " + std::to_string(n));
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_enumeration_order(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw Error(Errc::SizeLimitExceeded, "exhaustive enumeration limited to n <= " +
                                             std::to_string(kMaxEnumerationOrder) + ", got " + std::to_string(n));
  }
}

}  // namespace

Symbol Symbol::make(std::size_t n, std::vector<std::size_t> members) {
  if (n < 3 || n % 2 == 0) {
    throw Error(Errc::InvalidSymbol, "order must be odd and >= 3, got " + std::to_string(n));
  }
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(Errc::InvalidSymbol, "repeated member");
  }
  for (std::size_t d : members) {
    if (d == 0 || d >= n) {
      throw Error(Errc::InvalidSymbol, "member " + std::to_string(d) + " outside [1, " + std::to_string(n - 1) + "]");
    }
    if (d < n - d && std::binary_search(members.begin(), members.end(), n - d)) {
      throw Error(Errc::InvalidSymbol, "both " + std::to_string(d) + " and " + std::to_string(n - d) + " present");
    }
  }
  if (members.size() != (n - 1) / 2) {
    throw Error(Errc::InvalidSymbol, "symbol on " + std::to_string(n) + " vertices needs " +
                                         std::to_string((n - 1) / 2) + " members, got " +
                                         std::to_string(members.size()));
  }
  return Symbol(n, std::move(members));
}

bool Symbol::contains(std::size_t d) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), d);
}

Tournament rotational(const Symbol& sym) {
  const std::size_t n = sym.order();
  TournamentBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    for (std::size_t d : sym.members()) {
      const Vertex j = (i + d) % n;
      b.orient(i, j);
    }
  }
  return b.build();
}

Tournament u_n(std::size_t n) {
  require_odd_order(n);
  std::vector<std::size_t> members;
  for (std::size_t d = 1; d <= (n - 1) / 2; ++d) members.push_back(d);
  return rotational(Symbol::make(n, std::move(members)));
}

Symbol quadratic_residue_symbol(std::size_t p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p % 4 != 3) throw Error(Errc::WrongResidueClass, std::to_string(p) + " is not 3 mod 4");
  std::vector<std::size_t> residues;
  for (std::size_t x = 1; x < p; ++x) residues.push_back(x * x % p);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  return Symbol::make(p, std::move(residues));
}

Tournament quadratic_residue(std::size_t p) { return rotational(quadratic_residue_symbol(p)); }

Tournament random_tournament(std::size_t n, Seed seed) {
  std::mt19937_64 gen(seed.value);
  TournamentBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const bool forward = (gen() >> 63) != 0;
      if (forward) {
        b.orient(u, v);
      } else {
        b.orient(v, u);
      }
    }
  }
  return b.build();
}

Tournament augment(const Tournament& t, bool add_transmitter, bool add_receiver) {
  const std::size_t n = t.size();
  const std::size_t m = n + (add_transmitter ? 1 : 0) + (add_receiver ? 1 : 0);
  TournamentBuilder b(m);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (t.beats(v, u)) b.orient(v, u);
    }
  }
  // Builder defaults already orient lower labels over higher ones, which is
  // right for old -> receiver and transmitter -> receiver. Only the
  // transmitter's arcs to lower labels need flipping.
  if (add_transmitter) {
    for (Vertex u = 0; u < n; ++u) b.orient(n, u);
  }
  return b.build();
}

std::uint64_t tournament_count(std::size_t n) {
  check_enumeration_order(n);
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Tournament tournament_at(std::size_t n, std::uint64_t index) {
  const std::uint64_t total = tournament_count(n);
  if (index >= total) throw Error(Errc::SizeLimitExceeded, "index beyond the enumeration range");
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  TournamentBuilder b(n);
  std::size_t p = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++p) {
      const bool forward = (index >> (pairs - 1 - p)) & 1U;
      if (!forward) b.orient(v, u);
    }
  }
  return b.build();
}

void for_each_tournament(std::size_t n, std::uint64_t first, std::uint64_t last,
                         const std::function<void(std::uint64_t, const Tournament&)>& fn) {
  const std::uint64_t total = tournament_count(n);
  last = std::min(last, total);
  for (std::uint64_t i = first; i < last; ++i) fn(i, tournament_at(n, i));
}

std::vector<Tournament> all_tournaments(std::size_t n) {
  std::vector<Tournament> out;
  out.reserve(static_cast<std::size_t>(tournament_count(n)));
  for_each_tournament(n, 0, tournament_count(n), [&](std::uint64_t, const Tournament& t) { out.push_back(t); });
  return out;
}

}  // namespace quadlab
