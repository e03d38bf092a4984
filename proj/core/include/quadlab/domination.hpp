#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "quadlab/tournament.hpp"
#include "quadlab/vertex_set.hpp"

namespace quadlab {

/// Undirected loop-free graph; edges kept sorted as (x, y) with x < y.
struct SimpleGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  bool has_edge(Vertex x, Vertex y) const;
  SimpleGraph complement() const;
  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

struct DominationInfo {
  std::size_t gamma = 0;
  /// Lexicographically smallest dominating set of size gamma.
  std::vector<Vertex> min_set;
  /// Every dominating pair (x < y), in lexicographic order; empty when gamma > 2.
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

inline constexpr std::size_t kDefaultDominationLimit = 24;

/// S together with its out-neighbours covers V(T).
bool dominates(const Tournament& t, const VertexSet& s);

/// Exact domination number by iterative deepening over subset sizes.
/// Throws SizeLimitExceeded above `max_n` vertices.
DominationInfo domination_number(const Tournament& t, std::size_t max_n = kDefaultDominationLimit);

/// gamma(T) > k for k in {1, 2, 3}, without computing gamma. Throws UnsupportedK.
bool gamma_exceeds(const Tournament& t, int k);

SimpleGraph domination_graph(const Tournament& t);
SimpleGraph competition_graph(const Tournament& t);

}  // namespace quadlab
