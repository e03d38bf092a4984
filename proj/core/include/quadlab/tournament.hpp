#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "quadlab/vertex_set.hpp"

namespace quadlab {

/// A complete oriented digraph on vertices 0..n-1.
///
/// Stored as n out-neighbourhood rows plus the matching n in-neighbourhood
/// rows, each a run of 64-bit blocks in one flat buffer. Values are
/// immutable once built, so concurrent readers need no synchronisation.
class Tournament {
 public:
  /// Checks the tournament invariants on raw out-rows and builds the value.
  /// Throws DimensionMismatch, SelfLoop(u) or MissingOrDoubleArc(u, v).
  static Tournament validate(std::size_t n, std::span<const VertexSet> rows);

  std::size_t size() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return wpr_; }

  bool beats(Vertex u, Vertex v) const noexcept { return bits::test(out_row(u), v); }

  std::span<const Word> out_row(Vertex u) const noexcept { return {out_.data() + u * wpr_, wpr_}; }
  std::span<const Word> in_row(Vertex u) const noexcept { return {in_.data() + u * wpr_, wpr_}; }

  VertexSet outset(Vertex u) const;
  VertexSet inset(Vertex u) const;

  std::size_t out_degree(Vertex u) const noexcept { return bits::count(out_row(u)); }
  std::size_t in_degree(Vertex u) const noexcept { return bits::count(in_row(u)); }
  std::size_t min_out_degree() const noexcept;
  std::size_t min_in_degree() const noexcept;

  /// Out-degree of every vertex, indexed by vertex.
  std::vector<std::size_t> scores() const;
  bool is_regular() const noexcept;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  friend class TournamentBuilder;
  friend Tournament dual(const Tournament& t);

  Tournament() = default;
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::vector<Word> out_;
  std::vector<Word> in_;
};

/// Mutable scratch form used by the generators. Starts as the transitive
/// tournament in which every lower label beats every higher label; each call
/// to orient() fixes the direction of one pair, so the result is always a
/// valid tournament.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  void orient(Vertex from, Vertex to);
  Tournament build() const;

 private:
  std::size_t n_;
  std::size_t wpr_;
  std::vector<Word> out_;
};

struct Neighborhoods {
  VertexSet outset;
  VertexSet inset;
  std::size_t outdeg = 0;
  std::size_t indeg = 0;
};

Neighborhoods neighborhoods(const Tournament& t, Vertex v);

/// Reverses every arc.
Tournament dual(const Tournament& t);

/// Sub-tournament on `keep`, relabelled 0..|keep|-1 in increasing order of
/// the original labels.
Tournament induced(const Tournament& t, const VertexSet& keep);

/// T minus the listed vertices.
Tournament remove_vertices(const Tournament& t, std::initializer_list<Vertex> drop);

struct StrongDecomposition {
  /// T_1 .. T_m; every vertex of components[i] beats every vertex of components[j] for i < j.
  std::vector<VertexSet> components;

  bool strongly_connected() const noexcept { return components.size() == 1; }
  const VertexSet& initial() const { return components.front(); }
  const VertexSet& terminal() const { return components.back(); }
};

StrongDecomposition strong_decomposition(const Tournament& t);

struct SpecialVertices {
  std::optional<Vertex> transmitter;
  std::optional<Vertex> receiver;
};

SpecialVertices special_vertices(const Tournament& t);

inline constexpr std::size_t kDefaultIsomorphismLimit = 12;

/// Exact isomorphism test by backtracking over score-compatible vertex maps.
/// Throws SizeLimitExceeded when either order is above `max_n`.
bool is_isomorphic(const Tournament& a, const Tournament& b, std::size_t max_n = kDefaultIsomorphismLimit);

}  // namespace quadlab
