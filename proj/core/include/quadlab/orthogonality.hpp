#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "quadlab/tournament.hpp"
#include "quadlab/vertex_set.hpp"

namespace quadlab {

/// Rectangular 0/1 matrix; each row is a bitset over the columns.
class BinaryPattern {
 public:
  BinaryPattern() = default;
  BinaryPattern(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  bool at(std::size_t r, std::size_t c) const noexcept { return row_bits_[r].contains(c); }
  void set(std::size_t r, std::size_t c, bool value = true);
  const VertexSet& row(std::size_t r) const noexcept { return row_bits_[r]; }

  BinaryPattern transpose() const;
  std::size_t nonzeros() const noexcept;

  friend bool operator==(const BinaryPattern&, const BinaryPattern&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<VertexSet> row_bits_;
};

/// Entry 1 iff the source entry compares unequal to 0.0. Rows must share a length.
BinaryPattern pattern_of(std::span<const std::vector<double>> matrix);

BinaryPattern adjacency(const Tournament& t);

struct RowOrthogonality {
  bool verdict = true;
  /// Lexicographically smallest pair of rows whose supports meet in exactly one column.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

RowOrthogonality comb_row_orthogonal(const BinaryPattern& p);

/// Row-orthogonal and column-orthogonal. Throws NotSquare.
bool comb_orthogonal(const BinaryPattern& p);

enum class Side { Out, In };

struct QuadWitness {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet common;
};

struct QuadReport {
  bool verdict = true;
  Side side = Side::Out;
  /// Present iff verdict is false; the lexicographically smallest u < v with
  /// exactly one common out- (or in-) neighbour.
  std::optional<QuadWitness> witness;
};

struct QuadPair {
  QuadReport out;
  QuadReport in;
  bool verdict() const noexcept { return out.verdict && in.verdict; }
};

QuadReport quadrangularity(const Tournament& t, Side side);
QuadPair quadrangularity_both(const Tournament& t);

inline bool is_out_quadrangular(const Tournament& t) { return quadrangularity(t, Side::Out).verdict; }
inline bool is_in_quadrangular(const Tournament& t) { return quadrangularity(t, Side::In).verdict; }
/// The direct-definition oracle: every pair passes on both sides.
inline bool is_quadrangular(const Tournament& t) { return quadrangularity_both(t).verdict(); }

/// |O[u] ∪ O[v]| != n - 1 for every pair, with O[x] the closed outset.
bool closed_union_in_quad(const Tournament& t);

struct NnzReport {
  std::size_t nnz = 0;
  std::size_t bound = 0;  // 4n - 4
  bool meets = false;
};

/// Nonzero count against 4n-4. Informational: the bound is only a theorem for
/// fully indecomposable orthogonal matrices, which is not checked here.
NnzReport nnz_report(const BinaryPattern& p);

}  // namespace quadlab
