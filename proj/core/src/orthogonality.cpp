#include "quadlab/orthogonality.hpp"

#include <string>

#include "quadlab/error.hpp"

namespace quadlab {

BinaryPattern::BinaryPattern(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_bits_(rows, VertexSet(cols)) {}

void BinaryPattern::set(std::size_t r, std::size_t c, bool value) {
  if (r >= rows_ || c >= cols_) {
    throw Error(Errc::VertexOutOfRange, "entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
  }
  if (value) {
    row_bits_[r].insert(c);
  } else {
    row_bits_[r].erase(c);
  }
}

BinaryPattern BinaryPattern::transpose() const {
  BinaryPattern t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    row_bits_[r].for_each([&](std::size_t c) { t.row_bits_[c].insert(r); });
  }
  return t;
}

std::size_t BinaryPattern::nonzeros() const noexcept {
  std::size_t c = 0;
  for (const auto& row : row_bits_) c += row.count();
  return c;
}

BinaryPattern pattern_of(std::span<const std::vector<double>> matrix) {
  const std::size_t rows = matrix.size();
  const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
  BinaryPattern p(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (matrix[r].size() != cols) {
      throw Error(Errc::DimensionMismatch, "row " + std::to_string(r) + " has " + std::to_string(matrix[r].size()) +
                                               " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      if (matrix[r][c] != 0.0) p.set(r, c);
    }
  }
  return p;
}

BinaryPattern adjacency(const Tournament& t) {
  BinaryPattern p(t.size(), t.size());
  for (Vertex u = 0; u < t.size(); ++u) {
    t.outset(u).for_each([&](Vertex v) { p.set(u, v); });
  }
  return p;
}

RowOrthogonality comb_row_orthogonal(const BinaryPattern& p) {
  for (std::size_t x = 0; x < p.rows(); ++x) {
    for (std::size_t y = x + 1; y < p.rows(); ++y) {
      if (bits::intersect_count(p.row(x).words(), p.row(y).words()) == 1) return {false, std::pair{x, y}};
    }
  }
  return {};
}

bool comb_orthogonal(const BinaryPattern& p) {
  if (!p.square()) {
    throw Error(Errc::NotSquare, std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " pattern");
  }
  return comb_row_orthogonal(p).verdict && comb_row_orthogonal(p.transpose()).verdict;
}

QuadReport quadrangularity(const Tournament& t, Side side) {
  const std::size_t n = t.size();
  auto row = [&](Vertex v) { return side == Side::Out ? t.out_row(v) : t.in_row(v); };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bits::intersect_count(row(u), row(v)) == 1) {
        VertexSet common = VertexSet::from_words(n, row(u));
        common &= VertexSet::from_words(n, row(v));
        return {false, side, QuadWitness{u, v, std::move(common)}};
      }
    }
  }
  return {true, side, std::nullopt};
}

QuadPair quadrangularity_both(const Tournament& t) {
  return {quadrangularity(t, Side::Out), quadrangularity(t, Side::In)};
}

bool closed_union_in_quad(const Tournament& t) {
  const std::size_t n = t.size();
  for (Vertex u = 0; u < n; ++u) {
    VertexSet closed_u = t.outset(u);
    closed_u.insert(u);
    for (Vertex v = u + 1; v < n; ++v) {
      VertexSet closed_v = t.outset(v);
      closed_v.insert(v);
      if ((closed_u | closed_v).count() + 1 == n) return false;
    }
  }
  return true;
}

NnzReport nnz_report(const BinaryPattern& p) {
  if (!p.square()) {
    throw Error(Errc::NotSquare, std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " pattern");
  }
  if (p.rows() < 2) throw Error(Errc::TooSmall, "4n-4 report needs n >= 2");
  NnzReport r;
  r.nnz = p.nonzeros();
  r.bound = 4 * p.rows() - 4;
  r.meets = r.nnz >= r.bound;
  return r;
}

}  // namespace quadlab
