#include "quadlab/domination.hpp"

#include <algorithm>
#include <string>

#include "quadlab/error.hpp"

namespace quadlab {

namespace {

// Closed out-rows O[v] = O(v) ∪ {v}, flat n * wpr words.
class ClosedRows {
 public:
  explicit ClosedRows(const Tournament& t) : n_(t.size()), wpr_(t.words_per_row()), rows_(n_ * wpr_) {
    for (Vertex v = 0; v < n_; ++v) {
      auto src = t.out_row(v);
      std::copy(src.begin(), src.end(), rows_.begin() + static_cast<std::ptrdiff_t>(v * wpr_));
      bits::set(row(v), v);
    }
    full_ = VertexSet::full(n_);
  }

  std::span<Word> row(Vertex v) { return {rows_.data() + v * wpr_, wpr_}; }
  std::span<const Word> row(Vertex v) const { return {rows_.data() + v * wpr_, wpr_}; }
  std::size_t size() const { return n_; }

  template <class... Vs>
  bool covers(Vs... vs) const {
    auto full = full_.words();
    for (std::size_t i = 0; i < wpr_; ++i) {
      const Word w = (row(vs)[i] | ...);
      if (w != full[i]) return false;
    }
    return true;
  }

  // Union of the rows in `set` covers everything.
  bool covers_set(std::span<const Vertex> set, std::vector<Word>& scratch) const {
    scratch.assign(wpr_, 0);
    for (Vertex v : set) {
      auto r = row(v);
      for (std::size_t i = 0; i < wpr_; ++i) scratch[i] |= r[i];
    }
    return std::equal(scratch.begin(), scratch.end(), full_.words().begin());
  }

 private:
  std::size_t n_;
  std::size_t wpr_;
  std::vector<Word> rows_;
  VertexSet full_;
};

// Advances `comb` (strictly increasing, values < n) to the next k-combination
// in lexicographic order. Returns false after the last one.
bool next_combination(std::vector<Vertex>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

bool SimpleGraph::has_edge(Vertex x, Vertex y) const {
  if (x > y) std::swap(x, y);
  return std::binary_search(edges.begin(), edges.end(), std::pair{x, y});
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph g{n, {}};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (!has_edge(x, y)) g.edges.emplace_back(x, y);
    }
  }
  return g;
}

bool dominates(const Tournament& t, const VertexSet& s) {
  if (s.universe() != t.size()) {
    throw Error(Errc::VertexOutOfRange, "vertex set over " + std::to_string(s.universe()) +
                                            " vertices used on a tournament of order " + std::to_string(t.size()));
  }
  VertexSet covered = s;
  s.for_each([&](Vertex v) {
    auto row = t.out_row(v);
    auto dst = covered.words();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= row[i];
  });
  return covered == VertexSet::full(t.size());
}

DominationInfo domination_number(const Tournament& t, std::size_t max_n) {
  const std::size_t n = t.size();
  if (n > max_n) {
    throw Error(Errc::SizeLimitExceeded, "domination number limited to " + std::to_string(max_n) + " vertices");
  }
  DominationInfo info;
  if (n == 0) return info;

  const ClosedRows rows(t);
  std::vector<Word> scratch;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Vertex> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    do {
      if (rows.covers_set(comb, scratch)) {
        info.gamma = k;
        info.min_set = comb;
        break;
      }
    } while (next_combination(comb, n));
    if (info.gamma != 0) break;
  }

  if (info.gamma <= 2) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (rows.covers(x, y)) info.pairs.emplace_back(x, y);
      }
    }
  }
  return info;
}

bool gamma_exceeds(const Tournament& t, int k) {
  if (k < 1 || k > 3) throw Error(Errc::UnsupportedK, "k must be 1, 2 or 3, got " + std::to_string(k));
  const std::size_t n = t.size();
  if (n == 0) return false;
  const ClosedRows rows(t);

  for (Vertex a = 0; a < n; ++a) {
    if (rows.covers(a)) return false;
  }
  if (k == 1) return true;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rows.covers(a, b)) return false;
    }
  }
  if (k == 2) return true;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      for (Vertex c = b + 1; c < n; ++c) {
        if (rows.covers(a, b, c)) return false;
      }
    }
  }
  return true;
}

SimpleGraph domination_graph(const Tournament& t) {
  const ClosedRows rows(t);
  SimpleGraph g{t.size(), {}};
  for (Vertex x = 0; x < t.size(); ++x) {
    for (Vertex y = x + 1; y < t.size(); ++y) {
      if (rows.covers(x, y)) g.edges.emplace_back(x, y);
    }
  }
  return g;
}

SimpleGraph competition_graph(const Tournament& t) {
  SimpleGraph g{t.size(), {}};
  for (Vertex x = 0; x < t.size(); ++x) {
    for (Vertex y = x + 1; y < t.size(); ++y) {
      if (bits::intersect_count(t.out_row(x), t.out_row(y)) > 0) g.edges.emplace_back(x, y);
    }
  }
  return g;
}

}  // namespace quadlab
