#include "quadlab/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quadlab/error.hpp"

namespace quadlab {

namespace {

std::string pair_str(Vertex u, Vertex v) { return "(" + std::to_string(u) + ", " + std::to_string(v) + ")"; }

// Rebuilds in-rows from out-rows; both buffers are n * wpr words.
void fill_in_rows(std::size_t n, std::size_t wpr, std::span<const Word> out, std::span<Word> in) {
  std::fill(in.begin(), in.end(), 0);
  for (Vertex u = 0; u < n; ++u) {
    auto row = out.subspan(u * wpr, wpr);
    for (std::size_t wi = 0; wi < wpr; ++wi) {
      Word w = row[wi];
      while (w != 0) {
        const Vertex v = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
        bits::set(in.subspan(v * wpr, wpr), u);
        w &= w - 1;
      }
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Tournament

Tournament Tournament::validate(std::size_t n, std::span<const VertexSet> rows) {
  if (n == 0) throw Error(Errc::DimensionMismatch, "a tournament needs at least one vertex");
  if (rows.size() != n) {
    throw Error(Errc::DimensionMismatch, "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  }
  for (Vertex u = 0; u < n; ++u) {
    if (rows[u].universe() != n) {
      throw Error(Errc::DimensionMismatch,
                  "row " + std::to_string(u) + " has width " + std::to_string(rows[u].universe()));
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (rows[u].contains(u)) throw Error(Errc::SelfLoop, "vertex " + std::to_string(u));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rows[u].contains(v) == rows[v].contains(u)) throw Error(Errc::MissingOrDoubleArc, pair_str(u, v));
    }
  }

  Tournament t;
  t.n_ = n;
  t.wpr_ = words_for(n);
  t.out_.resize(n * t.wpr_);
  t.in_.resize(n * t.wpr_);
  for (Vertex u = 0; u < n; ++u) {
    auto w = rows[u].words();
    std::copy(w.begin(), w.end(), t.out_.begin() + static_cast<std::ptrdiff_t>(u * t.wpr_));
  }
  fill_in_rows(n, t.wpr_, t.out_, t.in_);
  return t;
}

void Tournament::check_vertex(Vertex v) const {
  if (v >= n_) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " >= " + std::to_string(n_));
}

VertexSet Tournament::outset(Vertex u) const {
  check_vertex(u);
  return VertexSet::from_words(n_, out_row(u));
}

VertexSet Tournament::inset(Vertex u) const {
  check_vertex(u);
  return VertexSet::from_words(n_, in_row(u));
}

std::size_t Tournament::min_out_degree() const noexcept {
  std::size_t m = n_ == 0 ? 0 : n_ - 1;
  for (Vertex u = 0; u < n_; ++u) m = std::min(m, out_degree(u));
  return m;
}

std::size_t Tournament::min_in_degree() const noexcept {
  std::size_t m = n_ == 0 ? 0 : n_ - 1;
  for (Vertex u = 0; u < n_; ++u) m = std::min(m, in_degree(u));
  return m;
}

std::vector<std::size_t> Tournament::scores() const {
  std::vector<std::size_t> s(n_);
  for (Vertex u = 0; u < n_; ++u) s[u] = out_degree(u);
  return s;
}

bool Tournament::is_regular() const noexcept {
  if (n_ == 0) return true;
  const std::size_t d = out_degree(0);
  for (Vertex u = 1; u < n_; ++u) {
    if (out_degree(u) != d) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// TournamentBuilder

TournamentBuilder::TournamentBuilder(std::size_t n) : n_(n), wpr_(words_for(n)), out_(n * wpr_, 0) {
  for (Vertex u = 0; u < n; ++u) {
    std::span<Word> row(out_.data() + u * wpr_, wpr_);
    for (Vertex v = u + 1; v < n; ++v) bits::set(row, v);
  }
}

void TournamentBuilder::orient(Vertex from, Vertex to) {
  if (from >= n_ || to >= n_) throw Error(Errc::VertexOutOfRange, pair_str(from, to));
  if (from == to) throw Error(Errc::SelfLoop, "vertex " + std::to_string(from));
  bits::set(std::span<Word>(out_.data() + from * wpr_, wpr_), to);
  bits::clear(std::span<Word>(out_.data() + to * wpr_, wpr_), from);
}

Tournament TournamentBuilder::build() const {
  Tournament t;
  t.n_ = n_;
  t.wpr_ = wpr_;
  t.out_ = out_;
  t.in_.resize(out_.size());
  fill_in_rows(n_, wpr_, t.out_, t.in_);
  return t;
}

// ---------------------------------------------------------------------------
// Queries and transforms

Neighborhoods neighborhoods(const Tournament& t, Vertex v) {
  Neighborhoods nb{t.outset(v), t.inset(v), 0, 0};
  nb.outdeg = nb.outset.count();
  nb.indeg = nb.inset.count();
  return nb;
}

Tournament dual(const Tournament& t) {
  Tournament r = t;
  std::swap(r.out_, r.in_);
  return r;
}

Tournament induced(const Tournament& t, const VertexSet& keep) {
  if (keep.universe() != t.size()) {
    throw Error(Errc::VertexOutOfRange, "vertex set over " + std::to_string(keep.universe()) +
                                            " vertices used on a tournament of order " + std::to_string(t.size()));
  }
  const std::vector<Vertex> labels = keep.to_vector();
  if (labels.empty()) throw Error(Errc::EmptyVertexSet, "induced sub-tournament needs at least one vertex");

  TournamentBuilder b(labels.size());
  for (Vertex i = 0; i < labels.size(); ++i) {
    for (Vertex j = i + 1; j < labels.size(); ++j) {
      if (t.beats(labels[j], labels[i])) b.orient(j, i);
    }
  }
  return b.build();
}

Tournament remove_vertices(const Tournament& t, std::initializer_list<Vertex> drop) {
  VertexSet keep = VertexSet::full(t.size());
  for (Vertex v : drop) keep.erase(v);
  return induced(t, keep);
}

StrongDecomposition strong_decomposition(const Tournament& t) {
  const std::size_t n = t.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  // Iterative Tarjan over the out-rows.
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  std::vector<VertexSet> sccs;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    Vertex next;  // next candidate successor to scan
  };
  std::vector<Frame> call;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      bool descended = false;
      while (f.next < n) {
        const Vertex w = f.next++;
        if (!t.beats(f.v, w)) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[f.v] = std::min(low[f.v], index[w]);
      }
      if (descended) continue;

      const Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        VertexSet comp(n);
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.insert(w);
        } while (w != v);
        sccs.push_back(std::move(comp));
      }
    }
  }

  // Order components by mean score, highest first. For a tournament the
  // condensation is a total order and an earlier component's mean score
  // exceeds a later one's by (|A| + |B|) / 2, so this recovers T_1..T_m.
  std::vector<std::size_t> score_sum(sccs.size(), 0);
  for (std::size_t c = 0; c < sccs.size(); ++c) {
    sccs[c].for_each([&](Vertex v) { score_sum[c] += t.out_degree(v); });
  }
  std::vector<std::size_t> order(sccs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return score_sum[a] * sccs[b].count() > score_sum[b] * sccs[a].count();
  });

  StrongDecomposition d;
  d.components.reserve(sccs.size());
  for (std::size_t c : order) d.components.push_back(std::move(sccs[c]));

  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (std::size_t j = i + 1; j < d.components.size(); ++j) {
      d.components[i].for_each([&](Vertex u) {
        d.components[j].for_each([&](Vertex v) {
          if (!t.beats(u, v)) throw std::logic_error("strong decomposition: condensation is not a total order");
        });
      });
    }
  }
  return d;
}

SpecialVertices special_vertices(const Tournament& t) {
  SpecialVertices s;
  if (t.size() == 0) return s;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.out_degree(v) == t.size() - 1) s.transmitter = v;
    if (t.in_degree(v) == t.size() - 1) s.receiver = v;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Score plus sorted scores of the out-neighbours; preserved by isomorphisms.
std::vector<std::size_t> vertex_signature(const Tournament& t, const std::vector<std::size_t>& scores, Vertex v) {
  std::vector<std::size_t> sig{scores[v]};
  t.outset(v).for_each([&](Vertex w) { sig.push_back(scores[w]); });
  std::sort(sig.begin() + 1, sig.end());
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Tournament& a, const Tournament& b) : a_(a), b_(b), n_(a.size()) {}

  bool run() {
    const auto sa = a_.scores();
    const auto sb = b_.scores();
    {
      auto x = sa, y = sb;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return false;
    }

    std::vector<std::vector<std::size_t>> sig_a(n_), sig_b(n_);
    for (Vertex v = 0; v < n_; ++v) {
      sig_a[v] = vertex_signature(a_, sa, v);
      sig_b[v] = vertex_signature(b_, sb, v);
    }
    {
      auto x = sig_a, y = sig_b;
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) return false;
    }

    candidates_.assign(n_, {});
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex w = 0; w < n_; ++w) {
        if (sig_a[u] == sig_b[w]) candidates_[u].push_back(w);
      }
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex x, Vertex y) { return candidates_[x].size() < candidates_[y].size(); });

    map_.assign(n_, 0);
    used_.assign(n_, false);
    return extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex u = order_[depth];
    for (Vertex w : candidates_[u]) {
      if (used_[w]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const Vertex p = order_[k];
        ok = a_.beats(u, p) == b_.beats(w, map_[p]);
      }
      if (!ok) continue;
      map_[u] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Tournament& a_;
  const Tournament& b_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> candidates_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool is_isomorphic(const Tournament& a, const Tournament& b, std::size_t max_n) {
  if (a.size() > max_n || b.size() > max_n) {
    throw Error(Errc::SizeLimitExceeded, "isomorphism test limited to " + std::to_string(max_n) + " vertices");
  }
  if (a.size() != b.size()) return false;
  return IsoSearch(a, b).run();
}

}  // namespace quadlab
