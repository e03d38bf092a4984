#include "quadlab/theorems.hpp"

#include <string>

#include "quadlab/domination.hpp"
#include "quadlab/error.hpp"
#include "quadlab/orthogonality.hpp"

namespace quadlab {

namespace {

struct Evaluation {
  std::vector<Condition> conditions;
  bool verdict = false;
};

bool all_true(const std::vector<Condition>& cs) {
  for (const auto& c : cs) {
    if (!c.value) return false;
  }
  return true;
}

Evaluation conclude(std::vector<Condition> cs) {
  const bool v = all_true(cs);
  return {std::move(cs), v};
}

Evaluation eval_transmitter_receiver(const Tournament& t, Vertex s, Vertex r) {
  const Tournament core = remove_vertices(t, {s, r});
  return conclude({{"gamma(T-{s,t})>2", gamma_exceeds(core, 2)},
                   {"gamma((T-{s,t})^r)>2", gamma_exceeds(dual(core), 2)}});
}

Evaluation eval_transmitter_only(const Tournament& t, Vertex s) {
  const Tournament core = remove_vertices(t, {s});
  return conclude({{"gamma(T-s)>2", gamma_exceeds(core, 2)},
                   {"T-s out-quadrangular", is_out_quadrangular(core)},
                   {"min_outdeg(T-s)>=2", core.min_out_degree() >= 2}});
}

Evaluation eval_receiver_only(const Tournament& t, Vertex r) {
  const Tournament core = remove_vertices(t, {r});
  return conclude({{"gamma((T-t)^r)>2", gamma_exceeds(dual(core), 2)},
                   {"T-t in-quadrangular", is_in_quadrangular(core)},
                   {"min_indeg(T-t)>=2", core.min_in_degree() >= 2}});
}

Evaluation eval_not_strong(const Tournament& t, const StrongDecomposition& d) {
  const Tournament first = induced(t, d.initial());
  const Tournament last = induced(t, d.terminal());
  return conclude({{"T_1 in-quadrangular", is_in_quadrangular(first)},
                   {"min_indeg(T_1)>=2", first.min_in_degree() >= 2},
                   {"T_m out-quadrangular", is_out_quadrangular(last)},
                   {"min_outdeg(T_m)>=2", last.min_out_degree() >= 2}});
}

// x has out-degree 1 (out_side) or in-degree 1; y is its only out- (in-) neighbour.
Evaluation eval_degree_one(const Tournament& t, Vertex x, bool out_side) {
  const Vertex y = out_side ? t.outset(x).to_vector().front() : t.inset(x).to_vector().front();
  VertexSet rest = VertexSet::full(t.size());
  rest.erase(x);
  rest.erase(y);
  const Tournament core = induced(t, rest);
  const bool forced = out_side ? t.outset(y) == rest : t.inset(y) == rest;
  return conclude({{out_side ? "O(y)=V-{x,y}" : "I(y)=V-{x,y}", forced},
                   {"gamma(T-{x,y})>2", gamma_exceeds(core, 2)},
                   {"gamma((T-{x,y})^r)>2", gamma_exceeds(dual(core), 2)},
                   {"min_outdeg(T-{x,y})>=2", core.min_out_degree() >= 2},
                   {"min_indeg(T-{x,y})>=2", core.min_in_degree() >= 2}});
}

std::vector<Vertex> vertices_with_degree_one(const Tournament& t, bool out_side) {
  std::vector<Vertex> xs;
  for (Vertex v = 0; v < t.size(); ++v) {
    if ((out_side ? t.out_degree(v) : t.in_degree(v)) == 1) xs.push_back(v);
  }
  return xs;
}

[[noreturn]] void hypothesis_failed(std::string_view what) {
  throw Error(Errc::HypothesisNotSatisfied, std::string(what));
}

VerifierResult agreement(std::string name, Evaluation ev, bool oracle) {
  VerifierResult r{std::move(name), ev.verdict == oracle, std::move(ev.conditions)};
  r.conditions.push_back({"statement", ev.verdict});
  r.conditions.push_back({"oracle", oracle});
  return r;
}

VerifierResult verify_degree_one(const Tournament& t, bool out_side) {
  const char* name = out_side ? "outdeg_one" : "indeg_one";
  if (t.size() < 4) hypothesis_failed(std::string(name) + ": needs at least 4 vertices");
  const auto xs = vertices_with_degree_one(t, out_side);
  if (xs.empty()) hypothesis_failed(std::string(name) + (out_side ? ": no vertex of out-degree 1" : ": no vertex of in-degree 1"));

  const bool oracle = is_quadrangular(t);
  // Any choice of x must give the same answer; the trace records the smallest.
  bool every_x_agrees = true;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    every_x_agrees = every_x_agrees && eval_degree_one(t, xs[i], out_side).verdict == oracle;
  }
  VerifierResult r = agreement(name, eval_degree_one(t, xs.front(), out_side), oracle);
  r.conditions.insert(r.conditions.begin(), Condition{"x=" + std::to_string(xs.front()), true});
  r.conditions.push_back({"every x agrees", every_x_agrees});
  r.passed = r.passed && every_x_agrees;
  return r;
}

}  // namespace

std::string_view rule_id(Rule rule) noexcept {
  switch (rule) {
    case Rule::TrivialSmall: return "trivial-small";
    case Rule::TransmitterReceiver: return "transmitter-receiver";
    case Rule::TransmitterOnly: return "transmitter-only";
    case Rule::ReceiverOnly: return "receiver-only";
    case Rule::NotStrong: return "not-strong";
    case Rule::OutDegreeOne: return "out-degree-one";
    case Rule::InDegreeOne: return "in-degree-one";
    case Rule::Regular: return "regular";
    case Rule::DirectOracle: return "direct-oracle";
  }
  return "unknown";
}

std::string_view theorem_id(Theorem theorem) noexcept {
  switch (theorem) {
    case Theorem::TransmitterReceiver: return "transmitter_receiver";
    case Theorem::TransmitterOnly: return "transmitter_only";
    case Theorem::ReceiverOnly: return "receiver_only";
    case Theorem::NotStrong: return "not_strong";
    case Theorem::OutDegreeOne: return "outdeg_one";
    case Theorem::InDegreeOne: return "indeg_one";
    case Theorem::DegreeLemmas: return "degree_lemmas";
    case Theorem::SubtournamentDegrees: return "subtournament_degrees";
    case Theorem::ClosedUnion: return "closed_union";
    case Theorem::Regular: return "regular";
  }
  return "unknown";
}

ClassificationTrace classify(const Tournament& t) {
  const std::size_t n = t.size();
  if (n <= 2) return {Rule::TrivialSmall, {}, true};

  const auto special = special_vertices(t);
  auto trace = [](Rule rule, Evaluation ev) { return ClassificationTrace{rule, std::move(ev.conditions), ev.verdict}; };

  if (special.transmitter && special.receiver) {
    return trace(Rule::TransmitterReceiver, eval_transmitter_receiver(t, *special.transmitter, *special.receiver));
  }
  if (special.transmitter) return trace(Rule::TransmitterOnly, eval_transmitter_only(t, *special.transmitter));
  if (special.receiver) return trace(Rule::ReceiverOnly, eval_receiver_only(t, *special.receiver));

  const auto decomposition = strong_decomposition(t);
  if (!decomposition.strongly_connected()) return trace(Rule::NotStrong, eval_not_strong(t, decomposition));

  if (n >= 4) {
    if (const auto xs = vertices_with_degree_one(t, true); !xs.empty()) {
      return trace(Rule::OutDegreeOne, eval_degree_one(t, xs.front(), true));
    }
    if (const auto xs = vertices_with_degree_one(t, false); !xs.empty()) {
      return trace(Rule::InDegreeOne, eval_degree_one(t, xs.front(), false));
    }
  }

  if (t.is_regular()) {
    const bool big_gamma = gamma_exceeds(t, 3);
    if (big_gamma) return {Rule::Regular, {{"gamma(T)>=4", true}}, true};
    const bool out = is_out_quadrangular(t);
    return {Rule::Regular, {{"gamma(T)>=4", false}, {"T out-quadrangular", out}}, out};
  }

  return {Rule::DirectOracle, {}, is_quadrangular(t)};
}

bool applicable(Theorem theorem, const Tournament& t) {
  const auto special = [&] { return special_vertices(t); };
  switch (theorem) {
    case Theorem::TransmitterReceiver: {
      const auto s = special();
      return t.size() >= 3 && s.transmitter && s.receiver;
    }
    case Theorem::TransmitterOnly: {
      const auto s = special();
      return s.transmitter && !s.receiver;
    }
    case Theorem::ReceiverOnly: {
      const auto s = special();
      return s.receiver && !s.transmitter;
    }
    case Theorem::NotStrong: {
      const auto s = special();
      return !s.transmitter && !s.receiver && !strong_decomposition(t).strongly_connected();
    }
    case Theorem::OutDegreeOne: return t.size() >= 4 && !vertices_with_degree_one(t, true).empty();
    case Theorem::InDegreeOne: return t.size() >= 4 && !vertices_with_degree_one(t, false).empty();
    case Theorem::DegreeLemmas:
      return (!vertices_with_degree_one(t, true).empty() || !vertices_with_degree_one(t, false).empty()) &&
             is_quadrangular(t);
    case Theorem::SubtournamentDegrees: return true;
    case Theorem::ClosedUnion: return true;
    case Theorem::Regular: return t.is_regular();
  }
  return false;
}

VerifierResult verify(Theorem theorem, const Tournament& t) {
  switch (theorem) {
    case Theorem::TransmitterReceiver: return verify_transmitter_receiver(t);
    case Theorem::TransmitterOnly: return verify_transmitter_only(t);
    case Theorem::ReceiverOnly: return verify_receiver_only(t);
    case Theorem::NotStrong: return verify_not_strong(t);
    case Theorem::OutDegreeOne: return verify_outdeg_one(t);
    case Theorem::InDegreeOne: return verify_indeg_one(t);
    case Theorem::DegreeLemmas: return verify_degree_lemmas(t);
    case Theorem::SubtournamentDegrees: return verify_subtournament_degrees(t);
    case Theorem::ClosedUnion: return verify_closed_union(t);
    case Theorem::Regular: return verify_regular(t);
  }
  hypothesis_failed("unknown theorem");
}

VerifierResult verify_transmitter_receiver(const Tournament& t) {
  const auto s = special_vertices(t);
  if (t.size() < 3) hypothesis_failed("transmitter_receiver: needs at least 3 vertices");
  if (!s.transmitter || !s.receiver) hypothesis_failed("transmitter_receiver: needs a transmitter and a receiver");
  return agreement("transmitter_receiver", eval_transmitter_receiver(t, *s.transmitter, *s.receiver),
                   is_quadrangular(t));
}

VerifierResult verify_transmitter_only(const Tournament& t) {
  const auto s = special_vertices(t);
  if (!s.transmitter || s.receiver) hypothesis_failed("transmitter_only: needs a transmitter and no receiver");
  return agreement("transmitter_only", eval_transmitter_only(t, *s.transmitter), is_quadrangular(t));
}

VerifierResult verify_receiver_only(const Tournament& t) {
  const auto s = special_vertices(t);
  if (!s.receiver || s.transmitter) hypothesis_failed("receiver_only: needs a receiver and no transmitter");
  return agreement("receiver_only", eval_receiver_only(t, *s.receiver), is_quadrangular(t));
}

VerifierResult verify_not_strong(const Tournament& t) {
  const auto s = special_vertices(t);
  if (s.transmitter || s.receiver) hypothesis_failed("not_strong: needs no transmitter and no receiver");
  const auto d = strong_decomposition(t);
  if (d.strongly_connected()) hypothesis_failed("not_strong: tournament is strongly connected");
  return agreement("not_strong", eval_not_strong(t, d), is_quadrangular(t));
}

VerifierResult verify_outdeg_one(const Tournament& t) { return verify_degree_one(t, true); }

VerifierResult verify_indeg_one(const Tournament& t) { return verify_degree_one(t, false); }

VerifierResult verify_degree_lemmas(const Tournament& t) {
  const auto out_xs = vertices_with_degree_one(t, true);
  const auto in_xs = vertices_with_degree_one(t, false);
  if (out_xs.empty() && in_xs.empty()) hypothesis_failed("degree_lemmas: no vertex of out-degree 1 or in-degree 1");
  if (!is_quadrangular(t)) hypothesis_failed("degree_lemmas: tournament is not quadrangular");

  VerifierResult r{"degree_lemmas", true, {}};
  for (Vertex x : out_xs) {
    const Vertex y = t.outset(x).to_vector().front();
    VertexSet rest = VertexSet::full(t.size());
    rest.erase(x);
    rest.erase(y);
    const bool ok = t.outset(y) == rest;
    r.conditions.push_back({"O(" + std::to_string(y) + ")=V-{" + std::to_string(x) + "," + std::to_string(y) + "}", ok});
    r.passed = r.passed && ok;
  }
  for (Vertex x : in_xs) {
    const Vertex y = t.inset(x).to_vector().front();
    VertexSet rest = VertexSet::full(t.size());
    rest.erase(x);
    rest.erase(y);
    const bool ok = t.inset(y) == rest;
    r.conditions.push_back({"I(" + std::to_string(y) + ")=V-{" + std::to_string(x) + "," + std::to_string(y) + "}", ok});
    r.passed = r.passed && ok;
  }
  return r;
}

VerifierResult verify_subtournament_degrees(const Tournament& t) {
  const bool out_quad = is_out_quadrangular(t);
  const bool in_quad = is_in_quadrangular(t);
  const std::size_t dplus = t.min_out_degree();
  const std::size_t dminus = t.min_in_degree();

  bool out_sub = true;
  bool in_sub = true;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (out_quad) {
      const VertexSet o = t.outset(v);
      if (!o.empty()) {
        const Tournament w = induced(t, o);
        for (Vertex x = 0; x < w.size(); ++x) out_sub = out_sub && w.out_degree(x) != 1;
      }
    }
    if (in_quad) {
      const VertexSet i = t.inset(v);
      if (!i.empty()) {
        const Tournament w = induced(t, i);
        for (Vertex x = 0; x < w.size(); ++x) in_sub = in_sub && w.in_degree(x) != 1;
      }
    }
  }

  const bool out_cor = !(out_quad && dplus >= 2) || dplus >= 4;
  const bool in_cor = !(in_quad && dminus >= 2) || dminus >= 4;
  const bool both_cor = !(out_quad && in_quad && dplus >= 2 && dminus >= 2) || (dplus >= 4 && dminus >= 4);

  VerifierResult r{"subtournament_degrees",
                   out_sub && in_sub && out_cor && in_cor && both_cor,
                   {{"out-quadrangular", out_quad},
                    {"in-quadrangular", in_quad},
                    {"no out-degree-1 vertex in any T[O(v)]", out_sub},
                    {"no in-degree-1 vertex in any T[I(v)]", in_sub},
                    {"min_outdeg>=2 implies >=4", out_cor},
                    {"min_indeg>=2 implies >=4", in_cor},
                    {"both >=2 implies both >=4", both_cor}}};
  return r;
}

VerifierResult verify_closed_union(const Tournament& t) {
  const bool statement = closed_union_in_quad(t);
  const bool oracle = is_in_quadrangular(t);
  return {"closed_union", statement == oracle, {{"closed unions avoid n-1", statement}, {"in-quadrangular", oracle}}};
}

VerifierResult verify_regular(const Tournament& t) {
  if (!t.is_regular()) throw Error(Errc::NotRegular, "regular: out-degrees differ");
  const auto both = quadrangularity_both(t);
  const bool out = both.out.verdict;
  const bool in = both.in.verdict;
  const bool equivalent = out == in && in == both.verdict();
  const bool big_gamma = gamma_exceeds(t, 3);
  const bool sufficiency = !big_gamma || out;
  return {"regular",
          equivalent && sufficiency,
          {{"out-quadrangular", out},
           {"in-quadrangular", in},
           {"quadrangular", both.verdict()},
           {"gamma(T)>=4", big_gamma},
           {"gamma>=4 implies out-quadrangular", sufficiency}}};
}

VerifierResult verify_rotational_dichotomy(const Tournament& t, const Symbol& sym) {
  if (!(t == rotational(sym))) hypothesis_failed("rotational_dichotomy: tournament is not rotational(symbol)");
  const std::size_t n = t.size();

  bool overlaps_nonempty = true;
  for (Vertex u = 0; u < n && overlaps_nonempty; ++u) {
    for (Vertex v = u + 1; v < n && overlaps_nonempty; ++v) {
      overlaps_nonempty = bits::intersect_count(t.out_row(u), t.out_row(v)) > 0;
    }
  }

  VerifierResult r{"rotational_dichotomy", true, {{"every pair of outsets meets", overlaps_nonempty}}};
  if (!overlaps_nonempty) {
    const bool iso = is_isomorphic(t, u_n(n));
    r.conditions.push_back({"isomorphic to U_n", iso});
    r.passed = iso;
  }
  const bool quad = is_quadrangular(t);
  const bool corollary = !(quad && n > 3) || overlaps_nonempty;
  r.conditions.push_back({"quadrangular", quad});
  r.conditions.push_back({"quadrangular and n>3 implies outsets meet", corollary});
  r.passed = r.passed && corollary;
  return r;
}

}  // namespace quadlab
