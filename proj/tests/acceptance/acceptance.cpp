// Acceptance suite: one numbered criterion per check, each with a wall-clock
// budget. Prints one PASS/FAIL line per criterion and exits non-zero if any
// selected criterion fails. `--criterion N` runs a single criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "golden_runner.hpp"
#include "oracles.hpp"
#include "quadlab/quadlab.hpp"

namespace {

using namespace quadlab;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string render_edges(const SimpleGraph& g) {
  std::string s = "{";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) s += ", ";
    s += "{" + std::to_string(g.edges[i].first) + "," + std::to_string(g.edges[i].second) + "}";
  }
  return s + "}";
}

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<std::size_t> p(a.n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = true;
    for (auto [x, y] : a.edges) ok = ok && b.has_edge(p[x], p[y]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Outcome gamma_qr7() {
  Outcome o;
  const Tournament q = quadratic_residue(7);
  const auto info = domination_number(q);
  o.require(info.gamma == 3, "domination_number(QR_7) = " + std::to_string(info.gamma));
  o.require(oracle::gamma(oracle::matrix_of(q)) == 3, "brute-force gamma(QR_7) = 3");
  return o;
}

Outcome qr7_self_dual() {
  Outcome o;
  const Tournament q = quadratic_residue(7);
  o.require(is_isomorphic(dual(q), q), "is_isomorphic(dual(QR_7), QR_7)");
  o.require(oracle::isomorphic(oracle::matrix_of(dual(q)), oracle::matrix_of(q)), "permutation search agrees");
  return o;
}

Outcome augmented_qr7() {
  Outcome o;
  const Tournament t = augment(quadratic_residue(7), true, true);
  o.require(t.size() == 9, "9 vertices");
  const bool direct = oracle::quadrangular(oracle::matrix_of(t));
  o.require(direct, "direct oracle says quadrangular");
  o.require(is_quadrangular(t), "bit-row check says quadrangular");
  const auto trace = classify(t);
  o.require(trace.rule == Rule::TransmitterReceiver, "classifier took the transmitter-receiver branch");
  o.require(trace.verdict == direct, "classifier verdict agrees with the oracle");
  const auto v = verify_transmitter_receiver(t);
  o.require(v.passed, "transmitter-receiver verifier agrees");
  return o;
}

Outcome un_witness() {
  Outcome o;
  for (std::size_t n : {5U, 7U, 9U, 11U}) {
    const Tournament u = u_n(n);
    const auto m = oracle::matrix_of(u);
    const Vertex k = (n - 3) / 2;
    const std::string tag = "U_" + std::to_string(n);
    o.require(!oracle::quadrangular(m), tag + " not quadrangular (oracle)");
    o.require(oracle::common_out(m, 0, k) == 1, tag + " |O(0) & O(" + std::to_string(k) + ")| = 1 (oracle)");
    const QuadReport r = quadrangularity(u, Side::Out);
    o.require(!r.verdict && r.witness && r.witness->u == 0 && r.witness->v == k && r.witness->common.count() == 1,
              tag + " reported witness (0," + std::to_string(k) + ") with one common vertex");
  }
  return o;
}

bool contains(const std::vector<Symbol>& hits, const Symbol& s) {
  return std::find(hits.begin(), hits.end(), s) != hits.end();
}

Outcome symbol_search_small_orders() {
  Outcome o;
  for (std::size_t n : {5U, 7U, 9U}) {
    const auto r = search(n);
    o.require(r.hits.empty(), "no hits at n=" + std::to_string(n));
    o.require(r.examined == (std::uint64_t{1} << ((n - 1) / 2)), "all symbols examined at n=" + std::to_string(n));
  }
  const auto r = search(11);
  o.require(contains(r.hits, Symbol::make(11, {1, 3, 4, 5, 9})), "n=11 hits contain {1,3,4,5,9}");
  for (const auto& s : r.hits) o.require(oracle::quadrangular(oracle::matrix_of(rotational(s))), "n=11 hit is quadrangular");
  o.note("n=11 hits: " + std::to_string(r.hits.size()) + " of " + std::to_string(r.examined));
  return o;
}

Outcome family() {
  Outcome o;
  o.require(family_symbol(11).members() == std::vector<std::size_t>{1, 3, 4, 5, 9}, "family_symbol(11) = {1,3,4,5,9}");
  for (std::size_t n : {11U, 15U, 19U, 23U}) {
    const Symbol s = family_symbol(n);
    o.require(symbol_criterion(s).verdict, "criterion holds at n=" + std::to_string(n));
    o.require(oracle::quadrangular(oracle::matrix_of(rotational(s))), "oracle holds at n=" + std::to_string(n));
  }
  return o;
}

Outcome criterion_iff() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t n = 5; n <= 13; n += 2) {
    for (const Symbol& s : enumerate_symbols(n)) {
      ++checked;
      const bool direct = oracle::quadrangular(oracle::matrix_of(rotational(s)));
      if (symbol_criterion(s).verdict != direct) {
        o.require(false, "criterion disagrees with the oracle at n=" + std::to_string(n));
        return o;
      }
    }
  }
  o.note(std::to_string(checked) + " symbols checked");
  return o;
}

Outcome regular_equivalence() {
  Outcome o;
  for (std::size_t n : {5U, 7U}) {
    std::size_t regular = 0;
    bool ok = true;
    for_each_tournament(n, 0, tournament_count(n), [&](std::uint64_t, const Tournament& t) {
      if (!t.is_regular()) return;
      ++regular;
      const auto m = oracle::matrix_of(t);
      const bool out = oracle::out_quadrangular(m);
      const bool in = oracle::in_quadrangular(m);
      const bool both = oracle::quadrangular(m);
      ok = ok && out == in && in == both;
      ok = ok && verify_regular(t).passed;
    });
    o.require(ok, "out <=> in <=> both on regular tournaments of order " + std::to_string(n));
    o.note("order " + std::to_string(n) + ": " + std::to_string(regular) + " regular tournaments");
  }
  return o;
}

Outcome exhaustive_six() {
  Outcome o;
  bool pairs = true, classifier = true, closed = true, degrees = true;
  for (std::size_t n = 1; n <= 6; ++n) {
    for_each_tournament(n, 0, tournament_count(n), [&](std::uint64_t, const Tournament& t) {
      const auto m = oracle::matrix_of(t);
      const bool quad = oracle::quadrangular(m);
      if (n >= 2) {
        const auto dominant = oracle::edges_where(n, [&](std::size_t x, std::size_t y) { return oracle::dominates(m, {x, y}); });
        pairs = pairs && !dominant.empty();
      }
      classifier = classifier && classify(t).verdict == quad;
      closed = closed && closed_union_in_quad(t) == oracle::in_quadrangular(m);
      if (quad) {
        const std::size_t dp = t.min_out_degree();
        const std::size_t dm = t.min_in_degree();
        degrees = degrees && dp != 2 && dp != 3 && dm != 2 && dm != 3;
      }
    });
  }
  o.require(pairs, "(a) every tournament on 2..6 vertices has a dominant pair");
  o.require(classifier, "(b) classifier agrees with the oracle");
  o.require(closed, "(c) closed-union test equals in-quadrangularity");
  o.require(degrees, "(d) no quadrangular tournament has a minimum degree of 2 or 3");
  return o;
}

Outcome bridge() {
  Outcome o;
  bool ok = true;
  auto check = [&](const Tournament& t) {
    const bool quad = is_quadrangular(t);
    ok = ok && quad == comb_orthogonal(adjacency(t)) && quad == oracle::quadrangular(oracle::matrix_of(t));
  };
  for (std::size_t n = 1; n <= 5; ++n) for_each_tournament(n, 0, tournament_count(n), [&](std::uint64_t, const Tournament& t) { check(t); });
  for (std::uint64_t s = 0; s < 1000; ++s) check(random_tournament(3 + s % 10, Seed{s}));
  o.require(ok, "quadrangular iff the adjacency pattern is combinatorially orthogonal");
  return o;
}

// Labelled equality first; on a mismatch the comparison falls back to graph
// isomorphism and the first labelled counterexample is reported.
Outcome domination_vs_competition() {
  Outcome o;
  std::size_t labelled_mismatches = 0, iso_mismatches = 0, complement_matches = 0, total = 0;
  bool reported = false;
  for (std::size_t n = 1; n <= 5; ++n) {
    for_each_tournament(n, 0, tournament_count(n), [&](std::uint64_t idx, const Tournament& t) {
      ++total;
      const SimpleGraph dom = domination_graph(t);
      const SimpleGraph comp = competition_graph(dual(t));
      if (dom == comp.complement()) ++complement_matches;
      if (dom == comp) return;
      ++labelled_mismatches;
      if (graphs_isomorphic(dom, comp)) return;
      ++iso_mismatches;
      if (!reported) {
        reported = true;
        o.note("first counterexample: n=" + std::to_string(n) + " index " + std::to_string(idx) + ", dom(T) = " +
               render_edges(dom) + ", competition(dual(T)) = " + render_edges(comp));
      }
    });
  }
  const Tournament c = u_n(3);
  o.note("3-cycle: dom(T) = " + render_edges(domination_graph(c)) + ", competition(dual(T)) = " +
         render_edges(competition_graph(dual(c))));
  o.note("labelled mismatches " + std::to_string(labelled_mismatches) + ", non-isomorphic " +
         std::to_string(iso_mismatches) + " of " + std::to_string(total));
  o.note("informational: dom(T) = complement of competition(dual(T)) on " + std::to_string(complement_matches) +
         " of " + std::to_string(total));
  o.require(iso_mismatches == 0, "competition(dual(T)) equals dom(T), up to isomorphism, for every T with n <= 5");
  return o;
}

Outcome cli_golden() {
  Outcome o;
  const fs::path dir = QUADLAB_GOLDEN_DIR;
  const auto cases = golden::load_cases(dir);
  for (const auto& c : cases) {
    const auto in_proc = golden::run_in_process(dir, c);
    std::string problem = golden::check(dir, c, in_proc);
    o.require(problem.empty(), c.name + " (in process): " + problem);
    problem = golden::check(dir, c, golden::run_binary(QUADLAB_CLI_PATH, dir, c));
    o.require(problem.empty(), c.name + " (executable): " + problem);
    if (c.compare == "json") {
      const auto again = golden::run_in_process(dir, c);
      o.require(golden::stable_json(in_proc.out) == golden::stable_json(again.out), c.name + ": JSON byte-stable");
    }
  }
  bool round_trip = true;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const Tournament t = random_tournament(1 + s % 40, Seed{s});
    round_trip = round_trip && parse_tournament(render_matrix(t)) == t &&
                 cli::parse_tournament_text(cli::adjacency_json(t).dump()) == t;
  }
  o.require(round_trip, "matrix file and JSON round trip on 500 random tournaments");
  o.note(std::to_string(cases.size()) + " golden cases");
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "domination number of QR_7 is 3", 1, gamma_qr7},
      {2, "QR_7 is isomorphic to its dual", 1, qr7_self_dual},
      {3, "transmitter + QR_7 + receiver is quadrangular, oracle and theorem agree", 1, augmented_qr7},
      {4, "U_n (n = 5, 7, 9, 11) fails with witness (0, (n-3)/2)", 1, un_witness},
      {5, "no quadrangular rotational symbol for n = 5, 7, 9; n = 11 finds {1,3,4,5,9}", 5, symbol_search_small_orders},
      {6, "family symbol is quadrangular for n = 11, 15, 19, 23", 10, family},
      {7, "symbol criterion iff quadrangular rotational tournament, n = 5..13", 30, criterion_iff},
      {8, "regular tournaments on 5 and 7 vertices: out <=> in <=> both", 60, regular_equivalence},
      {9, "exhaustive n <= 6: dominant pairs, classifier, closed unions, degree gaps", 60, exhaustive_six},
      {10, "quadrangularity equals combinatorial orthogonality of the adjacency pattern", 30, bridge},
      {11, "competition graph of the dual equals the domination graph, n <= 5", 10, domination_vs_competition},
      {12, "CLI golden cases, exit codes, round trips and stable JSON", 5, cli_golden},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: quadlab_acceptance [--criterion N]\n";
      return 2;
    }
  }

  int failures = 0;
  int ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_s) {
      std::ostringstream msg;
      msg << "runtime " << seconds << " s exceeds the " << c.budget_s << " s budget";
      outcome.require(false, msg.str());
    }
    std::printf("%s criterion %2d: %s (%.3f s of %.0f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_s);
    for (const auto& n : outcome.notes) std::printf("    %s\n", n.c_str());
    failures += outcome.pass ? 0 : 1;
  }
  if (ran == 0) {
    std::cerr << "no such criterion: " << only << '\n';
    return 2;
  }
  std::printf("%d of %d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
