#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "quadlab/quadlab.hpp"

namespace quadlab::cli {

namespace {

// Thrown for usage problems the argument parser cannot see (missing seed,
// unreadable file, ...). Maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Json set_json(const VertexSet& s) {
  Json a = Json::array();
  s.for_each([&](Vertex v) { a.push_back(v); });
  return a;
}

Json symbol_json(const Symbol& s) { return Json(s.members()); }

Json witness_json(const std::optional<QuadWitness>& w) {
  if (!w) return nullptr;
  return Json{{"u", w->u}, {"v", w->v}, {"common", set_json(w->common)}};
}

Json side_json(const QuadReport& r) {
  return Json{{"verdict", r.verdict},
              {"side", r.side == Side::Out ? "out" : "in"},
              {"witness", witness_json(r.witness)}};
}

Json row_orth_json(const RowOrthogonality& r) {
  Json j{{"verdict", r.verdict}, {"witness", nullptr}};
  if (r.witness) j["witness"] = Json::array({r.witness->first, r.witness->second});
  return j;
}

Json graph_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (auto [x, y] : g.edges) edges.push_back(Json::array({x, y}));
  return Json{{"n", g.n}, {"edge_count", g.edges.size()}, {"edges", std::move(edges)}};
}

Json conditions_json(const std::vector<Condition>& cs) {
  Json a = Json::array();
  for (const auto& c : cs) a.push_back(Json{{"name", c.name}, {"value", c.value}});
  return a;
}

Json sweep_json(const SweepReport& r) {
  Json verifiers = Json::array();
  for (const auto& t : r.tallies) {
    verifiers.push_back(Json{{"name", t.name}, {"checked", t.checked}, {"passed", t.passed}});
  }
  Json j{{"instances", r.instances}, {"ok", r.ok()}, {"verifiers", std::move(verifiers)}, {"failure", nullptr}};
  if (r.first_failure) {
    j["failure"] = Json{{"verifier", r.first_failure->verifier},
                        {"conditions", conditions_json(r.first_failure->conditions)},
                        {"matrix", render_matrix(r.first_failure->instance)}};
  }
  return j;
}

Json make_report(std::string_view command, Json inputs, Json result) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)}};
}

void render_human(const Json& report, std::ostream& out) {
  for (const auto& [key, value] : report["result"].items()) {
    if (value.is_string()) {
      out << key << ":\n" << value.get<std::string>();
    } else {
      out << key << ": " << value.dump() << '\n';
    }
  }
  if (report.contains("volatile")) {
    for (const auto& [key, value] : report["volatile"].items()) out << key << ": " << value.dump() << '\n';
  }
}

struct Context {
  std::ostream& out;
  bool json = false;

  void emit(const Json& report) const {
    if (json) {
      out << report.dump(2) << '\n';
    } else {
      render_human(report, out);
    }
  }
};

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  std::optional<std::size_t> n;
  std::optional<std::size_t> p;
  std::vector<std::size_t> symbol;
  std::optional<std::uint64_t> seed;
  std::string input;
  bool transmitter = false;
  bool receiver = false;
  std::string output;
};

int cmd_gen(const GenArgs& a, const Context& ctx) {
  auto need_n = [&]() -> std::size_t {
    if (!a.n) throw UsageError("gen " + a.kind + " requires --n");
    return *a.n;
  };
  Json inputs{{"kind", a.kind}};
  Tournament t = [&] {
    if (a.kind == "rotational") {
      inputs["n"] = need_n();
      inputs["symbol"] = a.symbol;
      return rotational(Symbol::make(*a.n, a.symbol));
    }
    if (a.kind == "un") {
      inputs["n"] = need_n();
      return u_n(*a.n);
    }
    if (a.kind == "qr") {
      const auto p = a.p ? a.p : a.n;
      if (!p) throw UsageError("gen qr requires --p");
      inputs["p"] = *p;
      return quadratic_residue(*p);
    }
    if (a.kind == "random") {
      inputs["n"] = need_n();
      if (!a.seed) throw UsageError("gen random requires --seed");
      inputs["seed"] = *a.seed;
      return random_tournament(*a.n, Seed{*a.seed});
    }
    if (a.input.empty()) throw UsageError("gen augment requires --input");
    inputs["input"] = a.input;
    inputs["transmitter"] = a.transmitter;
    inputs["receiver"] = a.receiver;
    return augment(parse_tournament_text(read_input(a.input)), a.transmitter, a.receiver);
  }();

  const std::string matrix = render_matrix(t);
  if (!a.output.empty()) write_output(a.output, matrix);
  if (ctx.json) {
    ctx.emit(make_report("gen", std::move(inputs), Json{{"n", t.size()}, {"matrix", matrix}}));
  } else if (a.output.empty()) {
    ctx.out << matrix;
  }
  return kHolds;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const std::string& what, const std::string& input, const Context& ctx) {
  const std::string text = read_input(input);
  const Json inputs{{"what", what}, {"input", input}};
  Json result;
  bool verdict = false;

  if (what == "orth") {
    const BinaryPattern p = parse_pattern(text);
    if (!p.square()) {
      throw Error(Errc::NotSquare, std::to_string(p.rows()) + "x" + std::to_string(p.cols()) + " pattern");
    }
    const auto rows = comb_row_orthogonal(p);
    const auto cols = comb_row_orthogonal(p.transpose());
    verdict = comb_orthogonal(p);
    result = Json{{"verdict", verdict}, {"rows", row_orth_json(rows)}, {"columns", row_orth_json(cols)}};
    if (p.rows() >= 2) {
      const auto nnz = nnz_report(p);
      result["nnz"] = Json{{"nnz", nnz.nnz}, {"bound_4n_minus_4", nnz.bound}, {"meets", nnz.meets}};
    }
  } else {
    const Tournament t = parse_tournament_text(text);
    if (what == "quad") {
      const auto both = quadrangularity_both(t);
      verdict = both.verdict();
      result = Json{{"verdict", verdict}, {"out", side_json(both.out)}, {"in", side_json(both.in)}};
    } else {
      const auto r = quadrangularity(t, what == "out" ? Side::Out : Side::In);
      verdict = r.verdict;
      result = side_json(r);
    }
  }
  ctx.emit(make_report("check", inputs, std::move(result)));
  return verdict ? kHolds : kFails;
}

// ---------------------------------------------------------------------------
// dom

int cmd_dom(const std::string& what, const std::string& input, const Context& ctx) {
  const Tournament t = parse_tournament_text(read_input(input));
  const Json inputs{{"what", what}, {"input", input}};
  Json result;
  if (what == "number") {
    const auto info = domination_number(t);
    Json pairs = Json::array();
    for (auto [x, y] : info.pairs) pairs.push_back(Json::array({x, y}));
    result = Json{{"gamma", info.gamma}, {"min_set", info.min_set}, {"dominant_pairs", std::move(pairs)}};
  } else if (what == "graph") {
    result = graph_json(domination_graph(t));
  } else {
    result = graph_json(competition_graph(t));
  }
  ctx.emit(make_report("dom", inputs, std::move(result)));
  return kHolds;
}

// ---------------------------------------------------------------------------
// search

struct SearchArgs {
  std::size_t n = 0;
  bool all = false;
  bool first = false;
  bool family = false;
  bool group = false;
  std::size_t max_n = kDefaultSearchLimit;
};

int cmd_search(const SearchArgs& a, std::size_t threads, const Context& ctx) {
  const int modes = int{a.all} + int{a.first} + int{a.family};
  if (modes > 1) throw UsageError("choose one of --all, --first, --family");
  const std::string mode = a.first ? "first" : a.family ? "family" : "all";
  Json inputs{{"n", a.n}, {"mode", mode}};

  if (a.family) {
    const Symbol sym = family_symbol(a.n);
    const auto crit = symbol_criterion(sym);
    const bool oracle = is_quadrangular(rotational(sym));
    const bool ok = crit.verdict && oracle;
    ctx.emit(make_report("search", std::move(inputs),
                         Json{{"symbol", symbol_json(sym)}, {"criterion", crit.verdict}, {"oracle", oracle},
                              {"verified", ok}}));
    return ok ? kHolds : kFails;
  }

  SearchOptions opts;
  opts.max_n = a.max_n;
  opts.threads = threads;
  opts.first_only = a.first;
  const SearchResult r = search(a.n, opts);

  Json hits = Json::array();
  for (const auto& s : r.hits) hits.push_back(symbol_json(s));
  Json result{{"hit_count", r.hits.size()}, {"examined", r.examined}, {"hits", std::move(hits)}};
  if (a.group) {
    inputs["group"] = true;
    if (a.n > kDefaultIsomorphismLimit) throw UsageError("--group needs n <= 12");
    Json classes = Json::array();
    for (const auto& cls : group_by_isomorphism(r.hits)) {
      Json c = Json::array();
      for (const auto& s : cls) c.push_back(symbol_json(s));
      classes.push_back(std::move(c));
    }
    result["isomorphism_classes"] = std::move(classes);
  }
  Json report = make_report("search", std::move(inputs), std::move(result));
  report["volatile"] = Json{{"elapsed_us", r.elapsed.count()}};
  ctx.emit(report);
  return r.hits.empty() ? kFails : kHolds;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& suite, std::size_t n_max, const std::string& input, std::size_t threads,
               const Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Json inputs{{"suite", suite}};
  if (suite != "theorems") inputs["n_max"] = n_max;
  if (!input.empty()) inputs["input"] = input;

  Json result = Json::object();
  bool ok = true;
  auto add = [&](const char* key, const SweepReport& r) {
    result[key] = sweep_json(r);
    ok = ok && r.ok();
  };

  if (suite == "exhaustive" || suite == "all") {
    if (n_max > kMaxEnumerationOrder) {
      throw Error(Errc::SizeLimitExceeded, "exhaustive sweep limited to --n-max <= " +
                                               std::to_string(kMaxEnumerationOrder));
    }
    add("exhaustive", sweep_exhaustive(n_max, threads));
  }
  if (suite == "theorems" || suite == "all") {
    if (!input.empty()) {
      const Tournament t = parse_tournament_text(read_input(input));
      add("instance", sweep_one(t));
    } else {
      const auto corpus = named_instances();
      add("named", sweep_instances(corpus, threads));
      const std::size_t orders[] = {3, 5, 7, 9, 11};
      add("rotational", sweep_rotational(orders, threads));
    }
  }
  result["ok"] = ok;

  Json report = make_report("verify", std::move(inputs), std::move(result));
  report["volatile"] = Json{
      {"elapsed_us",
       std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count()}};
  ctx.emit(report);
  return ok ? kHolds : kFails;
}

// ---------------------------------------------------------------------------
// export

int cmd_export(const std::string& input, const std::string& format, const Context& ctx) {
  const Tournament t = parse_tournament_text(read_input(input));
  const std::string text = format == "dot" ? to_dot(t) : adjacency_json(t).dump(2) + "\n";
  if (ctx.json) {
    ctx.emit(make_report("export", Json{{"input", input}, {"format", format}}, Json{{"text", text}}));
  } else {
    ctx.out << text;
  }
  return kHolds;
}

}  // namespace

Json adjacency_json(const Tournament& t) {
  Json rows = Json::array();
  for (Vertex u = 0; u < t.size(); ++u) {
    Json row = Json::array();
    for (Vertex v = 0; v < t.size(); ++v) row.push_back(t.beats(u, v) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return Json{{"n", t.size()}, {"adjacency", std::move(rows)}};
}

Tournament tournament_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const auto& adj = j.at("adjacency");
    if (!adj.is_array() || adj.size() != n) throw Error(Errc::ParseError, "adjacency must have n rows");
    std::vector<VertexSet> rows;
    rows.reserve(n);
    for (const auto& row : adj) {
      if (!row.is_array() || row.size() != n) throw Error(Errc::ParseError, "adjacency rows must have n entries");
      VertexSet s(n);
      for (std::size_t v = 0; v < n; ++v) {
        const int bit = row[v].get<int>();
        if (bit != 0 && bit != 1) throw Error(Errc::ParseError, "adjacency entries must be 0 or 1");
        if (bit == 1) s.insert(v);
      }
      rows.push_back(std::move(s));
    }
    return Tournament::validate(n, rows);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Tournament parse_tournament_text(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::ParseError, e.what());
    }
    return tournament_from_json(j);
  }
  return parse_tournament(text);
}

Json strip_volatile(Json report) {
  report.erase("volatile");
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadrangular tournaments: construction, checks, domination, theorem sweeps and symbol search",
               "quadlab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "quadlab 0.1.0");

  std::size_t threads = 0;
  app.add_option("--threads", threads, "Worker cap for sweeps and searches (default: $QL_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  bool json = false;
  std::function<int(const Context&)> action;

  // gen
  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a tournament as a matrix file");
  gen_cmd->add_option("kind", gen.kind, "rotational | un | qr | random | augment")
      ->required()
      ->check(CLI::IsMember({"rotational", "un", "qr", "random", "augment"}));
  gen_cmd->add_option("--n", gen.n, "Order");
  gen_cmd->add_option("--p", gen.p, "Prime for qr (3 mod 4)");
  gen_cmd->add_option("--symbol", gen.symbol, "Comma-separated symbol for rotational")->delimiter(',');
  gen_cmd->add_option("--seed", gen.seed, "Seed for random (required)");
  gen_cmd->add_option("--input", gen.input, "Matrix file to augment");
  gen_cmd->add_flag("--transmitter", gen.transmitter, "augment: add a transmitter");
  gen_cmd->add_flag("--receiver", gen.receiver, "augment: add a receiver");
  gen_cmd->add_option("-o,--out", gen.output, "Output path (default: stdout)");
  gen_cmd->add_flag("--json", json, "Emit a JSON report");
  gen_cmd->callback([&] { action = [&](const Context& c) { return cmd_gen(gen, c); }; });

  // check
  std::string check_what, check_input;
  auto* check_cmd = app.add_subcommand("check", "Quadrangularity or combinatorial orthogonality of a matrix file");
  check_cmd->add_option("what", check_what, "quad | out | in | orth")
      ->required()
      ->check(CLI::IsMember({"quad", "out", "in", "orth"}));
  check_cmd->add_option("input", check_input, "Matrix file ('-' for stdin)")->required();
  check_cmd->add_flag("--json", json, "Emit a JSON report");
  check_cmd->callback([&] { action = [&](const Context& c) { return cmd_check(check_what, check_input, c); }; });

  // dom
  std::string dom_what, dom_input;
  auto* dom_cmd = app.add_subcommand("dom", "Domination number, domination graph or competition graph");
  dom_cmd->add_option("what", dom_what, "number | graph | competition")
      ->required()
      ->check(CLI::IsMember({"number", "graph", "competition"}));
  dom_cmd->add_option("input", dom_input, "Matrix file ('-' for stdin)")->required();
  dom_cmd->add_flag("--json", json, "Emit a JSON report");
  dom_cmd->callback([&] { action = [&](const Context& c) { return cmd_dom(dom_what, dom_input, c); }; });

  // search
  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search of rotational symbols");
  search_cmd->add_option("--n", search_args.n, "Odd order > 3")->required();
  search_cmd->add_flag("--all", search_args.all, "Every hit (default)");
  search_cmd->add_flag("--first", search_args.first, "Lexicographically first hit only");
  search_cmd->add_flag("--family", search_args.family, "Check the n = 3 (mod 4) family symbol");
  search_cmd->add_flag("--group", search_args.group, "Group hits by isomorphism class (n <= 12)");
  search_cmd->add_option("--max-n", search_args.max_n, "Search size bound");
  search_cmd->add_flag("--json", json, "Emit a JSON report");
  search_cmd->callback([&] { action = [&](const Context& c) { return cmd_search(search_args, threads, c); }; });

  // verify
  std::string suite;
  std::size_t n_max = 5;
  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "Check every characterisation against the direct definition");
  verify_cmd->add_option("suite", suite, "all | theorems | exhaustive")
      ->required()
      ->check(CLI::IsMember({"all", "theorems", "exhaustive"}));
  verify_cmd->add_option("--n-max", n_max, "Largest order for the exhaustive sweep (<= 7)");
  verify_cmd->add_option("--input", verify_input, "theorems: verify one matrix file instead of the named corpus");
  verify_cmd->add_flag("--json", json, "Emit a JSON report");
  verify_cmd->callback(
      [&] { action = [&](const Context& c) { return cmd_verify(suite, n_max, verify_input, threads, c); }; });

  // export
  std::string export_input, format = "dot";
  auto* export_cmd = app.add_subcommand("export", "Render a matrix file as DOT or JSON adjacency");
  export_cmd->add_option("input", export_input, "Matrix file ('-' for stdin)")->required();
  export_cmd->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_flag("--json", json, "Wrap the output in a JSON report");
  export_cmd->callback([&] { action = [&](const Context& c) { return cmd_export(export_input, format, c); }; });

  app.fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kHolds;
    }
    err << "quadlab: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action(Context{out, json});
  } catch (const Error& e) {
    err << "quadlab: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "quadlab: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace quadlab::cli
