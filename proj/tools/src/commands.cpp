#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "gso/canonical.hpp"
#include "gso/contraction.hpp"
#include "gso/expansion.hpp"
#include "gso/io.hpp"
#include "gso/obstruction.hpp"
#include "gso/recognizer.hpp"
#include "gso/search.hpp"
#include "gso/solvers.hpp"
#include "gso_cli/acceptance.hpp"
#include "gso_cli/cli.hpp"

#ifndef GSO_VERSION
#define GSO_VERSION "0.0.0"
#endif

namespace gso::cli {

using json = nlohmann::ordered_json;

std::string version() { return GSO_VERSION; }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

// Input errors that map to the parse-error exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetHit {};

struct Input {
  Graph graph;
  VertexSet s_in, s_out;
  std::string name;

  bool rooted() const { return s_in.any() || s_out.any(); }
};

struct Report {
  json doc;
  bool timings = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  explicit Report(const std::string& command, bool with_timings) : timings(with_timings) {
    doc["command"] = command;
    doc["version"] = version();
    doc["inputs"] = json::array();
    doc["parameters"] = json::object();
  }
  void finish(std::ostream& out) {
    if (timings)
      doc["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << doc.dump(2) << '\n';
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

json file_entry(const std::string& path, const std::string& bytes) {
  return {{"path", path}, {"fnv1a64", fnv1a_hex(bytes)}};
}

bool blank_or_comment(const std::string& line) {
  auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

// Graph6 lines (graphs may be disconnected) or rooted JSON lines.
std::vector<Input> parse_inputs(const std::string& text) {
  std::vector<Input> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    try {
      const auto p = line.find_first_not_of(" \t");
      if (line[p] == '{') {
        NamedRootedGraph r = rooted_from_json_line(line);
        out.push_back({r.rooted.graph, r.rooted.s_in, r.rooted.s_out, r.name});
      } else {
        out.push_back({graph6_decode(line.substr(p)), {}, {}, {}});
      }
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Input> gather_inputs(const std::string& path, const std::vector<std::string>& inline_g6,
                                 Report& rep) {
  std::vector<Input> out;
  if (!path.empty()) {
    const std::string bytes = slurp(path);
    rep.doc["inputs"].push_back(file_entry(path, bytes));
    out = parse_inputs(bytes);
  }
  for (const std::string& s : inline_g6) {
    rep.doc["inputs"].push_back({{"g6", s}});
    try {
      out.push_back({graph6_decode(s), {}, {}, {}});
    } catch (const ParseError& e) {
      throw InputError(std::string("--g6: ") + e.what());
    }
  }
  if (out.empty()) throw InputError("no input graphs (give a file or --g6)");
  return out;
}

json ids(const VertexSet& s) { return s.members(); }

json edge_pairs(const Graph& g, const std::vector<int>& edge_ids) {
  json a = json::array();
  for (int e : edge_ids) a.push_back({g.edge(e).u, g.edge(e).v});
  return a;
}

json moves_json(const std::vector<Move>& moves) {
  json a = json::array();
  for (const Move& m : moves) a.push_back(json::parse(move_to_json_line(m)));
  return a;
}

json describe(const Input& in, std::size_t index) {
  json j;
  j["index"] = index;
  if (!in.name.empty()) j["name"] = in.name;
  j["g6"] = graph6_encode(in.graph);
  if (in.rooted()) {
    j["s_in"] = ids(in.s_in);
    j["s_out"] = ids(in.s_out);
  }
  return j;
}

RootedGraph as_rooted(const Input& in) {
  try {
    return RootedGraph(in.graph, in.s_in, in.s_out);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
}

void require_connected_in_roots(const Input& in) {
  if (!is_connected(in.graph, in.s_in))
    throw InputError("in-roots must induce a connected subgraph");
}

// Expansion witness over enh(g), in base edges of g.
json expansion_json(const Input& in, const Expansion& ex, bool with_strategy) {
  const Enhancement h = enhance(in.graph, in.s_in, in.s_out);
  json j;
  j["order"] = edge_pairs(in.graph, expansion_order(h, ex));
  j["cost"] = expansion_cost(h, ex);
  if (with_strategy) {
    j["host_vertices"] = h.host.vertex_count();
    j["strategy"] = moves_json(expansion_to_strategy(as_rooted(in), ex));
  }
  return j;
}

// ---- solve

struct SolveArgs {
  std::string input;
  std::vector<std::string> g6;
  std::string param = "cmms";
  std::optional<int> k;
  bool emit_witness = false;
  std::uint64_t budget = 0;
};

json solve_one(const Input& in, Param p, const SolveArgs& a) {
  const SolveOptions opts{a.budget};
  const GameRules rules = p == Param::cms ? GameRules{false, true}
                          : p == Param::cmms ? GameRules{true, true}
                                             : GameRules{true, false};
  const bool expansion_solver = p == Param::cmp || p == Param::mp;
  if (p != Param::ms && p != Param::mp && !is_connected(in.graph))
    throw InputError(std::string(to_string(p)) + " needs a connected graph");
  if (p == Param::cmp || rules.connected) require_connected_in_roots(in);

  json j;
  std::optional<Expansion> ex;
  std::optional<std::vector<Move>> strategy;
  std::uint64_t states = 0;
  if (a.k) {
    DecideResult d;
    if (expansion_solver) {
      d = p == Param::cmp  ? cmp_decide(as_rooted(in), *a.k, opts)
          : in.rooted()    ? mp_decide(as_rooted(in), *a.k, opts)
                           : mp_decide(in.graph, *a.k, opts);
    } else if (in.rooted()) {
      d = game_decide(in.graph, in.s_in, in.s_out, *a.k, rules, opts);
    } else {
      d = param_decide(p, in.graph, *a.k, opts);
    }
    if (d.verdict == Verdict::budget_exceeded) throw BudgetHit{};
    j["k"] = *a.k;
    j["decision"] = d.yes() ? "yes" : "no";
    ex = d.expansion;
    strategy = d.strategy;
    states = d.stats.states;
  } else {
    SolveResult r;
    try {
      if (expansion_solver) {
        r = p == Param::cmp  ? cmp_value(as_rooted(in), opts)
            : in.rooted()    ? mp_value(as_rooted(in), opts)
                             : mp_value(in.graph, opts);
      } else if (in.rooted()) {
        r = game_value(in.graph, in.s_in, in.s_out, rules, opts);
      } else {
        r = param_value(p, in.graph, opts);
      }
    } catch (const BudgetExceeded&) {
      throw BudgetHit{};
    }
    j["value"] = r.value;
    ex = r.expansion;
    strategy = r.strategy;
    states = r.stats.states;
  }
  j["states"] = states;
  if (a.emit_witness) {
    if (ex && expansion_solver) {
      j["expansion"] = expansion_json(in, *ex, p == Param::cmp);
    } else if (strategy) {
      j["strategy"] = moves_json(*strategy);
      if (in.rooted()) j["host_vertices"] = in.graph.vertex_count() + 2;
    }
  }
  return j;
}

int cmd_solve(const SolveArgs& a, bool timings, std::ostream& out) {
  Report rep("solve", timings);
  Param p;
  try {
    p = parse_param(a.param);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  rep.doc["parameters"] = {{"param", to_string(p)}, {"budget", a.budget}};
  if (a.k) rep.doc["parameters"]["k"] = *a.k;
  rep.doc["parameters"]["emit_witness"] = a.emit_witness;
  const std::vector<Input> inputs = gather_inputs(a.input, a.g6, rep);
  json results = json::array();
  bool budget_hit = false;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    json r = describe(inputs[i], i);
    try {
      r.update(solve_one(inputs[i], p, a));
    } catch (const BudgetHit&) {
      r["status"] = "budget_exceeded";
      budget_hit = true;
    }
    results.push_back(std::move(r));
  }
  rep.doc["results"] = std::move(results);
  rep.finish(out);
  return budget_hit ? kBudgetExhausted : kOk;
}

// ---- mine

struct MineArgs {
  int max_n = 6;
  std::string param = "cmp";
  int k = 1;
  std::string relation = "contraction";
  std::string out;
  std::string corpus;
  std::uint64_t budget = 0;
};

int cmd_mine(const MineArgs& a, bool timings, std::ostream& out) {
  Report rep("mine", timings);
  MineOptions mo;
  try {
    mo.param = parse_param(a.param);
    mo.relation = parse_relation(a.relation);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  mo.n_max = a.max_n;
  mo.k = a.k;
  mo.solve.node_budget = a.budget;
  std::vector<Graph> corpus;
  if (!a.corpus.empty()) {
    const std::string bytes = slurp(a.corpus);
    rep.doc["inputs"].push_back(file_entry(a.corpus, bytes));
    for (const Input& in : parse_inputs(bytes)) corpus.push_back(in.graph);
    mo.corpus = &corpus;
  }
  json params = {{"param", to_string(mo.param)}, {"k", mo.k}, {"n_max", mo.n_max},
                 {"relation", to_string(mo.relation)}, {"budget", a.budget}};
  rep.doc["parameters"] = params;
  MineResult r;
  try {
    r = mine_obstructions(mo);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  json g6 = json::array();
  std::string lines;
  for (const Graph& g : r.obstructions) {
    g6.push_back(graph6_encode(g));
    lines += graph6_encode(g) + "\n";
  }
  json counts = {{"obstructions", r.obstructions.size()},
                 {"examined", r.examined},
                 {"pruned", r.pruned},
                 {"budget_failures", r.budget_failures}};
  rep.doc["results"] = {{"obstructions", g6}};
  rep.doc["counts"] = counts;
  rep.doc["complete_up_to"] = r.complete_up_to;
  if (!a.out.empty()) {
    write_file(a.out, lines);
    json meta = params;
    meta["complete_up_to"] = r.complete_up_to;
    meta["counts"] = counts;
    meta["version"] = version();
    write_file(a.out + ".meta.json", meta.dump(2) + "\n");
    rep.doc["artifacts"] = {a.out, a.out + ".meta.json"};
  }
  rep.finish(out);
  bool budget_hit = false;
  for (auto c : r.budget_failures) budget_hit = budget_hit || c > 0;
  return budget_hit ? kBudgetExhausted : kOk;
}

// ---- verify-paper

struct VerifyArgs {
  std::string families;
  std::uint64_t seed = 20240611;
  bool quick = false;
  std::vector<int> only;
};

int cmd_verify(const VerifyArgs& a, bool timings, std::ostream& out, std::ostream& err) {
  Report rep("verify-paper", timings);
  AcceptanceOptions opts;
  opts.seed = a.seed;
  opts.only = a.only;
  if (!a.families.empty()) {
    if (!std::filesystem::is_directory(a.families)) throw InputError("not a directory: " + a.families);
    opts.families_dir = a.families;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(a.families))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) rep.doc["inputs"].push_back(file_entry(f.string(), slurp(f.string())));
  }
  if (a.quick) {
    opts.class_equality_max_n = 6;
    opts.recognizer_max_n = 7;
  }
  rep.doc["parameters"] = {{"seed", a.seed},
                           {"equivalence_max_n", opts.equivalence_max_n},
                           {"roots_per_size", opts.roots_per_size},
                           {"class_equality_max_n", opts.class_equality_max_n},
                           {"recognizer_max_n", opts.recognizer_max_n},
                           {"property_cases", opts.property_cases},
                           {"fan_base_max_n", opts.fan_base_max_n}};
  opts.on_result = [&](const CheckResult& r) { err << format_line(r) << '\n'; };
  const std::vector<CheckResult> results = run_acceptance(opts);
  json list = json::array();
  bool ok = true;
  for (const CheckResult& r : results) {
    json j = {{"id", r.id}, {"name", r.name}, {"status", r.pass ? "PASS" : "FAIL"}, {"detail", r.detail}};
    if (r.skipped_part) j["skipped"] = "external data required";
    if (r.known_divergence) j["known_divergence"] = true;
    if (timings) j["seconds"] = r.seconds;
    list.push_back(std::move(j));
    ok = ok && r.pass;
  }
  rep.doc["results"] = std::move(list);
  rep.finish(out);
  return ok ? kOk : kCheckFailed;
}

// ---- branches / glue

std::vector<RootedGraph> read_rooted_family(const std::string& path, Report& rep) {
  const std::string bytes = slurp(path);
  rep.doc["inputs"].push_back(file_entry(path, bytes));
  std::istringstream in(bytes);
  std::vector<RootedGraph> out;
  try {
    for (NamedRootedGraph& m : read_family(in)) out.push_back(std::move(m.rooted));
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  for (const RootedGraph& rg : out) {
    try {
      root_vertex(rg);
    } catch (const std::invalid_argument& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  return out;
}

struct BranchArgs {
  int k = 1;
  std::string base;
  int base_size = 5;
  int base_max_n = 7;
  bool count_only = false;
  std::string out;
};

int cmd_branches(const BranchArgs& a, bool timings, std::ostream& out) {
  Report rep("branches", timings);
  if (a.k < 1) throw InputError("-k must be at least 1");
  std::vector<RootedGraph> base;
  BigInt base_size = a.base_size;
  if (!a.base.empty()) {
    base = read_rooted_family(a.base, rep);
    base_size = base.size();
  } else if (!a.count_only) {
    base = mine_fan_base(a.base_max_n).members;
    base_size = base.size();
  }
  rep.doc["parameters"] = {{"k", a.k}, {"count_only", a.count_only}};
  if (a.base.empty() && !a.count_only) rep.doc["parameters"]["base_max_n"] = a.base_max_n;
  json res;
  res["base_size"] = base_size.str();
  res["branch_count"] = branch_count(a.k, base_size).str();
  res["obr_count"] = obr_count(a.k, base_size).str();
  if (base_size == 5) {
    res["branch_bound_holds"] = branch_bound_holds(a.k);
    res["obr_bound_holds"] = obr_bound_holds(a.k);
  }
  if (!a.count_only) {
    if (a.k > 3) throw InputError("materialising branches is limited to k <= 3; use --count-only");
    const std::vector<Branch> branches = branch_set(a.k, base);
    json list = json::array();
    std::string lines;
    for (const Branch& b : branches) {
      list.push_back({{"g6", graph6_encode(b.rooted.graph)},
                      {"root", b.root},
                      {"trunk", {b.trunk.u, b.trunk.v}}});
      lines += rooted_to_json_line(b.rooted) + "\n";
    }
    res["branches_built"] = branches.size();
    if (a.out.empty())
      res["branches"] = std::move(list);
    else {
      write_file(a.out, lines);
      rep.doc["artifacts"] = {a.out};
    }
  }
  rep.doc["results"] = std::move(res);
  rep.finish(out);
  return kOk;
}

struct GlueArgs {
  std::string family;
  int m = 3;
  std::string out;
};

int cmd_glue(const GlueArgs& a, bool timings, std::ostream& out) {
  Report rep("glue", timings);
  if (a.m < 1) throw InputError("-m must be at least 1");
  const std::vector<RootedGraph> fam = read_rooted_family(a.family, rep);
  rep.doc["parameters"] = {{"m", a.m}};
  const std::vector<Graph> graphs = glue_family_at_root(fam, a.m);
  json res = {{"family_size", fam.size()}, {"count", graphs.size()}};
  std::string lines;
  json list = json::array();
  for (const Graph& g : graphs) {
    list.push_back(graph6_encode(g));
    lines += graph6_encode(g) + "\n";
  }
  if (a.out.empty())
    res["graphs"] = std::move(list);
  else {
    write_file(a.out, lines);
    rep.doc["artifacts"] = {a.out};
  }
  rep.doc["results"] = std::move(res);
  rep.finish(out);
  return kOk;
}

// ---- simulate

struct SimulateArgs {
  std::string input;
  std::vector<std::string> g6;
  std::string strategy;
};

int cmd_simulate(const SimulateArgs& a, bool timings, std::ostream& out) {
  Report rep("simulate", timings);
  const std::vector<Input> inputs = gather_inputs(a.input, a.g6, rep);
  if (inputs.size() != 1) throw InputError("simulate takes exactly one graph");
  const Input& in = inputs.front();
  const std::string bytes = slurp(a.strategy);
  rep.doc["inputs"].push_back(file_entry(a.strategy, bytes));
  std::vector<Move> moves;
  try {
    std::istringstream s(bytes);
    moves = read_strategy(s);
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
  std::optional<Enhancement> h;
  if (in.rooted()) h = enhance(as_rooted(in));
  const Graph& host = h ? h->host : in.graph;
  Trace t;
  try {
    t = simulate(host, moves);
  } catch (const MoveError& e) {
    throw InputError(e.what());
  }
  json steps = json::array();
  for (std::size_t i = 1; i < t.steps.size(); ++i) {
    const TraceStep& st = t.steps[i];
    steps.push_back({{"move", to_string(moves[i - 1])},
                     {"searchers", st.searcher_count()},
                     {"clean", edge_pairs(host, st.clean.members())},
                     {"recontaminated", st.recontaminated}});
  }
  json res = {{"graph", describe(in, 0)},
              {"steps", std::move(steps)},
              {"width", width(t)},
              {"complete", is_complete(t)},
              {"monotone", is_monotone(t)},
              {"connected", is_connected(t)}};
  if (h) res["rooted_complete"] = is_rooted_complete(*h, t);
  rep.doc["results"] = std::move(res);
  rep.finish(out);
  return kOk;
}

// ---- enumerate

struct EnumerateArgs {
  int n = 4;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a, bool timings, std::ostream& out) {
  Report rep("enumerate", timings);
  if (a.n < 1 || a.n > 10) throw InputError("-n must be between 1 and 10");
  rep.doc["parameters"] = {{"n", a.n}};
  const std::vector<Graph> graphs = enumerate_connected_graphs(a.n);
  json res = {{"count", graphs.size()}};
  std::string lines;
  json list = json::array();
  for (const Graph& g : graphs) {
    list.push_back(graph6_encode(g));
    lines += graph6_encode(g) + "\n";
  }
  if (a.out.empty())
    res["graphs"] = std::move(list);
  else {
    write_file(a.out, lines);
    rep.doc["artifacts"] = {a.out};
  }
  rep.doc["results"] = std::move(res);
  rep.finish(out);
  return kOk;
}

// ---- recognize

struct RecognizeArgs {
  std::string input;
  std::vector<std::string> g6;
  std::uint64_t budget = 0;
};

json vertex_lists(const std::vector<VertexSet>& sets) {
  json a = json::array();
  for (const VertexSet& s : sets) a.push_back(s.members());
  return a;
}

int cmd_recognize(const RecognizeArgs& a, bool timings, std::ostream& out) {
  Report rep("recognize", timings);
  rep.doc["parameters"] = {{"budget", a.budget}};
  const std::vector<Input> inputs = gather_inputs(a.input, a.g6, rep);
  json results = json::array();
  bool budget_hit = false;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Input& in = inputs[i];
    if (in.rooted()) throw InputError("recognize takes unrooted graphs");
    if (!is_connected(in.graph)) throw InputError("recognize needs connected graphs");
    json j = describe(in, i);
    try {
      const RecognizerResult r = decide_cmms_le_2(in.graph, SolveOptions{a.budget});
      j["cmms_at_most_2"] = r.answer;
      j["fast_path"] = r.fast_path;
      if (!r.fast_path) j["fallback_reason"] = r.fallback_reason;
      if (r.spine) {
        json sp;
        sp["central_cuts"] = r.spine->central_cuts;
        sp["central_blocks"] = vertex_lists(r.spine->central_blocks);
        sp["left_block"] = r.spine->left_block.members();
        sp["right_block"] = r.spine->right_block.members();
        json labels = json::array();
        for (BlockLabel l : r.labels) labels.push_back(to_string(l));
        sp["labels"] = std::move(labels);
        j["spine"] = std::move(sp);
      }
      if (r.certificate) j["certificate"] = expansion_json(in, *r.certificate, false);
    } catch (const BudgetExceeded&) {
      j["status"] = "budget_exceeded";
      budget_hit = true;
    }
    results.push_back(std::move(j));
  }
  rep.doc["results"] = std::move(results);
  rep.finish(out);
  return budget_hit ? kBudgetExhausted : kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected and monotone mixed graph searching toolkit", "gso"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  app.fallthrough();
  bool timings = false;
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Search numbers of graphs or rooted graphs");
  s->add_option("input", solve.input, "Graph6 or rooted JSON lines file");
  s->add_option("--g6", solve.g6, "Inline graph6 string (repeatable)");
  s->add_option("--param", solve.param, "ms, cms, cmms, cmp or mp")->capture_default_str();
  s->add_option("-k", solve.k, "Decide param <= k instead of computing the value");
  s->add_flag("--emit-witness", solve.emit_witness, "Include an optimal expansion or strategy");
  s->add_option("--budget", solve.budget, "Node budget per decision (0: unlimited)");

  MineArgs mine;
  auto* m = app.add_subcommand("mine", "Mine minimal obstructions by exhaustive enumeration");
  m->add_option("--max-n", mine.max_n, "Largest vertex count")->capture_default_str();
  m->add_option("--param", mine.param, "ms, cms, cmms, cmp or mp")->capture_default_str();
  m->add_option("-k", mine.k, "Threshold")->capture_default_str();
  m->add_option("--relation", mine.relation, "contraction or minor")->capture_default_str();
  m->add_option("--out", mine.out, "Write graph6 lines here and metadata to <out>.meta.json");
  m->add_option("--corpus", mine.corpus, "Examine these graphs instead of enumerating");
  m->add_option("--budget", mine.budget, "Node budget per decision (0: unlimited)");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-paper", "Run the reproducibility suite");
  v->add_option("--families", verify.families, "Directory of obstruction family files");
  v->add_option("--seed", verify.seed, "Seed for randomised checks")->capture_default_str();
  v->add_flag("--quick", verify.quick, "Smaller exhaustive ranges for checks 4 and 8");
  v->add_option("--only", verify.only, "Run only these checks");

  BranchArgs br;
  auto* b = app.add_subcommand("branches", "Branch family of a level and its counts");
  b->add_option("-k", br.k, "Level")->capture_default_str();
  b->add_option("--base", br.base, "Level-1 family file (default: mined fan base)");
  b->add_option("--base-size", br.base_size, "Base size for --count-only without --base")->capture_default_str();
  b->add_option("--base-max-n", br.base_max_n, "Vertex bound when mining the base")->capture_default_str();
  b->add_flag("--count-only", br.count_only, "Exact counts only");
  b->add_option("--out", br.out, "Write branches as rooted JSON lines here");

  GlueArgs gl;
  auto* g = app.add_subcommand("glue", "Glue every m-multiset of a family at its roots");
  g->add_option("--family", gl.family, "Family file of singly rooted members")->required();
  g->add_option("-m", gl.m, "Multiset size")->capture_default_str();
  g->add_option("--out", gl.out, "Write graph6 lines here");

  SimulateArgs sim;
  auto* si = app.add_subcommand("simulate", "Replay a strategy and report the trace");
  si->add_option("input", sim.input, "Graph6 or rooted JSON line file");
  si->add_option("--g6", sim.g6, "Inline graph6 string");
  si->add_option("--strategy", sim.strategy, "Strategy as JSON lines")->required();

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "Connected graphs up to isomorphism");
  e->add_option("-n", en.n, "Vertex count")->capture_default_str();
  e->add_option("--out", en.out, "Write graph6 lines here");

  RecognizeArgs rec;
  auto* r = app.add_subcommand("recognize", "Decide cmms <= 2 by decomposition");
  r->add_option("input", rec.input, "Graph6 file");
  r->add_option("--g6", rec.g6, "Inline graph6 string (repeatable)");
  r->add_option("--budget", rec.budget, "Node budget per decision (0: unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*s) return cmd_solve(solve, timings, out);
    if (*m) return cmd_mine(mine, timings, out);
    if (*v) return cmd_verify(verify, timings, out, err);
    if (*b) return cmd_branches(br, timings, out);
    if (*g) return cmd_glue(gl, timings, out);
    if (*si) return cmd_simulate(sim, timings, out);
    if (*e) return cmd_enumerate(en, timings, out);
    if (*r) return cmd_recognize(rec, timings, out);
  } catch (const InputError& ex) {
    err << "gso: " << ex.what() << '\n';
    return kParseError;
  } catch (const BudgetExceeded& ex) {
    err << "gso: " << ex.what() << '\n';
    return kBudgetExhausted;
  } catch (const std::exception& ex) {
    err << "gso: " << ex.what() << '\n';
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace gso::cli
