#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gso/expansion.hpp"
#include "gso/graph.hpp"
#include "gso/rooted.hpp"
#include "gso/search.hpp"

namespace gso {

enum class Verdict { yes, no, budget_exceeded };

struct SolveStats {
  std::uint64_t states = 0;
  double seconds = 0.0;
};

struct SolveOptions {
  std::uint64_t node_budget = 0;  // 0: unlimited
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded() : std::runtime_error("search budget exhausted") {}
};

struct DecideResult {
  Verdict verdict = Verdict::no;
  std::optional<Expansion> expansion;     // expansion solvers
  std::optional<std::vector<Move>> strategy;  // game solver (moves on its host)
  SolveStats stats;

  bool yes() const { return verdict == Verdict::yes; }
};

struct SolveResult {
  int value = 0;
  std::optional<Expansion> expansion;
  std::optional<std::vector<Move>> strategy;
  SolveStats stats;
};

// Optional restrictions on monotone expansions, given as base edge ids.
struct ExpansionConstraints {
  int first_edge = -1;  // the first base edge added
  int last_edge = -1;   // the last base edge added
};

// ---- expansion calculus (monotone expansions of the enhanced graph)

// Decides whether a monotone expansion of cost <= k exists; connected=true adds condition 5.
DecideResult decide_expansion(const Graph& g, const VertexSet& s_in, const VertexSet& s_out, int k,
                              bool connected, const SolveOptions& opts = {},
                              const ExpansionConstraints& cons = {});
// Iterates k = 0, 1, ... Throws BudgetExceeded if a decision runs out of budget, and
// std::invalid_argument when the constraints admit no expansion at all.
SolveResult expansion_value(const Graph& g, const VertexSet& s_in, const VertexSet& s_out,
                            bool connected, const SolveOptions& opts = {},
                            const ExpansionConstraints& cons = {});

// Requires G[S_in] connected (throws std::invalid_argument otherwise).
DecideResult cmp_decide(const RootedGraph& rg, int k, const SolveOptions& opts = {},
                        const ExpansionConstraints& cons = {});
SolveResult cmp_value(const RootedGraph& rg, const SolveOptions& opts = {});
DecideResult mp_decide(const RootedGraph& rg, int k, const SolveOptions& opts = {});
SolveResult mp_value(const RootedGraph& rg, const SolveOptions& opts = {});
// Unrooted, possibly disconnected.
DecideResult mp_decide(const Graph& g, int k, const SolveOptions& opts = {});
SolveResult mp_value(const Graph& g, const SolveOptions& opts = {});

// ---- direct game search

struct GameRules {
  bool monotone = false;
  bool connected = false;
};

// Game on enh(g, S_in, S_out) when roots are given, on g itself otherwise. Searchers
// form a set of at most k vertices.
DecideResult game_decide(const Graph& g, const VertexSet& s_in, const VertexSet& s_out, int k,
                         GameRules rules, const SolveOptions& opts = {});
SolveResult game_value(const Graph& g, const VertexSet& s_in, const VertexSet& s_out,
                       GameRules rules, const SolveOptions& opts = {});

DecideResult cms_decide(const Graph& g, int k, const SolveOptions& opts = {});
SolveResult cms_value(const Graph& g, const SolveOptions& opts = {});
DecideResult cmms_decide(const Graph& g, int k, const SolveOptions& opts = {});
SolveResult cmms_value(const Graph& g, const SolveOptions& opts = {});
DecideResult ms_decide(const Graph& g, int k, const SolveOptions& opts = {});
SolveResult ms_value(const Graph& g, const SolveOptions& opts = {});

// ---- parameters by name

enum class Param { ms, cms, cmms, cmp, mp };

const char* to_string(Param p);
Param parse_param(const std::string& s);

// Unrooted decision/value of a parameter. cmp/cmms/cms require a connected graph.
DecideResult param_decide(Param p, const Graph& g, int k, const SolveOptions& opts = {});
SolveResult param_value(Param p, const Graph& g, const SolveOptions& opts = {});

}  // namespace gso
