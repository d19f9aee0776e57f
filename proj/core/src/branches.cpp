#include <unordered_set>

#include "gso/canonical.hpp"
#include "gso/obstruction.hpp"
#include "gso/parallel.hpp"
#include "root_gluing.hpp"

namespace gso {

namespace {

int lowest_edge_at(const Graph& g, int v) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).u == v || g.edge(e).v == v) return e;
  throw std::invalid_argument("branch root has no edge");
}

}  // namespace

std::vector<Branch> branch_set(int level, const std::vector<RootedGraph>& base) {
  if (level < 1) throw std::invalid_argument("branch level must be at least 1");
  std::vector<Branch> out;
  std::unordered_set<std::string> seen;
  if (level == 1) {
    for (const RootedGraph& rg : base) {
      const int r = root_vertex(rg);
      Branch b{RootedGraph::at(rg.graph, r), r, rg.graph.edge(lowest_edge_at(rg.graph, r)), 1};
      if (seen.insert(canonical_form(b.rooted).certificate).second) out.push_back(std::move(b));
    }
    return out;
  }
  const std::vector<Branch> prev = branch_set(level - 1, base);
  detail::for_each_multiset(static_cast<int>(prev.size()), 2, [&](const std::vector<int>& pick) {
    Graph joined = detail::identify_roots({&prev[pick[0]].rooted, &prev[pick[1]].rooted});
    const int r = joined.vertex_count();
    std::vector<Edge> edges = joined.edges();
    edges.push_back(make_edge(0, r));
    Branch b{RootedGraph::at(Graph(r + 1, edges), r), r, make_edge(0, r), level};
    if (seen.insert(canonical_form(b.rooted).certificate).second) out.push_back(std::move(b));
  });
  return out;
}

std::vector<Graph> obr_set(int level, const std::vector<RootedGraph>& base) {
  std::vector<RootedGraph> rooted;
  for (const Branch& b : branch_set(level, base)) rooted.push_back(b.rooted);
  return glue_family_at_root(rooted, 3);
}

BigInt branch_count(int level, const BigInt& base_size) {
  if (level < 1) throw std::invalid_argument("branch level must be at least 1");
  BigInt f = base_size;
  for (int l = 2; l <= level; ++l) f = f * (f + 1) / 2;
  return f;
}

BigInt obr_count(int level, const BigInt& base_size) {
  const BigInt f = branch_count(level, base_size);
  return (f + 2) * (f + 1) * f / 6;
}

bool branch_bound_holds(int level) {
  const unsigned e = 1u << (level - 1);
  return branch_count(level) * boost::multiprecision::pow(BigInt(2), e) >=
         2 * boost::multiprecision::pow(BigInt(5), e);
}

bool obr_bound_holds(int level) {
  const unsigned e = 3u << (level - 1);
  return 3 * obr_count(level) * boost::multiprecision::pow(BigInt(2), e) >=
         4 * boost::multiprecision::pow(BigInt(5), e);
}

namespace {

bool decide(const RootedGraph& rg, int k, const SolveOptions& opts,
            const ExpansionConstraints& cons = {}) {
  DecideResult d = cmp_decide(rg, k, opts, cons);
  if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
  return d.yes();
}

// Edges playing the trunk role: the trunk itself, or every root edge at level 1.
std::vector<int> trunk_candidates(const Branch& b) {
  const Graph& g = b.rooted.graph;
  if (b.level > 1) return {g.edge_index(b.trunk)};
  std::vector<int> out;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.edge(e).u == b.root || g.edge(e).v == b.root) out.push_back(e);
  return out;
}

}  // namespace

ObrReport verify_obr(int level, const std::vector<RootedGraph>& base, const SolveOptions& opts) {
  ObrReport r;
  r.level = level;
  const std::vector<Branch> branches = branch_set(level, base);
  r.branches = branches.size();

  std::vector<std::vector<std::string>> branch_issues(branches.size());
  parallel_for(branches.size(), [&](std::size_t i) {
    auto& issues = branch_issues[i];
    const Branch& b = branches[i];
    const std::string tag = "branch " + std::to_string(i) + " (" + to_string(b.rooted.graph) + ")";
    try {
      const RootedGraph plain(b.rooted.graph);
      bool first_ok = false, last_ok = false;
      for (int e : trunk_candidates(b)) {
        if (decide(plain, level, opts, {e, -1}))
          issues.push_back(tag + ": trunk-first search with " + std::to_string(level) + " searchers exists");
        first_ok = first_ok || decide(plain, level + 1, opts, {e, -1});
        last_ok = last_ok || decide(plain, level + 1, opts, {-1, e});
      }
      if (!decide(b.rooted, level + 2, opts))
        issues.push_back(tag + ": no root-guarded search with " + std::to_string(level + 2) + " searchers");
      if (!first_ok)
        issues.push_back(tag + ": no trunk-first search with " + std::to_string(level + 1) + " searchers");
      if (!last_ok)
        issues.push_back(tag + ": no trunk-last search with " + std::to_string(level + 1) + " searchers");
    } catch (const BudgetExceeded&) {
      issues.push_back(tag + ": search budget exhausted");
    }
  });

  const std::vector<Graph> graphs = obr_set(level, base);
  r.graphs = graphs.size();
  std::vector<std::vector<std::string>> graph_issues(graphs.size());
  std::vector<std::size_t> checked(graphs.size(), 0);
  parallel_for(graphs.size(), [&](std::size_t i) {
    auto& issues = graph_issues[i];
    const std::string tag = "graph " + std::to_string(i) + " (" + to_string(graphs[i]) + ")";
    try {
      if (decide(RootedGraph(graphs[i]), level + 1, opts))
        issues.push_back(tag + ": search number at most " + std::to_string(level + 1));
      for (const Graph& h : proper_contractions(graphs[i])) {
        ++checked[i];
        const RootedGraph rh(h);
        if (!decide(rh, level + 1, opts) || decide(rh, level, opts))
          issues.push_back(tag + ": contraction " + to_string(h) + " does not have search number " +
                           std::to_string(level + 1));
      }
    } catch (const BudgetExceeded&) {
      issues.push_back(tag + ": search budget exhausted");
    }
  });
  for (auto& list : branch_issues)
    for (auto& s : list) r.violations.push_back(std::move(s));
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    r.contractions_checked += checked[i];
    for (auto& s : graph_issues[i]) r.violations.push_back(std::move(s));
  }
  return r;
}

}  // namespace gso
