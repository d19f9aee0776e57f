#include "gso/obstruction.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "gso/blocks.hpp"
#include "gso/canonical.hpp"
#include "gso/parallel.hpp"
#include "root_gluing.hpp"

namespace gso {

namespace {

bool within(const DecideResult& d) {
  if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
  return d.yes();
}

bool param_at_most(Param p, const Graph& g, int k, const SolveOptions& opts) {
  return within(param_decide(p, g, k, opts));
}

}  // namespace

bool is_obstruction(const Graph& g, Param p, int k, Relation rel, const SolveOptions& opts) {
  if (rel == Relation::minor && p != Param::mp && p != Param::ms)
    throw std::invalid_argument(std::string("the minor relation is not supported for ") + to_string(p));
  if (param_at_most(p, g, k, opts)) return false;
  for (const Graph& h : proper_contractions(g))
    if (!param_at_most(p, h, k, opts)) return false;
  if (rel == Relation::minor) {
    for (const Edge& e : g.edges())
      if (!param_at_most(p, drop_isolated(delete_edge(g, e)), k, opts)) return false;
  }
  return true;
}

// ---- enumeration

std::vector<std::vector<Graph>> enumerate_connected_graphs_up_to(int n_max) {
  if (n_max > 12) throw std::invalid_argument("enumeration is limited to 12 vertices");
  std::vector<std::vector<Graph>> out(std::max(n_max, 0) + 1);
  if (n_max < 1) return out;
  out[1].push_back(Graph(1));
  for (int n = 2; n <= n_max; ++n) {
    // Every connected graph has a vertex whose removal leaves it connected, so joining a
    // new vertex to each nonempty subset of every smaller graph reaches all classes.
    const auto& parents = out[n - 1];
    std::vector<std::vector<std::pair<std::string, Graph>>> found(parents.size());
    parallel_for(parents.size(), [&](std::size_t i) {
      const Graph& p = parents[i];
      std::unordered_set<std::string> local;
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<Edge> edges = p.edges();
        for (int v = 0; v < n - 1; ++v)
          if (mask >> v & 1u) edges.push_back(make_edge(v, n - 1));
        Graph g(n, edges);
        CanonicalForm cf = canonical_form(g);
        if (local.insert(cf.certificate).second)
          found[i].emplace_back(cf.certificate, relabel(g, cf.labelling));
      }
    });
    std::map<std::string, Graph> merged;
    for (auto& list : found)
      for (auto& [cert, g] : list) merged.emplace(cert, std::move(g));
    for (auto& [cert, g] : merged) out[n].push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1) return {};
  return std::move(enumerate_connected_graphs_up_to(n)[n]);
}

// ---- mining

MineResult mine_obstructions(const MineOptions& opts) {
  if (opts.relation == Relation::minor && opts.param != Param::mp && opts.param != Param::ms)
    throw std::invalid_argument(std::string("the minor relation is not supported for ") +
                                to_string(opts.param));
  std::vector<std::vector<Graph>> by_size(std::max(opts.n_max, 0) + 1);
  if (opts.corpus) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : *opts.corpus) {
      const int n = g.vertex_count();
      if (n < 1 || n > opts.n_max || !is_connected(g)) continue;
      CanonicalForm cf = canonical_form(g);
      seen.emplace(std::to_string(n + 1000) + cf.certificate, relabel(g, cf.labelling));
    }
    for (auto& [key, g] : seen) by_size[g.vertex_count()].push_back(g);
  } else {
    by_size = enumerate_connected_graphs_up_to(opts.n_max);
  }

  MineResult r;
  r.examined.assign(by_size.size(), 0);
  r.pruned.assign(by_size.size(), 0);
  r.budget_failures.assign(by_size.size(), 0);
  bool complete = true;
  enum Status : char { plain, pruned, obstruction, budget };
  for (int n = 1; n <= opts.n_max; ++n) {
    const auto& graphs = by_size[n];
    std::vector<char> status(graphs.size(), plain);
    const std::vector<Graph> smaller = r.obstructions;
    parallel_for(graphs.size(), [&](std::size_t i) {
      if (contains_any(graphs[i], smaller, opts.relation)) {
        status[i] = pruned;
        return;
      }
      try {
        if (is_obstruction(graphs[i], opts.param, opts.k, opts.relation, opts.solve))
          status[i] = obstruction;
      } catch (const BudgetExceeded&) {
        status[i] = budget;
      }
    });
    r.examined[n] = graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (status[i] == pruned) ++r.pruned[n];
      if (status[i] == budget) ++r.budget_failures[n];
      if (status[i] == obstruction) r.obstructions.push_back(graphs[i]);
    }
    if (r.budget_failures[n] > 0) complete = false;
    if (complete) r.complete_up_to = n;
  }
  return r;
}

// ---- gluing at roots

int root_vertex(const RootedGraph& rg) {
  const VertexSet roots = rg.s_in | rg.s_out;
  const bool ok = roots.count() == 1 && (rg.s_in.none() || rg.s_in == roots) &&
                  (rg.s_out.none() || rg.s_out == roots);
  if (!ok) throw std::invalid_argument("family member must be rooted on a single vertex");
  return roots.first();
}

std::vector<Graph> glue_family_at_root(const std::vector<RootedGraph>& family, int m) {
  if (m < 1) throw std::invalid_argument("glue_family_at_root: m must be at least 1");
  for (const RootedGraph& rg : family) root_vertex(rg);
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  detail::for_each_multiset(static_cast<int>(family.size()), m, [&](const std::vector<int>& pick) {
    std::vector<const RootedGraph*> members;
    for (int i : pick) members.push_back(&family[i]);
    Graph g = detail::identify_roots(members);
    if (seen.insert(canonical_form(g).certificate).second) out.push_back(std::move(g));
  });
  return out;
}

// ---- fans

bool fan_check_structural(const Graph& g, int v) {
  if (!is_outerplanar(g)) return false;
  const VertexSet rest = g.vertices() - VertexSet::single(v);
  for (const VertexSet& comp : components(g, rest)) {
    int edges = 0;
    bool anchored = false;
    bool path = true;
    comp.for_each([&](int x) {
      const int d = (g.neighbours(x) & comp).count();
      edges += d;
      if (d > 2) path = false;
      if (d <= 1 && g.adjacent(x, v)) anchored = true;
    });
    if (!path || edges / 2 != comp.count() - 1 || !anchored) return false;
  }
  return true;
}

bool fan_check_solver(const Graph& g, int v, const SolveOptions& opts) {
  return within(cmp_decide(RootedGraph::at(g, v), 2, opts));
}

FanBaseResult mine_fan_base(int n_max, const SolveOptions& opts) {
  FanBaseResult r;
  const auto graphs = enumerate_connected_graphs_up_to(n_max);
  r.non_fans.assign(graphs.size(), 0);
  for (int n = 1; n <= n_max; ++n) {
    // Doubly rooted candidates, one per rooted isomorphism class.
    std::vector<RootedGraph> rooted;
    {
      std::map<std::string, RootedGraph> classes;
      for (const Graph& g : graphs[n]) {
        if (!is_outerplanar(g)) continue;
        for (int v = 0; v < n; ++v) {
          RootedGraph rg = RootedGraph::at(g, v);
          classes.emplace(canonical_form(rg).certificate, rg);
        }
      }
      for (auto& [cert, rg] : classes) rooted.push_back(std::move(rg));
    }
    std::vector<char> non_fan(rooted.size(), 0), minimal(rooted.size(), 0);
    parallel_for(rooted.size(), [&](std::size_t i) {
      const RootedGraph& rg = rooted[i];
      const int v = root_vertex(rg);
      if (fan_check_solver(rg.graph, v, opts)) return;
      non_fan[i] = 1;
      for (const Edge& e : rg.graph.edges()) {
        RootedGraph c = contract_edge_rooted(rg, e);
        if (!fan_check_solver(c.graph, root_vertex(c), opts)) return;
      }
      minimal[i] = 1;
    });
    for (std::size_t i = 0; i < rooted.size(); ++i) {
      r.non_fans[n] += non_fan[i];
      if (minimal[i]) r.members.push_back(rooted[i]);
    }
  }
  return r;
}

}  // namespace gso
