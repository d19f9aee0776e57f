#include "gso/expansion.hpp"

#include <algorithm>

namespace gso {

ExpansionCheck check_expansion(const Enhancement& h, const Expansion& ex) {
  ExpansionCheck c;
  const int m = h.host.edge_count();
  const EdgeSet goal = h.goal();
  auto fail = [&](std::string why) {
    c.valid = false;
    c.violation = std::move(why);
    return c;
  };
  if (ex.sets.empty()) return fail("empty expansion");
  for (std::size_t i = 0; i < ex.sets.size(); ++i)
    if (ex.sets[i].universe() != m)
      return fail("set " + std::to_string(i + 1) + " is not over the enhanced host");
  if (ex.sets.front() != h.e_in) return fail("first set differs from E_in");
  if (ex.sets.back() != goal) return fail("last set differs from E(G*) minus E_out");
  for (std::size_t i = 0; i < ex.sets.size(); ++i) {
    const EdgeSet& a = ex.sets[i];
    if (!h.e_in.subset_of(a) || a.intersects(h.e_out))
      return fail("set " + std::to_string(i + 1) + " must contain E_in and avoid E_out");
    if (i + 1 < ex.sets.size() && (ex.sets[i + 1] - a).size() > 1)
      return fail("set " + std::to_string(i + 2) + " adds more than one edge");
  }
  c.valid = true;
  c.monotone = true;
  c.connected = true;
  for (std::size_t i = 0; i < ex.sets.size(); ++i) {
    if (i > 0 && !ex.sets[i - 1].subset_of(ex.sets[i])) c.monotone = false;
    if (!edges_connected(h.host, ex.sets[i])) c.connected = false;
  }
  return c;
}

std::vector<int> position_costs(const Enhancement& h, const Expansion& ex) {
  ExpansionCheck c = check_expansion(h, ex);
  if (!c.valid) throw InvalidExpansion("invalid expansion: " + c.violation);
  const Graph& g = h.host;
  auto pendant = [&](int e) { return g.degree(g.edge(e).u) == 1 || g.degree(g.edge(e).v) == 1; };
  auto isolated = [&](int e) { return g.degree(g.edge(e).u) == 1 && g.degree(g.edge(e).v) == 1; };
  std::vector<int> costs;
  costs.reserve(ex.sets.size());
  for (std::size_t i = 0; i < ex.sets.size(); ++i) {
    const EdgeSet& a = ex.sets[i];
    int q = 0;
    const int size = a.size();
    if (size >= 2 && i > 0) {
      (a - ex.sets[i - 1]).for_each([&](int e) {
        if (pendant(e)) q = 1;
      });
    } else if (size == 1 && isolated(a.members().front())) {
      q = 1;
    }
    costs.push_back(boundary(g, a).count() + q);
  }
  return costs;
}

int expansion_cost(const Enhancement& h, const Expansion& ex) {
  auto costs = position_costs(h, ex);
  return costs.empty() ? 0 : *std::max_element(costs.begin(), costs.end());
}

Expansion expansion_from_order(const Enhancement& h, const std::vector<int>& base_edges) {
  Expansion ex;
  EdgeSet a = h.e_in;
  ex.sets.push_back(a);
  for (int be : base_edges) {
    if (be < 0 || be >= static_cast<int>(h.host_edge_of_base.size()))
      throw InvalidExpansion("edge order names a non-edge");
    int he = h.host_edge_of_base[be];
    if (a.contains(he)) throw InvalidExpansion("edge order repeats an edge");
    a.insert(he);
    ex.sets.push_back(a);
  }
  return ex;
}

std::vector<int> expansion_order(const Enhancement& h, const Expansion& ex) {
  ExpansionCheck c = check_expansion(h, ex);
  if (!c.valid) throw InvalidExpansion("invalid expansion: " + c.violation);
  if (!c.monotone) throw InvalidExpansion("expansion is not monotone");
  std::vector<int> order;
  for (std::size_t i = 1; i < ex.sets.size(); ++i)
    (ex.sets[i] - ex.sets[i - 1]).for_each([&](int e) { order.push_back(h.base_edge_of_host[e]); });
  return order;
}

}  // namespace gso
