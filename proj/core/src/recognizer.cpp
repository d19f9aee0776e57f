#include "gso/recognizer.hpp"

#include <algorithm>

#include "gso/blocks.hpp"

namespace gso {

namespace {

bool decided_yes(const DecideResult& d) {
  if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
  return d.yes();
}

bool piece_is_fan(const Graph& g, const VertexSet& piece, int v, const SolveOptions& opts) {
  const VertexSet root = VertexSet::single(v);
  return decided_yes(cmp_decide(named_induced_subgraph(g, piece, root, root).rooted, 2, opts));
}

struct VertexPieces {
  std::vector<VertexSet> pieces;
  std::vector<bool> fan;

  int piece_containing(int x) const {
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (pieces[i].test(x)) return static_cast<int>(i);
    return -1;
  }
};

VertexPieces analyse_vertex(const Graph& g, int v, const SolveOptions& opts) {
  VertexPieces vp;
  vp.pieces = pieces_at(g, v);
  for (const VertexSet& p : vp.pieces) vp.fan.push_back(piece_is_fan(g, p, v, opts));
  return vp;
}

int count_non_fans(const VertexPieces& vp) {
  int c = 0;
  for (bool f : vp.fan) c += !f;
  return c;
}

}  // namespace

int spine_degree(const Graph& g, int v, const SolveOptions& opts) {
  return count_non_fans(analyse_vertex(g, v, opts));
}

const char* to_string(BlockLabel l) {
  switch (l) {
    case BlockLabel::forward: return "->";
    case BlockLabel::reverse: return "<-";
    case BlockLabel::both: return "<->";
    case BlockLabel::unlabelable: return "none";
  }
  return "?";
}

BlockLabel label_block(const RootedGraph& b_star, const SolveOptions& opts) {
  const bool fwd = decided_yes(cmp_decide(b_star, 2, opts));
  const bool back = decided_yes(cmp_decide(rev(b_star), 2, opts));
  if (fwd && back) return BlockLabel::both;
  if (fwd) return BlockLabel::forward;
  if (back) return BlockLabel::reverse;
  return BlockLabel::unlabelable;
}

SpineAnalysis spine_structure(const Graph& g, const SolveOptions& opts) {
  if (!is_connected(g)) throw std::invalid_argument("spine_structure needs a connected graph");
  SpineAnalysis out;
  const int n = g.vertex_count();
  if (g.edge_count() == 0) {
    out.spine_degrees.assign(n, 0);
    out.reason = "no edges";
    return out;
  }
  const BlockDecomposition bd = blocks_and_cuts(g);
  std::vector<VertexPieces> at(n);
  for (int v = 0; v < n; ++v) {
    at[v] = analyse_vertex(g, v, opts);
    out.spine_degrees.push_back(count_non_fans(at[v]));
  }
  VertexSet central;
  for (int v = 0; v < n; ++v) {
    if (out.spine_degrees[v] >= 3) {
      out.reason = "vertex " + std::to_string(v) + " has spine-degree " +
                   std::to_string(out.spine_degrees[v]);
      return out;
    }
    if (bd.cut_vertices.test(v) && out.spine_degrees[v] == 2) central.set(v);
  }
  if (central.none()) {
    out.reason = "no central cut-vertex";
    return out;
  }

  // Central blocks and the path they form on the central cut-vertices.
  std::vector<std::vector<std::pair<int, VertexSet>>> link(n);
  int links = 0;
  for (const Block& b : bd.blocks) {
    const VertexSet c = b.vertices & central;
    if (c.count() > 2) {
      out.reason = "a block contains " + std::to_string(c.count()) + " central cut-vertices";
      return out;
    }
    if (c.count() == 2) {
      const auto ends = c.members();
      link[ends[0]].emplace_back(ends[1], b.vertices);
      link[ends[1]].emplace_back(ends[0], b.vertices);
      ++links;
    }
  }
  int start = -1;
  for (int c : central.members()) {
    if (link[c].size() > 2) {
      out.reason = "central cut-vertices do not form a path";
      return out;
    }
    if (link[c].size() <= 1 && start < 0) start = c;
  }
  if (start < 0 || links != central.count() - 1) {
    out.reason = "central cut-vertices do not form a path";
    return out;
  }
  SpineStructure s;
  s.central_cuts.push_back(start);
  for (int prev = -1, cur = start;;) {
    int next = -1;
    for (const auto& [other, block] : link[cur])
      if (other != prev) {
        next = other;
        s.central_blocks.push_back(block);
      }
    if (next < 0) break;
    s.central_cuts.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(s.central_cuts.size()) != central.count()) {
    out.reason = "central cut-vertices do not form a path";
    return out;
  }

  const int r = static_cast<int>(s.central_blocks.size());
  const auto& cuts = s.central_cuts;
  // Pieces at c_i lying on the spine (containing a neighbouring central cut-vertex).
  auto spine_piece = [&](int i, int j) { return at[cuts[i]].piece_containing(cuts[j]); };
  VertexSet left, right;
  std::vector<VertexSet> fans(r + 1);
  for (int i = 0; i <= r; ++i) {
    const VertexPieces& vp = at[cuts[i]];
    std::vector<int> on_spine;
    if (i > 0) on_spine.push_back(spine_piece(i, i - 1));
    if (i < r) on_spine.push_back(spine_piece(i, i + 1));
    std::vector<int> off_spine_non_fans;
    fans[i].set(cuts[i]);
    for (int p = 0; p < static_cast<int>(vp.pieces.size()); ++p) {
      if (std::find(on_spine.begin(), on_spine.end(), p) != on_spine.end()) continue;
      if (vp.fan[p])
        fans[i] |= vp.pieces[p];
      else
        off_spine_non_fans.push_back(p);
    }
    for (int p : on_spine)
      if (vp.fan[p]) {
        out.reason = "a spine side of central cut-vertex " + std::to_string(cuts[i]) + " is a fan";
        return out;
      }
    const std::size_t expected = r == 0 ? 2 : (i == 0 || i == r) ? 1 : 0;
    if (off_spine_non_fans.size() != expected) {
      out.reason = "central cut-vertex " + std::to_string(cuts[i]) + " has " +
                   std::to_string(off_spine_non_fans.size()) + " non-fan pieces off the spine";
      return out;
    }
    if (i == 0) left = vp.pieces[off_spine_non_fans[0]];
    if (i == r) right = vp.pieces[off_spine_non_fans.back()];
  }

  const VertexSet none;
  auto single = [](int v) { return VertexSet::single(v); };
  s.extended_blocks.push_back(named_induced_subgraph(g, left, none, single(cuts[0])));
  for (int i = 0; i < r; ++i) {
    const VertexSet span = at[cuts[i]].pieces[spine_piece(i, i + 1)] &
                           at[cuts[i + 1]].pieces[spine_piece(i + 1, i)];
    s.extended_blocks.push_back(named_induced_subgraph(g, span, single(cuts[i]), single(cuts[i + 1])));
  }
  s.extended_blocks.push_back(named_induced_subgraph(g, right, single(cuts[r]), none));
  for (int i = 0; i <= r; ++i)
    s.extended_fans.push_back(named_induced_subgraph(g, fans[i], single(cuts[i]), single(cuts[i])));

  // Vertex classes.
  for (const Block& b : bd.blocks) {
    if (b.vertices.test(cuts[0]) && b.vertices.subset_of(left)) s.left_block = b.vertices;
    if (b.vertices.test(cuts[r]) && b.vertices.subset_of(right)) s.right_block = b.vertices;
  }
  s.a1 = central;
  for (const VertexSet& b : s.central_blocks) s.a2 |= b & bd.cut_vertices;
  s.a2.remove(central);
  s.a3 = (s.left_block | s.right_block) & bd.cut_vertices;
  s.a3.remove(central);

  // The extended blocks and fans must partition E(G).
  EdgeSet covered = g.no_edges();
  int total = 0;
  auto add = [&](const GluePart& p) {
    for (const Edge& e : p.rooted.graph.edges()) {
      covered.insert(g.edge_index(p.names[e.u], p.names[e.v]));
      ++total;
    }
  };
  for (const auto& p : s.extended_blocks) add(p);
  for (const auto& p : s.extended_fans) add(p);
  if (total != g.edge_count() || covered.size() != g.edge_count()) {
    out.reason = "extended blocks and fans do not partition the edges";
    return out;
  }
  out.spine = std::move(s);
  return out;
}

namespace {

std::optional<Expansion> witness(const RootedGraph& rg, const SolveOptions& opts) {
  DecideResult d = cmp_decide(rg, 2, opts);
  if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
  return d.expansion;
}

bool validates(const Graph& g, const Expansion& ex) {
  const Enhancement h = enhance(RootedGraph(g));
  const ExpansionCheck c = check_expansion(h, ex);
  return c.valid && c.monotone && c.connected && expansion_cost(h, ex) <= 2;
}

GluePart reversed(const GluePart& p) { return {rev(p.rooted), p.names}; }

// Glues the parts with their width-2 expansions; nullopt if some part has none.
std::optional<GluedExpansion> glue_parts(const std::vector<GluePart>& parts, const SolveOptions& opts) {
  std::vector<Expansion> exps;
  for (const GluePart& p : parts) {
    auto ex = witness(p.rooted, opts);
    if (!ex) return std::nullopt;
    exps.push_back(std::move(*ex));
  }
  return glue_expansions(parts, exps);
}

}  // namespace

RecognizerResult decide_cmms_le_2(const Graph& g, const SolveOptions& opts) {
  if (!is_connected(g)) throw std::invalid_argument("decide_cmms_le_2 needs a connected graph");
  RecognizerResult res;
  if (g.edge_count() == 0) {
    res.answer = res.fast_path = true;
    res.certificate = Expansion{{enhance(RootedGraph(g)).e_in}};
    return res;
  }
  SpineAnalysis an = spine_structure(g, opts);
  std::string reason = an.reason;

  if (an.spine) {
    const SpineStructure& s = *an.spine;
    for (const GluePart& b : s.extended_blocks) res.labels.push_back(label_block(b.rooted, opts));
    bool fwd = true, back = true;
    for (BlockLabel l : res.labels) {
      fwd = fwd && (l == BlockLabel::forward || l == BlockLabel::both);
      back = back && (l == BlockLabel::reverse || l == BlockLabel::both);
    }
    if (fwd || back) {
      // B_0*, F_1, B_1*, ..., F_{r+1}, B_{r+1}*, read backwards with swapped roots if needed.
      std::vector<GluePart> parts;
      for (std::size_t i = 0; i < s.extended_fans.size(); ++i) {
        parts.push_back(s.extended_blocks[i]);
        if (s.extended_fans[i].rooted.graph.edge_count() > 0) parts.push_back(s.extended_fans[i]);
      }
      parts.push_back(s.extended_blocks.back());
      if (!fwd) {
        std::reverse(parts.begin(), parts.end());
        for (GluePart& p : parts) p = reversed(p);
      }
      auto glued = glue_parts(parts, opts);
      if (!glued)
        reason = "an extended fan has no width-2 expansion";
      else if (!validates(g, glued->expansion))
        reason = "glued expansion does not validate";
      else {
        res.answer = res.fast_path = true;
        res.certificate = std::move(glued->expansion);
      }
    } else {
      reason = "extended block labels admit no common direction";
    }
    res.spine = s;
  } else if (an.reason == "no central cut-vertex") {
    // Every piece at some vertex is a fan: sweep them one after another from that vertex.
    reason = "no vertex with only fan pieces";
    for (int v = 0; v < g.vertex_count() && !res.fast_path; ++v) {
      if (an.spine_degrees[v] != 0) continue;
      const VertexSet root = VertexSet::single(v);
      std::vector<GluePart> parts;
      for (const VertexSet& p : pieces_at(g, v)) parts.push_back(named_induced_subgraph(g, p, root, root));
      auto glued = glue_parts(parts, opts);
      if (!glued) continue;
      Expansion ex = shrink_roots(glued->glued.rooted, glued->expansion, {}, {});
      if (validates(g, ex)) {
        res.answer = res.fast_path = true;
        res.certificate = std::move(ex);
      } else {
        reason = "glued fan expansion does not validate";
      }
    }
    // Otherwise a cut-vertex with a single non-fan piece H: its fans, then H entered at
    // the cut-vertex, or H left at the cut-vertex, then the fans. Cut-vertices with the
    // smallest H are tried first.
    if (!res.fast_path) {
      const VertexSet cuts = blocks_and_cuts(g).cut_vertices;
      std::vector<std::pair<int, int>> order;
      cuts.for_each([&](int v) {
        if (an.spine_degrees[v] == 1) order.emplace_back(0, v);
      });
      for (auto& [size, v] : order)
        for (const VertexSet& p : pieces_at(g, v))
          if (!piece_is_fan(g, p, v, opts)) size = p.count();
      std::sort(order.begin(), order.end());
      if (!order.empty()) reason = "no cut-vertex sweep with width 2";
      for (const auto& [size, v] : order) {
        const VertexSet root = VertexSet::single(v);
        std::vector<GluePart> fans;
        std::optional<VertexSet> heavy;
        for (const VertexSet& p : pieces_at(g, v)) {
          if (piece_is_fan(g, p, v, opts))
            fans.push_back(named_induced_subgraph(g, p, root, root));
          else
            heavy = p;
        }
        for (bool heavy_last : {true, false}) {
          std::vector<GluePart> parts = fans;
          if (heavy_last)
            parts.push_back(named_induced_subgraph(g, *heavy, root, {}));
          else
            parts.insert(parts.begin(), named_induced_subgraph(g, *heavy, {}, root));
          auto glued = glue_parts(parts, opts);
          if (!glued) continue;
          Expansion ex = shrink_roots(glued->glued.rooted, glued->expansion, {}, {});
          if (validates(g, ex)) {
            res.answer = res.fast_path = true;
            res.certificate = std::move(ex);
            break;
          }
        }
        if (res.fast_path) break;
      }
    }
  }

  if (!res.fast_path) {
    res.fallback_reason = reason;
    DecideResult d = cmp_decide(RootedGraph(g), 2, opts);
    if (d.verdict == Verdict::budget_exceeded) throw BudgetExceeded();
    res.answer = d.yes();
    res.certificate = std::move(d.expansion);
  }
  return res;
}

}  // namespace gso
