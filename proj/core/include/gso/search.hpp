#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"

namespace gso {

enum class MoveKind { place, remove, slide };

struct Move {
  MoveKind kind = MoveKind::place;
  int v = 0;
  int u = -1;  // slide target

  static Move place(int v) { return {MoveKind::place, v, -1}; }
  static Move remove(int v) { return {MoveKind::remove, v, -1}; }
  static Move slide(int v, int u) { return {MoveKind::slide, v, u}; }

  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);
std::string to_string(const std::vector<Move>& moves);

class MoveError : public std::invalid_argument {
 public:
  MoveError(const std::string& what, int step)
      : std::invalid_argument("move " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

struct TraceStep {
  std::vector<int> searchers;  // searchers per vertex
  EdgeSet clean;               // E(S,i)
  EdgeSet newly_cleaned;       // E^(i): edges cleaned by the move (rules A and B)
  EdgeSet pre_closure;         // Q_i
  int sliding_edge = -1;
  bool recontaminated = false;  // E(S,i) strictly inside Q_i

  int searcher_count() const;
};

struct Trace {
  Graph graph;
  std::vector<TraceStep> steps;  // steps[0] is the initial, empty state
};

// Applies the moves to g. Throws MoveError naming the offending move (1-based step).
Trace simulate(const Graph& g, const std::vector<Move>& moves);

// Closure of one step: the edges of q that have no path to an edge outside q through
// unguarded internal vertices.
EdgeSet recontamination_closure(const Graph& g, const EdgeSet& q, const VertexSet& guarded);

int width(const Trace& t);
bool is_complete(const Trace& t);
bool is_monotone(const Trace& t);
bool is_connected(const Trace& t);

// (S_in, S_out)-completeness of a trace played on the enhanced host. The in-condition is
// the relaxed one: until the search starts the clean set stays within E_in plus the base
// edges inside S_in, and it starts at a step where E_in is clean and every in-root with a
// base edge is occupied.
bool is_rooted_complete(const Enhancement& h, const Trace& t);

}  // namespace gso
