#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gso/graph.hpp"
#include "gso/rooted.hpp"
#include "gso/search.hpp"

namespace gso {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

std::string graph6_encode(const Graph& g);
// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph graph6_decode(std::string_view s);

// Rooted graphs as single-line JSON objects: {"g6": ..., "s_in": [...], "s_out": [...]}
// with an optional "name".
struct NamedRootedGraph {
  RootedGraph rooted;
  std::string name;
};

std::string rooted_to_json_line(const RootedGraph& rg, const std::string& name = {});
NamedRootedGraph rooted_from_json_line(std::string_view line);

// Reads a family file: JSON lines of rooted graphs, or plain graph6 lines (unrooted).
// Blank lines and lines starting with '#' are skipped. Errors report the line number.
std::vector<NamedRootedGraph> read_family(std::istream& in);
std::vector<NamedRootedGraph> read_family_file(const std::string& path);
std::vector<Graph> read_graph6_file(const std::string& path);

// Strategies as JSON lines: {"op": "p"|"r"|"s", "v": id, "u": id} ("u" for slides only).
std::string move_to_json_line(const Move& m);
std::string strategy_to_json_lines(const std::vector<Move>& moves);
// Errors report the line number.
std::vector<Move> read_strategy(std::istream& in);

}  // namespace gso
