#include <fstream>
#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif
#include <sstream>

#include "gso/io.hpp"

namespace gso {

using json = nlohmann::json;

namespace {

json ids(const VertexSet& s) {
  json a = json::array();
  s.for_each([&](int v) { a.push_back(v); });
  return a;
}

VertexSet parse_ids(const json& a, int n, const char* field) {
  if (!a.is_array()) throw ParseError(std::string("rooted graph: \"") + field + "\" must be an array", 0);
  VertexSet s;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw ParseError(std::string("rooted graph: non-integer id in ") + field, 0);
    int v = x.get<int>();
    if (v < 0 || v >= n) throw ParseError(std::string("rooted graph: id out of range in ") + field, 0);
    s.set(v);
  }
  return s;
}

bool blank_or_comment(const std::string& line) {
  auto p = line.find_first_not_of(" \t\r");
  return p == std::string::npos || line[p] == '#';
}

}  // namespace

std::string rooted_to_json_line(const RootedGraph& rg, const std::string& name) {
  json j;
  j["g6"] = graph6_encode(rg.graph);
  j["s_in"] = ids(rg.s_in);
  j["s_out"] = ids(rg.s_out);
  if (!name.empty()) j["name"] = name;
  return j.dump();
}

NamedRootedGraph rooted_from_json_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("rooted graph: invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("g6") || !j["g6"].is_string())
    throw ParseError("rooted graph: missing \"g6\" string", 0);
  Graph g = graph6_decode(j["g6"].get<std::string>());
  VertexSet in, out;
  if (j.contains("s_in")) in = parse_ids(j["s_in"], g.vertex_count(), "s_in");
  if (j.contains("s_out")) out = parse_ids(j["s_out"], g.vertex_count(), "s_out");
  NamedRootedGraph r;
  try {
    r.rooted = RootedGraph(std::move(g), in, out);
  } catch (const GraphError& e) {
    throw ParseError(std::string("rooted graph: ") + e.what(), 0);
  }
  if (j.contains("name") && j["name"].is_string()) r.name = j["name"].get<std::string>();
  return r;
}

std::vector<NamedRootedGraph> read_family(std::istream& in) {
  std::vector<NamedRootedGraph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    try {
      auto p = line.find_first_not_of(" \t");
      if (line[p] == '{') {
        out.push_back(rooted_from_json_line(line));
      } else {
        NamedRootedGraph r;
        r.rooted = RootedGraph(graph6_decode(line.substr(p)));
        out.push_back(std::move(r));
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    } catch (const GraphError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), 0);
    }
  }
  return out;
}

std::vector<NamedRootedGraph> read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_family(in);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    try {
      out.push_back(graph6_decode(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
    }
  }
  return out;
}

std::string move_to_json_line(const Move& m) {
  json j;
  switch (m.kind) {
    case MoveKind::place: j["op"] = "p"; break;
    case MoveKind::remove: j["op"] = "r"; break;
    case MoveKind::slide: j["op"] = "s"; break;
  }
  j["v"] = m.v;
  if (m.kind == MoveKind::slide) j["u"] = m.u;
  return j.dump();
}

std::string strategy_to_json_lines(const std::vector<Move>& moves) {
  std::string out;
  for (const Move& m : moves) out += move_to_json_line(m) + "\n";
  return out;
}

std::vector<Move> read_strategy(std::istream& in) {
  std::vector<Move> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) continue;
    auto fail = [&](const std::string& why) {
      return ParseError("strategy line " + std::to_string(lineno) + ": " + why, 0);
    };
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw fail(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("op") || !j["op"].is_string() || !j.contains("v") ||
        !j["v"].is_number_integer())
      throw fail("expected {\"op\": ..., \"v\": ...}");
    const std::string op = j["op"].get<std::string>();
    const int v = j["v"].get<int>();
    if (op == "p") {
      out.push_back(Move::place(v));
    } else if (op == "r") {
      out.push_back(Move::remove(v));
    } else if (op == "s") {
      if (!j.contains("u") || !j["u"].is_number_integer()) throw fail("slide without \"u\"");
      out.push_back(Move::slide(v, j["u"].get<int>()));
    } else {
      throw fail("unknown op \"" + op + "\"");
    }
  }
  return out;
}

}  // namespace gso
