#include <algorithm>
#include <cstdint>

#include "gso/io.hpp"

namespace gso {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  put_size(out, n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph graph6_decode(std::string_view s) {
  std::size_t base = 0;
  if (s.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  std::size_t end = s.size();
  while (end > base && (s[end - 1] == '\n' || s[end - 1] == '\r' || s[end - 1] == ' ' ||
                        s[end - 1] == '\t'))
    --end;
  std::size_t pos = base;
  auto take = [&](std::size_t at) -> int {
    if (at >= end) throw ParseError("graph6: unexpected end of input", at);
    int c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", at);
    return c - 63;
  };
  int n = 0;
  if (pos < end && s[pos] == '~') {
    if (pos + 1 < end && s[pos + 1] == '~') throw ParseError("graph6: graph too large", pos);
    n = (take(pos + 1) << 12) | (take(pos + 2) << 6) | take(pos + 3);
    pos += 4;
  } else {
    n = take(pos);
    pos += 1;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6: " + std::to_string(n) + " vertices exceeds capacity", base);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (end - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " adjacency bytes, found " +
                         std::to_string(end - pos),
                     pos + std::min(bytes, end - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      int byte = take(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  if (bits % 6) {
    int last = take(pos + bytes - 1);
    int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  return Graph(n, edges);
}

}  // namespace gso
