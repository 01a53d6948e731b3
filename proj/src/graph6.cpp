#include "colpath/graph6.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "colpath/errors.hpp"

namespace colpath {

namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126)
    throw MalformedGraph6Error("byte " + std::to_string(i) +
                               " outside graph6 range 63..126");
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (text.ends_with('\n') || text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw MalformedGraph6Error("empty graph6 record");

  // Size bytes: one sextet for n <= 62, '~' + 3 sextets for n < 2^18,
  // '~~' + 6 sextets beyond that.
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text[0] != '~') {
    n = sextet(text, 0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw MalformedGraph6Error("truncated size bytes");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, i);
    pos = 4;
  } else {
    if (text.size() < 8) throw MalformedGraph6Error("truncated size bytes");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, i);
    pos = 8;
  }
  if (n > Graph::kMaxVertices)
    throw GraphTooLargeError("graph6 record encodes " + std::to_string(n) +
                             " vertices, cap is " +
                             std::to_string(Graph::kMaxVertices));

  const std::uint64_t triangle_bits = n * (n - 1) / 2;
  const std::size_t body_len = static_cast<std::size_t>((triangle_bits + 5) / 6);
  if (text.size() - pos != body_len)
    throw MalformedGraph6Error("body length " + std::to_string(text.size() - pos) +
                               ", expected " + std::to_string(body_len));

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::uint64_t bit = 0;
  int current = 0;
  for (Vertex col = 1; col < static_cast<Vertex>(n); ++col) {
    for (Vertex row = 0; row < col; ++row, ++bit) {
      if (bit % 6 == 0) current = sextet(text, pos + bit / 6);
      if (current & (1 << (5 - bit % 6))) edges.emplace_back(row, col);
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < (1 << 18)) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  } else {
    throw GraphTooLargeError("vertex count beyond supported size encoding");
  }

  int group = 0;
  int filled = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

}  // namespace colpath
