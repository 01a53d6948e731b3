#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace colpath {

// Vertices are dense indices 0..n-1 of the graph they belong to.
using Vertex = int;

// Immutable simple undirected graph stored as symmetric bit rows.
//
// Row v is a bitset over 0..n-1 with bit u set iff uv is an edge.  The
// representation is frozen at construction; all queries are const and safe
// to call concurrently.
class Graph {
 public:
  static constexpr int kMaxVertices = 512;

  Graph() = default;

  // Builds a graph from an edge list.  Rejects self-loops, out-of-range
  // endpoints and vertex counts above the cap.  Duplicate edges collapse.
  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
            (v & 63)) & 1u;
  }

  int degree(Vertex v) const { return degrees_[v]; }

  // Neighbour row of v as raw machine words, for set-intersection queries.
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  // Neighbours of v in ascending order.
  std::vector<Vertex> neighbours(Vertex v) const;

  // Calls fn(u) for each neighbour u of v in ascending order.
  template <typename Fn>
  void for_each_neighbour(Vertex v, Fn&& fn) const {
    const std::uint64_t* r = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        int bit = std::countr_zero(word);
        fn(static_cast<Vertex>((w << 6) + bit));
        word &= word - 1;
      }
    }
  }

  bool operator==(const Graph& other) const = default;

 private:
  void set_edge(Vertex u, Vertex v);
  void finalize();

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> degrees_;
};

// Length of a shortest cycle; empty for forests.
std::optional<int> girth(const Graph& g);

// True iff the graph has no 3-cycle.
bool is_triangle_free(const Graph& g);

// Standard Mycielski construction.  Output layout: originals 0..n-1,
// shadow of i at n+i, apex at 2n.  Rejects results above the vertex cap.
Graph mycielskian(const Graph& g);

// Maximal connected blocks, each sorted ascending, ordered by smallest
// member.  Blocks are disjoint and cover all vertices.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace colpath
