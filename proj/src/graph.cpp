#include "colpath/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "colpath/errors.hpp"

namespace colpath {

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  if (n > kMaxVertices)
    throw GraphTooLargeError("vertex count " + std::to_string(n) +
                             " exceeds cap of " + std::to_string(kMaxVertices));
  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loops are not allowed");
    g.set_edge(u, v);
  }
  g.finalize();
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

void Graph::set_edge(Vertex u, Vertex v) {
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::finalize() {
  degrees_.assign(n_, 0);
  int twice_edges = 0;
  for (int v = 0; v < n_; ++v) {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    degrees_[v] = d;
    twice_edges += d;
  }
  edge_count_ = twice_edges / 2;
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degrees_.empty() ? 0 : degrees_[v]);
  for_each_neighbour(v, [&](Vertex u) { out.push_back(u); });
  return out;
}

// Shortest cycle via BFS from every root.  For each non-tree edge (u, w)
// seen while expanding u, dist[u] + dist[w] + 1 bounds a cycle through the
// root; the bound is tight for roots lying on a shortest cycle, so the
// minimum over all roots is exact.
std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] >= best) break;  // deeper levels cannot improve
      g.for_each_neighbour(u, [&](Vertex w) {
        if (w == parent[u]) return;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

bool is_triangle_free(const Graph& g) {
  const int n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    auto ru = g.row(u);
    bool triangle = false;
    g.for_each_neighbour(u, [&](Vertex v) {
      if (v < u || triangle) return;
      auto rv = g.row(v);
      for (std::size_t w = 0; w < ru.size(); ++w) {
        if (ru[w] & rv[w]) {
          triangle = true;
          return;
        }
      }
    });
    if (triangle) return false;
  }
  return true;
}

Graph mycielskian(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw PreconditionError("mycielskian needs at least one vertex");
  if (2 * n + 1 > Graph::kMaxVertices)
    throw GraphTooLargeError("mycielskian would exceed the vertex cap");
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(3 * g.edge_count() + n);
  for (Vertex u = 0; u < n; ++u) {
    g.for_each_neighbour(u, [&](Vertex v) {
      if (v > u) edges.emplace_back(u, v);
      edges.emplace_back(n + u, v);  // shadow of u keeps u's neighbourhood
    });
    edges.emplace_back(n + u, 2 * n);
  }
  return Graph::from_edges(2 * n + 1, edges);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> blocks;
  std::vector<bool> seen(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> block;
    std::queue<Vertex> q;
    seen[start] = true;
    q.push(start);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      block.push_back(u);
      g.for_each_neighbour(u, [&](Vertex w) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      });
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace colpath
