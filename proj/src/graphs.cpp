#include "colpath/graphs.hpp"

#include <utility>
#include <vector>

#include "colpath/errors.hpp"

namespace colpath {

Graph cycle_graph(int k) {
  if (k < 3) throw PreconditionError("a simple cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edges(k, edges);
}

Graph path_graph(int k) {
  if (k < 1) throw PreconditionError("a path needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(k, edges);
}

Graph complete_graph(int k) {
  if (k < 1) throw PreconditionError("a complete graph needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(k, edges);
}

Graph petersen_graph() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph chvatal_graph() {
  return Graph::from_edges(12, {{0, 1}, {0, 4}, {0, 6}, {0, 9}, {1, 2}, {1, 5},
                                {1, 7}, {2, 3}, {2, 6}, {2, 8}, {3, 4}, {3, 7},
                                {3, 9}, {4, 5}, {4, 8}, {5, 10}, {5, 11},
                                {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 10},
                                {9, 10}, {9, 11}});
}

Graph mycielski_tower(int depth) {
  if (depth < 0) throw PreconditionError("tower depth must be non-negative");
  Graph g = complete_graph(2);
  for (int i = 0; i < depth; ++i) g = mycielskian(g);
  return g;
}

Graph grotzsch_graph() { return mycielski_tower(2); }

}  // namespace colpath
