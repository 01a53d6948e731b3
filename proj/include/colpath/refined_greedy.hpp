#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "colpath/colouring.hpp"
#include "colpath/graph.hpp"

namespace colpath {

// Order in which uncoloured vertices of one colour class are processed.
// The assigned labels do not depend on this choice (classes are
// independent sets), but the trace does.
enum class OrderPolicy {
  kAscendingIndex,
  kSeededShuffle,
};

// Output of the refined greedy relabelling: a proper, gap-free labelling
// in which every vertex with label L has, for each i < L, a neighbour with
// label i and a strictly smaller input colour.
struct Labelling {
  std::vector<int> labels;
  std::vector<Vertex> order_trace;  // processing order actually used

  int operator[](Vertex v) const { return labels[v]; }
  int max_label() const;
};

// Relabels the graph: walk the distinct colours of `beta` in ascending
// order and give each vertex of that colour the least positive label not
// present among its neighbours.  Throws ImproperColouringError unless
// `beta` is a proper colouring of `g`.
Labelling refined_greedy(const Graph& g, const Colouring& beta,
                         OrderPolicy policy = OrderPolicy::kAscendingIndex,
                         std::uint64_t seed = 0);

using VertexPath = std::vector<Vertex>;

// Extracts the decreasing path from v whose non-head labels are exactly X
// (each once, in descending order).  X must be a subset of
// {1, ..., alpha(v)-1} (InvalidLabelSubsetError otherwise).  When several
// witnesses exist the one with the smallest colour, then smallest index,
// is taken.  A missing witness means `alpha` is not genuine refined-greedy
// output for (g, beta) and raises WitnessMissingError.
VertexPath decreasing_path(const Graph& g, const Colouring& beta,
                           const Labelling& alpha, Vertex v,
                           std::span<const int> label_subset);

// True iff p is a path in g along which both the label and the colour
// strictly decrease.
bool is_decreasing_path(const Graph& g, const Colouring& beta,
                        const Labelling& alpha, std::span<const Vertex> p);

// True iff p is a path with pairwise-distinct colours whose tail (all
// vertices but the first) is a decreasing path.
bool is_almost_decreasing_path(const Graph& g, const Colouring& beta,
                               const Labelling& alpha, std::span<const Vertex> p);

// Vertices reachable from v by a decreasing path, v itself included.
// Sorted ascending.  Intended for a vertex of maximum label.
std::vector<Vertex> forced_vertices(const Graph& g, const Colouring& beta,
                                    const Labelling& alpha, Vertex v);

}  // namespace colpath
