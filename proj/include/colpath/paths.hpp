#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "colpath/colouring.hpp"
#include "colpath/graph.hpp"
#include "colpath/refined_greedy.hpp"

namespace colpath {

struct PathClass {
  bool colourful = false;  // all colours on the path distinct
  bool induced = false;    // no edge between non-consecutive path vertices
};

// Computes both flags by direct definition.  Throws NotAPathError when the
// sequence is empty, repeats a vertex, or breaks consecutive adjacency.
PathClass classify_path(const Graph& g, const Colouring& beta,
                        std::span<const Vertex> p);

// A colourful path on exactly chi(g) vertices with strictly decreasing
// colours: relabel with the refined greedy, take the lowest-index vertex
// labelled chi(g), and extract the decreasing path through labels
// chi(g)-1, ..., 1.
VertexPath colourful_path(const Graph& g, const Colouring& beta,
                          std::uint64_t chi_budget = kDefaultChiBudget);

// Same construction with the chromatic number already known and a chosen
// relabelling order (the path exists under any order).
VertexPath colourful_path(const Graph& g, const Colouring& beta, int chi,
                          OrderPolicy policy = OrderPolicy::kAscendingIndex,
                          std::uint64_t seed = 0);

struct PathSearchOptions {
  // Emit only one orientation of each path (first endpoint < last).  Off by
  // default; closure and existence questions are orientation-invariant.
  bool symmetry_pruning = false;
};

// Exhaustive DFS for an induced colourful path on exactly `target`
// vertices: a prefix extends by w iff w is adjacent to the last vertex,
// non-adjacent to every earlier one, and carries an unused colour.  Start
// vertices and neighbours are tried in ascending order; the first complete
// path is returned.  target above n or above the number of distinct
// colours short-circuits to absent.
std::optional<VertexPath> find_induced_colourful_path(
    const Graph& g, const Colouring& beta, int target,
    const PathSearchOptions& options = {});

// Enumerates every colourful path on exactly `target` vertices (induced
// ones only when `induced_only`), in DFS order.  The visitor returns false
// to stop early.
void enumerate_colourful_paths(const Graph& g, const Colouring& beta,
                               int target, bool induced_only,
                               const std::function<bool(const VertexPath&)>& visit,
                               const PathSearchOptions& options = {});

// True iff the endpoints of p are adjacent, closing a colourful cycle.
// Requires p to be a colourful path on exactly girth(g) vertices; anything
// else raises PreconditionError.
bool closes_colourful_cycle(const Graph& g, const Colouring& beta,
                            std::span<const Vertex> p);

inline constexpr int kOracleVertexCap = 12;

// Independent oracle: walks every sequence of distinct vertices of length
// `target` and applies the path, induced and colourful definitions
// literally to the complete sequence, with no constraint-driven pruning.
// Guarded to n <= 12 (GraphTooLargeForOracleError).
std::optional<VertexPath> brute_force_induced_colourful_path(
    const Graph& g, const Colouring& beta, int target);

}  // namespace colpath
