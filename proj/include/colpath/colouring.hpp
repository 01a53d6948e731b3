#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "colpath/graph.hpp"

namespace colpath {

// Per-vertex positive colours.  Values need not be contiguous; properness
// is a checked property, never an assumption.
struct Colouring {
  std::vector<int> values;

  int size() const { return static_cast<int>(values.size()); }
  int operator[](Vertex v) const { return values[v]; }

  bool operator==(const Colouring&) const = default;
};

// Reads "c0 c1 c2 ..." (whitespace-separated positive integers).  Throws
// ImproperColouringError naming the offending token on anything else.
Colouring parse_colouring(std::string_view text);

// One line, space-separated, no trailing newline.
std::string format_colouring(const Colouring& c);

struct ProperCheck {
  bool proper = true;
  // First violating edge in (u, neighbour) scan order when !proper.
  Vertex u = -1;
  Vertex v = -1;
};

// Throws LengthMismatchError when c's length differs from the graph's n.
ProperCheck validate_proper(const Graph& g, const Colouring& c);

// Partition of the vertices into independent classes, canonical form:
// class i contains the smallest vertex not in classes 0..i-1.
struct ColourPartition {
  std::vector<std::vector<Vertex>> classes;

  int class_count() const { return static_cast<int>(classes.size()); }

  // Colouring with class index + 1 as the colour of its members.
  Colouring to_colouring(int n) const;

  bool operator==(const ColourPartition&) const = default;
};

// Number of colours used by saturation-ordered (DSATUR) greedy; an upper
// bound for the chromatic number.  The witness is a proper colouring.
Colouring dsatur_colouring(const Graph& g);
int greedy_upper_bound(const Graph& g);

inline constexpr std::uint64_t kDefaultChiBudget = 200'000'000;

struct ChromaticResult {
  int chi = 0;
  Colouring witness;  // proper colouring on exactly chi colours
};

// Exact chromatic number by k-colourability backtracking, k ascending from
// a cheap lower bound (1, 2 with an edge, 3 with an odd cycle) up to the
// DSATUR bound.  Search order: vertices by descending degree, colours
// ascending.  Throws SearchBudgetExceededError past `budget` search nodes
// and PreconditionError for the empty graph.
ChromaticResult chromatic_number(const Graph& g,
                                 std::uint64_t budget = kDefaultChiBudget);

inline constexpr std::uint64_t kDefaultPartitionLimit = 10'000'000;

// Emits every partition of V into independent classes exactly once, in
// canonical restricted-growth order (each vertex tried against existing
// classes in order, then a new class).  The visitor returns false to stop
// early.  Throws EnumerationLimitExceededError when a partition beyond
// `limit` would be emitted, and PreconditionError for the empty graph.
void enumerate_proper_partitions(const Graph& g, std::uint64_t limit,
                                 const std::function<bool(const ColourPartition&)>& visit);

// Convenience collector for small graphs.
std::vector<ColourPartition> proper_partitions(const Graph& g,
                                               std::uint64_t limit = kDefaultPartitionLimit);

}  // namespace colpath
