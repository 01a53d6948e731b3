// make_atlas — emit every connected graph on 1..N vertices, one per
// isomorphism class, as sorted graph6 lines (smallest-encoding labelling).
//
// Level n is built from level n-1 by attaching a new vertex to every
// non-empty neighbourhood subset; every connected graph has a non-cut
// vertex, so each isomorphism class is reached.  Duplicates collapse on
// the canonical form.
//
// Usage: make_atlas N   (N <= 10; counts for n = 1..8 are
//        1 1 2 6 21 112 853 11117)

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "colpath/graph.hpp"
#include "colpath/graph6.hpp"

namespace {

using Masks = std::vector<std::uint32_t>;  // neighbour bitmask per vertex

// Lexicographically smallest upper-triangle bit sequence over all vertex
// orderings.  Only placements realising the minimal row bits at each level
// can reach the minimum; a running best prunes branches that fall behind.
// `tight` tracks whether the bits so far equal the incumbent's prefix:
// every incumbent update comes from the current branch's own subtree, so
// the flag stays conservative across updates.
struct Canonizer {
  const Masks& masks;
  int n;
  std::vector<int> placed;
  std::vector<std::uint8_t> current;
  std::vector<std::uint8_t> best;
  bool have_best = false;

  explicit Canonizer(const Masks& m)
      : masks(m), n(static_cast<int>(m.size())) {}

  std::uint32_t row_bits(int w) const {
    std::uint32_t bits = 0;
    for (int i = 0; i < static_cast<int>(placed.size()); ++i)
      bits = (bits << 1) | ((masks[w] >> placed[i]) & 1u);
    return bits;
  }

  void search(std::uint32_t used, bool tight) {
    int level = static_cast<int>(placed.size());
    if (level == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    std::uint32_t min_bits = ~0u;
    for (int w = 0; w < n; ++w)
      if (!(used & (1u << w))) min_bits = std::min(min_bits, row_bits(w));

    bool child_tight = tight;
    if (have_best && tight) {
      int cmp = 0;  // segment vs incumbent segment at the same offset
      for (int i = 0; i < level && cmp == 0; ++i) {
        std::uint8_t mine = (min_bits >> (level - 1 - i)) & 1u;
        std::uint8_t theirs = best[current.size() + i];
        cmp = mine < theirs ? -1 : (mine > theirs ? 1 : 0);
      }
      if (cmp > 0) return;
      child_tight = (cmp == 0);
    }

    for (int w = 0; w < n; ++w) {
      if (used & (1u << w)) continue;
      if (row_bits(w) != min_bits) continue;
      for (int i = level - 1; i >= 0; --i)
        current.push_back((min_bits >> i) & 1u);
      placed.push_back(w);
      search(used | (1u << w), child_tight);
      placed.pop_back();
      current.resize(current.size() - level);
    }
  }
};

std::string canonical_g6(const Masks& masks) {
  Canonizer c(masks);
  c.search(0, true);
  int n = static_cast<int>(masks.size());
  std::vector<std::pair<colpath::Vertex, colpath::Vertex>> edges;
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++bit)
      if (c.best[bit]) edges.emplace_back(row, col);
  return colpath::encode_graph6(colpath::Graph::from_edges(n, edges));
}

Masks masks_from_g6(const std::string& g6) {
  colpath::Graph g = colpath::parse_graph6(g6);
  Masks masks(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    g.for_each_neighbour(v, [&](int u) { masks[v] |= 1u << u; });
  return masks;
}

}  // namespace

int main(int argc, char** argv) {
  int max_n = 8;
  if (argc > 1) max_n = std::atoi(argv[1]);
  if (max_n < 1 || max_n > 10) {
    std::cerr << "usage: make_atlas N   (1 <= N <= 10)\n";
    return 2;
  }

  std::set<std::string> level{"@"};  // the one-vertex graph
  for (const auto& g6 : level) std::cout << g6 << '\n';

  for (int n = 2; n <= max_n; ++n) {
    std::set<std::string> next;
    for (const std::string& g6 : level) {
      Masks parent = masks_from_g6(g6);
      int pn = static_cast<int>(parent.size());
      for (std::uint32_t subset = 1; subset < (1u << pn); ++subset) {
        Masks child = parent;
        child.push_back(subset);
        for (int v = 0; v < pn; ++v)
          if (subset & (1u << v)) child[v] |= 1u << pn;
        next.insert(canonical_g6(child));
      }
    }
    for (const auto& g6 : next) std::cout << g6 << '\n';
    std::cerr << "n=" << n << ": " << next.size() << " connected graphs\n";
    level = std::move(next);
  }
  return 0;
}
