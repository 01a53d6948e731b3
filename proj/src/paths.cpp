#include "colpath/paths.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "colpath/errors.hpp"

namespace colpath {

namespace {

void require_path(const Graph& g, std::span<const Vertex> p) {
  if (p.empty()) throw NotAPathError("empty vertex sequence");
  for (Vertex v : p)
    if (v < 0 || v >= g.vertex_count())
      throw NotAPathError("vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] == p[j]) throw NotAPathError("repeated vertex in sequence");
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1]))
      throw NotAPathError("non-adjacent consecutive vertices (" +
                          std::to_string(p[i]) + ", " +
                          std::to_string(p[i + 1]) + ")");
}

}  // namespace

PathClass classify_path(const Graph& g, const Colouring& beta,
                        std::span<const Vertex> p) {
  require_path(g, p);
  PathClass cls{true, true};
  for (std::size_t i = 0; i < p.size() && cls.colourful; ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (beta[p[i]] == beta[p[j]]) {
        cls.colourful = false;
        break;
      }
  for (std::size_t i = 0; i + 2 < p.size() && cls.induced; ++i)
    for (std::size_t j = i + 2; j < p.size(); ++j)
      if (g.has_edge(p[i], p[j])) {
        cls.induced = false;
        break;
      }
  return cls;
}

VertexPath colourful_path(const Graph& g, const Colouring& beta,
                          std::uint64_t chi_budget) {
  return colourful_path(g, beta, chromatic_number(g, chi_budget).chi);
}

VertexPath colourful_path(const Graph& g, const Colouring& beta, int chi,
                          OrderPolicy policy, std::uint64_t seed) {
  Labelling alpha = refined_greedy(g, beta, policy, seed);
  // Labels are gap-free and reach at least chi, so a vertex labelled
  // exactly chi exists; take the lowest index.
  Vertex v = -1;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (alpha[u] == chi) {
      v = u;
      break;
    }
  if (v < 0)
    throw WitnessMissingError("no vertex carries label " + std::to_string(chi));
  std::vector<int> subset;
  for (int x = 1; x < chi; ++x) subset.push_back(x);
  return decreasing_path(g, beta, alpha, v, subset);
}

namespace {

struct PathDfs {
  const Graph& g;
  const Colouring& beta;
  int target;
  bool induced_only;
  bool symmetry_pruning;
  const std::function<bool(const VertexPath&)>& visit;

  VertexPath prefix;
  std::vector<bool> on_path;
  std::vector<bool> colour_used;
  bool done = false;

  void run() {
    const int n = g.vertex_count();
    if (target < 1 || target > n) return;
    std::set<int> colours(beta.values.begin(), beta.values.end());
    if (target > static_cast<int>(colours.size())) return;
    int max_colour = colours.empty() ? 0 : *colours.rbegin();
    on_path.assign(n, false);
    colour_used.assign(max_colour + 1, false);
    for (Vertex v = 0; v < n && !done; ++v) {
      prefix.push_back(v);
      on_path[v] = true;
      colour_used[beta[v]] = true;
      extend();
      colour_used[beta[v]] = false;
      on_path[v] = false;
      prefix.pop_back();
    }
  }

  void extend() {
    if (done) return;
    if (static_cast<int>(prefix.size()) == target) {
      if (symmetry_pruning && prefix.back() < prefix.front()) return;
      if (!visit(prefix)) done = true;
      return;
    }
    Vertex last = prefix.back();
    g.for_each_neighbour(last, [&](Vertex w) {
      if (done || on_path[w] || colour_used[beta[w]]) return;
      if (induced_only) {
        for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
          if (g.has_edge(prefix[i], w)) return;
      }
      prefix.push_back(w);
      on_path[w] = true;
      colour_used[beta[w]] = true;
      extend();
      colour_used[beta[w]] = false;
      on_path[w] = false;
      prefix.pop_back();
    });
  }
};

}  // namespace

std::optional<VertexPath> find_induced_colourful_path(
    const Graph& g, const Colouring& beta, int target,
    const PathSearchOptions& options) {
  if (target < 1) throw PreconditionError("path target must be at least 1");
  if (beta.size() != g.vertex_count())
    throw LengthMismatchError("colouring length does not match the graph");
  std::optional<VertexPath> found;
  PathDfs dfs{g, beta, target, /*induced_only=*/true, options.symmetry_pruning,
              [&](const VertexPath& p) {
                found = p;
                return false;
              }};
  dfs.run();
  return found;
}

void enumerate_colourful_paths(const Graph& g, const Colouring& beta,
                               int target, bool induced_only,
                               const std::function<bool(const VertexPath&)>& visit,
                               const PathSearchOptions& options) {
  if (target < 1) throw PreconditionError("path target must be at least 1");
  if (beta.size() != g.vertex_count())
    throw LengthMismatchError("colouring length does not match the graph");
  PathDfs dfs{g, beta, target, induced_only, options.symmetry_pruning, visit};
  dfs.run();
}

bool closes_colourful_cycle(const Graph& g, const Colouring& beta,
                            std::span<const Vertex> p) {
  try {
    require_path(g, p);
  } catch (const NotAPathError& e) {
    throw PreconditionError(e.what());
  }
  PathClass cls = classify_path(g, beta, p);
  if (!cls.colourful)
    throw PreconditionError("path is not colourful");
  std::optional<int> k = girth(g);
  if (!k) throw PreconditionError("graph has no cycle, so no girth");
  if (static_cast<int>(p.size()) != *k)
    throw PreconditionError("path has " + std::to_string(p.size()) +
                            " vertices, girth is " + std::to_string(*k));
  return g.has_edge(p.front(), p.back());
}

std::optional<VertexPath> brute_force_induced_colourful_path(
    const Graph& g, const Colouring& beta, int target) {
  const int n = g.vertex_count();
  if (n > kOracleVertexCap)
    throw GraphTooLargeForOracleError("oracle is limited to " +
                                      std::to_string(kOracleVertexCap) +
                                      " vertices");
  if (target < 1) throw PreconditionError("path target must be at least 1");
  if (beta.size() != n)
    throw LengthMismatchError("colouring length does not match the graph");
  if (target > n) return std::nullopt;

  // Walk every sequence of distinct vertices; test the definitions only on
  // complete sequences so the search cannot inherit pruning from the
  // implementation it checks.
  VertexPath seq;
  std::vector<bool> used(n, false);
  std::optional<VertexPath> found;

  auto passes = [&](const VertexPath& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!g.has_edge(p[i], p[i + 1])) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 2; j < p.size(); ++j)
        if (g.has_edge(p[i], p[j])) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (beta[p[i]] == beta[p[j]]) return false;
    return true;
  };

  auto walk = [&](auto&& self, int depth) -> void {
    if (found) return;
    if (depth == target) {
      if (passes(seq)) found = seq;
      return;
    }
    for (Vertex v = 0; v < n && !found; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      self(self, depth + 1);
      seq.pop_back();
      used[v] = false;
    }
  };
  walk(walk, 0);
  return found;
}

}  // namespace colpath
