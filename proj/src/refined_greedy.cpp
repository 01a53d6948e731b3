#include "colpath/refined_greedy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "colpath/errors.hpp"

namespace colpath {

int Labelling::max_label() const {
  int best = 0;
  for (int l : labels) best = std::max(best, l);
  return best;
}

Labelling refined_greedy(const Graph& g, const Colouring& beta,
                         OrderPolicy policy, std::uint64_t seed) {
  if (beta.size() != g.vertex_count())
    throw ImproperColouringError("input colouring length does not match the graph");
  ProperCheck check = validate_proper(g, beta);
  if (!check.proper)
    throw ImproperColouringError("input colouring is improper at edge (" +
                                 std::to_string(check.u) + ", " +
                                 std::to_string(check.v) + ")");

  // Colour classes keyed by ascending colour value.
  std::map<int, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < g.vertex_count(); ++v) classes[beta[v]].push_back(v);

  Labelling out;
  out.labels.assign(g.vertex_count(), 0);
  out.order_trace.reserve(g.vertex_count());
  std::mt19937_64 rng(seed);
  std::vector<bool> present;

  for (auto& [colour, members] : classes) {
    if (policy == OrderPolicy::kSeededShuffle)
      std::shuffle(members.begin(), members.end(), rng);
    for (Vertex v : members) {
      present.assign(g.degree(v) + 2, false);
      g.for_each_neighbour(v, [&](Vertex u) {
        int l = out.labels[u];
        if (l > 0 && l < static_cast<int>(present.size())) present[l] = true;
      });
      int label = 1;
      while (present[label]) ++label;
      out.labels[v] = label;
      out.order_trace.push_back(v);
    }
  }
  return out;
}

namespace {

// Smallest-colour (then smallest-index) neighbour of `from` carrying the
// wanted label with a colour below `colour_bound`.
Vertex pick_witness(const Graph& g, const Colouring& beta, const Labelling& alpha,
                    Vertex from, int wanted_label, int colour_bound) {
  Vertex best = -1;
  g.for_each_neighbour(from, [&](Vertex u) {
    if (alpha[u] != wanted_label || beta[u] >= colour_bound) return;
    if (best < 0 || beta[u] < beta[best] || (beta[u] == beta[best] && u < best))
      best = u;
  });
  return best;
}

}  // namespace

VertexPath decreasing_path(const Graph& g, const Colouring& beta,
                           const Labelling& alpha, Vertex v,
                           std::span<const int> label_subset) {
  if (v < 0 || v >= g.vertex_count())
    throw PreconditionError("start vertex out of range");
  std::vector<int> wanted(label_subset.begin(), label_subset.end());
  std::sort(wanted.begin(), wanted.end(), std::greater<>());
  if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end())
    throw InvalidLabelSubsetError("label subset contains a repeated label");
  for (int x : wanted)
    if (x < 1 || x >= alpha[v])
      throw InvalidLabelSubsetError("label " + std::to_string(x) +
                                    " outside {1, ..., " +
                                    std::to_string(alpha[v] - 1) + "}");

  VertexPath path{v};
  Vertex current = v;
  for (int x : wanted) {
    Vertex next = pick_witness(g, beta, alpha, current, x, beta[current]);
    if (next < 0)
      throw WitnessMissingError(
          "no neighbour of " + std::to_string(current) + " with label " +
          std::to_string(x) + " and smaller colour; labelling is not "
          "refined-greedy output");
    path.push_back(next);
    current = next;
  }
  return path;
}

namespace {

bool valid_vertices(const Graph& g, std::span<const Vertex> p) {
  for (Vertex v : p)
    if (v < 0 || v >= g.vertex_count()) return false;
  return true;
}

bool consecutive_edges(const Graph& g, std::span<const Vertex> p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.has_edge(p[i], p[i + 1])) return false;
  return true;
}

}  // namespace

bool is_decreasing_path(const Graph& g, const Colouring& beta,
                        const Labelling& alpha, std::span<const Vertex> p) {
  if (p.empty() || !valid_vertices(g, p) || !consecutive_edges(g, p)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (alpha[p[i + 1]] >= alpha[p[i]] || beta[p[i + 1]] >= beta[p[i]])
      return false;
  return true;
}

bool is_almost_decreasing_path(const Graph& g, const Colouring& beta,
                               const Labelling& alpha, std::span<const Vertex> p) {
  if (p.empty() || !valid_vertices(g, p) || !consecutive_edges(g, p)) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (beta[p[i]] == beta[p[j]]) return false;
  if (p.size() <= 1) return true;
  return is_decreasing_path(g, beta, alpha, p.subspan(1));
}

std::vector<Vertex> forced_vertices(const Graph& g, const Colouring& beta,
                                    const Labelling& alpha, Vertex v) {
  std::vector<bool> reached(g.vertex_count(), false);
  std::vector<Vertex> stack{v};
  reached[v] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    g.for_each_neighbour(u, [&](Vertex w) {
      if (!reached[w] && alpha[w] < alpha[u] && beta[w] < beta[u]) {
        reached[w] = true;
        stack.push_back(w);
      }
    });
  }
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (reached[u]) out.push_back(u);
  return out;
}

}  // namespace colpath
