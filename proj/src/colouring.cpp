#include "colpath/colouring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "colpath/errors.hpp"

namespace colpath {

Colouring parse_colouring(std::string_view text) {
  Colouring c;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view token = text.substr(i, j - i);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value <= 0)
      throw ImproperColouringError("colour token \"" + std::string(token) +
                                   "\" is not a positive integer");
    c.values.push_back(value);
    i = j;
  }
  return c;
}

std::string format_colouring(const Colouring& c) {
  std::ostringstream out;
  for (int i = 0; i < c.size(); ++i) {
    if (i) out << ' ';
    out << c.values[i];
  }
  return out.str();
}

ProperCheck validate_proper(const Graph& g, const Colouring& c) {
  if (c.size() != g.vertex_count())
    throw LengthMismatchError("colouring has " + std::to_string(c.size()) +
                              " entries for a graph on " +
                              std::to_string(g.vertex_count()) + " vertices");
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    Vertex bad = -1;
    g.for_each_neighbour(u, [&](Vertex v) {
      if (bad < 0 && v > u && c[v] == c[u]) bad = v;
    });
    if (bad >= 0) return {false, u, bad};
  }
  return {};
}

Colouring ColourPartition::to_colouring(int n) const {
  Colouring c;
  c.values.assign(n, 0);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex v : classes[i]) c.values[v] = static_cast<int>(i) + 1;
  return c;
}

Colouring dsatur_colouring(const Graph& g) {
  const int n = g.vertex_count();
  Colouring c;
  c.values.assign(n, 0);
  std::vector<std::vector<bool>> neighbour_colours(n);
  std::vector<int> saturation(n, 0);
  for (Vertex v = 0; v < n; ++v) neighbour_colours[v].assign(n + 2, false);

  for (int step = 0; step < n; ++step) {
    // Highest saturation, tie by degree, then lowest index.
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (c.values[v] != 0) continue;
      if (pick < 0 || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    int colour = 1;
    while (neighbour_colours[pick][colour]) ++colour;
    c.values[pick] = colour;
    g.for_each_neighbour(pick, [&](Vertex w) {
      if (!neighbour_colours[w][colour]) {
        neighbour_colours[w][colour] = true;
        ++saturation[w];
      }
    });
  }
  return c;
}

int greedy_upper_bound(const Graph& g) {
  Colouring c = dsatur_colouring(g);
  return c.size() == 0 ? 0 : *std::max_element(c.values.begin(), c.values.end());
}

namespace {

// True when g has an odd closed walk, i.e. is not bipartite.
bool has_odd_cycle(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < n; ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      bool odd = false;
      g.for_each_neighbour(u, [&](Vertex w) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          odd = true;
        }
      });
      if (odd) return true;
    }
  }
  return false;
}

struct KColourSearch {
  const Graph& g;
  int k;
  std::uint64_t* budget;
  std::vector<Vertex> order;   // descending degree, ties by index
  std::vector<int> assigned;   // colour per vertex, 0 = none

  bool run() {
    const int n = g.vertex_count();
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return g.degree(a) > g.degree(b);
    });
    assigned.assign(n, 0);
    return extend(0, 0);
  }

  bool extend(int pos, int used) {
    if (pos == static_cast<int>(order.size())) return true;
    Vertex v = order[pos];
    // Colours up to one past the maximum already used; a k-colouring always
    // has a representative of this form up to renaming.
    int top = std::min(k, used + 1);
    for (int colour = 1; colour <= top; ++colour) {
      if (*budget == 0)
        throw SearchBudgetExceededError("chromatic search budget exhausted");
      --*budget;
      bool clash = false;
      g.for_each_neighbour(v, [&](Vertex w) {
        if (assigned[w] == colour) clash = true;
      });
      if (clash) continue;
      assigned[v] = colour;
      if (extend(pos + 1, std::max(used, colour))) return true;
      assigned[v] = 0;
    }
    return false;
  }
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
  const int n = g.vertex_count();
  if (n < 1) throw PreconditionError("chromatic number of the empty graph");

  Colouring upper = dsatur_colouring(g);
  int ub = *std::max_element(upper.values.begin(), upper.values.end());
  int lb = 1;
  if (g.edge_count() > 0) lb = 2;
  if (lb == 2 && has_odd_cycle(g)) lb = 3;

  for (int k = lb; k < ub; ++k) {
    KColourSearch search{g, k, &budget};
    if (search.run()) {
      Colouring witness;
      witness.values.assign(n, 0);
      for (Vertex v = 0; v < n; ++v) witness.values[v] = search.assigned[v];
      return {k, std::move(witness)};
    }
  }
  return {ub, std::move(upper)};
}

namespace {

struct PartitionEnumerator {
  const Graph& g;
  std::uint64_t limit;
  const std::function<bool(const ColourPartition&)>& visit;

  ColourPartition partition;
  std::vector<std::vector<std::uint64_t>> class_masks;
  std::uint64_t emitted = 0;
  bool stopped = false;

  void run() {
    descend(0);
  }

  void descend(Vertex v) {
    if (stopped) return;
    if (v == g.vertex_count()) {
      if (emitted == limit)
        throw EnumerationLimitExceededError(
            "proper-partition enumeration exceeded limit of " +
            std::to_string(limit));
      ++emitted;
      if (!visit(partition)) stopped = true;
      return;
    }
    auto row = g.row(v);
    for (std::size_t i = 0; i < partition.classes.size() && !stopped; ++i) {
      bool independent = true;
      for (std::size_t w = 0; w < row.size(); ++w) {
        if (class_masks[i][w] & row[w]) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      partition.classes[i].push_back(v);
      class_masks[i][v >> 6] |= std::uint64_t{1} << (v & 63);
      descend(v + 1);
      class_masks[i][v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      partition.classes[i].pop_back();
    }
    if (stopped) return;
    partition.classes.push_back({v});
    class_masks.emplace_back(row.size(), 0);
    class_masks.back()[v >> 6] |= std::uint64_t{1} << (v & 63);
    descend(v + 1);
    class_masks.pop_back();
    partition.classes.pop_back();
  }
};

}  // namespace

void enumerate_proper_partitions(const Graph& g, std::uint64_t limit,
                                 const std::function<bool(const ColourPartition&)>& visit) {
  if (g.vertex_count() < 1)
    throw PreconditionError("partition enumeration needs at least one vertex");
  PartitionEnumerator e{g, limit, visit};
  e.run();
}

std::vector<ColourPartition> proper_partitions(const Graph& g, std::uint64_t limit) {
  std::vector<ColourPartition> out;
  enumerate_proper_partitions(g, limit, [&](const ColourPartition& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace colpath
