#include <doctest.h>

#include <algorithm>
#include <random>

#include "colpath/colouring.hpp"
#include "colpath/errors.hpp"
#include "colpath/graphs.hpp"
#include "oracles.hpp"

using namespace colpath;

TEST_CASE("colouring text format") {
  Colouring c = parse_colouring("1 2 1 2 3");
  CHECK(c.values == std::vector<int>{1, 2, 1, 2, 3});
  CHECK(format_colouring(c) == "1 2 1 2 3");
  CHECK(parse_colouring("  7\t9 ").values == std::vector<int>{7, 9});
  CHECK(parse_colouring("").values.empty());
  CHECK_THROWS_AS(parse_colouring("1 0 2"), ImproperColouringError);
  CHECK_THROWS_AS(parse_colouring("1 -3"), ImproperColouringError);
  CHECK_THROWS_AS(parse_colouring("1 x"), ImproperColouringError);
}

TEST_CASE("validate_proper finds the first violating edge") {
  Graph c5 = cycle_graph(5);
  CHECK(validate_proper(c5, parse_colouring("1 2 1 2 3")).proper);
  CHECK(validate_proper(c5, parse_colouring("2 5 2 5 9")).proper);

  ProperCheck check = validate_proper(c5, parse_colouring("1 1 2 3 4"));
  CHECK(!check.proper);
  CHECK(check.u == 0);
  CHECK(check.v == 1);

  CHECK_THROWS_AS(validate_proper(c5, parse_colouring("1 2 1")), LengthMismatchError);
}

TEST_CASE("dsatur upper bound") {
  CHECK(greedy_upper_bound(Graph::from_edges(5, {})) == 1);
  CHECK(greedy_upper_bound(complete_graph(4)) == 4);
  CHECK(greedy_upper_bound(cycle_graph(5)) == 3);

  std::mt19937_64 rng(31);
  for (int round = 0; round < 60; ++round) {
    Graph g = oracles::random_connected_graph(2 + static_cast<int>(rng() % 7),
                                              0.4, rng);
    Colouring c = dsatur_colouring(g);
    CHECK(validate_proper(g, c).proper);
    CHECK(greedy_upper_bound(g) >= oracles::brute_chromatic(g));
  }
}

TEST_CASE("chromatic number on known graphs") {
  CHECK(chromatic_number(cycle_graph(5)).chi == 3);
  CHECK(chromatic_number(petersen_graph()).chi == 3);
  CHECK(chromatic_number(grotzsch_graph()).chi == 4);
  CHECK(chromatic_number(complete_graph(2)).chi == 2);
  CHECK(chromatic_number(Graph::from_edges(5, {})).chi == 1);
  CHECK_THROWS_AS(chromatic_number(Graph()), PreconditionError);
}

TEST_CASE("chromatic witness is proper and optimal") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 80; ++round) {
    Graph g = oracles::random_connected_graph(1 + static_cast<int>(rng() % 8),
                                              0.45, rng);
    ChromaticResult result = chromatic_number(g);
    CHECK(validate_proper(g, result.witness).proper);
    int used = *std::max_element(result.witness.values.begin(),
                                 result.witness.values.end());
    CHECK(used == result.chi);
    CHECK(result.chi == oracles::brute_chromatic(g));
  }
}

TEST_CASE("chromatic search budget is enforced") {
  // K4 has lower bound 3 and DSATUR bound 4, so the 3-colourability
  // search must run and immediately exhaust a zero budget.
  CHECK_THROWS_AS(chromatic_number(complete_graph(4), 0), SearchBudgetExceededError);
  CHECK(chromatic_number(complete_graph(4)).chi == 4);
}

TEST_CASE("partition enumeration on tiny graphs") {
  CHECK(proper_partitions(complete_graph(3)).size() == 1);

  // Existing classes are tried before opening a new one, so the merged
  // partition comes first.
  auto p3 = proper_partitions(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].classes == std::vector<std::vector<Vertex>>{{0, 2}, {1}});
  CHECK(p3[1].classes == std::vector<std::vector<Vertex>>{{0}, {1}, {2}});

  CHECK(proper_partitions(cycle_graph(5)).size() == 11);
  CHECK_THROWS_AS(proper_partitions(Graph()), PreconditionError);
}

TEST_CASE("partition enumeration matches the set-partition filter") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 40; ++round) {
    Graph g = oracles::random_connected_graph(1 + static_cast<int>(rng() % 8),
                                              0.35, rng);
    auto mine = proper_partitions(g);
    auto brute = oracles::brute_proper_partitions(g);
    REQUIRE(mine.size() == brute.size());
    for (std::size_t i = 0; i < mine.size(); ++i)
      CHECK(mine[i].classes == brute[i]);

    // Minimum class count over all partitions is the chromatic number.
    int best = g.vertex_count();
    for (const auto& partition : mine)
      best = std::min(best, partition.class_count());
    CHECK(best == chromatic_number(g).chi);
  }
}

TEST_CASE("emitted partitions are canonical independent covers") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 20; ++round) {
    Graph g = oracles::random_connected_graph(2 + static_cast<int>(rng() % 7),
                                              0.4, rng);
    for (const auto& partition : proper_partitions(g)) {
      std::vector<bool> seen(g.vertex_count(), false);
      for (std::size_t i = 0; i < partition.classes.size(); ++i) {
        const auto& cls = partition.classes[i];
        REQUIRE(!cls.empty());
        // Canonical: the class leader is the smallest uncovered vertex.
        for (Vertex v : cls) {
          CHECK(!seen[v]);
          seen[v] = true;
        }
        CHECK(std::is_sorted(cls.begin(), cls.end()));
        for (std::size_t a = 0; a < cls.size(); ++a)
          for (std::size_t b = a + 1; b < cls.size(); ++b)
            CHECK(!g.has_edge(cls[a], cls[b]));
        if (i + 1 < partition.classes.size())
          CHECK(partition.classes[i][0] < partition.classes[i + 1][0]);
      }
      CHECK(std::count(seen.begin(), seen.end(), false) == 0);
    }
  }
}

TEST_CASE("partition limit raises once exceeded") {
  CHECK_THROWS_AS(proper_partitions(cycle_graph(5), 10),
                  EnumerationLimitExceededError);
  CHECK(proper_partitions(cycle_graph(5), 11).size() == 11);

  // Early stop through the visitor is not an error.
  int seen = 0;
  enumerate_proper_partitions(cycle_graph(5), 10, [&](const ColourPartition&) {
    return ++seen < 3;
  });
  CHECK(seen == 3);
}
