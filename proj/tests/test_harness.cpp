#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "colpath/errors.hpp"
#include "colpath/graph6.hpp"
#include "colpath/graphs.hpp"
#include "colpath/harness.hpp"
#include "colpath/paths.hpp"
#include "oracles.hpp"

using namespace colpath;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("check_graph verifies small known graphs") {
  CheckOutcome k2 = check_graph(complete_graph(2));
  CHECK(k2.verdict == Verdict::kVerified);
  CHECK(k2.chromatic == 2);
  CHECK(k2.partitions_checked == 0);  // chi <= 2 fast path

  CheckOutcome c5 = check_graph(cycle_graph(5));
  CHECK(c5.verdict == Verdict::kVerified);
  CHECK(c5.chromatic == 3);
  CHECK(c5.girth == 5);
  CHECK(c5.partitions_checked == 11);
  CHECK(c5.counterexamples.empty());
}

TEST_CASE("check_graph scope filters") {
  CheckOutcome k3 = check_graph(complete_graph(3));
  CHECK(k3.verdict == Verdict::kSkipped);
  CHECK(k3.skip_reason == "not triangle-free");

  CheckOptions all;
  all.scope = Scope::kAll;
  k3 = check_graph(complete_graph(3), all);
  // K3 has no induced path on 3 vertices: a genuine counterexample once
  // the triangle-free hypothesis is dropped.
  CHECK(k3.verdict == Verdict::kCounterexample);
  CHECK(k3.partitions_checked == 1);
  REQUIRE(k3.counterexamples.size() == 1);
  CHECK(k3.counterexamples[0].chromatic == 3);
  CHECK(k3.counterexamples[0].graph6 == "Bw");

  // Reproducing the record: the recorded partition admits no path.
  const auto& record = k3.counterexamples[0];
  ColourPartition partition{record.partition};
  CHECK(!find_induced_colourful_path(complete_graph(3),
                                     partition.to_colouring(3),
                                     record.chromatic));

  CheckOptions girth_scope;
  girth_scope.scope = Scope::kGirthGeChiOnly;
  CheckOutcome c5 = check_graph(cycle_graph(5), girth_scope);
  CHECK(c5.verdict == Verdict::kVerified);  // girth 5 >= chi 3
  CheckOutcome k4 = check_graph(complete_graph(4), girth_scope);
  CHECK(k4.verdict == Verdict::kSkipped);   // girth 3 < chi 4
  CheckOutcome p4 = check_graph(path_graph(4), girth_scope);
  CHECK(p4.verdict == Verdict::kVerified);  // forest: no girth bound to fail
}

TEST_CASE("check_graph budget verdicts") {
  CheckOptions tiny_partitions;
  tiny_partitions.partition_limit = 5;
  CheckOutcome c5 = check_graph(cycle_graph(5), tiny_partitions);
  CHECK(c5.verdict == Verdict::kBudgetExceeded);
  CHECK(c5.skip_reason == "partition limit reached");

  CheckOptions tiny_chi;
  tiny_chi.scope = Scope::kAll;
  tiny_chi.chi_budget = 0;
  CheckOutcome k4 = check_graph(complete_graph(4), tiny_chi);
  CHECK(k4.verdict == Verdict::kBudgetExceeded);
  CHECK(!k4.chromatic.has_value());
}

TEST_CASE("check_graph on the empty and edgeless graphs") {
  CheckOutcome empty = check_graph(Graph());
  CHECK(empty.verdict == Verdict::kSkipped);
  CHECK(empty.skip_reason == "empty graph");

  CheckOutcome edgeless = check_graph(Graph::from_edges(3, {}));
  CHECK(edgeless.verdict == Verdict::kVerified);
  CHECK(edgeless.chromatic == 1);
}

TEST_CASE("outcome JSON is stable and complete") {
  CheckOutcome c5 = check_graph(cycle_graph(5));
  CHECK(outcome_to_json(c5) ==
        R"({"graph6":"Dhc","n":5,"edges":5,"triangle_free":true,"girth":5,)"
        R"("chromatic":3,"partitions_checked":11,"verdict":"verified"})");

  CheckOutcome forest = check_graph(path_graph(2));
  CHECK(outcome_to_json(forest) ==
        R"({"graph6":"A_","n":2,"edges":1,"triangle_free":true,"girth":null,)"
        R"("chromatic":2,"partitions_checked":0,"verdict":"verified"})");
}

TEST_CASE("hunt processes a stream in input order") {
  std::istringstream input("Dhc\nJkLTAQGK?N_\nIheA@GUAo\n");
  std::ostringstream records, summary;
  HuntReport report = hunt(input, records, summary);
  CHECK(report.exit_code == 0);
  CHECK(report.tallies.total == 3);
  CHECK(report.tallies.verified == 3);
  CHECK(report.tallies.counterexamples == 0);

  std::string lines = records.str();
  auto first = lines.find("Dhc");
  auto second = lines.find("JkLTAQGK?N_");
  auto third = lines.find("IheA@GUAo");
  CHECK(first < second);
  CHECK(second < third);
  CHECK(summary.str() ==
        "graphs 3 | verified 3 | counterexamples 0 | skipped 0 | "
        "budget-exceeded 0\n");
}

TEST_CASE("hunt records malformed lines and keeps going") {
  std::istringstream input("Dhc\n*bogus*\nA_\n");
  std::ostringstream records, summary;
  HuntReport report = hunt(input, records, summary);
  CHECK(report.exit_code == 0);
  CHECK(report.tallies.total == 3);
  CHECK(report.tallies.verified == 2);
  CHECK(report.tallies.skipped == 1);
  CHECK(records.str().find("malformed") != std::string::npos);
}

TEST_CASE("hunt output is identical across job counts") {
  std::string stream;
  for (int k = 3; k <= 9; ++k) stream += encode_graph6(cycle_graph(k)) + "\n";
  stream += encode_graph6(petersen_graph()) + "\n";
  stream += encode_graph6(grotzsch_graph()) + "\n";
  for (int k = 2; k <= 5; ++k) stream += encode_graph6(complete_graph(k)) + "\n";

  HuntOptions serial;
  serial.check.scope = Scope::kAll;
  serial.jobs = 1;
  HuntOptions parallel = serial;
  parallel.jobs = 8;

  std::istringstream in1(stream), in2(stream);
  std::ostringstream rec1, sum1, rec2, sum2;
  HuntReport r1 = hunt(in1, rec1, sum1, serial);
  HuntReport r2 = hunt(in2, rec2, sum2, parallel);
  CHECK(rec1.str() == rec2.str());
  CHECK(sum1.str() == sum2.str());
  CHECK(r1.tallies == r2.tallies);
  // C3 and K3..K5 are counterexamples under scope=all.
  CHECK(r1.exit_code == 1);
  CHECK(r1.tallies.counterexamples == 4);
}

TEST_CASE("hunt halts on the first counterexample when asked") {
  std::string stream = "Bw\nDhc\nDhc\n";  // K3 then two C5s
  HuntOptions options;
  options.check.scope = Scope::kAll;
  options.halt_on_counterexample = true;

  for (int jobs : {1, 4}) {
    options.jobs = jobs;
    std::istringstream in(stream);
    std::ostringstream records, summary;
    HuntReport report = hunt(in, records, summary, options);
    CHECK(report.exit_code == 1);
    CHECK(report.tallies.total == 1);
    CHECK(report.tallies.counterexamples == 1);
  }
}

TEST_CASE("checkpoint round-trips and detects corruption") {
  HuntCheckpoint cp;
  cp.position = 42;
  cp.tallies.total = 42;
  cp.tallies.verified = 40;
  cp.tallies.skipped = 1;
  cp.tallies.counterexamples = 1;
  cp.counterexamples.push_back({"Bw", {{0}, {1}, {2}}, 3, "no induced colourful path on 3 vertices"});

  std::string path = temp_path("colpath_checkpoint_test.json");
  checkpoint_save(path, cp);
  HuntCheckpoint loaded = checkpoint_load(path);
  CHECK(loaded.position == cp.position);
  CHECK(loaded.tallies == cp.tallies);
  REQUIRE(loaded.counterexamples.size() == 1);
  CHECK(loaded.counterexamples[0].graph6 == "Bw");
  CHECK(loaded.counterexamples[0].partition == cp.counterexamples[0].partition);

  // Truncation.
  {
    std::ifstream in(path);
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    std::ofstream out(path, std::ios::trunc);
    out << body.substr(0, body.size() / 2);
  }
  CHECK_THROWS_AS(checkpoint_load(path), CorruptCheckpointError);

  // Digest mismatch.
  checkpoint_save(path, cp);
  {
    std::ifstream in(path);
    std::string body((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    auto pos = body.find("\"position\":42");
    REQUIRE(pos != std::string::npos);
    body.replace(pos, 13, "\"position\":43");
    std::ofstream out(path, std::ios::trunc);
    out << body;
  }
  CHECK_THROWS_AS(checkpoint_load(path), CorruptCheckpointError);

  CHECK_THROWS_AS(checkpoint_load(temp_path("no_such_checkpoint.json")),
                  CorruptCheckpointError);
  std::remove(path.c_str());
}

TEST_CASE("resuming a hunt reproduces the uninterrupted aggregate") {
  std::string stream;
  for (int k = 3; k <= 10; ++k) stream += encode_graph6(cycle_graph(k)) + "\n";
  for (int k = 2; k <= 4; ++k) stream += encode_graph6(complete_graph(k)) + "\n";

  HuntOptions options;
  options.check.scope = Scope::kAll;
  options.jobs = 3;

  std::istringstream whole(stream);
  std::ostringstream whole_records, whole_summary;
  HuntReport uninterrupted = hunt(whole, whole_records, whole_summary, options);

  // First half with a checkpoint, then resume over the full stream.
  std::string checkpoint_file = temp_path("colpath_resume_test.json");
  HuntOptions first_half = options;
  first_half.checkpoint_path = checkpoint_file;
  std::istringstream head5(stream);
  std::string partial;
  for (int i = 0; i < 5; ++i) {
    std::string line;
    std::getline(head5, line);
    partial += line + "\n";
  }
  std::istringstream part_in(partial);
  std::ostringstream part_records, part_summary;
  hunt(part_in, part_records, part_summary, first_half);

  HuntCheckpoint cp = checkpoint_load(checkpoint_file);
  CHECK(cp.position == 5);

  std::istringstream rest_in(stream);
  std::ostringstream rest_records, rest_summary;
  HuntReport resumed = hunt(rest_in, rest_records, rest_summary, options, &cp);

  CHECK(resumed.tallies == uninterrupted.tallies);
  CHECK(rest_summary.str() == whole_summary.str());
  CHECK(part_records.str() + rest_records.str() == whole_records.str());
  CHECK(resumed.exit_code == uninterrupted.exit_code);
  std::remove(checkpoint_file.c_str());
}

TEST_CASE("hunt reports budget exhaustion, never silent verification") {
  std::istringstream input("Dhc\n");
  std::ostringstream records, summary;
  HuntOptions options;
  options.check.partition_limit = 5;
  HuntReport report = hunt(input, records, summary, options);
  CHECK(report.tallies.budget_exceeded == 1);
  CHECK(report.tallies.verified == 0);
  CHECK(report.exit_code == 2);
}

TEST_CASE("girth-equals-chi regression corpus") {
  // The bundled girth-4 chromatic-4 pair sweeps clean under the
  // girth-ge-chi scope.
  HuntOptions options;
  options.check.scope = Scope::kGirthGeChiOnly;
  options.jobs = 2;
  std::istringstream in("JkLTAQGK?N_\nKhdLA_hc?L_y\n");
  std::ostringstream records, summary;
  HuntReport report = hunt(in, records, summary, options);
  CHECK(report.tallies.verified == 2);
  CHECK(report.tallies.counterexamples == 0);

  // No triangle-free graph on up to 8 vertices has girth equal to its
  // chromatic number (4-chromatic triangle-free needs 11 vertices), so the
  // two bundled graphs are the whole corpus at this scale.
  std::ifstream atlas(std::string(COLPATH_TEST_DATA_DIR) + "/connected_n1_8.g6");
  REQUIRE(atlas.good());
  std::string line;
  while (std::getline(atlas, line)) {
    if (line.empty()) continue;
    Graph g = parse_graph6(line);
    if (!is_triangle_free(g)) continue;
    auto gg = girth(g);
    if (!gg) continue;
    CHECK(*gg != chromatic_number(g).chi);
  }
}

TEST_CASE("verified sweeps are sound against the oracle") {
  // Re-check random (graph, partition) pairs from a verified sweep with
  // the brute-force oracle.
  std::mt19937_64 rng(83);
  for (int round = 0; round < 10; ++round) {
    Graph g = oracles::random_connected_graph(3 + static_cast<int>(rng() % 5),
                                              0.3, rng);
    CheckOptions options;
    options.scope = Scope::kAll;
    CheckOutcome outcome = check_graph(g, options);
    int chi = outcome.chromatic.value();
    int audited = 0;
    for (const ColourPartition& partition : proper_partitions(g)) {
      if (rng() % 3 != 0 || audited >= 10) continue;
      ++audited;
      bool oracle_found =
          brute_force_induced_colourful_path(
              g, partition.to_colouring(g.vertex_count()), chi)
              .has_value();
      if (outcome.verdict == Verdict::kVerified) CHECK(oracle_found);
    }
  }
}
