#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "colpath/colouring.hpp"
#include "colpath/graph.hpp"

namespace colpath {

// Which graphs a hunt examines; everything else is reported as skipped.
enum class Scope {
  kTriangleFreeOnly,  // the conjecture's hypothesis
  kGirthGeChiOnly,    // the proven regime, as a regression filter
  kAll,
};

std::string to_string(Scope scope);
std::optional<Scope> scope_from_string(std::string_view name);

struct CheckOptions {
  Scope scope = Scope::kTriangleFreeOnly;
  std::uint64_t partition_limit = kDefaultPartitionLimit;
  std::uint64_t chi_budget = kDefaultChiBudget;
};

enum class Verdict {
  kVerified,
  kCounterexample,
  kSkipped,
  kBudgetExceeded,
};

std::string to_string(Verdict verdict);

// A proper colour partition admitting no induced colourful path on
// chromatic-number many vertices.  Re-running the search on the recorded
// partition reproduces the absence.
struct CounterexampleRecord {
  std::string graph6;
  std::vector<std::vector<Vertex>> partition;
  int chromatic = 0;
  std::string note;
};

struct CheckOutcome {
  std::string graph6;
  int n = 0;
  int edge_count = 0;
  bool triangle_free = false;
  std::optional<int> girth;
  std::optional<int> chromatic;
  std::uint64_t partitions_checked = 0;
  Verdict verdict = Verdict::kSkipped;
  std::string skip_reason;
  std::vector<CounterexampleRecord> counterexamples;
};

// Checks one graph: applies the scope filter, computes the chromatic
// number and girth, then sweeps every proper colour partition and searches
// each for an induced colourful path on chromatic-number many vertices.
// Budget exhaustion (partition limit or chromatic search) is reported as
// kBudgetExceeded, never as verified.  Disconnected graphs are checked
// whole: a path cannot cross components and the chromatic number is
// attained inside one, so the sweep is equivalent to checking the
// chi-attaining components.
CheckOutcome check_graph(const Graph& g, const CheckOptions& options = {});

// One line of machine-readable JSON for a graph record.
std::string outcome_to_json(const CheckOutcome& outcome);

struct HuntTallies {
  std::uint64_t total = 0;
  std::uint64_t verified = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t skipped = 0;
  std::uint64_t budget_exceeded = 0;

  bool operator==(const HuntTallies&) const = default;
};

// Resumable position in a graph6 line stream.  Restarting from a saved
// checkpoint and finishing the stream yields exactly the aggregate of an
// uninterrupted run.
struct HuntCheckpoint {
  std::uint64_t position = 0;  // graph6 lines already consumed
  HuntTallies tallies;
  std::vector<CounterexampleRecord> counterexamples;
};

void checkpoint_save(const std::string& path, const HuntCheckpoint& checkpoint);
HuntCheckpoint checkpoint_load(const std::string& path);  // CorruptCheckpointError

struct HuntOptions {
  CheckOptions check;
  int jobs = 1;
  bool halt_on_counterexample = false;
  std::string checkpoint_path;          // empty = no checkpointing
  std::uint64_t checkpoint_every = 64;  // graphs between periodic saves
};

struct HuntReport {
  HuntTallies tallies;
  std::vector<CounterexampleRecord> counterexamples;
  int exit_code = 0;  // 0 all verified/skipped, 1 counterexample, 2 budget
};

std::string summary_line(const HuntTallies& tallies);

// Runs check_graph over every graph6 line of `input`, distributing graphs
// across `jobs` workers.  One JSON record per line goes to `records` in
// input order regardless of parallelism; a human summary goes to
// `summary`.  Unparseable lines are reported as skipped(malformed) without
// aborting the stream.  With `resume`, the first `resume->position` lines
// are skipped and tallies continue from the checkpoint.
HuntReport hunt(std::istream& input, std::ostream& records,
                std::ostream& summary, const HuntOptions& options = {},
                const HuntCheckpoint* resume = nullptr);

}  // namespace colpath
