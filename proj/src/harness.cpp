#include "colpath/harness.hpp"

#include <condition_variable>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string_view>
#include <thread>

#include <json.hpp>

#include "colpath/errors.hpp"
#include "colpath/graph6.hpp"
#include "colpath/paths.hpp"

namespace colpath {

std::string to_string(Scope scope) {
  switch (scope) {
    case Scope::kTriangleFreeOnly: return "triangle-free-only";
    case Scope::kGirthGeChiOnly: return "girth-ge-chi-only";
    case Scope::kAll: return "all";
  }
  return "?";
}

std::optional<Scope> scope_from_string(std::string_view name) {
  if (name == "triangle-free-only") return Scope::kTriangleFreeOnly;
  if (name == "girth-ge-chi-only") return Scope::kGirthGeChiOnly;
  if (name == "all") return Scope::kAll;
  return std::nullopt;
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kVerified: return "verified";
    case Verdict::kCounterexample: return "counterexample";
    case Verdict::kSkipped: return "skipped";
    case Verdict::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

CheckOutcome check_graph(const Graph& g, const CheckOptions& options) {
  CheckOutcome outcome;
  outcome.graph6 = encode_graph6(g);
  outcome.n = g.vertex_count();
  outcome.edge_count = g.edge_count();
  outcome.triangle_free = is_triangle_free(g);
  outcome.girth = girth(g);

  if (outcome.n == 0) {
    outcome.verdict = Verdict::kSkipped;
    outcome.skip_reason = "empty graph";
    return outcome;
  }
  if (options.scope == Scope::kTriangleFreeOnly && !outcome.triangle_free) {
    outcome.verdict = Verdict::kSkipped;
    outcome.skip_reason = "not triangle-free";
    return outcome;
  }

  try {
    outcome.chromatic = chromatic_number(g, options.chi_budget).chi;
  } catch (const SearchBudgetExceededError&) {
    outcome.verdict = Verdict::kBudgetExceeded;
    outcome.skip_reason = "chromatic search budget exhausted";
    return outcome;
  }
  const int chi = *outcome.chromatic;

  // Forests have no girth; with no cycle at all the girth bound holds
  // vacuously, so they stay in scope.
  if (options.scope == Scope::kGirthGeChiOnly && outcome.girth &&
      *outcome.girth < chi) {
    outcome.verdict = Verdict::kSkipped;
    outcome.skip_reason = "girth below chromatic number";
    return outcome;
  }

  // chi <= 2 needs no sweep: one vertex, or the two endpoints of any edge,
  // form an induced colourful path under every proper colouring.
  if (chi <= 2) {
    outcome.verdict = Verdict::kVerified;
    return outcome;
  }

  try {
    enumerate_proper_partitions(g, options.partition_limit,
                                [&](const ColourPartition& partition) {
      ++outcome.partitions_checked;
      Colouring beta = partition.to_colouring(g.vertex_count());
      if (!find_induced_colourful_path(g, beta, chi)) {
        outcome.counterexamples.push_back(
            {outcome.graph6, partition.classes, chi,
             "no induced colourful path on " + std::to_string(chi) +
                 " vertices"});
      }
      return true;
    });
  } catch (const EnumerationLimitExceededError&) {
    outcome.verdict = Verdict::kBudgetExceeded;
    outcome.skip_reason = "partition limit reached";
    return outcome;
  }

  outcome.verdict = outcome.counterexamples.empty() ? Verdict::kVerified
                                                    : Verdict::kCounterexample;
  return outcome;
}

namespace {

nlohmann::ordered_json record_json(const CounterexampleRecord& record) {
  nlohmann::ordered_json j;
  j["graph6"] = record.graph6;
  j["partition"] = record.partition;
  j["chromatic"] = record.chromatic;
  j["note"] = record.note;
  return j;
}

CounterexampleRecord record_from_json(const nlohmann::json& j) {
  CounterexampleRecord record;
  record.graph6 = j.at("graph6").get<std::string>();
  record.partition = j.at("partition").get<std::vector<std::vector<Vertex>>>();
  record.chromatic = j.at("chromatic").get<int>();
  record.note = j.at("note").get<std::string>();
  return record;
}

}  // namespace

std::string outcome_to_json(const CheckOutcome& outcome) {
  nlohmann::ordered_json j;
  j["graph6"] = outcome.graph6;
  j["n"] = outcome.n;
  j["edges"] = outcome.edge_count;
  j["triangle_free"] = outcome.triangle_free;
  if (outcome.girth)
    j["girth"] = *outcome.girth;
  else
    j["girth"] = nullptr;
  if (outcome.chromatic)
    j["chromatic"] = *outcome.chromatic;
  else
    j["chromatic"] = nullptr;
  j["partitions_checked"] = outcome.partitions_checked;
  j["verdict"] = to_string(outcome.verdict);
  if (!outcome.skip_reason.empty()) j["reason"] = outcome.skip_reason;
  if (!outcome.counterexamples.empty()) {
    auto& list = j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto& record : outcome.counterexamples)
      list.push_back(record_json(record));
  }
  return j.dump();
}

namespace {

constexpr int kCheckpointVersion = 1;

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

nlohmann::ordered_json checkpoint_payload(const HuntCheckpoint& cp) {
  nlohmann::ordered_json j;
  j["version"] = kCheckpointVersion;
  j["position"] = cp.position;
  j["tallies"] = {{"total", cp.tallies.total},
                  {"verified", cp.tallies.verified},
                  {"counterexamples", cp.tallies.counterexamples},
                  {"skipped", cp.tallies.skipped},
                  {"budget_exceeded", cp.tallies.budget_exceeded}};
  auto& list = j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& record : cp.counterexamples)
    list.push_back(record_json(record));
  return j;
}

}  // namespace

void checkpoint_save(const std::string& path, const HuntCheckpoint& checkpoint) {
  nlohmann::ordered_json j = checkpoint_payload(checkpoint);
  j["digest"] = fnv1a(j.dump());
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("cannot write checkpoint file " + path);
  out << j.dump() << '\n';
}

HuntCheckpoint checkpoint_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorruptCheckpointError("cannot open checkpoint file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw CorruptCheckpointError("checkpoint file " + path + " is not valid JSON");
  }
  HuntCheckpoint cp;
  try {
    if (j.at("version").get<int>() != kCheckpointVersion)
      throw CorruptCheckpointError("unsupported checkpoint version");
    cp.position = j.at("position").get<std::uint64_t>();
    const auto& t = j.at("tallies");
    cp.tallies.total = t.at("total").get<std::uint64_t>();
    cp.tallies.verified = t.at("verified").get<std::uint64_t>();
    cp.tallies.counterexamples = t.at("counterexamples").get<std::uint64_t>();
    cp.tallies.skipped = t.at("skipped").get<std::uint64_t>();
    cp.tallies.budget_exceeded = t.at("budget_exceeded").get<std::uint64_t>();
    for (const auto& r : j.at("counterexamples"))
      cp.counterexamples.push_back(record_from_json(r));
    std::uint64_t digest = j.at("digest").get<std::uint64_t>();
    if (digest != fnv1a(checkpoint_payload(cp).dump()))
      throw CorruptCheckpointError("checkpoint digest mismatch in " + path);
  } catch (const nlohmann::json::exception&) {
    throw CorruptCheckpointError("checkpoint file " + path + " is missing fields");
  }
  return cp;
}

std::string summary_line(const HuntTallies& t) {
  std::ostringstream out;
  out << "graphs " << t.total << " | verified " << t.verified
      << " | counterexamples " << t.counterexamples << " | skipped "
      << t.skipped << " | budget-exceeded " << t.budget_exceeded;
  return out.str();
}

namespace {

CheckOutcome outcome_for_line(const std::string& line, const CheckOptions& options) {
  try {
    return check_graph(parse_graph6(line), options);
  } catch (const Error& e) {
    CheckOutcome outcome;
    outcome.graph6 = line;
    outcome.verdict = Verdict::kSkipped;
    outcome.skip_reason = std::string("malformed: ") + e.what();
    return outcome;
  }
}

void tally(HuntTallies& t, const CheckOutcome& outcome) {
  ++t.total;
  switch (outcome.verdict) {
    case Verdict::kVerified: ++t.verified; break;
    case Verdict::kCounterexample: ++t.counterexamples; break;
    case Verdict::kSkipped: ++t.skipped; break;
    case Verdict::kBudgetExceeded: ++t.budget_exceeded; break;
  }
}

// Reads the next non-empty line; completely blank lines are not records.
bool next_line(std::istream& input, std::string& line) {
  while (std::getline(input, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

}  // namespace

HuntReport hunt(std::istream& input, std::ostream& records,
                std::ostream& summary, const HuntOptions& options,
                const HuntCheckpoint* resume) {
  HuntCheckpoint state;
  if (resume) state = *resume;
  const std::uint64_t base = state.position;
  {
    std::string skipped_line;
    for (std::uint64_t i = 0; i < base; ++i)
      if (!next_line(input, skipped_line)) break;
  }

  bool halted = false;
  std::uint64_t merged = 0;

  auto merge_outcome = [&](const CheckOutcome& outcome) {
    records << outcome_to_json(outcome) << '\n';
    tally(state.tallies, outcome);
    for (const auto& record : outcome.counterexamples)
      state.counterexamples.push_back(record);
    ++merged;
    state.position = base + merged;
    if (outcome.verdict == Verdict::kCounterexample &&
        options.halt_on_counterexample)
      halted = true;
    if (!options.checkpoint_path.empty() &&
        ((options.checkpoint_every > 0 &&
          merged % options.checkpoint_every == 0) ||
         halted))
      checkpoint_save(options.checkpoint_path, state);
  };

  if (options.jobs <= 1) {
    std::string line;
    while (!halted && next_line(input, line))
      merge_outcome(outcome_for_line(line, options.check));
  } else {
    // Workers pull lines by index; the merger emits finished outcomes in
    // input order, so the record stream does not depend on the job count.
    std::mutex mu;
    std::condition_variable work_ready, merge_ready;
    std::deque<std::pair<std::uint64_t, std::string>> pending;
    std::map<std::uint64_t, CheckOutcome> finished;
    std::uint64_t next_merge = 0;
    int in_flight = 0;
    bool input_done = false;
    bool stop = false;
    const std::size_t window = static_cast<std::size_t>(options.jobs) * 16;

    auto worker = [&] {
      std::unique_lock lock(mu);
      for (;;) {
        work_ready.wait(lock, [&] { return stop || !pending.empty(); });
        if (stop && pending.empty()) return;
        auto [index, line] = std::move(pending.front());
        pending.pop_front();
        ++in_flight;
        lock.unlock();
        CheckOutcome outcome = outcome_for_line(line, options.check);
        lock.lock();
        --in_flight;
        finished.emplace(index, std::move(outcome));
        merge_ready.notify_all();
      }
    };

    std::vector<std::thread> threads;
    threads.reserve(options.jobs);
    for (int i = 0; i < options.jobs; ++i) threads.emplace_back(worker);

    std::uint64_t next_read = 0;
    std::string line;
    std::unique_lock lock(mu);
    for (;;) {
      while (!input_done && !halted && pending.size() < window) {
        if (next_line(input, line)) {
          pending.emplace_back(next_read++, line);
          work_ready.notify_one();
        } else {
          input_done = true;
        }
      }
      if ((input_done || halted) && next_merge == next_read) break;
      merge_ready.wait(lock, [&] {
        return finished.contains(next_merge);
      });
      while (!halted && finished.contains(next_merge)) {
        CheckOutcome outcome = std::move(finished.at(next_merge));
        finished.erase(next_merge);
        ++next_merge;
        merge_outcome(outcome);
      }
      if (halted) {
        pending.clear();
        // Results beyond the halt point are dropped unmerged.
        finished.clear();
        next_merge = next_read;
      }
    }
    stop = true;
    work_ready.notify_all();
    lock.unlock();
    for (auto& t : threads) t.join();
  }

  if (!options.checkpoint_path.empty())
    checkpoint_save(options.checkpoint_path, state);

  HuntReport report;
  report.tallies = state.tallies;
  report.counterexamples = state.counterexamples;
  if (report.tallies.counterexamples > 0)
    report.exit_code = 1;
  else if (report.tallies.budget_exceeded > 0)
    report.exit_code = 2;
  summary << summary_line(report.tallies) << '\n';
  return report;
}

}  // namespace colpath
