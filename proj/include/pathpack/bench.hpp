#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pathpack/instances.hpp"
#include "pathpack/solvers.hpp"

namespace pathpack {

enum class Algorithm { Approx1, Approx2 };

std::string to_string(Algorithm alg);
/// Accepts "approx1" / "approx2"; throws std::invalid_argument otherwise.
Algorithm parse_algorithm(const std::string& name);

struct GridSpec {
  std::vector<int> k;
  std::vector<int> n;
  std::vector<double> d;
  std::vector<int> instances;
  std::vector<Algorithm> algorithms;
  std::uint64_t master_seed = kDefaultMasterSeed;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Throws std::invalid_argument on empty lists, d outside [0, 1], k < 4,
/// k > n, or approx2 listed alongside some k != 4.
void validate(const GridSpec& spec);

/// JSON object with keys "k", "n", "d" (arrays), either "i" (array of
/// indices) or "instances" (count, meaning 0..count-1), "algorithms"
/// (array of names), optional "master_seed" and "threads".
GridSpec parse_grid_spec(const std::string& json_text);
GridSpec load_grid_spec(const std::string& path);

struct ExperimentRecord {
  int k = 0;
  int n = 0;
  double d = 0.0;
  int i = 0;
  Algorithm alg = Algorithm::Approx1;
  int covered = 0;
  int opt = 0;
  /// opt / covered; +infinity when nothing was covered.
  double ratio = 0.0;
  OpCounts op_counts{};
  double elapsed_ms = 0.0;
};

/// Runs every (k, n, d, i) cell against every algorithm. Records reach
/// `sink` in key order (k, n, d, i, algorithm) whatever the thread count.
void run_grid(const GridSpec& spec, const std::function<void(const ExperimentRecord&)>& sink);
std::vector<ExperimentRecord> run_grid(const GridSpec& spec);

/// One (instance, algorithm) measurement.
ExperimentRecord run_cell(const Instance& inst, Algorithm alg);

struct AggregateRow {
  int k = 0;
  int n = 0;
  double d = 0.0;
  Algorithm alg = Algorithm::Approx1;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_ms = 0.0;
  int count = 0;
};

/// Groups by (k, n, d, alg), rows in that order.
std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records);

inline constexpr const char* kRecordCsvHeader =
    "k,n,d,i,alg,covered,opt,ratio,adds,reps,double_reps,recovers,lookaheads,elapsed_ms";
inline constexpr const char* kAggregateCsvHeader = "k,n,d,alg,mean_ratio,max_ratio,mean_ms,count";

/// Shortest decimal form that reads back to the same double; "inf" for
/// infinity.
std::string format_number(double x);

std::string record_csv_row(const ExperimentRecord& r);
void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);
void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);

}  // namespace pathpack
