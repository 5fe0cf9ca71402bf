#include "pathpack/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace pathpack {

std::string to_string(Algorithm alg) {
  return alg == Algorithm::Approx1 ? "approx1" : "approx2";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "approx1") return Algorithm::Approx1;
  if (name == "approx2") return Algorithm::Approx2;
  throw std::invalid_argument("unknown algorithm '" + name + "' (expected approx1 or approx2)");
}

void validate(const GridSpec& spec) {
  if (spec.k.empty() || spec.n.empty() || spec.d.empty() || spec.instances.empty()) {
    throw std::invalid_argument("grid spec: k, n, d and instance lists must be non-empty");
  }
  if (spec.algorithms.empty()) {
    throw std::invalid_argument("grid spec: algorithm list is empty");
  }
  for (double d : spec.d) {
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("grid spec: d values must lie in [0, 1]");
  }
  for (int i : spec.instances) {
    if (i < 0) throw std::invalid_argument("grid spec: instance indices must be non-negative");
  }
  const bool has_approx2 =
      std::find(spec.algorithms.begin(), spec.algorithms.end(), Algorithm::Approx2) != spec.algorithms.end();
  for (int k : spec.k) {
    if (k < 4) throw std::invalid_argument("grid spec: k values must be at least 4");
    if (has_approx2 && k != 4) {
      throw std::invalid_argument("grid spec: approx2 can only be paired with k = 4");
    }
    for (int n : spec.n) {
      if (k > n) throw std::invalid_argument("grid spec: every k must be at most every n");
    }
  }
}

GridSpec parse_grid_spec(const std::string& json_text) {
  using nlohmann::json;
  GridSpec spec;
  try {
    const json j = json::parse(json_text);
    spec.k = j.at("k").get<std::vector<int>>();
    spec.n = j.at("n").get<std::vector<int>>();
    spec.d = j.at("d").get<std::vector<double>>();
    if (j.contains("i")) {
      spec.instances = j.at("i").get<std::vector<int>>();
    } else {
      const int count = j.at("instances").get<int>();
      for (int i = 0; i < count; ++i) spec.instances.push_back(i);
    }
    for (const auto& name : j.at("algorithms").get<std::vector<std::string>>()) {
      spec.algorithms.push_back(parse_algorithm(name));
    }
    if (j.contains("master_seed")) spec.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("threads")) spec.threads = j.at("threads").get<unsigned>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed grid spec: ") + e.what());
  }
  validate(spec);
  return spec;
}

GridSpec load_grid_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open grid spec '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_grid_spec(buffer.str());
}

ExperimentRecord run_cell(const Instance& inst, Algorithm alg) {
  const SolveResult res = alg == Algorithm::Approx1 ? approx1(inst.graph, inst.k) : approx2(inst.graph);
  ExperimentRecord r;
  r.k = inst.k;
  r.n = inst.n();
  r.d = inst.d;
  r.i = inst.index;
  r.alg = alg;
  r.covered = res.covered;
  r.opt = inst.planted_opt();
  r.ratio = res.covered == 0 ? std::numeric_limits<double>::infinity()
                             : static_cast<double>(r.opt) / static_cast<double>(res.covered);
  r.op_counts = res.op_counts;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(res.elapsed).count();
  return r;
}

void run_grid(const GridSpec& spec, const std::function<void(const ExperimentRecord&)>& sink) {
  validate(spec);
  struct Cell {
    int k, n;
    double d;
    int i;
  };
  std::vector<Cell> cells;
  for (int k : spec.k)
    for (int n : spec.n)
      for (double d : spec.d)
        for (int i : spec.instances) cells.push_back({k, n, d, i});

  const std::size_t algs = spec.algorithms.size();
  std::vector<std::optional<ExperimentRecord>> slots(cells.size() * algs);
  std::mutex mutex;
  std::size_t flushed = 0;
  std::atomic<std::size_t> next_cell{0};
  std::exception_ptr failure;

  auto flush_ready = [&] {
    while (flushed < slots.size() && slots[flushed]) {
      sink(*slots[flushed]);
      slots[flushed].reset();
      ++flushed;
    }
  };

  auto worker = [&] {
    for (;;) {
      const std::size_t c = next_cell.fetch_add(1);
      if (c >= cells.size()) return;
      {
        std::lock_guard lock(mutex);
        if (failure) return;
      }
      try {
        const Cell& cell = cells[c];
        const Instance inst = generate(cell.k, cell.n, cell.d, cell.i, spec.master_seed);
        std::vector<ExperimentRecord> out;
        for (Algorithm alg : spec.algorithms) out.push_back(run_cell(inst, alg));
        std::lock_guard lock(mutex);
        for (std::size_t a = 0; a < algs; ++a) slots[c * algs + a] = std::move(out[a]);
        flush_ready();
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  unsigned threads = spec.threads != 0 ? spec.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<ExperimentRecord> run_grid(const GridSpec& spec) {
  std::vector<ExperimentRecord> records;
  run_grid(spec, [&](const ExperimentRecord& r) { records.push_back(r); });
  return records;
}

std::vector<AggregateRow> aggregate(const std::vector<ExperimentRecord>& records) {
  using Key = std::tuple<int, int, double, int>;
  std::map<Key, AggregateRow> groups;
  for (const auto& r : records) {
    const Key key{r.k, r.n, r.d, static_cast<int>(r.alg)};
    auto [it, inserted] = groups.try_emplace(key);
    AggregateRow& row = it->second;
    if (inserted) {
      row.k = r.k;
      row.n = r.n;
      row.d = r.d;
      row.alg = r.alg;
      row.max_ratio = r.ratio;
    }
    row.mean_ratio += r.ratio;
    row.max_ratio = std::max(row.max_ratio, r.ratio);
    row.mean_ms += r.elapsed_ms;
    ++row.count;
  }
  std::vector<AggregateRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, row] : groups) {
    row.mean_ratio /= row.count;
    row.mean_ms /= row.count;
    rows.push_back(row);
  }
  return rows;
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

namespace {

std::string format_ms(double ms) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, ms, std::chars_format::fixed, 3);
  return std::string(buf, end);
}

}  // namespace

std::string record_csv_row(const ExperimentRecord& r) {
  std::ostringstream row;
  row << r.k << ',' << r.n << ',' << format_number(r.d) << ',' << r.i << ',' << to_string(r.alg) << ','
      << r.covered << ',' << r.opt << ',' << format_number(r.ratio);
  for (int count : r.op_counts) row << ',' << count;
  row << ',' << format_ms(r.elapsed_ms);
  return row.str();
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kRecordCsvHeader << '\n';
  for (const auto& r : records) out << record_csv_row(r) << '\n';
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << kAggregateCsvHeader << '\n';
  for (const auto& row : rows) {
    out << row.k << ',' << row.n << ',' << format_number(row.d) << ',' << to_string(row.alg) << ','
        << format_number(row.mean_ratio) << ',' << format_number(row.max_ratio) << ','
        << format_ms(row.mean_ms) << ',' << row.count << '\n';
  }
}

}  // namespace pathpack
