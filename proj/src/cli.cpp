#include "pathpack/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathpack/bench.hpp"
#include "pathpack/instances.hpp"
#include "pathpack/solvers.hpp"

namespace pathpack {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GenArgs {
  int k = 4;
  int n = 0;
  double d = 0.0;
  int i = 0;
  std::uint64_t seed = kDefaultMasterSeed;
  std::string out;
};

struct SolveArgs {
  std::string alg;
  int k = 4;
  std::string in;
  std::string resume;
  std::string cover_out;
  bool json = false;
};

struct ExactArgs {
  int k = 4;
  std::string in;
  int limit = kDefaultExactLimit;
};

struct BenchArgs {
  std::string grid;
  std::string out;
  std::string aggregate;
  unsigned threads = 0;
};

struct FixtureArgs {
  std::string dir = ".";
};

void run_gen(const GenArgs& a, std::ostream& out) {
  if (a.k < 4) throw UsageError("--k must be at least 4");
  if (a.n < a.k) throw UsageError("--n must be at least --k");
  if (!(a.d >= 0.0 && a.d <= 1.0)) throw UsageError("--d must lie in [0, 1]");
  if (a.i < 0) throw UsageError("--i must be non-negative");

  const Instance inst = generate(a.k, a.n, a.d, a.i, a.seed);
  const std::string prefix =
      a.out.empty() ? "k" + std::to_string(a.k) + "_n" + std::to_string(a.n) + "_d" +
                          format_number(a.d) + "_i" + std::to_string(a.i)
                    : a.out;
  save_instance(prefix, inst);
  out << "n=" << inst.n() << '\n';
  out << "edges=" << inst.graph.edge_count() << '\n';
  out << "planted_paths=" << inst.planted_paths.size() << '\n';
  out << "files=" << instance_prefix(prefix) << ".graph," << instance_prefix(prefix) << ".json\n";
}

// Graph plus, when the JSON sidecar exists, its planted optimum.
struct LoadedInput {
  Graph graph;
  std::optional<int> opt;
};

LoadedInput load_input(const std::string& path) {
  const std::string prefix = instance_prefix(path);
  if (fs::exists(prefix + ".json")) {
    Instance inst = load_instance(prefix);
    return {std::move(inst.graph), inst.planted_opt()};
  }
  if (fs::exists(prefix + ".graph")) return {load_graph(prefix + ".graph"), std::nullopt};
  return {load_graph(path), std::nullopt};
}

void run_solve(const SolveArgs& a, bool k_given, std::ostream& out) {
  const Algorithm alg = [&] {
    try {
      return parse_algorithm(a.alg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  if (alg == Algorithm::Approx2 && k_given && a.k != 4) {
    throw UsageError("approx2 is defined for k = 4 only");
  }
  if (a.k < 4) throw UsageError("--k must be at least 4");

  const LoadedInput input = load_input(a.in);
  std::optional<Cover> start;
  if (!a.resume.empty()) start = load_cover(a.resume, a.k);

  const SolveResult res = alg == Algorithm::Approx1 ? approx1(input.graph, a.k, start)
                                                    : approx2(input.graph, start);
  const double elapsed_ms = std::chrono::duration<double, std::milli>(res.elapsed).count();
  std::optional<double> ratio;
  if (input.opt) {
    ratio = res.covered == 0 ? std::numeric_limits<double>::infinity()
                             : static_cast<double>(*input.opt) / res.covered;
  }
  if (!a.cover_out.empty()) save_cover(a.cover_out, res.cover);

  if (a.json) {
    json j;
    j["algorithm"] = to_string(alg);
    j["k"] = res.cover.k();
    j["n"] = input.graph.order();
    j["covered"] = res.covered;
    j["opt"] = input.opt ? json(*input.opt) : json(nullptr);
    j["ratio"] = ratio ? json(format_number(*ratio)) : json(nullptr);
    j["iterations"] = res.iterations;
    json counts;
    for (int kind = 0; kind < kMoveKindCount; ++kind) {
      counts[std::string(to_string(static_cast<MoveKind>(kind)))] = res.op_counts[static_cast<std::size_t>(kind)];
    }
    j["op_counts"] = counts;
    j["elapsed_ms"] = elapsed_ms;
    json paths = json::array();
    for (const auto& p : res.cover.paths()) paths.push_back(p.vertices);
    j["paths"] = paths;
    out << j.dump(2) << '\n';
    return;
  }
  out << "covered=" << res.covered << '\n';
  if (ratio) out << "opt=" << *input.opt << "\nratio=" << format_number(*ratio) << '\n';
  out << "paths=" << res.cover.size() << '\n';
  out << "iterations=" << res.iterations << '\n';
  for (int kind = 0; kind < kMoveKindCount; ++kind) {
    out << to_string(static_cast<MoveKind>(kind)) << '=' << res.op_counts[static_cast<std::size_t>(kind)] << '\n';
  }
}

void run_exact(const ExactArgs& a, std::ostream& out) {
  if (a.k < 1) throw UsageError("--k must be positive");
  if (a.limit > kMaxExactLimit) {
    throw UsageError("--limit may not exceed " + std::to_string(kMaxExactLimit));
  }
  const LoadedInput input = load_input(a.in);
  if (input.graph.order() > a.limit) {
    throw std::runtime_error("graph has " + std::to_string(input.graph.order()) +
                             " vertices; the exact solver refuses graphs above " +
                             std::to_string(a.limit));
  }
  const ExactResult res = exact_max_cover(input.graph, a.k, a.limit);
  out << "optimum=" << res.covered << '\n';
}

void run_bench(const BenchArgs& a, std::ostream& out) {
  GridSpec spec;
  try {
    spec = load_grid_spec(a.grid);
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(e.what());
  }
  if (a.threads != 0) spec.threads = a.threads;

  std::ofstream csv(a.out, std::ios::binary);
  if (!csv) throw std::runtime_error("cannot write '" + a.out + "'");
  csv << kRecordCsvHeader << '\n';
  std::vector<ExperimentRecord> records;
  run_grid(spec, [&](const ExperimentRecord& r) {
    csv << record_csv_row(r) << '\n';
    records.push_back(r);
  });
  out << "records=" << records.size() << '\n';

  if (!a.aggregate.empty()) {
    std::ofstream agg(a.aggregate, std::ios::binary);
    if (!agg) throw std::runtime_error("cannot write '" + a.aggregate + "'");
    const auto rows = aggregate(records);
    write_aggregate_csv(agg, rows);
    out << "aggregate_rows=" << rows.size() << '\n';
  }
}

void run_fixtures(const FixtureArgs& a, std::ostream& out) {
  fs::create_directories(a.dir);
  for (const auto& [name, fixture] : {std::pair{"fig2", fixture_fig2()}, std::pair{"fig5", fixture_fig5()}}) {
    const std::string prefix = (fs::path(a.dir) / name).string();
    save_instance(prefix, fixture.instance, fixture.labels);
    save_cover(prefix + ".cover", fixture.terminal);
    out << name << ": n=" << fixture.instance.n() << " edges=" << fixture.instance.graph.edge_count()
        << " terminal_covered=" << fixture.terminal.coverage() << '\n';
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vertex-disjoint long path cover: local search, exact oracle, benchmarks", "pathpack"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a planted instance (PREFIX.graph + PREFIX.json)");
  gen_cmd->add_option("--k", gen.k, "Minimum path order")->required();
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--d", gen.d, "Extra edge probability")->required();
  gen_cmd->add_option("--i", gen.i, "Instance index")->required();
  gen_cmd->add_option("--seed", gen.seed, "Master seed");
  gen_cmd->add_option("--out", gen.out, "Output prefix");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run approx1 or approx2 on an instance");
  solve_cmd->add_option("--alg", solve.alg, "approx1 | approx2")->required();
  auto* solve_k = solve_cmd->add_option("--k", solve.k, "Minimum path order (approx2: 4 only)");
  solve_cmd->add_option("--in", solve.in, "Instance prefix or .graph file")->required();
  solve_cmd->add_option("--resume", solve.resume, "Start from this cover file");
  solve_cmd->add_option("--cover-out", solve.cover_out, "Write the final cover here");
  solve_cmd->add_flag("--json", solve.json, "Print the result as JSON");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("exact", "Exact optimum for small graphs");
  exact_cmd->add_option("--k", exact.k, "Minimum path order")->required();
  exact_cmd->add_option("--in", exact.in, "Instance prefix or .graph file")->required();
  exact_cmd->add_option("--limit", exact.limit, "Largest accepted vertex count");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run an experiment grid");
  bench_cmd->add_option("--grid", bench.grid, "JSON grid spec")->required();
  bench_cmd->add_option("--out", bench.out, "Record CSV")->required();
  bench_cmd->add_option("--aggregate", bench.aggregate, "Aggregate CSV");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (0 = all cores)");

  FixtureArgs fixtures;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the two lower-bound fixture instances");
  fixtures_cmd->add_option("--out", fixtures.dir, "Output directory");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_cmd->parsed()) run_gen(gen, out);
    if (solve_cmd->parsed()) run_solve(solve, solve_k->count() > 0, out);
    if (exact_cmd->parsed()) run_exact(exact, out);
    if (bench_cmd->parsed()) run_bench(bench, out);
    if (fixtures_cmd->parsed()) run_fixtures(fixtures, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pathpack
