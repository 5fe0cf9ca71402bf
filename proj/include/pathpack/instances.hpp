#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pathpack/cover.hpp"
#include "pathpack/graph.hpp"

namespace pathpack {

/// A benchmark graph with a planted cover of all of its vertices.
struct Instance {
  Graph graph;
  int k = 4;
  double d = 0.0;
  int index = 0;
  std::uint64_t master_seed = 0;
  /// Vertex-disjoint paths covering every vertex, each of order in [k, 2k-1],
  /// in the graph's (post-permutation) labels.
  std::vector<Path> planted_paths;

  int n() const { return graph.order(); }
  int planted_opt() const { return graph.order(); }

  bool operator==(const Instance&) const = default;
};

/// Counter-free 64-bit generator: state advances by the golden-ratio
/// increment and each output is the splitmix64 finalizer of the state.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform integer in [lo, hi], by rejection (no modulo bias).
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

 private:
  std::uint64_t state_;
};

std::uint64_t splitmix64_mix(std::uint64_t x);

/// Stream seed for instance (k, n, d, i): the key parts k, n, round(d * 1e6)
/// and i are folded into master_seed one after another with splitmix64_mix.
std::uint64_t instance_seed(std::uint64_t master_seed, int k, int n, double d, int i);

inline constexpr std::uint64_t kDefaultMasterSeed = 20240101;

/// Planted-cover generator. Path orders are drawn uniformly from [k, 2k-1]
/// while at least 3k-1 vertices remain; the tail is one path (remainder
/// <= 2k-1) or two paths with a uniformly drawn feasible split. Every other
/// vertex pair becomes an edge with probability d, then labels are permuted
/// uniformly. Throws std::invalid_argument unless n >= k >= 4 and d in [0,1].
Instance generate(int k, int n, double d, int i, std::uint64_t master_seed = kDefaultMasterSeed);

/// Planted path orders before any randomness in edges or labels; exposed so
/// tests can check the remainder rules directly.
std::vector<int> planted_orders(int k, int n, SplitMix64& rng);

struct Fixture {
  Instance instance;
  Cover terminal;
  std::vector<std::string> labels;
};

/// 24-vertex graph on which the two planted 5-paths are an approx1 fixed
/// point while all 24 vertices can be covered.
Fixture fixture_fig2();

/// 32-vertex graph on which two 5-paths and two 4-paths (18 vertices) are an
/// approx2 fixed point while all 32 vertices can be covered.
Fixture fixture_fig5();

/// Instance files: PREFIX.graph (graph text format) and PREFIX.json with keys
/// k, n, d, i, master_seed, planted_paths (optional "labels"). `path` may be
/// the prefix or either file name.
void save_instance(const std::string& path, const Instance& inst,
                   const std::vector<std::string>& labels = {});

/// Throws std::runtime_error on malformed files or when metadata and graph
/// disagree (vertex count, a planted path using a missing edge, overlap).
Instance load_instance(const std::string& path);

/// Strips a trailing ".graph" or ".json".
std::string instance_prefix(const std::string& path);

}  // namespace pathpack
