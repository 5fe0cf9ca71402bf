#include "pathpack/instances.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace pathpack {

using nlohmann::json;

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SplitMix64::result_type SplitMix64::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return splitmix64_mix(state_);
}

std::uint64_t SplitMix64::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("SplitMix64::uniform: empty range");
  const std::uint64_t span = hi - lo;
  if (span == max()) return (*this)();
  const std::uint64_t range = span + 1;
  // Largest multiple of `range` that fits; draws at or above it are rejected.
  const std::uint64_t limit = max() - (max() % range + 1) % range;
  for (;;) {
    const std::uint64_t x = (*this)();
    if (x <= limit) return lo + x % range;
  }
}

double SplitMix64::unit() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

std::uint64_t instance_seed(std::uint64_t master_seed, int k, int n, double d, int i) {
  const auto d_key = static_cast<std::int64_t>(std::llround(d * 1e6));
  std::uint64_t seed = splitmix64_mix(master_seed);
  for (const std::uint64_t part : {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n),
                                   static_cast<std::uint64_t>(d_key), static_cast<std::uint64_t>(i)}) {
    seed = splitmix64_mix(seed ^ splitmix64_mix(part + 0x9e3779b97f4a7c15ULL));
  }
  return seed;
}

std::vector<int> planted_orders(int k, int n, SplitMix64& rng) {
  std::vector<int> orders;
  int remaining = n;
  while (remaining >= 3 * k - 1) {
    const auto len = static_cast<int>(rng.uniform(static_cast<std::uint64_t>(k),
                                                  static_cast<std::uint64_t>(2 * k - 1)));
    orders.push_back(len);
    remaining -= len;
  }
  if (remaining <= 2 * k - 1) {
    orders.push_back(remaining);
  } else {
    // remaining in [2k, 3k-2]: two paths, first order uniform over feasible splits.
    const int lo = std::max(k, remaining - (2 * k - 1));
    const int hi = std::min(2 * k - 1, remaining - k);
    const auto first = static_cast<int>(
        rng.uniform(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
    orders.push_back(first);
    orders.push_back(remaining - first);
  }
  return orders;
}

Instance generate(int k, int n, double d, int i, std::uint64_t master_seed) {
  if (k < 4) throw std::invalid_argument("generate: k must be at least 4");
  if (n < k) throw std::invalid_argument("generate: n must be at least k");
  if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("generate: d must lie in [0, 1]");
  if (i < 0) throw std::invalid_argument("generate: instance index must be non-negative");

  SplitMix64 rng(instance_seed(master_seed, k, n, d, i));
  const auto orders = planted_orders(k, n, rng);

  // Planted paths on consecutive labels, before permutation.
  std::vector<int> path_of(static_cast<std::size_t>(n));
  std::vector<Path> planted;
  int next = 0;
  for (int len : orders) {
    Path p;
    for (int j = 0; j < len; ++j) {
      path_of[static_cast<std::size_t>(next)] = static_cast<int>(planted.size());
      p.vertices.push_back(next++);
    }
    planted.push_back(std::move(p));
  }
  auto on_planted_path = [&](int u, int v) {
    return v == u + 1 && path_of[static_cast<std::size_t>(u)] == path_of[static_cast<std::size_t>(v)];
  };

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (on_planted_path(u, v)) {
        edges.emplace_back(u, v);
      } else if (rng.unit() < d) {
        edges.emplace_back(u, v);
      }
    }
  }

  // Fisher-Yates: label[old] = new.
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
  for (int j = n - 1; j > 0; --j) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::uint64_t>(j)));
    std::swap(label[static_cast<std::size_t>(j)], label[r]);
  }
  for (auto& [u, v] : edges) {
    u = label[static_cast<std::size_t>(u)];
    v = label[static_cast<std::size_t>(v)];
  }
  for (auto& p : planted) {
    for (auto& x : p.vertices) x = label[static_cast<std::size_t>(x)];
  }

  Instance inst;
  inst.graph = Graph(n, edges);
  inst.k = k;
  inst.d = d;
  inst.index = i;
  inst.master_seed = master_seed;
  inst.planted_paths = std::move(planted);
  return inst;
}

namespace {

struct LabeledBuilder {
  std::vector<std::string> labels;
  std::map<std::string, Vertex> ids;
  std::set<Edge> edges;

  void add_vertices(char letter, int count) {
    for (int j = 0; j < count; ++j) {
      const std::string name = std::string(1, letter) + std::to_string(j);
      ids.emplace(name, static_cast<Vertex>(labels.size()));
      labels.push_back(name);
    }
  }

  Path path(std::initializer_list<const char*> names) {
    Path p;
    for (const char* name : names) p.vertices.push_back(ids.at(name));
    for (std::size_t j = 1; j < p.vertices.size(); ++j) {
      const auto [a, b] = std::minmax(p.vertices[j - 1], p.vertices[j]);
      edges.emplace(a, b);
    }
    return p;
  }

  Graph graph() const {
    const std::vector<Edge> list(edges.begin(), edges.end());
    return Graph(static_cast<int>(labels.size()), list);
  }
};

}  // namespace

Fixture fixture_fig2() {
  LabeledBuilder b;
  b.add_vertices('u', 5);
  b.add_vertices('v', 5);
  b.add_vertices('w', 6);
  b.add_vertices('x', 8);

  std::vector<Path> optimal{
      b.path({"u4", "u0", "v0", "v4"}),
      b.path({"w0", "u1", "w1", "v1", "w2"}),
      b.path({"x0", "x1", "u2", "x2", "x3"}),
      b.path({"x4", "x5", "v2", "x6", "x7"}),
      b.path({"w3", "u3", "w4", "v3", "w5"}),
  };
  Cover terminal(4, {b.path({"u0", "u1", "u2", "u3", "u4"}), b.path({"v0", "v1", "v2", "v3", "v4"})});

  Instance inst;
  inst.graph = b.graph();
  inst.k = 4;
  inst.planted_paths = std::move(optimal);
  return Fixture{std::move(inst), std::move(terminal), b.labels};
}

Fixture fixture_fig5() {
  LabeledBuilder b;
  b.add_vertices('u', 4);
  b.add_vertices('v', 4);
  b.add_vertices('w', 4);
  b.add_vertices('x', 4);
  b.add_vertices('y', 8);
  b.add_vertices('z', 8);

  std::vector<Path> optimal{
      b.path({"u0", "v0", "w0", "x0"}),
      b.path({"y0", "u1", "y1", "v1", "y2"}),
      b.path({"z0", "x1", "z1", "w1", "z2"}),
      b.path({"y3", "u2", "y4", "v2", "y5"}),
      b.path({"z3", "x2", "z4", "w2", "z5"}),
      b.path({"y6", "u3", "y7", "v3"}),
      b.path({"w3", "z7", "x3", "z6"}),
  };
  Cover terminal(4, {
                        b.path({"u0", "u1", "u2", "u3", "y7"}),
                        b.path({"v0", "v1", "v2", "v3"}),
                        b.path({"w0", "w1", "w2", "w3"}),
                        b.path({"x0", "x1", "x2", "x3", "z7"}),
                    });

  Instance inst;
  inst.graph = b.graph();
  inst.k = 4;
  inst.planted_paths = std::move(optimal);
  return Fixture{std::move(inst), std::move(terminal), b.labels};
}

std::string instance_prefix(const std::string& path) {
  for (const std::string ext : {".graph", ".json"}) {
    if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0) {
      return path.substr(0, path.size() - ext.size());
    }
  }
  return path;
}

void save_instance(const std::string& path, const Instance& inst,
                   const std::vector<std::string>& labels) {
  const std::string prefix = instance_prefix(path);
  save_graph(prefix + ".graph", inst.graph);

  json meta;
  meta["k"] = inst.k;
  meta["n"] = inst.n();
  meta["d"] = inst.d;
  meta["i"] = inst.index;
  meta["master_seed"] = inst.master_seed;
  json planted = json::array();
  for (const auto& p : inst.planted_paths) planted.push_back(p.vertices);
  meta["planted_paths"] = std::move(planted);
  if (!labels.empty()) meta["labels"] = labels;

  std::ofstream out(prefix + ".json", std::ios::binary);
  if (!out) throw std::runtime_error("cannot write metadata file '" + prefix + ".json'");
  out << meta.dump(2) << '\n';
}

Instance load_instance(const std::string& path) {
  const std::string prefix = instance_prefix(path);
  Instance inst;
  inst.graph = load_graph(prefix + ".graph");

  std::ifstream in(prefix + ".json");
  if (!in) throw std::runtime_error("cannot open metadata file '" + prefix + ".json'");
  json meta;
  try {
    meta = json::parse(in);
    inst.k = meta.at("k").get<int>();
    inst.d = meta.at("d").get<double>();
    inst.index = meta.at("i").get<int>();
    inst.master_seed = meta.at("master_seed").get<std::uint64_t>();
    const int n = meta.at("n").get<int>();
    if (n != inst.graph.order()) {
      throw std::runtime_error("metadata n = " + std::to_string(n) + " but graph has " +
                               std::to_string(inst.graph.order()) + " vertices");
    }
    if (meta.contains("planted_paths")) {
      for (const auto& p : meta.at("planted_paths")) {
        inst.planted_paths.push_back(Path{p.get<std::vector<Vertex>>()});
      }
    }
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed metadata file '" + prefix + ".json': " + e.what());
  }

  std::vector<char> seen(static_cast<std::size_t>(inst.n()), 0);
  for (const auto& p : inst.planted_paths) {
    if (!is_path(inst.graph, p)) {
      throw std::runtime_error("metadata/graph mismatch: planted path is not a path of the graph");
    }
    for (Vertex x : p.vertices) {
      if (seen[static_cast<std::size_t>(x)]++) {
        throw std::runtime_error("metadata/graph mismatch: planted paths overlap at vertex " +
                                 std::to_string(x));
      }
    }
  }
  return inst;
}

}  // namespace pathpack
