#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "pathpack/cover.hpp"
#include "pathpack/graph.hpp"

namespace pathpack::testing {

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return Graph(n, std::vector<Edge>(edges));
}

inline Path make_path(std::initializer_list<Vertex> vs) { return Path{std::vector<Vertex>(vs)}; }

// Graph on 0..n-1 with the consecutive edges of each listed path.
inline Graph path_graph(int n, const std::vector<std::vector<Vertex>>& paths,
                        std::vector<Edge> extra = {}) {
  for (const auto& p : paths)
    for (std::size_t i = 1; i < p.size(); ++i) extra.emplace_back(std::min(p[i - 1], p[i]), std::max(p[i - 1], p[i]));
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  return Graph(n, extra);
}

inline std::vector<Vertex> sorted_vertices(const Cover& c) {
  std::vector<Vertex> out;
  for (const auto& p : c.paths()) out.insert(out.end(), p.vertices.begin(), p.vertices.end());
  std::sort(out.begin(), out.end());
  return out;
}

// An arbitrary valid cover: random disjoint paths of order in [k, 2k-1]
// picked from an exhaustive path list. Not a solver state.
inline Cover random_cover(const Graph& g, int k, std::uint64_t seed, int max_paths) {
  std::mt19937_64 rng(seed);
  std::vector<char> all(static_cast<std::size_t>(g.order()), 1);
  auto candidates = oracle::all_simple_paths(g, all, 2 * k - 1);
  std::erase_if(candidates, [&](const Path& p) { return p.order() < k; });
  std::shuffle(candidates.begin(), candidates.end(), rng);
  Cover c(k);
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const Path& p : candidates) {
    if (static_cast<int>(c.size()) == max_paths) break;
    if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](Vertex x) { return used[static_cast<std::size_t>(x)]; })) continue;
    for (Vertex x : p.vertices) used[static_cast<std::size_t>(x)] = 1;
    c.push_back(p);
  }
  return c;
}

}  // namespace pathpack::testing
