#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathpack {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: a packed bit matrix for O(1) `adjacent` queries
/// and sorted neighbor lists for iteration. The graph is immutable once
/// constructed, so one instance can be shared by any number of readers.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, out-of-range endpoints or
  /// duplicate edges (in either orientation).
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const {
    const auto bit = static_cast<std::size_t>(u) * words_ * 64 + static_cast<std::size_t>(v);
    return (bits_[bit >> 6] >> (bit & 63)) & 1U;
  }

  /// Neighbors of `v` in ascending order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;  // 64-bit words per adjacency row
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Reads the graph text format: a header line "n m" followed by m lines
/// "u v" with 0 <= u < v < n. Throws std::runtime_error on malformed input,
/// out-of-range or duplicate edges, or an edge count that disagrees with m.
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
void save_graph(const std::string& path, const Graph& g);

}  // namespace pathpack
