#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pathpack/graph.hpp"

namespace pathpack {

/// Ordered vertex sequence. Vertex `u(j)` sits j steps from the head,
/// `v(j)` j steps from the tail, so u(j) == v(order() - 1 - j).
struct Path {
  std::vector<Vertex> vertices;

  int order() const { return static_cast<int>(vertices.size()); }
  Vertex u(int j) const { return vertices[static_cast<std::size_t>(j)]; }
  Vertex v(int j) const { return vertices[vertices.size() - 1 - static_cast<std::size_t>(j)]; }
  Vertex head() const { return vertices.front(); }
  Vertex tail() const { return vertices.back(); }

  Path reversed() const;

  bool operator==(const Path&) const = default;
};

/// True iff the vertices are distinct, in range, and consecutive ones are adjacent.
bool is_path(const Graph& g, const Path& p);

/// Collection of vertex-disjoint paths with minimum order k. Paths keep
/// insertion order; every algorithm scan walks them front to back.
class Cover {
 public:
  explicit Cover(int k);
  Cover(int k, std::vector<Path> paths);

  int k() const { return k_; }
  const std::vector<Path>& paths() const { return paths_; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  /// Total number of covered vertices.
  int coverage() const;
  /// Number of paths whose order is exactly `order`.
  int count_of_order(int order) const;

  void push_back(Path p) { paths_.push_back(std::move(p)); }
  /// Removes the first path equal to `p`; returns false if absent.
  bool erase(const Path& p);
  /// Replaces the path at `index` by `replacement` (possibly several paths).
  void replace(std::size_t index, std::vector<Path> replacement);

  /// Splits every path of order >= 2k after its k-th vertex, repeatedly.
  void normalize();

  bool operator==(const Cover&) const = default;

 private:
  int k_;
  std::vector<Path> paths_;
};

/// Per-vertex lookup into a cover: which path owns a vertex, and where.
class CoverIndex {
 public:
  static constexpr int kFree = -1;

  CoverIndex(int n, const Cover& c);

  bool covered(Vertex v) const { return owner_[static_cast<std::size_t>(v)] != kFree; }
  int owner(Vertex v) const { return owner_[static_cast<std::size_t>(v)]; }
  int position(Vertex v) const { return position_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<int> owner_;
  std::vector<int> position_;
};

/// One human-readable entry per violated cover invariant: vertex overlap,
/// non-path sequence, or order outside [k, 2k-1]. Empty means valid.
std::vector<std::string> validate_cover(const Graph& g, const Cover& c);

/// Replaces `p` by its first k vertices and the remainder, repeating on the
/// remainder while it still has order >= 2k. The pieces take p's slot.
/// Throws std::invalid_argument if n(p) < 2k or p is not in the cover.
Cover split_long_path(Cover c, const Path& p);

/// Cover file: one path per line, vertex indices separated by whitespace.
Cover read_cover(std::istream& in, int k);
Cover load_cover(const std::string& path, int k);
void write_cover(std::ostream& out, const Cover& c);
void save_cover(const std::string& path, const Cover& c);

}  // namespace pathpack
