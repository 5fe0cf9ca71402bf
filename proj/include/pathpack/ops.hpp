#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pathpack/cover.hpp"
#include "pathpack/graph.hpp"

namespace pathpack {

enum class MoveKind { Add, Rep, DoubleRep, Recover, Lookahead };

inline constexpr int kMoveKindCount = 5;

std::string_view to_string(MoveKind kind);

/// A local improvement: delete `removed` from the cover, insert `added`.
/// coverage_delta is sum(n(added)) - sum(n(removed)).
struct Move {
  MoveKind kind = MoveKind::Add;
  std::vector<Path> removed;
  std::vector<Path> added;
  int coverage_delta = 0;

  bool operator==(const Move&) const = default;
};

/// A path of uncovered vertices whose first vertex is adjacent to `anchor`.
struct Extension {
  Vertex anchor = 0;
  Path path;

  int order() const { return path.order(); }
  bool operator==(const Extension&) const = default;
};

/// Depth-first search over simple paths of G[V - V(c) - forbidden] starting
/// at the uncovered neighbors of `anchor`, candidates in ascending vertex
/// order. Returns the first path whose order lands in [min_order, max_order].
/// Because DFS grows a path one vertex at a time, a hit always has order
/// exactly min_order.
std::optional<Extension> find_extension(const Graph& g, const Cover& c, Vertex anchor,
                                        int min_order, int max_order,
                                        std::span<const Vertex> forbidden = {});

/// n(anchor) capped at `cap`: the largest order of any extension at anchor.
int longest_extension_order(const Graph& g, const Cover& c, Vertex anchor, int cap);

/// Add: a k-path inside the uncovered subgraph.
std::optional<Move> find_add(const Graph& g, const Cover& c);

/// Rep: replace the prefix u_0..u_{t-1} of some path by an extension at u_t
/// of order >= t + 1 (extensions capped at k - 1).
std::optional<Move> find_rep(const Graph& g, const Cover& c);

struct DoubleRepOptions {
  /// Skip index pairs that need an extension longer than a Rep fixed point
  /// allows. Only sound when find_rep has already failed on the cover.
  bool prune = true;
};

/// DoubleRep: split one path into a head part and a tail part, each grown to
/// order >= k by its own extension, the two extensions vertex-disjoint.
std::optional<Move> find_double_rep(const Graph& g, const Cover& c, DoubleRepOptions options = {});

/// Re-cover (k = 4): repartition the vertices of two paths of order >= 5
/// into paths of order >= 4, at least one of which is a 4-path.
/// Throws std::invalid_argument if c.k() != 4.
std::optional<Move> find_recover(const Graph& g, const Cover& c);

/// Look-ahead (k = 4): trade a prefix for an extension of equal order at
/// u_t (t in {2, 3}) when that enables a Rep; or, on a 6-path, reuse the
/// dropped v_0-v_1-v_2 as an extension at a nearby path end.
/// Throws std::invalid_argument if c.k() != 4.
std::optional<Move> find_lookahead(const Graph& g, const Cover& c);

/// Applies `m` and splits any path of order >= 2k. Throws
/// std::invalid_argument when a removed path is absent or an added path
/// collides with the rest of the cover.
Cover apply_move(Cover c, const Move& m);

}  // namespace pathpack
