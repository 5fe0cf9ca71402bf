#pragma once

#include <array>
#include <chrono>
#include <optional>

#include "pathpack/cover.hpp"
#include "pathpack/graph.hpp"
#include "pathpack/ops.hpp"

namespace pathpack {

using OpCounts = std::array<int, kMoveKindCount>;

struct SolveResult {
  Cover cover;
  int covered = 0;
  OpCounts op_counts{};
  int iterations = 0;
  std::chrono::nanoseconds elapsed{0};

  int count(MoveKind kind) const { return op_counts[static_cast<std::size_t>(kind)]; }
};

/// Local improvement with Add > Rep > DoubleRep until none applies.
/// Starts from `start` when given (it must pass validate_cover), else from
/// the empty cover. Throws std::invalid_argument if k < 4 or k > n.
SolveResult approx1(const Graph& g, int k, const std::optional<Cover>& start = std::nullopt);

/// The k = 4 algorithm: Add > Rep > DoubleRep > Re-cover > Look-ahead.
SolveResult approx2(const Graph& g, const std::optional<Cover>& start = std::nullopt);

inline constexpr int kDefaultExactLimit = 18;
inline constexpr int kMaxExactLimit = 32;

struct ExactResult {
  int covered = 0;
  Cover cover;
};

/// Maximum number of vertices coverable by disjoint paths of order >= k.
/// Memoized recursion over the set of undecided vertices: the lowest one is
/// either left uncovered or placed on a traceable vertex set of order
/// [k, 2k-1]. Exponential in n; intended as a test oracle on small or
/// sparse graphs. Throws std::invalid_argument when n exceeds
/// `max_vertices` (clamped to kMaxExactLimit) or k < 1.
ExactResult exact_max_cover(const Graph& g, int k, int max_vertices = kDefaultExactLimit);

/// Worst-case ratio bound of approx1 for Max-k: 12/5 at k = 4, otherwise
/// (3k+1)/2 - sqrt(18k^2 - 3)/4 for odd k and (3k+1)/2 - sqrt(18k^2 - 21)/4
/// for even k. Throws std::invalid_argument if k < 4.
double theoretical_ratio(int k);

}  // namespace pathpack
