#include "pathpack/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pathpack {

namespace {

using Finder = std::function<std::optional<Move>(const Graph&, const Cover&)>;

Cover starting_cover(const Graph& g, int k, const std::optional<Cover>& start) {
  if (!start) return Cover(k);
  if (start->k() != k) {
    throw std::invalid_argument("start cover has k = " + std::to_string(start->k()) +
                                ", solver runs with k = " + std::to_string(k));
  }
  Cover c = *start;
  c.normalize();
  const auto violations = validate_cover(g, c);
  if (!violations.empty()) {
    throw std::invalid_argument("start cover is invalid: " + violations.front());
  }
  return c;
}

SolveResult local_search(const Graph& g, Cover cover, const std::vector<Finder>& finders) {
  const auto started = std::chrono::steady_clock::now();
  SolveResult result{std::move(cover)};
  for (;;) {
    std::optional<Move> move;
    for (const auto& find : finders) {
      move = find(g, result.cover);
      if (move) break;
    }
    if (!move) break;

    const int fours_before = result.cover.count_of_order(4);
    result.cover = apply_move(std::move(result.cover), *move);
    // Every move raises (coverage, number of 4-paths) lexicographically.
    if (move->coverage_delta < 0 ||
        (move->coverage_delta == 0 && result.cover.count_of_order(4) <= fours_before)) {
      throw std::logic_error("local search move did not improve the cover");
    }
    ++result.op_counts[static_cast<std::size_t>(move->kind)];
    ++result.iterations;
  }
  result.covered = result.cover.coverage();
  result.elapsed = std::chrono::steady_clock::now() - started;
  return result;
}

std::optional<Move> double_rep_pruned(const Graph& g, const Cover& c) {
  return find_double_rep(g, c, DoubleRepOptions{.prune = true});
}

// An optimum never needs a path of order >= 2k (split it), so only vertex
// sets of traceable paths with order in [k, 2k-1] are candidates. They are
// bucketed by lowest vertex: when v is the lowest undecided vertex, a
// candidate inside the undecided set that holds v must have v as its lowest.
class ExactCoverSolver {
 public:
  ExactCoverSolver(const Graph& g, int k) : g_(g), k_(k), by_lowest_(static_cast<std::size_t>(g.order())) {
    for (Vertex s = 0; s < g.order(); ++s) {
      stack_.assign(1, s);
      collect(std::uint32_t{1} << s);
    }
    for (auto& bucket : by_lowest_) {
      std::sort(bucket.begin(), bucket.end());
      bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    }
  }

  ExactResult solve() {
    const int n = g_.order();
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    ExactResult result{best(all), Cover(k_)};
    for (std::uint32_t s = all; s != 0;) {
      const std::uint32_t t = memo_.at(s).choice;
      if (t == 0) {
        s &= s - 1;
        continue;
      }
      result.cover.push_back(trace(t));
      s &= ~t;
    }
    return result;
  }

 private:
  struct Entry {
    int value;
    std::uint32_t choice;  // path vertex set holding the lowest vertex, 0 if it stays uncovered
  };

  void collect(std::uint32_t mask) {
    const int order = static_cast<int>(stack_.size());
    if (order >= k_) by_lowest_[static_cast<std::size_t>(std::countr_zero(mask))].push_back(mask);
    if (order == 2 * k_ - 1) return;
    for (Vertex y : g_.neighbors(stack_.back())) {
      if (mask >> y & 1U) continue;
      stack_.push_back(y);
      collect(mask | (std::uint32_t{1} << y));
      stack_.pop_back();
    }
  }

  int best(std::uint32_t s) {
    if (s == 0) return 0;
    if (auto it = memo_.find(s); it != memo_.end()) return it->second.value;
    const int low = std::countr_zero(s);
    Entry entry{best(s & (s - 1)), 0};
    if (std::popcount(s) >= k_) {
      for (std::uint32_t t : by_lowest_[static_cast<std::size_t>(low)]) {
        if ((t & ~s) != 0) continue;
        const int candidate = std::popcount(t) + best(s & ~t);
        if (candidate > entry.value) entry = Entry{candidate, t};
      }
    }
    memo_.emplace(s, entry);
    return entry.value;
  }

  // Some Hamiltonian path of G[t], found by DFS (|t| <= 2k-1).
  Path trace(std::uint32_t t) const {
    std::vector<Vertex> path;
    std::function<bool(std::uint32_t)> extend = [&](std::uint32_t used) {
      if (used == t) return true;
      for (Vertex y : g_.neighbors(path.back())) {
        const std::uint32_t bit = std::uint32_t{1} << y;
        if (!(t & bit) || (used & bit)) continue;
        path.push_back(y);
        if (extend(used | bit)) return true;
        path.pop_back();
      }
      return false;
    };
    for (std::uint32_t rest = t; rest != 0; rest &= rest - 1) {
      const Vertex start = std::countr_zero(rest);
      path.assign(1, start);
      if (extend(std::uint32_t{1} << start)) break;
    }
    return Path{path};
  }

  const Graph& g_;
  int k_;
  std::vector<std::vector<std::uint32_t>> by_lowest_;
  std::vector<Vertex> stack_;
  std::unordered_map<std::uint32_t, Entry> memo_;
};

}  // namespace

SolveResult approx1(const Graph& g, int k, const std::optional<Cover>& start) {
  if (k < 4) {
    throw std::invalid_argument("approx1 requires k >= 4 (got " + std::to_string(k) + ")");
  }
  if (k > g.order()) {
    throw std::invalid_argument("approx1 requires k <= n (k = " + std::to_string(k) +
                                ", n = " + std::to_string(g.order()) + ")");
  }
  return local_search(g, starting_cover(g, k, start), {find_add, find_rep, double_rep_pruned});
}

SolveResult approx2(const Graph& g, const std::optional<Cover>& start) {
  return local_search(g, starting_cover(g, 4, start),
                      {find_add, find_rep, double_rep_pruned, find_recover, find_lookahead});
}

ExactResult exact_max_cover(const Graph& g, int k, int max_vertices) {
  const int n = g.order();
  if (max_vertices > kMaxExactLimit) max_vertices = kMaxExactLimit;
  if (n > max_vertices) {
    throw std::invalid_argument("exact_max_cover: n = " + std::to_string(n) +
                                " exceeds the limit of " + std::to_string(max_vertices) +
                                " vertices");
  }
  if (k < 1) {
    throw std::invalid_argument("exact_max_cover: k must be positive");
  }
  ExactCoverSolver solver(g, k);
  return solver.solve();
}

double theoretical_ratio(int k) {
  if (k < 4) {
    throw std::invalid_argument("theoretical_ratio requires k >= 4");
  }
  if (k == 4) return 12.0 / 5.0;
  const double kk = static_cast<double>(k);
  const double radicand = 18.0 * kk * kk - (k % 2 == 1 ? 3.0 : 21.0);
  return (3.0 * kk + 1.0) / 2.0 - std::sqrt(radicand) / 4.0;
}

}  // namespace pathpack
