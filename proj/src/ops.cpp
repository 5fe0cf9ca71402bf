#include "pathpack/ops.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pathpack {

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Add: return "add";
    case MoveKind::Rep: return "rep";
    case MoveKind::DoubleRep: return "double_rep";
    case MoveKind::Recover: return "recover";
    case MoveKind::Lookahead: return "lookahead";
  }
  return "unknown";
}

namespace {

// Simple-path enumeration inside the subgraph of unblocked vertices.
// Vertices on the current path are blocked while it is being grown.
class FreeSearch {
 public:
  FreeSearch(const Graph& g, const Cover& c) : g_(g), blocked_(static_cast<std::size_t>(g.order()), 0) {
    for (const auto& p : c.paths()) block(p.vertices);
  }

  void block(std::span<const Vertex> vs) {
    for (Vertex x : vs) blocked_[static_cast<std::size_t>(x)] = 1;
  }
  void unblock(std::span<const Vertex> vs) {
    for (Vertex x : vs) blocked_[static_cast<std::size_t>(x)] = 0;
  }
  bool blocked(Vertex x) const { return blocked_[static_cast<std::size_t>(x)] != 0; }

  // Calls visit(path) for every simple path of exactly `order` vertices that
  // starts at `start`; stops and returns true once visit returns true.
  // Searches may nest inside a visit callback; the outer path stays
  // blocked and only the part pushed by this search is reported.
  template <class Visit>
  bool paths_from(Vertex start, int order, Visit&& visit) {
    if (order < 1 || blocked(start)) return false;
    const std::size_t base = stack_.size();
    push(start);
    const bool stop = grow(base, order, visit);
    pop();
    return stop;
  }

  // Same, over every path whose first vertex is a free neighbor of anchor.
  template <class Visit>
  bool extensions(Vertex anchor, int order, Visit&& visit) {
    for (Vertex x : g_.neighbors(anchor)) {
      if (paths_from(x, order, visit)) return true;
    }
    return false;
  }

  int longest_extension(Vertex anchor, int cap) {
    int best = 0;
    for (Vertex x : g_.neighbors(anchor)) {
      if (best >= cap) break;
      if (blocked(x)) continue;
      push(x);
      best = std::max(best, deepest(cap));
      pop();
    }
    return best;
  }

  // Vertex count of each free component, indexed by vertex (0 if blocked).
  std::vector<int> free_component_sizes() const {
    const auto n = static_cast<std::size_t>(g_.order());
    std::vector<int> comp(n, -1);
    std::vector<int> sizes;
    std::vector<Vertex> queue;
    for (std::size_t s = 0; s < n; ++s) {
      if (blocked_[s] || comp[s] != -1) continue;
      const int id = static_cast<int>(sizes.size());
      queue.assign(1, static_cast<Vertex>(s));
      comp[s] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex y : g_.neighbors(queue[head])) {
          const auto yi = static_cast<std::size_t>(y);
          if (!blocked_[yi] && comp[yi] == -1) {
            comp[yi] = id;
            queue.push_back(y);
          }
        }
      }
      sizes.push_back(static_cast<int>(queue.size()));
    }
    std::vector<int> out(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      if (comp[v] >= 0) out[v] = sizes[static_cast<std::size_t>(comp[v])];
    }
    return out;
  }

 private:
  void push(Vertex x) {
    blocked_[static_cast<std::size_t>(x)] = 1;
    stack_.push_back(x);
  }
  void pop() {
    blocked_[static_cast<std::size_t>(stack_.back())] = 0;
    stack_.pop_back();
  }

  template <class Visit>
  bool grow(std::size_t base, int order, Visit& visit) {
    if (static_cast<int>(stack_.size() - base) == order) {
      return visit(Path{{stack_.begin() + static_cast<std::ptrdiff_t>(base), stack_.end()}});
    }
    for (Vertex y : g_.neighbors(stack_.back())) {
      if (blocked(y)) continue;
      push(y);
      const bool stop = grow(base, order, visit);
      pop();
      if (stop) return true;
    }
    return false;
  }

  int deepest(int cap) {
    int best = static_cast<int>(stack_.size());
    if (best >= cap) return best;
    for (Vertex y : g_.neighbors(stack_.back())) {
      if (blocked(y)) continue;
      push(y);
      best = std::max(best, deepest(cap));
      pop();
      if (best >= cap) break;
    }
    return best;
  }

  const Graph& g_;
  std::vector<char> blocked_;
  std::vector<Vertex> stack_;
};

Path concat(std::span<const Vertex> a, std::span<const Vertex> b) {
  Path p;
  p.vertices.reserve(a.size() + b.size());
  p.vertices.insert(p.vertices.end(), a.begin(), a.end());
  p.vertices.insert(p.vertices.end(), b.begin(), b.end());
  return p;
}

std::span<const Vertex> prefix(const Path& p, int count) {
  return std::span<const Vertex>(p.vertices).first(static_cast<std::size_t>(count));
}

std::span<const Vertex> suffix_from(const Path& p, int position) {
  return std::span<const Vertex>(p.vertices).subspan(static_cast<std::size_t>(position));
}

// rev(extension) followed by p[position..]: the extension's anchor-side end
// becomes adjacent to p[position].
Path graft_before(const Path& extension, const Path& p, int position) {
  return concat(extension.reversed().vertices, suffix_from(p, position));
}

Move make_move(MoveKind kind, std::vector<Path> removed, std::vector<Path> added) {
  int delta = 0;
  for (const auto& p : added) delta += p.order();
  for (const auto& p : removed) delta -= p.order();
  return Move{kind, std::move(removed), std::move(added), delta};
}

void require_k4(const Cover& c, const char* op) {
  if (c.k() != 4) {
    throw std::invalid_argument(std::string(op) + " is defined for k = 4 only (got k = " +
                                std::to_string(c.k()) + ")");
  }
}

// Rep moves available on `c`, reported through the callback in scan order.
template <class Visit>
bool scan_rep(const Cover& c, FreeSearch& search, Visit&& visit) {
  const int k = c.k();
  for (const Path& original : c.paths()) {
    for (int orientation = 0; orientation < 2; ++orientation) {
      const Path p = orientation == 0 ? original : original.reversed();
      const int last_index = (p.order() - 1) / 2;
      for (int t = 0; t <= last_index && t + 1 <= k - 1; ++t) {
        std::optional<Path> ext;
        search.extensions(p.u(t), t + 1, [&](const Path& e) {
          ext = e;
          return true;
        });
        if (ext && visit(make_move(MoveKind::Rep, {original}, {graft_before(*ext, p, t)}))) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

std::optional<Extension> find_extension(const Graph& g, const Cover& c, Vertex anchor,
                                        int min_order, int max_order,
                                        std::span<const Vertex> forbidden) {
  if (min_order < 1 || max_order < min_order) {
    throw std::invalid_argument("find_extension: need 1 <= min_order <= max_order");
  }
  FreeSearch search(g, c);
  search.block(forbidden);
  std::optional<Extension> found;
  search.extensions(anchor, min_order, [&](const Path& e) {
    found = Extension{anchor, e};
    return true;
  });
  return found;
}

int longest_extension_order(const Graph& g, const Cover& c, Vertex anchor, int cap) {
  FreeSearch search(g, c);
  return search.longest_extension(anchor, cap);
}

std::optional<Move> find_add(const Graph& g, const Cover& c) {
  const int k = c.k();
  FreeSearch search(g, c);
  const auto component_size = search.free_component_sizes();
  std::optional<Move> found;
  for (Vertex s = 0; s < g.order() && !found; ++s) {
    if (component_size[static_cast<std::size_t>(s)] < k) continue;
    search.paths_from(s, k, [&](const Path& p) {
      found = make_move(MoveKind::Add, {}, {p});
      return true;
    });
  }
  return found;
}

std::optional<Move> find_rep(const Graph& g, const Cover& c) {
  FreeSearch search(g, c);
  std::optional<Move> found;
  scan_rep(c, search, [&](Move m) {
    found = std::move(m);
    return true;
  });
  return found;
}

std::optional<Move> find_double_rep(const Graph& g, const Cover& c, DoubleRepOptions options) {
  const int k = c.k();
  FreeSearch search(g, c);
  std::optional<Move> found;

  // Positions a < b on P: P1 = P[0..a] + e(P[a]), P2 = rev(e(P[b])) + P[b..].
  // Walking one orientation is enough: the mirrored walk yields the same
  // pairs of new paths, and "e(u_j)" versus "e(v_j)" are the same position b.
  // Extensions of exactly the required order suffice, since any longer
  // witness contains one as its anchor-side prefix.
  for (const Path& p : c.paths()) {
    const int len = p.order();
    for (int a = 0; a + 1 < len; ++a) {
      const int need_a = std::max(1, k - (a + 1));
      if (need_a > k - 1) continue;
      if (options.prune && need_a > std::min(a, len - 1 - a)) continue;

      // e(P[a]) stays on the search stack, hence blocked, while e(P[b]) is sought.
      search.extensions(p.u(a), need_a, [&](const Path& ea) {
        for (int b = a + 1; b < len && !found; ++b) {
          const int need_b = std::max(1, k - (len - b));
          if (need_b > k - 1) continue;
          if (options.prune && need_b > std::min(b, len - 1 - b)) continue;
          search.extensions(p.u(b), need_b, [&](const Path& eb) {
            Path first = concat(prefix(p, a + 1), ea.vertices);
            Path second = graft_before(eb, p, b);
            found = make_move(MoveKind::DoubleRep, {p}, {std::move(first), std::move(second)});
            return true;
          });
        }
        return found.has_value();
      });
      if (found) return found;
    }
  }
  return found;
}

namespace {

// Vertex counts after the split-at-k normalization of one path.
int fours_after_split(int order) {
  constexpr int k = 4;
  int fours = 0;
  while (order >= 2 * k) {
    ++fours;
    order -= k;
  }
  return fours + (order == k ? 1 : 0);
}

// Re-cover feasibility for one pair, over at most 14 local vertices.
class RecoverSolver {
 public:
  static constexpr int kMaxLocal = 14;

  RecoverSolver(const Graph& g, const Path& p, const Path& q) {
    local_ = p.vertices;
    local_.insert(local_.end(), q.vertices.begin(), q.vertices.end());
    m_ = static_cast<int>(local_.size());
    nbr_.assign(static_cast<std::size_t>(m_), 0);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < m_; ++j) {
        if (i != j && g.adjacent(local_[static_cast<std::size_t>(i)], local_[static_cast<std::size_t>(j)])) {
          nbr_[static_cast<std::size_t>(i)] |= 1U << j;
        }
      }
    }
    // ends_[S]: local vertices at which some Hamiltonian path of G[S] ends.
    const std::uint32_t full = 1U << m_;
    ends_.assign(full, 0);
    for (std::uint32_t s = 1; s < full; ++s) {
      if (std::has_single_bit(s)) {
        ends_[s] = s;
        continue;
      }
      std::uint16_t ends = 0;
      for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (ends_[s & ~(1U << v)] & nbr_[static_cast<std::size_t>(v)]) ends |= static_cast<std::uint16_t>(1U << v);
      }
      ends_[s] = ends;
    }
    best_.assign(full, kUnknown);
    choice_.assign(full, 0);
  }

  // Paths re-covering all local vertices with the most 4-paths after
  // normalization, or empty when no partition has a 4-path.
  std::vector<Path> solve() {
    const std::uint32_t all = (1U << m_) - 1;
    if (best(all) < 1) return {};
    std::vector<Path> parts;
    for (std::uint32_t s = all; s != 0;) {
      const std::uint32_t t = choice_[s];
      parts.push_back(trace(t));
      s &= ~t;
    }
    return parts;
  }

 private:
  static constexpr int kUnknown = -2;
  static constexpr int kInfeasible = -1;

  int best(std::uint32_t s) {
    if (s == 0) return 0;
    int& memo = best_[s];
    if (memo != kUnknown) return memo;
    memo = kInfeasible;
    if (std::popcount(s) < 4) return memo;
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t others = s & ~low;
    // Every submask of `others`, joined with the lowest vertex.
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t t = sub | low;
      if (std::popcount(t) >= 4 && ends_[t] != 0) {
        const int rest = best(s & ~t);
        if (rest != kInfeasible) {
          const int value = rest + fours_after_split(std::popcount(t));
          if (value > memo) {
            memo = value;
            choice_[s] = t;
          }
        }
      }
      if (sub == 0) break;
    }
    return memo;
  }

  Path trace(std::uint32_t t) const {
    std::vector<Vertex> reversed_order;
    int v = std::countr_zero(static_cast<std::uint32_t>(ends_[t]));
    for (;;) {
      reversed_order.push_back(local_[static_cast<std::size_t>(v)]);
      const std::uint32_t rest = t & ~(1U << v);
      if (rest == 0) break;
      v = std::countr_zero(static_cast<std::uint32_t>(ends_[rest] & nbr_[static_cast<std::size_t>(v)]));
      t = rest;
    }
    return Path{{reversed_order.rbegin(), reversed_order.rend()}};
  }

  std::vector<Vertex> local_;
  int m_ = 0;
  std::vector<std::uint16_t> nbr_;
  std::vector<std::uint16_t> ends_;
  std::vector<int> best_;
  std::vector<std::uint32_t> choice_;
};

bool paths_touch(const Graph& g, const Path& p, const CoverIndex& index, int other) {
  for (Vertex x : p.vertices) {
    for (Vertex y : g.neighbors(x)) {
      if (index.owner(y) == other) return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Move> find_recover(const Graph& g, const Cover& c) {
  require_k4(c, "find_recover");
  const auto& paths = c.paths();
  const CoverIndex index(g.order(), c);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].order() < 5) continue;
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[j].order() < 5) continue;
      // Without an edge between them each path can only re-cover itself,
      // and a single path of order 5..7 cannot yield a 4-path.
      if (!paths_touch(g, paths[i], index, static_cast<int>(j))) continue;
      if (paths[i].order() + paths[j].order() > RecoverSolver::kMaxLocal) continue;
      RecoverSolver solver(g, paths[i], paths[j]);
      auto parts = solver.solve();
      if (!parts.empty()) {
        return make_move(MoveKind::Recover, {paths[i], paths[j]}, std::move(parts));
      }
    }
  }
  return std::nullopt;
}

namespace {

// Merges a tentative replacement of `original` by `tentative` with a Move
// found on the tentative cover into one Move against the original cover.
Move compose_lookahead(const Path& original, const Path& tentative, const Move& follow_up) {
  std::vector<Path> removed{original};
  std::vector<Path> added;
  bool tentative_consumed = false;
  for (const auto& r : follow_up.removed) {
    if (r == tentative) {
      tentative_consumed = true;
    } else {
      removed.push_back(r);
    }
  }
  if (!tentative_consumed) added.push_back(tentative);
  added.insert(added.end(), follow_up.added.begin(), follow_up.added.end());
  return make_move(MoveKind::Lookahead, std::move(removed), std::move(added));
}

}  // namespace

std::optional<Move> find_lookahead(const Graph& g, const Cover& c) {
  require_k4(c, "find_lookahead");
  const auto& paths = c.paths();
  FreeSearch search(g, c);
  std::optional<Move> found;

  // Case (i). With both orientations walked, trying rev(e) + u_t..v_0 in
  // the mirrored orientation covers u_0..u_t + e at a center vertex.
  for (std::size_t i = 0; i < paths.size() && !found; ++i) {
    const Path& original = paths[i];
    for (int orientation = 0; orientation < 2 && !found; ++orientation) {
      const Path p = orientation == 0 ? original : original.reversed();
      for (int t = 2; t <= 3 && t <= (p.order() - 1) / 2 && !found; ++t) {
        search.extensions(p.u(t), t, [&](const Path& e) {
          Cover trial = c;
          Path tentative = graft_before(e, p, t);
          trial.replace(i, {tentative});
          if (auto rep = find_rep(g, trial)) {
            found = compose_lookahead(original, tentative, *rep);
            return true;
          }
          return false;
        });
      }
    }
  }
  if (found) return found;

  // Case (ii): a 6-path becomes u_0-u_1-u_2-e(u_2), and the freed
  // v_2-v_1-v_0 extends a path at a vertex w within distance 1 of an end.
  const CoverIndex index(g.order(), c);
  for (std::size_t i = 0; i < paths.size() && !found; ++i) {
    const Path& original = paths[i];
    if (original.order() != 6) continue;
    for (int orientation = 0; orientation < 2 && !found; ++orientation) {
      const Path p = orientation == 0 ? original : original.reversed();
      search.extensions(p.u(2), 2, [&](const Path& e) {
        const Path shortened = concat(prefix(p, 3), e.vertices);
        const std::array<std::pair<Vertex, Path>, 2> ends{{
            {p.v(0), Path{{p.v(0), p.v(1), p.v(2)}}},
            {p.v(2), Path{{p.v(2), p.v(1), p.v(0)}}},
        }};
        for (const auto& [end, freed] : ends) {
          for (Vertex w : g.neighbors(end)) {
            const Path* host = nullptr;
            int pos = -1;
            auto on_shortened = std::find(shortened.vertices.begin(), shortened.vertices.end(), w);
            if (on_shortened != shortened.vertices.end()) {
              host = &shortened;
              pos = static_cast<int>(on_shortened - shortened.vertices.begin());
            } else if (index.covered(w) && index.owner(w) != static_cast<int>(i)) {
              host = &paths[static_cast<std::size_t>(index.owner(w))];
              pos = index.position(w);
            } else {
              continue;
            }
            const int len = host->order();
            Path oriented = *host;
            int t = pos;
            if (pos > 1) {
              oriented = host->reversed();
              t = len - 1 - pos;
            }
            if (t > 1) continue;
            Path grown = graft_before(freed, oriented, t);
            if (host == &shortened) {
              found = make_move(MoveKind::Lookahead, {original}, {std::move(grown)});
            } else {
              found = make_move(MoveKind::Lookahead, {original, *host}, {shortened, std::move(grown)});
            }
            return true;
          }
        }
        return false;
      });
    }
  }
  return found;
}

Cover apply_move(Cover c, const Move& m) {
  for (const auto& r : m.removed) {
    if (!c.erase(r)) {
      throw std::invalid_argument("apply_move: stale move, removed path is not in the cover");
    }
  }
  std::vector<Vertex> used;
  for (const auto& p : c.paths()) used.insert(used.end(), p.vertices.begin(), p.vertices.end());
  for (const auto& p : m.added) used.insert(used.end(), p.vertices.begin(), p.vertices.end());
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw std::invalid_argument("apply_move: stale move, added paths collide with the cover");
  }
  for (const auto& p : m.added) c.push_back(p);
  c.normalize();
  return c;
}

}  // namespace pathpack
