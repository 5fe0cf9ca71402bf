#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pathpack/bench.hpp"
#include "pathpack/instances.hpp"
#include "pathpack/ops.hpp"
#include "pathpack/solvers.hpp"

using namespace pathpack;

namespace {

// Random generator keys for small planted instances.
struct InstanceGen {
  std::mt19937_64 rng;
  explicit InstanceGen(std::uint64_t seed) : rng(seed) {}

  Instance next(int k, int n_lo, int n_hi) {
    const int n = std::uniform_int_distribution<int>(n_lo, n_hi)(rng);
    static constexpr double kDensities[] = {0.0, 0.02, 0.05, 0.1, 0.2, 0.35};
    const double d = kDensities[std::uniform_int_distribution<std::size_t>(0, 5)(rng)];
    const int i = std::uniform_int_distribution<int>(0, 1'000'000)(rng);
    return generate(k, n, d, i);
  }
};

using Finder = std::optional<Move> (*)(const Graph&, const Cover&);

std::optional<Move> double_rep_default(const Graph& g, const Cover& c) { return find_double_rep(g, c); }

// Replays the driver loop step by step and checks every intermediate state.
Cover replay(const Graph& g, int k, const std::vector<Finder>& finders) {
  Cover c(k);
  for (int step = 0; step < 10'000; ++step) {
    std::optional<Move> m;
    for (Finder f : finders) {
      m = f(g, c);
      if (m) {
        CHECK(f(g, c) == m);
        break;
      }
    }
    if (!m) return c;
    const int fours = c.count_of_order(4);
    const Cover next = apply_move(c, *m);
    CHECK(validate_cover(g, next).empty());
    CHECK(next.coverage() == c.coverage() + m->coverage_delta);
    if (m->kind == MoveKind::Recover) {
      CHECK(m->coverage_delta == 0);
      CHECK(next.count_of_order(4) > fours);
    } else {
      CHECK(m->coverage_delta >= 1);
    }
    if (!find_rep(g, c) && !find_add(g, c)) {
      const auto unpruned = find_double_rep(g, c, {.prune = false});
      CHECK(find_double_rep(g, c).has_value() == unpruned.has_value());
    }
    c = next;
  }
  FAIL("driver loop did not terminate");
  return c;
}

}  // namespace

TEST_CASE("every intermediate cover of a trajectory is valid") {
  InstanceGen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = gen.next(4, 8, 40);
    CAPTURE(inst.n());
    CAPTURE(inst.d);
    const Cover end2 = replay(inst.graph, 4,
                              {&find_add, &find_rep, &double_rep_default, &find_recover, &find_lookahead});
    CHECK(end2 == approx2(inst.graph).cover);
    const Cover end1 = replay(inst.graph, 4, {&find_add, &find_rep, &double_rep_default});
    CHECK(end1 == approx1(inst.graph, 4).cover);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = gen.next(5, 10, 40);
    const Cover end = replay(inst.graph, 5, {&find_add, &find_rep, &double_rep_default});
    CHECK(end == approx1(inst.graph, 5).cover);
  }
}

TEST_CASE("terminal covers pass the exhaustive fixed-point checks") {
  InstanceGen gen(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = trial % 3 == 0 ? 5 : 4;
    const Instance inst = gen.next(k, k + 4, 18);
    CAPTURE(k);
    CAPTURE(inst.n());
    CAPTURE(inst.d);
    const SolveResult r1 = approx1(inst.graph, k);
    CHECK(oracle::add_fixed_point_violations(inst.graph, r1.cover).empty());
    CHECK(oracle::rep_fixed_point_violations(inst.graph, r1.cover).empty());
    CHECK(oracle::all_double_rep_moves(inst.graph, r1.cover).empty());
    if (k == 4) {
      const SolveResult r2 = approx2(inst.graph);
      CHECK(oracle::add_fixed_point_violations(inst.graph, r2.cover).empty());
      CHECK(oracle::rep_fixed_point_violations(inst.graph, r2.cover).empty());
    }
  }
}

TEST_CASE("approximation ratios hold against the exact optimum") {
  InstanceGen gen(37);
  for (int trial = 0; trial < 120; ++trial) {
    const int k = trial % 4 == 0 ? 5 : 4;
    const Instance inst = gen.next(k, k + 2, 14);
    const int opt = exact_max_cover(inst.graph, k).covered;
    CHECK(opt == inst.n());
    const int a1 = approx1(inst.graph, k).covered;
    CAPTURE(k);
    CAPTURE(inst.n());
    CHECK(static_cast<double>(opt) <= theoretical_ratio(k) * a1);
    if (k == 4) {
      CHECK(5 * opt <= 12 * a1);
      CHECK(opt <= 2 * approx2(inst.graph).covered);
    }
  }
}

TEST_CASE("record ratios stay inside the proven ranges") {
  GridSpec spec;
  spec.k = {4};
  spec.n = {16, 40};
  spec.d = {0.0, 0.03, 0.1};
  spec.instances = {0, 1, 2, 3, 4, 5};
  spec.algorithms = {Algorithm::Approx1, Algorithm::Approx2};
  for (const auto& r : run_grid(spec)) {
    CHECK(r.ratio >= 1.0);
    CHECK(r.ratio <= (r.alg == Algorithm::Approx1 ? theoretical_ratio(4) : 2.0));
  }
  spec.k = {6};
  spec.algorithms = {Algorithm::Approx1};
  for (const auto& r : run_grid(spec)) {
    CHECK(r.ratio >= 1.0);
    CHECK(r.ratio <= theoretical_ratio(6));
  }
}

TEST_CASE("solvers are deterministic and stop within the potential bound") {
  InstanceGen gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = gen.next(4, 20, 60);
    const SolveResult a = approx2(inst.graph);
    const SolveResult b = approx2(inst.graph);
    CHECK(a.cover == b.cover);
    CHECK(a.op_counts == b.op_counts);
    const int n = inst.n();
    CHECK(a.iterations <= n * (n / 4 + 1));
    CHECK(a.count(MoveKind::Add) + a.count(MoveKind::Rep) + a.count(MoveKind::DoubleRep) +
              a.count(MoveKind::Lookahead) <= n);
  }
}
