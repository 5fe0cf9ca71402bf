#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "pathpack/instances.hpp"
#include "pathpack/ops.hpp"
#include "pathpack/solvers.hpp"

using namespace pathpack;
using pathpack::testing::make_path;
using pathpack::testing::path_graph;
using pathpack::testing::sorted_vertices;

namespace {

// The move keeps the vertex set, adds 4-paths, and applies cleanly.
void check_recover(const Graph& g, const Cover& c, const Move& m, int expected_four_paths) {
  CHECK(m.kind == MoveKind::Recover);
  CHECK(m.coverage_delta == 0);
  const Cover next = apply_move(c, m);
  CHECK(validate_cover(g, next).empty());
  CHECK(sorted_vertices(next) == sorted_vertices(c));
  CHECK(next.count_of_order(4) == expected_four_paths);
  CHECK(next.count_of_order(4) > c.count_of_order(4));
}

}  // namespace

TEST_CASE("find_recover: 5-path and 7-path joined at the ends") {
  // P = 0..4, P' = 5..11. u'0 = 5, u'2 = 7, v'2 = 9, v'0 = 11.
  const Path p = make_path({0, 1, 2, 3, 4});
  const Path q = make_path({5, 6, 7, 8, 9, 10, 11});
  for (Vertex target : {5, 7, 9, 11}) {
    CAPTURE(target);
    const Graph g = path_graph(12, {p.vertices, q.vertices}, {{0, target}});
    const Cover c(4, {p, q});
    const auto m = find_recover(g, c);
    REQUIRE(m.has_value());
    CHECK(m->removed == std::vector<Path>{p, q});
    check_recover(g, c, *m, 3);
  }
}

TEST_CASE("find_recover: two 6-paths") {
  // P = 0..5, P' = 6..11. u'0 = 6, u'1 = 7, v'1 = 10, v'0 = 11.
  const Path p = make_path({0, 1, 2, 3, 4, 5});
  const Path q = make_path({6, 7, 8, 9, 10, 11});
  for (Vertex target : {6, 7, 10, 11}) {
    CAPTURE(target);
    const Graph g = path_graph(12, {p.vertices, q.vertices}, {{0, target}});
    const Cover c(4, {p, q});
    const auto m = find_recover(g, c);
    REQUIRE(m.has_value());
    check_recover(g, c, *m, 3);
  }
}

TEST_CASE("find_recover: unconnected 5-paths") {
  const Path p = make_path({0, 1, 2, 3, 4});
  const Path q = make_path({5, 6, 7, 8, 9});
  const Graph g = path_graph(10, {p.vertices, q.vertices});
  CHECK_FALSE(find_recover(g, Cover(4, {p, q})).has_value());
}

TEST_CASE("find_recover: 5-path and 7-path joined where no 4-path split exists") {
  // u0 adjacent to u'1: 12 vertices but no partition with a 4-path.
  const Path p = make_path({0, 1, 2, 3, 4});
  const Path q = make_path({5, 6, 7, 8, 9, 10, 11});
  const Graph g = path_graph(12, {p.vertices, q.vertices}, {{0, 6}});
  CHECK_FALSE(find_recover(g, Cover(4, {p, q})).has_value());
}

TEST_CASE("find_recover and find_lookahead reject k other than 4") {
  const Graph g = path_graph(10, {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}}, {{0, 5}});
  const Cover c(5, {make_path({0, 1, 2, 3, 4}), make_path({5, 6, 7, 8, 9})});
  CHECK_THROWS_AS(find_recover(g, c), std::invalid_argument);
  CHECK_THROWS_AS(find_lookahead(g, c), std::invalid_argument);
}

TEST_CASE("fig5 terminal cover is closed under all five finders") {
  const Fixture f = fixture_fig5();
  const Graph& g = f.instance.graph;
  CHECK(validate_cover(g, f.terminal).empty());
  CHECK(f.terminal.coverage() == 18);
  CHECK_FALSE(find_add(g, f.terminal).has_value());
  CHECK_FALSE(find_rep(g, f.terminal).has_value());
  CHECK_FALSE(find_double_rep(g, f.terminal).has_value());
  CHECK_FALSE(find_double_rep(g, f.terminal, {.prune = false}).has_value());
  CHECK_FALSE(find_recover(g, f.terminal).has_value());
  CHECK_FALSE(find_lookahead(g, f.terminal).has_value());
}

TEST_CASE("find_lookahead case (ii): a 6-path re-covers eight vertices") {
  // a = 0..5, f0 = 6, f1 = 7; f1 adjacent to a2, f0 adjacent to a5.
  const Graph g = path_graph(8, {{0, 1, 2, 3, 4, 5}, {6, 7}}, {{2, 7}, {5, 6}});
  const Cover c(4, {make_path({0, 1, 2, 3, 4, 5})});
  const auto m = find_lookahead(g, c);
  REQUIRE(m.has_value());
  CHECK(m->kind == MoveKind::Lookahead);
  CHECK(m->removed == std::vector<Path>{make_path({0, 1, 2, 3, 4, 5})});
  CHECK(m->added == std::vector<Path>{make_path({3, 4, 5, 6, 7, 2, 1, 0})});
  CHECK(m->coverage_delta == 2);
  const Cover next = apply_move(c, *m);
  CHECK(next.coverage() == 8);
  CHECK(validate_cover(g, next).empty());
  CHECK(oracle::brute_max_cover(g, 4) == 8);
}

TEST_CASE("find_lookahead case (i): freed prefix feeds a Rep elsewhere") {
  // P = 0..4, f0 = 5, f1 = 6 with f1 adjacent to a2; Q = 7..10 with b0 adjacent to a0.
  const Graph g = path_graph(11, {{0, 1, 2, 3, 4}, {5, 6}, {7, 8, 9, 10}}, {{2, 6}, {0, 7}});
  const Cover c(4, {make_path({0, 1, 2, 3, 4}), make_path({7, 8, 9, 10})});
  CHECK_FALSE(find_add(g, c).has_value());
  CHECK_FALSE(find_rep(g, c).has_value());
  CHECK_FALSE(find_double_rep(g, c).has_value());
  CHECK_FALSE(find_recover(g, c).has_value());
  const auto m = find_lookahead(g, c);
  REQUIRE(m.has_value());
  CHECK(m->removed == std::vector<Path>{make_path({0, 1, 2, 3, 4}), make_path({7, 8, 9, 10})});
  CHECK(m->added == std::vector<Path>{make_path({5, 6, 2, 3, 4}), make_path({0, 7, 8, 9, 10})});
  CHECK(m->coverage_delta == 1);
  const Cover next = apply_move(c, *m);
  CHECK(validate_cover(g, next).empty());
  CHECK(next.coverage() == 10);
}

TEST_CASE("find_lookahead leaves the cover untouched when nothing applies") {
  // A 5-path whose only free neighbor pair cannot enable any Rep.
  const Graph g = path_graph(7, {{0, 1, 2, 3, 4}, {5, 6}}, {{2, 6}});
  const Cover c(4, {make_path({0, 1, 2, 3, 4})});
  const Cover before = c;
  CHECK_FALSE(find_lookahead(g, c).has_value());
  CHECK(c == before);
}

TEST_CASE("approx2 escapes the case (i) gadget") {
  const Graph g = path_graph(11, {{0, 1, 2, 3, 4}, {5, 6}, {7, 8, 9, 10}}, {{2, 6}, {0, 7}});
  const Cover c(4, {make_path({0, 1, 2, 3, 4}), make_path({7, 8, 9, 10})});
  const SolveResult res = approx2(g, c);
  CHECK(res.covered >= 10);
  CHECK(res.count(MoveKind::Lookahead) >= 1);
}
