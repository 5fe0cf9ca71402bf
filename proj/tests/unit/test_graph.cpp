#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "pathpack/graph.hpp"

using namespace pathpack;
using pathpack::testing::make_graph;

TEST_CASE("graph adjacency is symmetric with sorted neighbor lists") {
  const Graph g = make_graph(5, {{3, 1}, {0, 4}, {1, 0}, {2, 4}});
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  for (Vertex u = 0; u < 5; ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < 5; ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
  CHECK(g.adjacent(1, 3));
  CHECK_FALSE(g.adjacent(2, 3));
  const auto nb = g.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 4});
  CHECK(g.degree(4) == 2);
  CHECK(g.degree(3) == 1);
}

TEST_CASE("graph construction rejects loops, duplicates and out-of-range ends") {
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_graph(3, {{-1, 2}}), std::invalid_argument);
  CHECK_NOTHROW(make_graph(0, {}));
}

TEST_CASE("graph text format round-trips") {
  const Graph g = make_graph(6, {{0, 1}, {1, 2}, {4, 5}, {0, 5}});
  std::stringstream ss;
  write_graph(ss, g);
  CHECK(ss.str().rfind("6 4\n", 0) == 0);
  const Graph back = read_graph(ss);
  CHECK(back == g);
}

TEST_CASE("graph reader rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  CHECK_NOTHROW(parse("3 2\n0 1\n1 2\n"));
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("3 1\n1 0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse("3 1\n0 x\n"), std::runtime_error);
  CHECK_THROWS_AS(parse(""), std::runtime_error);
}
