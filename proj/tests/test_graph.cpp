#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "pursuit/errors.hpp"
#include "pursuit/graph.hpp"

using namespace pursuit;

namespace {

int coord_distance(const Graph& g, Vertex u, Vertex v) {
  const auto a = g.coords(u);
  const auto b = g.coords(v);
  int diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) diff += a[i] != b[i] ? 1 : 0;
  return diff;
}

long long binomial(int n, int k) {
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

TEST_CASE("Hamming graph size, degree and diameter") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 5; ++n) {
      const Graph g = build_hamming(d, n);
      std::size_t expect = 1;
      for (int i = 0; i < d; ++i) expect *= static_cast<std::size_t>(n);
      CHECK(g.vertex_count() == expect);
      CHECK(g.edge_count() == expect * static_cast<std::size_t>(d * (n - 1)) / 2);
      for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == static_cast<std::size_t>(d * (n - 1)));
      CHECK(g.diameter() == d);
      CHECK(g.valid());
    }
  }
}

TEST_CASE("distance is the number of differing coordinates") {
  const Graph g = build_hamming(3, 3);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.distance(u, v) == coord_distance(g, u, v));
  }
}

TEST_CASE("coordinates round-trip, first coordinate most significant") {
  const Graph g = build_hamming(3, 4);
  for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(g.vertex_at(g.coords(v)) == v);
  CHECK(g.coords(0) == std::vector<int>{1, 1, 1});
  CHECK(g.coords(1) == std::vector<int>{1, 1, 2});
  CHECK(g.coords(16) == std::vector<int>{2, 1, 1});
}

TEST_CASE("ball sizes follow the binomial count") {
  const Graph g = build_hamming(3, 4);
  for (int r = 0; r <= 3; ++r) {
    long long expect = 0;
    for (int i = 0; i <= r; ++i) expect += binomial(3, i) * static_cast<long long>(std::pow(3, i));
    CHECK(static_cast<long long>(g.ball(5, r).count()) == expect);
  }
}

TEST_CASE("product of cliques is a Hamming graph") {
  CHECK(isomorphic(cartesian_product(build_clique(3), build_clique(3)), build_hamming(2, 3)));
  CHECK(isomorphic(cartesian_product(build_hamming(2, 2), build_clique(2)), build_hamming(3, 2)));
  CHECK_FALSE(isomorphic(build_cycle(6), build_hamming(2, 3)));
  CHECK(isomorphic(build_cycle(4), build_hamming(2, 2)));
}

TEST_CASE("small families") {
  CHECK(build_path(5).edge_count() == 4);
  CHECK(build_cycle(5).edge_count() == 5);
  CHECK(build_clique(5).edge_count() == 10);
  CHECK(build_clique(4).is_hamming());
  CHECK(build_path(6).diameter() == 5);
  CHECK(build_cycle(7).diameter() == 3);
}

TEST_CASE("clamp retraction is a retraction") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 2; n <= 5; ++n) {
      const Graph big = build_hamming(d, n);
      const Graph small = build_hamming(d, n - 1);
      CHECK(is_retraction(big, small, clamp_embedding(d, n), clamp_retraction(d, n)));
    }
  }
}

TEST_CASE("a map that does not fix the subgraph is not a retraction") {
  const Graph big = build_hamming(2, 3);
  const Graph small = build_hamming(2, 2);
  auto phi = clamp_retraction(2, 3);
  const auto embed = clamp_embedding(2, 3);
  std::swap(phi[embed[0]], phi[embed[3]]);
  CHECK_FALSE(is_retraction(big, small, embed, phi));
}

TEST_CASE("vertex identification") {
  std::vector<VertexMap> maps;
  const Graph g = identify_at_vertices({{build_hamming(2, 3), 4}, {build_cycle(5), 2}, {build_clique(3), 0}}, &maps);
  CHECK(g.vertex_count() == 9 + 5 + 3 - 2);
  CHECK(g.edge_count() == 18 + 5 + 3);
  CHECK(maps[0][4] == 0);
  CHECK(maps[1][2] == 0);
  CHECK(maps[2][0] == 0);
  CHECK(g.valid());
}

TEST_CASE("graph specs") {
  CHECK(parse_graph_spec("hamming:2,4").vertex_count() == 16);
  CHECK(parse_graph_spec("clique:5").edge_count() == 10);
  CHECK(parse_graph_spec("cycle:6").edge_count() == 6);
  CHECK(isomorphic(parse_graph_spec("product:clique:3xclique:3"), build_hamming(2, 3)));
  CHECK_THROWS_AS(parse_graph_spec("hamming:2"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_spec("torus:3"), ArgumentError);
  CHECK_THROWS_AS(parse_graph_spec("clique:x"), ArgumentError);
}

TEST_CASE("glue spec reads a file") {
  const std::string path = "glue_spec_test.json";
  {
    std::ofstream out(path);
    out << R"([{"graph":"hamming:2,3","vertex":0},{"graph":"clique:3","vertex":1}])";
  }
  const Graph g = parse_graph_spec("glue:" + path);
  CHECK(g.vertex_count() == 11);
  std::remove(path.c_str());
}

TEST_CASE("JSON round trip keeps adjacency and shape") {
  const Graph g = build_hamming(2, 3);
  const Graph back = graph_from_json(to_json(g));
  CHECK(back.edges() == g.edges());
  CHECK(back.is_hamming());
  CHECK(back.alphabet() == 3);
}

TEST_CASE("vertex budget") {
  Budget tiny;
  tiny.vertices = 100;
  CHECK_THROWS_AS(build_hamming(3, 5, tiny), SizeError);
  CHECK_NOTHROW(build_hamming(2, 10, tiny));
}

TEST_CASE("invalid edge lists are rejected") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), ArgumentError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), ArgumentError);
}
