#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pursuit/vertex_set.hpp"

namespace pursuit {

// Resource limits shared by graph construction and the solver.
// PURSUIT_BUDGET may override them: either a bare integer (state budget) or
// a comma list such as "states=2000000,vertices=65536".
struct Budget {
  std::size_t vertices = std::size_t{1} << 20;
  std::size_t states = 4'000'000;

  static Budget from_env();
};

struct HammingShape {
  int d = 0;
  int n = 0;
  bool operator==(const HammingShape&) const = default;
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Finite simple undirected graph. Vertices are dense indices; Hamming graphs
// additionally carry a mixed-radix codec with 1-based coordinates, first
// coordinate most significant.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                          std::optional<HammingShape> shape = std::nullopt);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const std::optional<HammingShape>& hamming() const noexcept { return shape_; }
  bool is_hamming() const noexcept { return shape_.has_value(); }
  int dimension() const;
  int alphabet() const;
  std::vector<int> coords(Vertex v) const;
  int coord(Vertex v, int axis) const;  // axis is 0-based, value 1-based
  Vertex vertex_at(std::span<const int> coords) const;

  int distance(Vertex u, Vertex v) const;
  int eccentricity(Vertex v) const;
  int diameter() const;
  VertexSet ball(Vertex center, int radius) const;
  VertexSet closed_neighborhood(Vertex v) const;
  VertexSet all_vertices() const { return VertexSet(vertex_count(), true); }

  // Symmetric, irreflexive, duplicate-free; coords agree with adjacency.
  bool valid() const;

 private:
  std::vector<int> bfs(Vertex source) const;
  const std::vector<std::uint16_t>& distance_table() const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::optional<HammingShape> shape_;
  std::vector<std::size_t> radix_;  // radix_[i] = n^(d-1-i)
  struct DistanceCache;
  std::shared_ptr<DistanceCache> cache_;
};

// Total map from the vertices of a source graph to the vertices of a target.
using VertexMap = std::vector<Vertex>;

Graph build_hamming(int d, int n, const Budget& budget = Budget{});
Graph build_clique(int n, const Budget& budget = Budget{});
Graph build_path(int n);
Graph build_cycle(int n);
Graph cartesian_product(const Graph& g, const Graph& h, const Budget& budget = Budget{});

struct GluePart {
  Graph graph;
  Vertex vertex = 0;
};
// Disjoint union with all designated vertices merged into vertex 0. When
// `maps` is given, (*maps)[i][v] is the new index of vertex v of part i.
Graph identify_at_vertices(const std::vector<GluePart>& parts,
                           std::vector<VertexMap>* maps = nullptr);

// phi: H(d,n) -> H(d,n-1), x_i -> min(x_i, n-1). Indices are those of the
// respective build_hamming graphs.
VertexMap clamp_retraction(int d, int n);
// Inclusion of H(d,n-1) into H(d,n) as the vertices with every coordinate <= n-1.
VertexMap clamp_embedding(int d, int n);

// True iff `embed` places `sub` as an induced subgraph of `g`, phi fixes it
// pointwise, and every edge of g maps to an edge or a single vertex of sub.
bool is_retraction(const Graph& g, const Graph& sub, const VertexMap& embed, const VertexMap& phi);

// Backtracking isomorphism test over degree-compatible bijections. Meant for
// the small graphs used in tests.
bool isomorphic(const Graph& a, const Graph& b);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, const Budget& budget = Budget{});

// "hamming:d,n", "clique:n", "path:n", "cycle:n", "product:<spec>x<spec>",
// "glue:<file>".
Graph parse_graph_spec(const std::string& spec, const Budget& budget = Budget{});

}  // namespace pursuit
