#include "pursuit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>

#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

constexpr std::size_t kDistanceTableLimit = 4096;

std::size_t checked_power(int n, int d, std::size_t limit) {
  std::size_t out = 1;
  for (int i = 0; i < d; ++i) {
    if (out > limit / static_cast<std::size_t>(n)) return limit + 1;
    out *= static_cast<std::size_t>(n);
  }
  return out;
}

std::size_t parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ArgumentError("not a non-negative integer: '" + std::string(text) + "'");
  return value;
}

int parse_int(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ArgumentError("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Budget Budget::from_env() {
  Budget b;
  const char* raw = std::getenv("PURSUIT_BUDGET");
  if (raw == nullptr || *raw == '\0') return b;
  std::string_view text(raw);
  if (text.find('=') == std::string_view::npos) {
    b.states = parse_size(text);
    return b;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ArgumentError("PURSUIT_BUDGET entry lacks '=': " + std::string(item));
    const auto key = item.substr(0, eq);
    const auto value = parse_size(item.substr(eq + 1));
    if (key == "states") {
      b.states = value;
    } else if (key == "vertices") {
      b.vertices = value;
    } else {
      throw ArgumentError("unknown PURSUIT_BUDGET key: " + std::string(key));
    }
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return b;
}

struct Graph::DistanceCache {
  std::once_flag once;
  std::vector<std::uint16_t> table;
  int diameter = -1;
  std::once_flag diameter_once;
};

Graph Graph::from_edges(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        std::optional<HammingShape> shape) {
  if (vertex_count == 0) throw ArgumentError("a graph needs at least one vertex");
  Graph g;
  g.adjacency_.assign(vertex_count, {});
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw ArgumentError("edge endpoint out of range");
    if (u == v) throw ArgumentError("self-loops are not allowed");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  if (shape) {
    if (shape->d < 1 || shape->n < 1 ||
        checked_power(shape->n, shape->d, vertex_count) != vertex_count) {
      throw ArgumentError("Hamming shape does not match the vertex count");
    }
    g.shape_ = shape;
    g.radix_.assign(static_cast<std::size_t>(shape->d), 1);
    for (int i = shape->d - 2; i >= 0; --i) {
      g.radix_[static_cast<std::size_t>(i)] = g.radix_[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(shape->n);
    }
  }
  g.cache_ = std::make_shared<DistanceCache>();
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::dimension() const {
  if (!shape_) throw UnsupportedMode("graph has no Hamming coordinates");
  return shape_->d;
}

int Graph::alphabet() const {
  if (!shape_) throw UnsupportedMode("graph has no Hamming coordinates");
  return shape_->n;
}

std::vector<int> Graph::coords(Vertex v) const {
  if (!shape_) throw UnsupportedMode("graph has no Hamming coordinates");
  std::vector<int> out(static_cast<std::size_t>(shape_->d));
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<int>((v / radix_[i]) % static_cast<std::size_t>(shape_->n)) + 1;
  }
  return out;
}

int Graph::coord(Vertex v, int axis) const {
  if (!shape_) throw UnsupportedMode("graph has no Hamming coordinates");
  return static_cast<int>((v / radix_[static_cast<std::size_t>(axis)]) % static_cast<std::size_t>(shape_->n)) + 1;
}

Vertex Graph::vertex_at(std::span<const int> c) const {
  if (!shape_) throw UnsupportedMode("graph has no Hamming coordinates");
  if (c.size() != static_cast<std::size_t>(shape_->d)) throw ArgumentError("coordinate tuple has wrong length");
  std::size_t v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 1 || c[i] > shape_->n) throw ArgumentError("coordinate out of range");
    v += static_cast<std::size_t>(c[i] - 1) * radix_[i];
  }
  return static_cast<Vertex>(v);
}

std::vector<int> Graph::bfs(Vertex source) const {
  std::vector<int> dist(vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : adjacency_[u]) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

const std::vector<std::uint16_t>& Graph::distance_table() const {
  std::call_once(cache_->once, [this] {
    const std::size_t count = vertex_count();
    cache_->table.assign(count * count, std::numeric_limits<std::uint16_t>::max());
    for (Vertex s = 0; s < count; ++s) {
      const auto dist = bfs(s);
      for (Vertex t = 0; t < count; ++t) {
        if (dist[t] != kUnreachable) cache_->table[s * count + t] = static_cast<std::uint16_t>(dist[t]);
      }
    }
  });
  return cache_->table;
}

int Graph::distance(Vertex u, Vertex v) const {
  if (shape_) {
    int diff = 0;
    for (std::size_t i = 0; i < radix_.size(); ++i) {
      const auto n = static_cast<std::size_t>(shape_->n);
      if ((u / radix_[i]) % n != (v / radix_[i]) % n) ++diff;
    }
    return diff;
  }
  if (vertex_count() <= kDistanceTableLimit) {
    const auto d = distance_table()[u * vertex_count() + v];
    return d == std::numeric_limits<std::uint16_t>::max() ? kUnreachable : d;
  }
  return bfs(u)[v];
}

int Graph::eccentricity(Vertex v) const {
  if (shape_) return shape_->n == 1 ? 0 : shape_->d;
  const auto dist = bfs(v);
  return *std::max_element(dist.begin(), dist.end());
}

int Graph::diameter() const {
  std::call_once(cache_->diameter_once, [this] {
    int best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, eccentricity(v));
    cache_->diameter = best;
  });
  return cache_->diameter;
}

VertexSet Graph::ball(Vertex center, int radius) const {
  VertexSet out(vertex_count());
  if (radius < 0) return out;
  if (shape_ && radius >= shape_->d) return all_vertices();
  std::vector<int> dist(vertex_count(), -1);
  std::deque<Vertex> queue{center};
  dist[center] = 0;
  out.insert(center);
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] == radius) continue;
    for (Vertex w : adjacency_[u]) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        out.insert(w);
        queue.push_back(w);
      }
    }
  }
  return out;
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  VertexSet out(vertex_count());
  out.insert(v);
  for (Vertex w : adjacency_[v]) out.insert(w);
  return out;
}

bool Graph::valid() const {
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    const auto& list = adjacency_[u];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Vertex v = list[i];
      if (v == u || v >= adjacency_.size()) return false;
      if (i > 0 && list[i - 1] >= v) return false;
      if (!adjacent(v, u)) return false;
    }
  }
  if (shape_) {
    const auto expected = static_cast<std::size_t>(shape_->d * (shape_->n - 1));
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
      if (adjacency_[u].size() != expected) return false;
      for (Vertex v : adjacency_[u]) {
        if (distance(u, v) != 1) return false;
      }
    }
  }
  return true;
}

Graph build_hamming(int d, int n, const Budget& budget) {
  if (d < 1 || n < 1) throw ArgumentError("Hamming graph needs d >= 1 and n >= 1");
  const std::size_t count = checked_power(n, d, budget.vertices);
  if (count > budget.vertices) {
    const std::size_t full = checked_power(n, d, std::numeric_limits<std::size_t>::max() / 2);
    throw SizeError("H(" + std::to_string(d) + "," + std::to_string(n) + ") exceeds the vertex budget of " +
                        std::to_string(budget.vertices),
                    full);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(count * static_cast<std::size_t>(d * (n - 1)) / 2);
  std::size_t radix = 1;
  for (int axis = d - 1; axis >= 0; --axis) {
    for (std::size_t v = 0; v < count; ++v) {
      const auto digit = (v / radix) % static_cast<std::size_t>(n);
      for (std::size_t other = digit + 1; other < static_cast<std::size_t>(n); ++other) {
        edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(v + (other - digit) * radix));
      }
    }
    radix *= static_cast<std::size_t>(n);
  }
  return Graph::from_edges(count, edges, HammingShape{d, n});
}

Graph build_clique(int n, const Budget& budget) { return build_hamming(1, n, budget); }

Graph build_path(int n) {
  if (n < 1) throw ArgumentError("path needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph build_cycle(int n) {
  if (n < 3) throw ArgumentError("cycle needs at least three vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph cartesian_product(const Graph& g, const Graph& h, const Budget& budget) {
  const std::size_t gn = g.vertex_count();
  const std::size_t hn = h.vertex_count();
  if (gn > budget.vertices / hn) throw SizeError("product exceeds the vertex budget", gn * hn);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < gn; ++u) {
    for (auto [a, b] : h.edges()) edges.emplace_back(static_cast<Vertex>(u * hn + a), static_cast<Vertex>(u * hn + b));
  }
  for (auto [a, b] : g.edges()) {
    for (Vertex v = 0; v < hn; ++v) edges.emplace_back(static_cast<Vertex>(a * hn + v), static_cast<Vertex>(b * hn + v));
  }
  std::optional<HammingShape> shape;
  if (g.is_hamming() && h.is_hamming() && g.alphabet() == h.alphabet()) {
    shape = HammingShape{g.dimension() + h.dimension(), g.alphabet()};
  }
  return Graph::from_edges(gn * hn, edges, shape);
}

Graph identify_at_vertices(const std::vector<GluePart>& parts, std::vector<VertexMap>* maps) {
  if (parts.empty()) throw ArgumentError("identify_at_vertices needs at least one part");
  std::vector<VertexMap> local;
  std::size_t next = 1;
  for (const auto& part : parts) {
    if (part.vertex >= part.graph.vertex_count()) throw ArgumentError("glue vertex out of range");
    VertexMap map(part.graph.vertex_count());
    for (Vertex v = 0; v < map.size(); ++v) map[v] = v == part.vertex ? 0 : static_cast<Vertex>(next++);
    local.push_back(std::move(map));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i].graph.edges()) edges.emplace_back(local[i][u], local[i][v]);
  }
  Graph out = Graph::from_edges(next, edges);
  if (maps != nullptr) *maps = std::move(local);
  return out;
}

VertexMap clamp_retraction(int d, int n) {
  if (n < 2) throw ArgumentError("clamp retraction needs n >= 2");
  const Graph big = build_hamming(d, n);
  const Graph small = build_hamming(d, n - 1);
  VertexMap phi(big.vertex_count());
  for (Vertex v = 0; v < phi.size(); ++v) {
    auto c = big.coords(v);
    for (auto& x : c) x = std::min(x, n - 1);
    phi[v] = small.vertex_at(c);
  }
  return phi;
}

VertexMap clamp_embedding(int d, int n) {
  if (n < 2) throw ArgumentError("clamp embedding needs n >= 2");
  const Graph big = build_hamming(d, n);
  const Graph small = build_hamming(d, n - 1);
  VertexMap embed(small.vertex_count());
  for (Vertex v = 0; v < embed.size(); ++v) embed[v] = big.vertex_at(small.coords(v));
  return embed;
}

bool is_retraction(const Graph& g, const Graph& sub, const VertexMap& embed, const VertexMap& phi) {
  if (phi.size() != g.vertex_count()) throw ArgumentError("retraction map is not total on the source graph");
  if (embed.size() != sub.vertex_count()) throw ArgumentError("embedding is not total on the subgraph");
  for (Vertex img : phi) {
    if (img >= sub.vertex_count()) throw ArgumentError("retraction image out of range");
  }
  std::vector<std::int64_t> back(g.vertex_count(), -1);
  for (Vertex v = 0; v < embed.size(); ++v) {
    if (embed[v] >= g.vertex_count() || back[embed[v]] >= 0) return false;
    back[embed[v]] = v;
  }
  for (Vertex a = 0; a < sub.vertex_count(); ++a) {
    if (phi[embed[a]] != a) return false;
    for (Vertex b = a + 1; b < sub.vertex_count(); ++b) {
      if (sub.adjacent(a, b) != g.adjacent(embed[a], embed[b])) return false;
    }
  }
  for (auto [u, v] : g.edges()) {
    if (phi[u] != phi[v] && !sub.adjacent(phi[u], phi[v])) return false;
  }
  return true;
}

bool isomorphic(const Graph& a, const Graph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::size_t> da(n), db(n);
  for (Vertex v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  std::vector<std::int64_t> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(Vertex)> extend = [&](Vertex u) -> bool {
    if (u == n) return true;
    for (Vertex cand = 0; cand < n; ++cand) {
      if (used[cand] || db[cand] != da[u]) continue;
      bool ok = true;
      for (Vertex w = 0; w < u && ok; ++w) {
        ok = a.adjacent(u, w) == b.adjacent(cand, static_cast<Vertex>(map[w]));
      }
      if (!ok) continue;
      map[u] = cand;
      used[cand] = true;
      if (extend(u + 1)) return true;
      used[cand] = false;
    }
    map[u] = -1;
    return false;
  };
  return extend(0);
}

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json out;
  out["vertex_count"] = g.vertex_count();
  out["edges"] = std::move(edges);
  if (g.is_hamming()) {
    out["hamming"] = {{"d", g.dimension()}, {"n", g.alphabet()}};
  } else {
    out["hamming"] = nullptr;
  }
  return out;
}

Graph graph_from_json(const nlohmann::json& j, const Budget& budget) {
  try {
    const auto count = j.at("vertex_count").get<std::size_t>();
    if (count > budget.vertices) throw SizeError("graph exceeds the vertex budget", count);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    std::optional<HammingShape> shape;
    if (j.contains("hamming") && !j["hamming"].is_null()) {
      shape = HammingShape{j["hamming"].at("d").get<int>(), j["hamming"].at("n").get<int>()};
    }
    Graph g = Graph::from_edges(count, edges, shape);
    if (!g.valid()) throw ArgumentError("edges disagree with the declared Hamming shape");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed graph JSON: ") + e.what());
  }
}

Graph parse_graph_spec(const std::string& spec, const Budget& budget) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ArgumentError("graph spec needs 'kind:args': " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "hamming") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ArgumentError("hamming spec needs 'd,n'");
    return build_hamming(parse_int(std::string_view(args).substr(0, comma)),
                         parse_int(std::string_view(args).substr(comma + 1)), budget);
  }
  if (kind == "clique") return build_clique(parse_int(args), budget);
  if (kind == "path") return build_path(parse_int(args));
  if (kind == "cycle") return build_cycle(parse_int(args));
  if (kind == "product") {
    // Split at the top-level 'x' that separates two complete specs.
    for (std::size_t pos = args.find('x'); pos != std::string::npos; pos = args.find('x', pos + 1)) {
      try {
        Graph left = parse_graph_spec(args.substr(0, pos), budget);
        Graph right = parse_graph_spec(args.substr(pos + 1), budget);
        return cartesian_product(left, right, budget);
      } catch (const ArgumentError&) {
      }
    }
    throw ArgumentError("product spec needs '<spec>x<spec>': " + args);
  }
  if (kind == "glue") {
    std::ifstream in(args);
    if (!in) throw ArgumentError("cannot open glue file: " + args);
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw ArgumentError(std::string("malformed glue file: ") + e.what());
    }
    std::vector<GluePart> parts;
    for (const auto& item : doc) {
      if (!item.contains("graph") || !item.contains("vertex")) throw ArgumentError("glue entries need graph and vertex");
      Graph g = item["graph"].is_string() ? parse_graph_spec(item["graph"].get<std::string>(), budget)
                                          : graph_from_json(item["graph"], budget);
      parts.push_back({std::move(g), item["vertex"].get<Vertex>()});
    }
    return identify_at_vertices(parts);
  }
  throw ArgumentError("unknown graph kind: " + kind);
}

}  // namespace pursuit
