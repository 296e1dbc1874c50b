#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

namespace {

Vertex visible_robber(const Observation& obs, const std::string& who) {
  if (!obs.state.robber) throw UnsupportedMode(who + " needs the robber visible every round");
  return *obs.state.robber;
}

// Copy the robber's value in the first listed axis where `cop` disagrees.
Vertex follow(const Graph& g, Vertex cop, Vertex robber, const std::vector<int>& axes) {
  auto c = g.coords(cop);
  for (int axis : axes) {
    const int want = g.coord(robber, axis);
    if (c[static_cast<std::size_t>(axis)] != want) {
      c[static_cast<std::size_t>(axis)] = want;
      return g.vertex_at(c);
    }
  }
  return cop;
}

std::vector<int> protect_list(int d, int i) {
  std::vector<int> out;
  for (int j = 1; j <= d; ++j) out.push_back((i + j) % d);
  return out;
}

}  // namespace

int CoordinateChase::required_cops(const Graph& g, int) const {
  if (!g.is_hamming()) throw ArgumentError("coordinate-chase plays on Hamming graphs");
  return g.dimension();
}

std::vector<Vertex> CoordinateChase::do_place(const Graph& g, int, int k) {
  std::vector<Vertex> out;
  std::vector<int> c(static_cast<std::size_t>(g.dimension()), 1);
  for (int i = 1; i <= k; ++i) {
    c[0] = std::min(i, g.alphabet());
    out.push_back(g.vertex_at(c));
  }
  return out;
}

std::vector<Vertex> CoordinateChase::do_moves(const Observation& obs) {
  const Graph& g = obs.graph;
  const Vertex r = visible_robber(obs, name());
  const int d = g.dimension();
  std::vector<Vertex> out;
  for (int i = 0; i < active_cops(); ++i) {
    const Vertex cop = obs.state.cops[static_cast<std::size_t>(i)];
    if (cop == r || g.adjacent(cop, r)) {
      out.push_back(r);
      continue;
    }
    std::vector<int> axes;
    for (int a = 0; a < d; ++a) {
      if (a != i) axes.push_back(a);
    }
    out.push_back(follow(g, cop, r, axes));
  }
  return out;
}

int ProtectChase::required_cops(const Graph& g, int) const {
  if (!g.is_hamming()) throw ArgumentError("protect-chase plays on Hamming graphs");
  return g.dimension();
}

std::vector<int> ProtectChase::progress(const Graph& g, const std::vector<Vertex>& cops, Vertex robber) {
  const int d = g.dimension();
  std::vector<int> out;
  for (int i = 0; i < d && i < static_cast<int>(cops.size()); ++i) {
    int t = 0;
    for (int axis : protect_list(d, i)) {
      if (g.coord(cops[static_cast<std::size_t>(i)], axis) != g.coord(robber, axis)) break;
      ++t;
    }
    out.push_back(t);
  }
  return out;
}

std::vector<Vertex> ProtectChase::do_place(const Graph&, int, int k) {
  return std::vector<Vertex>(static_cast<std::size_t>(k), 0);
}

std::vector<Vertex> ProtectChase::do_moves(const Observation& obs) {
  const Graph& g = obs.graph;
  const Vertex r = visible_robber(obs, name());
  std::vector<Vertex> out;
  for (int i = 0; i < active_cops(); ++i) {
    out.push_back(follow(g, obs.state.cops[static_cast<std::size_t>(i)], r, protect_list(g.dimension(), i)));
  }
  return out;
}

}  // namespace pursuit
