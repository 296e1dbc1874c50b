#include <algorithm>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

Vertex cell(const Graph& g, int x, int y) {
  const int c[2] = {x, y};
  return g.vertex_at(c);
}

int column_of(const Graph& g, Vertex v) { return g.coord(v, 0); }
int row_of(const Graph& g, Vertex v) { return g.coord(v, 1); }

namespace {

std::vector<Vertex> leading_cops(const Observation& obs, int count) {
  return {obs.state.cops.begin(), obs.state.cops.begin() + count};
}

}  // namespace

int CliqueSweep::required_cops(const Graph& g, int ell) const {
  if (!g.is_hamming() || g.dimension() != 1) throw ArgumentError("clique-sweep plays on H(1,n)");
  if (ell != 0) throw UnsupportedMode("clique-sweep is a zero-visibility strategy");
  return (g.alphabet() + 1) / 2;
}

std::vector<Vertex> CliqueSweep::do_place(const Graph&, int, int k) {
  std::vector<Vertex> out;
  for (int i = 0; i < k; ++i) out.push_back(static_cast<Vertex>(i));
  return out;
}

std::vector<Vertex> CliqueSweep::do_moves(const Observation& obs) {
  auto cops = leading_cops(obs, active_cops());
  if (obs.round != 2) return cops;
  const int n = obs.graph.alphabet();
  const int k = active_cops();
  for (int i = 0; k + i < n; ++i) cops[static_cast<std::size_t>(i)] = static_cast<Vertex>(k + i);
  return cops;
}

std::vector<Vertex> RandomCops::do_place(const Graph& g, int, int k) {
  std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
  std::vector<Vertex> out;
  for (int i = 0; i < k; ++i) out.push_back(static_cast<Vertex>(pick(rng_)));
  return out;
}

std::vector<Vertex> RandomCops::do_moves(const Observation& obs) {
  auto cops = leading_cops(obs, active_cops());
  for (auto& c : cops) {
    const auto nbrs = obs.graph.neighbors(c);
    std::uniform_int_distribution<std::size_t> pick(0, nbrs.size());
    const auto i = pick(rng_);
    if (i < nbrs.size()) c = nbrs[i];
  }
  return cops;
}

std::vector<Vertex> GreedyCops::do_place(const Graph& g, int ell, int k) {
  VertexSet covered(g.vertex_count());
  std::vector<Vertex> out;
  for (int i = 0; i < k; ++i) {
    Vertex best = 0;
    std::size_t gain = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto here = (g.ball(v, ell) - covered).count();
      if (here > gain) {
        gain = here;
        best = v;
      }
    }
    out.push_back(best);
    covered |= g.ball(best, ell);
  }
  return out;
}

std::vector<Vertex> GreedyCops::do_moves(const Observation& obs) {
  const Graph& g = obs.graph;
  auto cops = leading_cops(obs, active_cops());
  if (obs.state.robber) {
    const Vertex r = *obs.state.robber;
    for (auto& c : cops) {
      Vertex best = c;
      for (Vertex w : g.neighbors(c)) {
        if (g.distance(w, r) < g.distance(best, r)) best = w;
      }
      c = best;
    }
    return cops;
  }
  VertexSet covered(g.vertex_count());
  for (auto& c : cops) {
    // Start scanning at a round-dependent offset so ties rotate.
    const auto nbrs = g.neighbors(c);
    std::vector<Vertex> options(nbrs.begin(), nbrs.end());
    if (!options.empty()) {
      std::rotate(options.begin(), options.begin() + static_cast<std::ptrdiff_t>(obs.round % options.size()),
                  options.end());
    }
    options.push_back(c);
    Vertex best = options.front();
    std::size_t gain = 0;
    bool first = true;
    for (Vertex w : options) {
      const auto here = ((g.ball(w, obs.ell) & obs.state.dirty) - covered).count();
      if (first || here > gain) {
        gain = here;
        best = w;
        first = false;
      }
    }
    c = best;
    covered |= g.ball(best, obs.ell);
  }
  return cops;
}

std::vector<Vertex> ScriptedCops::do_place(const Graph&, int, int) {
  next_ = 0;
  return placement_;
}

std::vector<Vertex> ScriptedCops::do_moves(const Observation& obs) {
  if (next_ < moves_.size()) return moves_[next_++];
  return leading_cops(obs, active_cops());
}

std::unique_ptr<CopStrategy> make_clique_sweep() { return std::make_unique<CliqueSweep>(); }
std::unique_ptr<CopStrategy> make_rook_search() { return std::make_unique<RookSearch>(); }
std::unique_ptr<CopStrategy> make_rook_capture(bool guard) { return std::make_unique<RookCapture>(guard); }
std::unique_ptr<CopStrategy> make_secure_set_sweep() { return std::make_unique<SecureSetSweep>(); }
std::unique_ptr<CopStrategy> make_lift_dimension(std::unique_ptr<CopStrategy> inner) {
  return std::make_unique<LiftDimension>(std::move(inner));
}
std::unique_ptr<CopStrategy> make_lift_group(std::unique_ptr<CopStrategy> inner) {
  return std::make_unique<LiftGroup>(std::move(inner));
}
std::unique_ptr<CopStrategy> make_lift_cylinder(std::unique_ptr<CopStrategy> inner) {
  return std::make_unique<LiftCylinder>(std::move(inner));
}
std::unique_ptr<CopStrategy> make_corner_guard(std::unique_ptr<CopStrategy> inner) {
  return std::make_unique<CornerGuard>(std::move(inner));
}
std::unique_ptr<CopStrategy> make_coordinate_chase() { return std::make_unique<CoordinateChase>(); }
std::unique_ptr<CopStrategy> make_protect_chase() { return std::make_unique<ProtectChase>(); }

}  // namespace pursuit
