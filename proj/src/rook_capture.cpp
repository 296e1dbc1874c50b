#include <algorithm>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

int RookCapture::required_cops(const Graph& g, int ell) const {
  if (!g.is_hamming() || g.dimension() != 2) throw ArgumentError("rook-capture plays on H(2,n)");
  if (ell != 1) throw UnsupportedMode("rook-capture is a 1-visibility strategy");
  const int n = g.alphabet();
  if (!guard_) return std::max(1, n / 2);
  return (n + 2) / 2;
}

std::vector<std::pair<int, int>> RookCapture::home() const {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= half_ + 1; ++j) out.emplace_back(1, j);
  return out;
}

std::vector<Vertex> RookCapture::do_place(const Graph& g, int, int) {
  n_ = g.alphabet();
  // The odd plan needs a subgrid of odd side m = 2*half + 1.
  m_ = n_ % 2 == 1 ? n_ : n_ - 1;
  half_ = (m_ - 1) / 2;
  has_guard_ = guard_ && n_ % 2 == 0;
  step_ = Step::Home;
  std::vector<Vertex> out;
  for (auto [x, y] : home()) out.push_back(cell(g, x, y));
  if (has_guard_) out.push_back(cell(g, n_, n_));
  return out;
}

std::vector<Vertex> RookCapture::do_moves(const Observation& obs) {
  const Graph& g = obs.graph;
  const int plan = half_ + 1;
  std::vector<Vertex> cops(obs.state.cops.begin(), obs.state.cops.begin() + active_cops());

  if (obs.state.robber) {
    // Someone shares a line with him; the first such cop takes him.
    const Vertex r = *obs.state.robber;
    for (auto& c : cops) {
      if (c == r || g.adjacent(c, r)) {
        c = r;
        return cops;
      }
    }
  }

  auto place_plan = [&](const std::vector<std::pair<int, int>>& spots) {
    for (int j = 0; j < plan; ++j) {
      cops[static_cast<std::size_t>(j)] = cell(g, spots[static_cast<std::size_t>(j)].first, spots[static_cast<std::size_t>(j)].second);
    }
  };
  auto at_home = [&] {
    const auto h = home();
    for (int j = 0; j < plan; ++j) {
      if (cops[static_cast<std::size_t>(j)] != cell(g, h[static_cast<std::size_t>(j)].first, h[static_cast<std::size_t>(j)].second)) return false;
    }
    return true;
  };

  switch (step_) {
    case Step::Home: {
      std::vector<std::pair<int, int>> spots;
      for (int j = 1; j <= plan; ++j) spots.emplace_back(1, half_ + j);
      place_plan(spots);
      step_ = Step::Swept;
      return cops;
    }
    case Step::Swept: {
      // He was seen after the sweep and has since slipped into rows 1..half
      // of his column; every candidate shares that column.
      int column = 0;
      bool single = true;
      obs.state.dirty.for_each([&](Vertex v) {
        const int x = column_of(g, v);
        if (column == 0) column = x;
        single = single && x == column;
      });
      if (column == 0 || !single || column > m_) break;
      std::vector<std::pair<int, int>> spots{{column, row_of(g, cops[0])}};
      for (int j = 1; j < plan; ++j) spots.emplace_back(1, j);
      place_plan(spots);
      step_ = Step::Pinned;
      return cops;
    }
    case Step::Pinned:
    case Step::Regroup:
      break;
  }

  // The plan lost track of him: walk back to the home column and restart.
  step_ = Step::Regroup;
  const auto h = home();
  for (int j = 0; j < plan; ++j) {
    const Vertex c = cops[static_cast<std::size_t>(j)];
    const int x = column_of(g, c);
    const int y = row_of(g, c);
    const auto [hx, hy] = h[static_cast<std::size_t>(j)];
    if (x == hx || y == hy) {
      cops[static_cast<std::size_t>(j)] = cell(g, hx, hy);
    } else {
      cops[static_cast<std::size_t>(j)] = cell(g, hx, y);
    }
  }
  if (at_home()) step_ = Step::Home;
  return cops;
}

}  // namespace pursuit
