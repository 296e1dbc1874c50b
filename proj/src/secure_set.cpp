#include <algorithm>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

int SecureSetSweep::required_cops(const Graph& g, int ell) const {
  if (!g.is_hamming() || g.dimension() != 2) throw ArgumentError("secure-set plays on H(2,n)");
  if (ell != 0) throw UnsupportedMode("secure-set is a zero-visibility strategy");
  const int n = g.alphabet();
  return (n * n + n + 3) / 4;
}

// Upper vulnerable set of an a x b secure corner: rows 1..a, columns b+1..n.
SecureSetSweep::Pattern SecureSetSweep::upper(int a, int b) const {
  Pattern p;
  if (b >= n_ || a <= 0) return p;
  const int t = (n_ - b) / 2;
  for (int y = 1; y <= a; ++y) {
    for (int x = n_ - 2 * t + 1; x <= n_; ++x) p.cycling.emplace_back(x, y);
  }
  if ((n_ - b) % 2 == 1) {
    for (int y = 1; y <= 2 * (a / 2); ++y) p.cycling.emplace_back(b + 1, y);
    if (a % 2 == 1) p.fixed.emplace_back(b + 1, a);
  }
  return p;
}

SecureSetSweep::Pattern SecureSetSweep::lower(int a, int b) const {
  Pattern p = upper(b, a);
  for (auto& [x, y] : p.cycling) std::swap(x, y);
  for (auto& [x, y] : p.fixed) std::swap(x, y);
  return p;
}

std::vector<std::pair<int, int>> SecureSetSweep::targets(const Pattern& p, int parity) const {
  std::vector<std::pair<int, int>> out = p.fixed;
  for (auto [x, y] : p.cycling) {
    if ((x + y) % 2 == parity) out.emplace_back(x, y);
  }
  return out;
}

Vertex SecureSetSweep::staging_vertex(const Graph& g) const {
  return grow_rows_ ? cell(g, 1, a_ + 1) : cell(g, b_ + 1, 1);
}

VertexSet SecureSetSweep::secure_set(const Graph& g) const {
  VertexSet out(g.vertex_count());
  for (int x = 1; x <= b_; ++x) {
    for (int y = 1; y <= a_; ++y) out.insert(cell(g, x, y));
  }
  return out;
}

VertexSet SecureSetSweep::vulnerable_set(const Graph& g) const { return discovered_ - secure_set(g); }

std::optional<std::vector<Vertex>> SecureSetSweep::assign(const Graph& g, const std::vector<Vertex>& cops,
                                                          const std::vector<Vertex>& wanted, Vertex staging) const {
  std::vector<Vertex> goals = wanted;
  std::sort(goals.begin(), goals.end());
  goals.erase(std::unique(goals.begin(), goals.end()), goals.end());
  if (goals.size() > cops.size()) return std::nullopt;

  // Kuhn's augmenting paths; a cop reaches a goal it stands on or shares a line with.
  std::vector<int> owner(goals.size(), -1);
  std::vector<int> goal_of(cops.size(), -1);
  std::vector<std::vector<int>> options(goals.size());
  for (std::size_t t = 0; t < goals.size(); ++t) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t c = 0; c < cops.size(); ++c) {
        const bool here = cops[c] == goals[t];
        if ((pass == 0 && here) || (pass == 1 && !here && g.adjacent(cops[c], goals[t]))) {
          options[t].push_back(static_cast<int>(c));
        }
      }
    }
  }
  std::vector<int> seen(cops.size(), -1);
  auto augment = [&](auto&& self, int t, int stamp) -> bool {
    for (int c : options[static_cast<std::size_t>(t)]) {
      if (seen[static_cast<std::size_t>(c)] == stamp) continue;
      seen[static_cast<std::size_t>(c)] = stamp;
      if (goal_of[static_cast<std::size_t>(c)] < 0 || self(self, goal_of[static_cast<std::size_t>(c)], stamp)) {
        goal_of[static_cast<std::size_t>(c)] = t;
        owner[static_cast<std::size_t>(t)] = c;
        return true;
      }
    }
    return false;
  };
  for (std::size_t t = 0; t < goals.size(); ++t) {
    if (!augment(augment, static_cast<int>(t), static_cast<int>(t))) return std::nullopt;
  }

  std::vector<Vertex> out = cops;
  for (std::size_t c = 0; c < cops.size(); ++c) {
    if (goal_of[c] >= 0) {
      out[c] = goals[static_cast<std::size_t>(goal_of[c])];
      continue;
    }
    if (staging == cops[c]) continue;
    if (g.adjacent(cops[c], staging)) {
      out[c] = staging;
      continue;
    }
    // Two-step route through a discovered corner of the rectangle they span.
    const Vertex via[2] = {cell(g, column_of(g, staging), row_of(g, cops[c])),
                           cell(g, column_of(g, cops[c]), row_of(g, staging))};
    for (Vertex v : via) {
      if (discovered_.contains(v)) {
        out[c] = v;
        break;
      }
    }
  }
  return out;
}

std::vector<Vertex> SecureSetSweep::do_place(const Graph& g, int, int k) {
  n_ = g.alphabet();
  a_ = b_ = 0;
  grow_rows_ = true;
  step_ = Step::Opening;
  std::vector<Vertex> out;
  for (int y = 1; y <= n_; y += 2) out.push_back(cell(g, 1, y));
  for (int x = 2; x <= n_; x += 2) out.push_back(cell(g, x, 1));
  while (static_cast<int>(out.size()) < k) out.push_back(cell(g, 1, 1));
  out.resize(static_cast<std::size_t>(k));
  maintenance_ = std::min(k, n_);
  discovered_ = VertexSet(g.vertex_count());
  for (Vertex v : out) discovered_.insert(v);
  return out;
}

std::vector<Vertex> SecureSetSweep::do_moves(const Observation& obs) {
  const Graph& g = obs.graph;
  const std::vector<Vertex> cops(obs.state.cops.begin(), obs.state.cops.begin() + active_cops());
  const VertexSet must = obs.state.dirty & discovered_;
  auto to_vertices = [&](const std::vector<std::pair<int, int>>& cells) {
    std::vector<Vertex> out;
    for (auto [x, y] : cells) out.push_back(cell(g, x, y));
    return out;
  };
  auto finish = [&](std::vector<Vertex> moves, std::size_t goals) {
    for (Vertex v : moves) discovered_.insert(v);
    maintenance_ = static_cast<int>(goals);
    return moves;
  };

  if (step_ == Step::Opening) {
    std::vector<std::pair<int, int>> cells;
    for (int y = 2; y <= n_; y += 2) cells.emplace_back(1, y);
    for (int x = 3; x <= n_; x += 2) cells.emplace_back(x, 1);
    const auto goals = to_vertices(cells);
    auto moves = assign(g, cops, goals, cell(g, 1, 1));
    if (!moves) throw StrategyFailure("secure-set could not complete the opening move");
    a_ = b_ = 1;
    parity_upper_ = 0;
    parity_lower_ = 1;
    step_ = Step::Maintain;
    return finish(*moves, goals.size());
  }

  const int pu = 1 - parity_upper_;
  const int pl = 1 - parity_lower_;
  auto plan = [&](const Pattern& up, const Pattern& low) {
    auto goals = to_vertices(targets(up, pu));
    const auto more = to_vertices(targets(low, pl));
    goals.insert(goals.end(), more.begin(), more.end());
    must.for_each([&](Vertex v) { goals.push_back(v); });
    std::sort(goals.begin(), goals.end());
    goals.erase(std::unique(goals.begin(), goals.end()), goals.end());
    return goals;
  };
  auto grown_upper = [&] { return grow_rows_ ? upper(a_ + 1, b_) : upper(a_, b_); };
  auto grown_lower = [&] { return grow_rows_ ? lower(a_, b_) : lower(a_, b_ + 1); };

  std::optional<std::vector<Vertex>> moves;
  std::vector<Vertex> goals;
  if (step_ == Step::Maintain) {
    goals = plan(grown_upper(), grown_lower());
    moves = assign(g, cops, goals, staging_vertex(g));
    if (moves) {
      step_ = Step::Grow1;
    } else {
      goals = plan(upper(a_, b_), lower(a_, b_));
      moves = assign(g, cops, goals, staging_vertex(g));
    }
  } else {
    goals = plan(grown_upper(), grown_lower());
    moves = assign(g, cops, goals, staging_vertex(g));
    if (step_ == Step::Grow1) {
      step_ = Step::Grow2;
    } else {
      if (grow_rows_) {
        ++a_;
      } else {
        ++b_;
      }
      grow_rows_ = a_ == b_;
      step_ = Step::Maintain;
    }
  }
  if (!moves) {
    throw StrategyFailure("secure-set cannot cover " + std::to_string(goals.size()) + " vertices with " +
                          std::to_string(cops.size()) + " cops at a=" + std::to_string(a_) +
                          " b=" + std::to_string(b_));
  }
  parity_upper_ = pu;
  parity_lower_ = pl;
  return finish(*moves, goals.size());
}

}  // namespace pursuit
