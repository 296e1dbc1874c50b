#include <algorithm>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/robber_strategies.hpp"

namespace pursuit {

namespace {

bool occupied(const std::vector<Vertex>& cops, Vertex v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

std::vector<Vertex> stay_or_step(const Graph& g, Vertex v) {
  std::vector<Vertex> out{v};
  for (Vertex w : g.neighbors(v)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

int min_distance(const Graph& g, Vertex v, const std::vector<Vertex>& cops) {
  int best = kUnreachable;
  for (Vertex c : cops) best = std::min(best, g.distance(v, c));
  return best;
}

// Highest score wins; ties go to the lowest index.
Vertex greedy_pick(const Graph& g, const std::vector<Vertex>& options, const std::vector<Vertex>& cops,
                   const Lookahead& next_cop_moves) {
  Vertex choice = options.front();
  int best = -2;
  for (Vertex v : options) {
    const int score = occupied(cops, v) ? -1 : min_distance(g, v, next_cop_moves(v));
    if (score > best) {
      best = score;
      choice = v;
    }
  }
  return choice;
}

std::vector<Vertex> every_vertex(const Graph& g) {
  std::vector<Vertex> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = v;
  return out;
}

}  // namespace

// ---- evasion-line ----

bool EvasionLine::line_free(const Graph& g, const std::vector<Vertex>& cops, Vertex v) {
  bool row = true;
  bool col = true;
  for (Vertex c : cops) {
    if (row_of(g, c) == row_of(g, v)) row = false;
    if (column_of(g, c) == column_of(g, v)) col = false;
  }
  return row || col;
}

bool EvasionLine::strict_for(const Graph& g, int ell, std::size_t cops) {
  return ell <= 1 && g.is_hamming() && g.dimension() == 2 && g.alphabet() % 2 == 0 &&
         cops <= static_cast<std::size_t>(g.alphabet() / 2);
}

Vertex EvasionLine::place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) {
  if (!g.is_hamming() || g.dimension() != 2) return greedy_pick(g, every_vertex(g), cops, next_cop_moves);
  for (Vertex v = static_cast<Vertex>(g.vertex_count()); v-- > 0;) {
    if (!occupied(cops, v) && line_free(g, next_cop_moves(v), v)) return v;
  }
  if (strict_for(g, ell, cops.size())) throw StrategyFailure("evasion-line found no safe starting vertex");
  return greedy_pick(g, every_vertex(g), cops, next_cop_moves);
}

Vertex EvasionLine::next_move(const RobberView& view) {
  const Graph& g = view.graph;
  if (!g.is_hamming() || g.dimension() != 2) {
    return greedy_pick(g, stay_or_step(g, view.position), view.cops, view.next_cop_moves);
  }
  const Vertex r = view.position;
  bool row_free = true;
  bool col_free = true;
  for (Vertex c : view.cops) {
    if (row_of(g, c) == row_of(g, r)) row_free = false;
    if (column_of(g, c) == column_of(g, r)) col_free = false;
  }
  // Candidates lie on a cop-free line through r, so none of them holds a cop.
  std::vector<Vertex> line;
  for (int i = 1; i <= g.alphabet(); ++i) {
    if (row_free) line.push_back(cell(g, i, row_of(g, r)));
    if (col_free) line.push_back(cell(g, column_of(g, r), i));
  }
  std::sort(line.begin(), line.end());
  line.erase(std::unique(line.begin(), line.end()), line.end());
  for (auto it = line.rbegin(); it != line.rend(); ++it) {
    if (line_free(g, view.next_cop_moves(*it), *it)) return *it;
  }
  if (strict_for(g, view.ell, view.cops.size())) throw StrategyFailure("evasion-line cannot keep a cop-free line");
  return greedy_pick(g, stay_or_step(g, r), view.cops, view.next_cop_moves);
}

// ---- greedy-distance ----

Vertex GreedyDistance::place(const Graph& g, int, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) {
  return greedy_pick(g, every_vertex(g), cops, next_cop_moves);
}

Vertex GreedyDistance::next_move(const RobberView& view) {
  return greedy_pick(view.graph, stay_or_step(view.graph, view.position), view.cops, view.next_cop_moves);
}

// ---- solver-optimal ----

Vertex SolverOptimal::best(const Graph& g, int ell, const std::vector<Vertex>& cops, const VertexSet& hidden,
                           const std::vector<Vertex>& options) const {
  Vertex choice = options.front();
  bool have = false;
  bool choice_safe = false;
  int choice_depth = -1;
  for (Vertex v : options) {
    if (occupied(cops, v)) continue;
    VertexSet info = hidden;
    if (robber_visible(g, cops, v, ell)) {
      info = VertexSet(g.vertex_count());
      info.insert(v);
    }
    const auto label = solution_->label(cops, info);
    const bool safe = !label || !label->cops_win;
    const int depth = label ? label->depth : 0;
    if (!have || (safe && !choice_safe) || (safe == choice_safe && depth > choice_depth)) {
      choice = v;
      choice_safe = safe;
      choice_depth = depth;
      have = true;
    }
  }
  return choice;
}

Vertex SolverOptimal::place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead&) {
  const VertexSet hidden = g.all_vertices() - seen_by(g, cops, ell);
  return best(g, ell, cops, hidden, every_vertex(g));
}

Vertex SolverOptimal::next_move(const RobberView& view) {
  const Graph& g = view.graph;
  const VertexSet hidden = spread_ignoring_cops(g, view.belief) - seen_by(g, view.cops, view.ell);
  return best(g, view.ell, view.cops, hidden, stay_or_step(g, view.position));
}

// ---- simple robbers ----

Vertex Stationary::place(const Graph& g, int, const std::vector<Vertex>& cops, const Lookahead&) {
  Vertex choice = 0;
  int best = -1;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = min_distance(g, v, cops);
    if (d > best) {
      best = d;
      choice = v;
    }
  }
  return choice;
}

Vertex UniformRandom::place(const Graph& g, int, const std::vector<Vertex>&, const Lookahead&) {
  std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
  return static_cast<Vertex>(pick(rng_));
}

Vertex UniformRandom::next_move(const RobberView& view) {
  const auto options = stay_or_step(view.graph, view.position);
  std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
  return options[pick(rng_)];
}

Vertex DashToOnes::place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& lookahead) {
  const auto far = static_cast<Vertex>(g.vertex_count() - 1);
  if (!occupied(cops, far)) return far;
  return Stationary().place(g, ell, cops, lookahead);
}

Vertex DashToOnes::next_move(const RobberView& view) {
  const Graph& g = view.graph;
  if (g.is_hamming()) {
    auto c = g.coords(view.position);
    for (auto& x : c) {
      if (x != 1) {
        x = 1;
        return g.vertex_at(c);
      }
    }
    return view.position;
  }
  Vertex choice = view.position;
  for (Vertex w : g.neighbors(view.position)) {
    if (g.distance(w, 0) < g.distance(choice, 0)) choice = w;
  }
  return choice;
}

std::unique_ptr<RobberStrategy> make_evasion_line() { return std::make_unique<EvasionLine>(); }
std::unique_ptr<RobberStrategy> make_greedy_distance() { return std::make_unique<GreedyDistance>(); }
std::unique_ptr<RobberStrategy> make_solver_optimal(const Graph& g, int ell, int k, const SolverOptions& options) {
  return std::make_unique<SolverOptimal>(analyze_capture(g, ell, k, options));
}
std::unique_ptr<RobberStrategy> make_stationary() { return std::make_unique<Stationary>(); }
std::unique_ptr<RobberStrategy> make_uniform_random(std::uint64_t seed) {
  return std::make_unique<UniformRandom>(seed);
}
std::unique_ptr<RobberStrategy> make_dash_to_ones() { return std::make_unique<DashToOnes>(); }

}  // namespace pursuit
