#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

// ---- brute-force oracles, written against the rules rather than the solver ----

using Mask = std::uint64_t;
using Config = std::vector<Vertex>;

struct Tiny {
  const Graph& g;
  int ell;
  std::vector<Mask> ball;
  std::vector<Mask> closed;

  Tiny(const Graph& graph, int visibility) : g(graph), ell(visibility) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Mask b = 0;
      Mask c = Mask{1} << v;
      for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (g.distance(v, w) <= ell) b |= Mask{1} << w;
      }
      for (Vertex w : g.neighbors(v)) c |= Mask{1} << w;
      ball.push_back(b);
      closed.push_back(c);
    }
  }
  Mask all() const { return (Mask{1} << g.vertex_count()) - 1; }
  Mask seen(const Config& c) const {
    Mask m = 0;
    for (Vertex v : c) m |= ball[v];
    return m;
  }
  Mask occupied(const Config& c) const {
    Mask m = 0;
    for (Vertex v : c) m |= Mask{1} << v;
    return m;
  }
  Mask grow(Mask d) const {
    Mask out = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (d >> v & 1) out |= closed[v];
    }
    return out;
  }
  std::vector<Config> configs(int k) const {
    std::vector<Config> out;
    Config c(static_cast<std::size_t>(k), 0);
    const auto nv = static_cast<Vertex>(g.vertex_count());
    std::function<void(std::size_t, Vertex)> rec = [&](std::size_t i, Vertex from) {
      if (i == c.size()) {
        out.push_back(c);
        return;
      }
      for (Vertex v = from; v < nv; ++v) {
        c[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 0);
    return out;
  }
  std::vector<Config> moves(const Config& c) const {
    std::set<Config> out;
    Config cur = c;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == c.size()) {
        Config s = cur;
        std::sort(s.begin(), s.end());
        out.insert(s);
        return;
      }
      cur[i] = c[i];
      rec(i + 1);
      for (Vertex w : g.neighbors(c[i])) {
        cur[i] = w;
        rec(i + 1);
      }
    };
    rec(0);
    return {out.begin(), out.end()};
  }
  // Visible singletons plus the hidden remainder.
  std::vector<Mask> split(Mask b, const Config& c) const {
    std::vector<Mask> out;
    const Mask s = seen(c);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if ((b & s) >> v & 1) out.push_back(Mask{1} << v);
    }
    if (b & ~s) out.push_back(b & ~s);
    return out;
  }
};

bool oracle_search(const Graph& g, int ell, int k) {
  const Tiny t(g, ell);
  // States: (cops, dirty before the cop move). Least fixed point of "cops can
  // move so that nothing stays dirty, or into a winning state".
  std::map<std::pair<Config, Mask>, bool> win;
  std::vector<std::pair<Config, Mask>> frontier;
  auto after = [&](const Config& c, Mask d) -> std::optional<std::pair<Config, Mask>> {
    const Mask left = d & ~t.seen(c);
    if (left == 0) return std::nullopt;
    const Mask spread = left | (t.grow(left) & ~t.seen(c));
    return std::pair{c, spread};
  };
  std::vector<Config> starts = t.configs(k);
  for (const auto& c : starts) {
    if (auto s = after(c, t.all()); s && !win.count(*s)) {
      win[*s] = false;
      frontier.push_back(*s);
    }
  }
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const auto [c, d] = frontier[i];
    for (const auto& m : t.moves(c)) {
      if (auto s = after(m, d); s && !win.count(*s)) {
        win[*s] = false;
        frontier.push_back(*s);
      }
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [state, w] : win) {
      if (w) continue;
      for (const auto& m : t.moves(state.first)) {
        auto s = after(m, state.second);
        if (!s || win.at(*s)) {
          w = true;
          changed = true;
          break;
        }
      }
    }
  }
  for (const auto& c : starts) {
    auto s = after(c, t.all());
    if (!s || win.at(*s)) return true;
  }
  return false;
}

bool oracle_capture(const Graph& g, int ell, int k) {
  const Tiny t(g, ell);
  // P: after a cop move, robber somewhere in B (B misses the cops).
  // Q: after a robber move, before the cop move.
  std::map<std::pair<Config, Mask>, bool> p;
  std::map<std::pair<Config, Mask>, bool> q;
  std::vector<std::pair<Config, Mask>> todo_p;
  std::vector<std::pair<Config, Mask>> todo_q;
  auto add_p = [&](const Config& c, Mask b) {
    if (!p.count({c, b})) {
      p[{c, b}] = false;
      todo_p.push_back({c, b});
    }
  };
  auto add_q = [&](const Config& c, Mask b) {
    if (!q.count({c, b})) {
      q[{c, b}] = false;
      todo_q.push_back({c, b});
    }
  };
  auto robber_outcomes = [&](const Config& c, Mask b) { return t.split(t.grow(b) & ~t.occupied(c), c); };
  auto cop_outcomes = [&](const Config& m, Mask b) { return t.split(b & ~t.occupied(m), m); };
  const auto starts = t.configs(k);
  for (const auto& c : starts) {
    for (Mask b : t.split(t.all() & ~t.occupied(c), c)) add_q(c, b);
  }
  while (!todo_p.empty() || !todo_q.empty()) {
    if (!todo_q.empty()) {
      const auto [c, b] = todo_q.back();
      todo_q.pop_back();
      for (const auto& m : t.moves(c)) {
        for (Mask s : cop_outcomes(m, b)) add_p(m, s);
      }
    } else {
      const auto [c, b] = todo_p.back();
      todo_p.pop_back();
      for (Mask s : robber_outcomes(c, b)) add_q(c, s);
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [state, w] : q) {
      if (w) continue;
      for (const auto& m : t.moves(state.first)) {
        const auto outs = cop_outcomes(m, state.second);
        if (std::all_of(outs.begin(), outs.end(), [&](Mask s) { return p.at({m, s}); })) {
          w = true;
          changed = true;
          break;
        }
      }
    }
    for (auto& [state, w] : p) {
      if (w) continue;
      const auto outs = robber_outcomes(state.first, state.second);
      if (std::all_of(outs.begin(), outs.end(), [&](Mask s) { return q.at({state.first, s}); })) {
        w = true;
        changed = true;
      }
    }
  }
  for (const auto& c : starts) {
    const auto outs = t.split(t.all() & ~t.occupied(c), c);
    if (std::all_of(outs.begin(), outs.end(), [&](Mask s) { return q.at({c, s}); })) return true;
  }
  return false;
}

// A graph is cop-win iff it dismantles by removing dominated vertices.
bool dismantlable(const Graph& g) {
  std::vector<bool> alive(g.vertex_count(), true);
  std::size_t left = g.vertex_count();
  auto closed = [&](Vertex v) {
    std::set<Vertex> out{v};
    for (Vertex w : g.neighbors(v)) {
      if (alive[w]) out.insert(w);
    }
    return out;
  };
  for (bool removed = true; removed && left > 1;) {
    removed = false;
    for (Vertex v = 0; v < g.vertex_count() && !removed; ++v) {
      if (!alive[v]) continue;
      const auto nv = closed(v);
      for (Vertex w : nv) {
        if (w == v) continue;
        const auto nw = closed(w);
        if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end())) {
          alive[v] = false;
          --left;
          removed = true;
          break;
        }
      }
    }
  }
  return left == 1;
}

std::vector<std::pair<std::string, Graph>> small_graphs() {
  return {
      {"P3", build_path(3)},
      {"P5", build_path(5)},
      {"C4", build_cycle(4)},
      {"C5", build_cycle(5)},
      {"K4", build_clique(4)},
      {"star", Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})},
      {"H(2,2)", build_hamming(2, 2)},
      {"P3xP2", cartesian_product(build_path(3), build_path(2))},
      {"spider", Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}})},
  };
}

}  // namespace

TEST_CASE("search verdicts agree with the brute-force oracle") {
  for (const auto& [name, g] : small_graphs()) {
    for (int ell = 0; ell <= 2; ++ell) {
      for (int k = 1; k <= 2; ++k) {
        INFO(name << " ell=" << ell << " k=" << k);
        const bool want = oracle_search(g, ell, k);
        CHECK((solve_search(g, ell, k).verdict == Verdict::CopsWin) == want);
      }
    }
  }
}

TEST_CASE("capture verdicts agree with the brute-force oracle") {
  for (const auto& [name, g] : small_graphs()) {
    for (int ell = 0; ell <= 2; ++ell) {
      for (int k = 1; k <= 2; ++k) {
        if (g.vertex_count() > 6 && k == 2) continue;
        INFO(name << " ell=" << ell << " k=" << k);
        const bool want = oracle_capture(g, ell, k);
        CHECK((solve_capture(g, ell, k).verdict == Verdict::CopsWin) == want);
      }
    }
  }
}

TEST_CASE("perfect information: one cop wins exactly on dismantlable graphs") {
  auto graphs = small_graphs();
  graphs.push_back({"wheel", Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}, {5, 1}, {5, 2},
                                                   {5, 3}, {5, 4}})});
  graphs.push_back({"C6", build_cycle(6)});
  graphs.push_back({"H(2,3)", build_hamming(2, 3)});
  for (const auto& [name, g] : graphs) {
    INFO(name);
    CHECK((perfect_info_cop_number(g) == 1) == dismantlable(g));
  }
  CHECK(perfect_info_cop_number(build_hamming(2, 3)) == 2);
  CHECK(perfect_info_cop_number(build_cycle(6)) == 2);
}

TEST_CASE("clique values") {
  for (int n = 2; n <= 6; ++n) CHECK(search_number(build_clique(n), 0) == (n + 1) / 2);
  for (int n = 2; n <= 5; ++n) CHECK(capture_number(build_clique(n), 1) == 1);
}

TEST_CASE("H(2,3) values") {
  const Graph g = build_hamming(2, 3);
  CHECK(solve_search(g, 1, 1).verdict == Verdict::RobberWins);
  CHECK(solve_search(g, 1, 2).verdict == Verdict::CopsWin);
  CHECK(search_number(g, 1) == 2);
  CHECK(solve_search(g, 0, 2).verdict == Verdict::RobberWins);
  CHECK(search_number(g, 0) == 3);
  CHECK(capture_number(g, 1) == 2);
}

TEST_CASE("symmetry reduction keeps verdicts") {
  SolverOptions sym;
  sym.symmetry = true;
  for (int n = 2; n <= 3; ++n) {
    const Graph g = build_hamming(2, n);
    for (int ell = 0; ell <= 1; ++ell) {
      for (int k = 1; k <= 3; ++k) {
        CHECK(solve_search(g, ell, k, sym).verdict == solve_search(g, ell, k).verdict);
        CHECK(solve_capture(g, ell, k, sym).verdict == solve_capture(g, ell, k).verdict);
      }
    }
  }
  CHECK(solve_search(build_hamming(2, 3), 1, 2, sym).states_explored <
        solve_search(build_hamming(2, 3), 1, 2).states_explored);
}

TEST_CASE("search witnesses replay to a win in the engine") {
  struct Case {
    Graph g;
    int ell;
    int k;
  };
  for (const auto& c : {Case{build_hamming(2, 3), 1, 2}, Case{build_hamming(2, 3), 0, 3}, Case{build_cycle(5), 0, 2},
                        Case{build_clique(5), 0, 3}}) {
    const auto value = solve_search(c.g, c.ell, c.k);
    REQUIRE(value.verdict == Verdict::CopsWin);
    REQUIRE(value.witness.has_value());
    PolicyCops cops(*value.witness);
    const auto r = run_search(GameSpec{c.g, c.ell, c.k, Mode::Search, 0, 0}, cops);
    CHECK(r.outcome == Outcome::CopsWin);
  }
}

TEST_CASE("search number never exceeds capture number") {
  for (const auto& [name, g] : small_graphs()) {
    for (int ell = 0; ell <= 2; ++ell) {
      INFO(name << " ell=" << ell);
      CHECK(search_number(g, ell) <= capture_number(g, ell));
    }
  }
}

TEST_CASE("state budget") {
  SolverOptions tight;
  tight.budget.states = 5;
  CHECK_THROWS_AS(solve_search(build_hamming(2, 3), 1, 1, tight), SizeError);
  try {
    solve_capture(build_hamming(2, 3), 1, 2, tight);
  } catch (const SizeError& e) {
    CHECK(e.estimate() > 0);
  }
  CHECK_THROWS_AS(solve_search(build_hamming(3, 5), 1, 1), SizeError);
  CHECK(state_space_estimate(build_hamming(2, 3), 2) > state_space_estimate(build_hamming(2, 3), 1));
}

TEST_CASE("result JSON") {
  const Graph g = build_hamming(2, 3);
  const auto j = to_json(solve_search(g, 1, 2), g);
  CHECK(j["verdict"] == "COPS_WIN");
  CHECK(j["k"] == 2);
  CHECK(j["ell"] == 1);
  CHECK(j["mode"] == "search");
  CHECK(j["states_explored"].get<std::size_t>() > 0);
  CHECK(j.contains("graph"));
  CHECK(j.contains("witness"));
}

TEST_CASE("info keys pack sorted cops") {
  CHECK(pack_cops({5, 1, 3}) == pack_cops({1, 3, 5}));
  CHECK(unpack_cops(pack_cops({7, 2}), 2) == std::vector<Vertex>{2, 7});
}
