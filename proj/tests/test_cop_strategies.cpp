#include <doctest.h>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/registry.hpp"
#include "pursuit/robber_strategies.hpp"

using namespace pursuit;

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

RunResult search(const Graph& g, int ell, int k, CopStrategy& s, const EventHook& hook = {}) {
  RunOptions opts;
  opts.on_event = hook;
  return run_search(GameSpec{g, ell, k, Mode::Search, 0, 0}, s, opts);
}

RunResult capture(const Graph& g, int ell, int k, CopStrategy& s, RobberStrategy& r) {
  return run_capture(GameSpec{g, ell, k, Mode::Capture, 0, 0}, s, r);
}

// Every recorded cop move is a stay or a single edge.
bool legal_trace(const Graph& g, const Trace& t) {
  const std::vector<Vertex>* prev = nullptr;
  for (const auto& e : t.events) {
    if (e.kind != EventKind::Move && e.kind != EventKind::Place) continue;
    if (prev) {
      for (std::size_t i = 0; i < e.cops.size(); ++i) {
        if (e.cops[i] != (*prev)[i] && !g.adjacent(e.cops[i], (*prev)[i])) return false;
      }
    }
    prev = &e.cops;
  }
  return true;
}

}  // namespace

TEST_CASE("clique-sweep cleans K_n in at most two rounds") {
  for (int n = 1; n <= 9; ++n) {
    const Graph g = build_clique(n);
    CliqueSweep s;
    const int k = ceil_div(n, 2);
    CHECK(s.required_cops(g, 0) == k);
    const auto r = search(g, 0, k, s);
    CHECK(r.outcome == Outcome::CopsWin);
    CHECK(r.rounds_used <= 2);
    CHECK(legal_trace(g, r.trace));
  }
  CliqueSweep s;
  CHECK_THROWS_AS(search(build_clique(5), 0, 2, s), InsufficientCops);
  CHECK_THROWS_AS(s.required_cops(build_clique(5), 1), UnsupportedMode);
}

TEST_CASE("rook-search wins with the advertised count and keeps its rectangle claim") {
  for (int n = 3; n <= 15; ++n) {
    const Graph g = build_hamming(2, n);
    RookSearch s;
    const int k = ceil_div(n + 1, 3);
    REQUIRE(s.required_cops(g, 1) == k);
    int mismatches = 0;
    const auto r = search(g, 1, k, s, [&](const EngineState&, const TraceEvent& e) {
      if ((e.kind != EventKind::Place && e.kind != EventKind::Move) || e.dirty.empty()) return;
      if (s.normalization().clean_rectangle(g) != g.all_vertices() - spread_ignoring_cops(g, e.dirty)) ++mismatches;
    });
    CHECK(r.outcome == Outcome::CopsWin);
    CHECK(mismatches == 0);
    CHECK(legal_trace(g, r.trace));
  }
}

TEST_CASE("rook-search on n=7 widens the rectangle every two rounds") {
  const Graph g = build_hamming(2, 7);
  RookSearch s;
  std::vector<int> widths;
  search(g, 1, 3, s, [&](const EngineState&, const TraceEvent& e) {
    if (e.kind == EventKind::Move && !e.dirty.empty()) widths.push_back(s.normalization().b);
  });
  REQUIRE(widths.size() >= 3);
  for (std::size_t i = 2; i < widths.size(); ++i) CHECK(widths[i] > widths[i - 2]);
}

TEST_CASE("rook-search rejects the wrong visibility") {
  RookSearch s;
  CHECK_THROWS_AS(s.required_cops(build_hamming(2, 5), 0), UnsupportedMode);
}

TEST_CASE("rook-capture catches the battery robbers") {
  for (int n = 3; n <= 7; ++n) {
    const Graph g = build_hamming(2, n);
    const int k = ceil_div(n + 1, 2);
    for (const auto& name : {"evasion-line", "greedy-distance", "uniform-random", "stationary", "dash-to-ones"}) {
      RookCapture s;
      REQUIRE(s.required_cops(g, 1) == k);
      auto robber = make_robber_strategy(name, g, 1, k, 3);
      const auto r = capture(g, 1, k, s, *robber);
      INFO(name << " n=" << n);
      CHECK(r.outcome == Outcome::Capture);
      CHECK(legal_trace(g, r.trace));
    }
  }
}

TEST_CASE("secure-set wins with the advertised count, weakly monotone") {
  for (int n = 3; n <= 7; ++n) {
    const Graph g = build_hamming(2, n);
    SecureSetSweep s;
    const int k = ceil_div(n * n + n, 4);
    REQUIRE(s.required_cops(g, 0) == k);
    int over = 0;
    const auto r = search(g, 0, k, s, [&](const EngineState&, const TraceEvent& e) {
      if (e.kind != EventKind::Move) return;
      const int a = s.secure_rows();
      const int b = s.secure_cols();
      const int bound = ceil_div(a * (n - b), 2) + ceil_div((n - a) * b, 2);
      if (s.maintenance_cops() > std::max(bound, k)) ++over;
      CHECK(s.secure_set(g).is_subset_of(s.discovered()));
    });
    CHECK(r.outcome == Outcome::CopsWin);
    CHECK(over == 0);
    CHECK(audit_monotonicity(r.trace) != Monotonicity::None);
    CHECK(legal_trace(g, r.trace));
  }
}

TEST_CASE("secure-set on H(2,4) is weakly but not strictly monotone") {
  SecureSetSweep s;
  const auto r = search(build_hamming(2, 4), 0, 5, s);
  CHECK(r.outcome == Outcome::CopsWin);
  CHECK(audit_monotonicity(r.trace) == Monotonicity::Weak);
}

TEST_CASE("dimension lift keeps fibers of inner clean vertices clean") {
  struct Case {
    std::string inner;
    int d;
    int n;
    int ell;
    int k;
  };
  for (const Case& c : {Case{"rook-search", 3, 4, 2, 2}, Case{"clique-sweep", 2, 4, 1, 2},
                        Case{"rook-search", 3, 6, 2, 3}, Case{"lift-dim:rook-search", 4, 3, 3, 2}}) {
    const Graph g = build_hamming(c.d, c.n);
    LiftDimension s(make_cop_strategy(c.inner));
    REQUIRE(s.required_cops(g, c.ell) == c.k);
    int breaks = 0;
    const auto r = search(g, c.ell, c.k, s, [&](const EngineState&, const TraceEvent& e) {
      if (e.kind != EventKind::Move && e.kind != EventKind::Place) return;
      if (!(e.dirty - (g.all_vertices() - s.lifted_clean(g))).empty()) ++breaks;
    });
    INFO(c.inner << " on H(" << c.d << "," << c.n << ")");
    CHECK(r.outcome == Outcome::CopsWin);
    CHECK(breaks == 0);
    for (const auto& e : r.trace.events) {
      for (Vertex v : e.cops) CHECK(g.coord(v, c.d - 1) == 1);
    }
  }
}

TEST_CASE("group lift places n cops per inner cop along one line") {
  const Graph g = build_hamming(2, 4);
  LiftGroup s(make_rook_search());
  CHECK(s.required_cops(g, 0) == 8);
  const auto r = search(g, 0, 8, s);
  CHECK(r.outcome == Outcome::CopsWin);
  for (const auto& e : r.trace.events) {
    for (std::size_t i = 0; i < e.cops.size(); i += 4) {
      for (std::size_t j = 0; j < 4; ++j) {
        CHECK(g.coord(e.cops[i + j], 0) == g.coord(e.cops[i], 0));
        CHECK(g.coord(e.cops[i + j], 1) == static_cast<int>(j) + 1);
      }
    }
  }
}

TEST_CASE("cylinder lift: projections of clean inner vertices stay clean") {
  for (int n = 3; n <= 6; ++n) {
    const Graph g = build_hamming(3, n);
    LiftCylinder s(make_rook_search());
    const int k = n * ceil_div(n + 1, 3);
    REQUIRE(s.required_cops(g, 1) == k);
    int breaks = 0;
    const auto r = search(g, 1, k, s, [&](const EngineState&, const TraceEvent& e) {
      if (e.kind != EventKind::Move && e.kind != EventKind::Place) return;
      e.dirty.for_each([&](Vertex v) {
        if (!s.inner().state().dirty.contains(LiftCylinder::project(g, v))) ++breaks;
      });
    });
    CHECK(r.outcome == Outcome::CopsWin);
    CHECK(breaks == 0);
  }
}

TEST_CASE("corner guard adds one cop and watches the outer layer") {
  for (int n = 3; n <= 6; ++n) {
    const Graph g = build_hamming(2, n + 1);
    CornerGuard s(make_rook_search());
    const int k = ceil_div(n + 1, 3) + 1;
    REQUIRE(s.required_cops(g, 1) == k);
    const auto r = search(g, 1, k, s, [&](const EngineState& st, const TraceEvent& e) {
      if (e.kind != EventKind::Move) return;
      CHECK(st.cops.back() == s.guard_vertex(g));
      e.dirty.for_each([&](Vertex v) {
        for (int c : g.coords(v)) CHECK(c != n + 1);
      });
    });
    CHECK(r.outcome == Outcome::CopsWin);
  }
  CornerGuard s(make_rook_search());
  CHECK_THROWS_AS(s.required_cops(build_hamming(2, 4), 0), UnsupportedMode);
}

TEST_CASE("chases capture visible robbers within d(d-1)+1 cop moves") {
  for (const char* cop : {"coordinate-chase", "protect-chase"}) {
    for (int d = 2; d <= 3; ++d) {
      for (int n = 2; n <= 5; ++n) {
        const Graph g = build_hamming(d, n);
        for (const char* robber : {"greedy-distance", "uniform-random", "stationary", "dash-to-ones"}) {
          auto s = make_cop_strategy(cop);
          auto r = make_robber_strategy(robber, g, d, d, 5);
          const auto res = capture(g, d, d, *s, *r);
          INFO(cop << " vs " << robber << " on H(" << d << "," << n << ")");
          CHECK(res.outcome == Outcome::Capture);
          CHECK(res.rounds_used - 1 <= d * (d - 1) + 1);
        }
      }
    }
  }
}

TEST_CASE("coordinate-chase agreement counts never drop against a stationary robber") {
  const Graph g = build_hamming(3, 4);
  CoordinateChase s;
  auto robber = make_stationary();
  std::vector<int> last;
  std::optional<Vertex> at;
  RunOptions opts;
  opts.on_event = [&](const EngineState& st, const TraceEvent& e) {
    if (e.robber) at = e.robber;
    if (e.kind != EventKind::Move || !at) return;
    std::vector<int> now;
    for (Vertex c : st.cops) now.push_back(3 - g.distance(c, *at));
    if (!last.empty()) {
      for (std::size_t i = 0; i < now.size(); ++i) CHECK(now[i] >= last[i]);
    }
    last = now;
  };
  run_capture(GameSpec{g, 3, 3, Mode::Capture, 0, 0}, s, *robber, opts);
}

TEST_CASE("chases need a visible robber") {
  const Graph g = build_hamming(2, 5);
  for (const char* cop : {"coordinate-chase", "protect-chase"}) {
    auto s = make_cop_strategy(cop);
    auto robber = make_stationary();
    CHECK_THROWS_AS(capture(g, 0, 2, *s, *robber), UnsupportedMode);
  }
}

TEST_CASE("protect-chase catches a robber on the all-ones vertex at once") {
  const Graph g = build_hamming(2, 4);
  ProtectChase s;
  auto robber = make_dash_to_ones();
  const auto r = capture(g, 2, 2, s, *robber);
  CHECK(r.outcome == Outcome::Capture);
  bool waiting = false;
  for (const auto& e : r.trace.events) {
    if (e.kind == EventKind::Move && waiting) FAIL("robber rested on (1,1) past a cop turn");
    if (e.kind == EventKind::Capture) waiting = false;
    if (e.phase == Phase::RobberTurn && e.robber == Vertex{0}) waiting = true;
    if (e.kind == EventKind::Capture) break;
  }
}

TEST_CASE("extra cops shadow cop 0") {
  const Graph g = build_hamming(2, 4);
  RookSearch s;
  const auto r = search(g, 1, 4, s);
  CHECK(r.outcome == Outcome::CopsWin);
  for (const auto& e : r.trace.events) CHECK(e.cops[3] == e.cops[0]);
}

TEST_CASE("a cloned strategy continues identically") {
  const Graph g = build_hamming(2, 6);
  SecureSetSweep s;
  const GameSpec spec{g, 0, 12, Mode::Search, 0, 0};
  EngineState st = initial_state(spec, s.place(g, 0, 12));
  for (int i = 0; i < 3; ++i) {
    st = recontaminate(spec, st);
    st = cop_turn(spec, st, s.next_moves(Observation{g, 0, Mode::Search, st.round, st}));
  }
  auto copy = s.clone();
  st = recontaminate(spec, st);
  const Observation obs{g, 0, Mode::Search, st.round, st};
  CHECK(copy->next_moves(obs) == s.next_moves(obs));
}

TEST_CASE("registry names and chains") {
  for (const auto& name : cop_strategy_names()) {
    if (name == "lift-dim" || name == "lift-group" || name == "lift-cylinder" || name == "corner-guard") {
      CHECK_THROWS_AS(make_cop_strategy(name), ArgumentError);
      CHECK(make_cop_strategy(name + ":rook-search")->name() == name + ":rook-search");
    } else {
      CHECK(make_cop_strategy(name)->name() == name);
    }
  }
  CHECK(make_cop_strategy("corner-guard:lift-dim:rook-search")->name() == "corner-guard:lift-dim:rook-search");
  CHECK_THROWS_AS(make_cop_strategy("rook-search:clique-sweep"), ArgumentError);
  CHECK_THROWS_AS(make_cop_strategy("teleport"), ArgumentError);
}
