#include <doctest.h>

#include <sstream>

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"
#include "pursuit/registry.hpp"
#include "pursuit/robber_strategies.hpp"

using namespace pursuit;

namespace {

// Spread as written in the rules: a dirty vertex stays dirty, and dirt moves
// to every unseen neighbor.
VertexSet spread_oracle(const Graph& g, const VertexSet& dirty, const std::vector<Vertex>& cops, int ell) {
  VertexSet out = dirty;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!dirty.contains(v)) continue;
    for (Vertex w : g.neighbors(v)) {
      bool seen = false;
      for (Vertex c : cops) seen = seen || g.distance(c, w) <= ell;
      if (!seen) out.insert(w);
    }
  }
  return out;
}

std::string trace_text(const Trace& t) {
  std::ostringstream out;
  write_jsonl(out, t);
  return out.str();
}

}  // namespace

TEST_CASE("spread matches the rule") {
  const Graph g = build_hamming(2, 4);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    VertexSet dirty(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (rng() % 3 == 0) dirty.insert(v);
    }
    const std::vector<Vertex> cops{static_cast<Vertex>(rng() % 16), static_cast<Vertex>(rng() % 16)};
    for (int ell = 0; ell <= 2; ++ell) CHECK(spread(g, dirty, cops, ell) == spread_oracle(g, dirty, cops, ell));
  }
}

TEST_CASE("placement cleans what the cops see") {
  const Graph g = build_hamming(2, 4);
  const GameSpec spec{g, 1, 2, Mode::Search, 0, 0};
  const EngineState s = initial_state(spec, {0, 5});
  CHECK(s.dirty == g.all_vertices() - seen_by(g, {0, 5}, 1));
  CHECK(s.round == 1);
  CHECK(s.phase == Phase::Placement);
}

TEST_CASE("illegal cop moves are rule violations naming the cop") {
  const Graph g = build_hamming(2, 4);
  const GameSpec spec{g, 1, 2, Mode::Search, 0, 0};
  const EngineState s = recontaminate(spec, initial_state(spec, {0, 5}));
  try {
    cop_turn(spec, s, {1, 15});
    FAIL("expected a rule violation");
  } catch (const RuleViolation& e) {
    CHECK(e.offender() == "cop 1");
    CHECK(e.cop_index() == 1);
  }
  CHECK_THROWS_AS(cop_turn(spec, s, {1}), std::exception);
  CHECK_NOTHROW(cop_turn(spec, s, {0, 4}));
}

TEST_CASE("default round limit") {
  const GameSpec spec{build_hamming(2, 3), 1, 2, Mode::Search, 0, 0};
  CHECK(spec.round_limit() == 4 * 9 * 3);
  const GameSpec fixed{build_hamming(2, 3), 1, 2, Mode::Search, 17, 0};
  CHECK(fixed.round_limit() == 17);
}

TEST_CASE("search dirty sets never grow past the spread") {
  const Graph g = build_hamming(2, 5);
  RandomCops cops(9);
  const GameSpec spec{g, 1, 2, Mode::Search, 60, 0};
  const auto r = run_search(spec, cops);
  CHECK(r.outcome == Outcome::Timeout);
  const TraceEvent* last_move = nullptr;
  for (const auto& e : r.trace.events) {
    if (e.kind == EventKind::Recontaminate && last_move) {
      CHECK(e.dirty == spread_oracle(g, last_move->dirty, last_move->cops, 1));
    }
    if (e.kind == EventKind::Move || e.kind == EventKind::Place) last_move = &e;
  }
}

TEST_CASE("identical seeds give identical traces") {
  const Graph g = build_hamming(2, 5);
  const GameSpec spec{g, 1, 2, Mode::Capture, 80, 4};
  auto run = [&] {
    RandomCops cops(5);
    auto robber = make_uniform_random(6);
    return trace_text(run_capture(spec, cops, *robber).trace);
  };
  CHECK(run() == run());
}

TEST_CASE("JSONL traces round-trip and replay") {
  const Graph g = build_hamming(2, 4);
  for (Mode mode : {Mode::Search, Mode::Capture}) {
    const GameSpec spec{g, 1, 3, mode, 50, 0};
    RookCapture capture;
    RookSearch search;
    auto robber = make_greedy_distance();
    const auto r = mode == Mode::Search ? run_search(spec, search) : run_capture(spec, capture, *robber);
    std::istringstream in(trace_text(r.trace));
    const Trace back = read_jsonl(in, mode, g.vertex_count());
    CHECK(trace_text(back) == trace_text(r.trace));
    CHECK(replay_trace(spec, back));
  }
}

TEST_CASE("a tampered trace fails replay") {
  const Graph g = build_hamming(2, 4);
  const GameSpec spec{g, 1, 2, Mode::Search, 0, 0};
  RookSearch s;
  auto r = run_search(spec, s);
  REQUIRE(r.trace.events.size() > 2);
  auto bad = r.trace;
  for (auto& e : bad.events) {
    if (e.kind == EventKind::Move) {
      e.cops[0] = 15;
      break;
    }
  }
  bool rejected = false;
  try {
    rejected = !replay_trace(spec, bad);
  } catch (const RuleViolation&) {
    rejected = true;
  }
  CHECK(rejected);
  auto wrong_dirty = r.trace;
  wrong_dirty.events.front().dirty.insert(0);
  wrong_dirty.events.front().dirty.erase(15);
  CHECK_FALSE(replay_trace(spec, wrong_dirty));
}

TEST_CASE("monotonicity audit") {
  Trace t;
  t.mode = Mode::Search;
  const std::size_t nv = 4;
  auto ev = [&](EventKind kind, std::uint64_t dirty, int round) {
    TraceEvent e;
    e.kind = kind;
    e.round = round;
    e.phase = kind == EventKind::Recontaminate ? Phase::RobberTurn : Phase::CopTurn;
    e.cops = {0};
    e.dirty = VertexSet::from_mask64(nv, dirty);
    return e;
  };
  t.events = {ev(EventKind::Place, 0b1110, 1), ev(EventKind::Recontaminate, 0b1110, 1),
              ev(EventKind::Move, 0b1100, 2), ev(EventKind::Recontaminate, 0b1100, 2)};
  CHECK(audit_monotonicity(t) == Monotonicity::Strict);
  // Vertex 0 is recontaminated in round 2 after being clean before round 2.
  t.events = {ev(EventKind::Place, 0b1100, 1), ev(EventKind::Recontaminate, 0b1110, 1),
              ev(EventKind::Move, 0b0100, 2), ev(EventKind::Recontaminate, 0b0101, 2),
              ev(EventKind::Move, 0b0100, 3)};
  CHECK(audit_monotonicity(t) == Monotonicity::Weak);
  t.events = {ev(EventKind::Place, 0b1100, 1), ev(EventKind::Recontaminate, 0b1110, 1),
              ev(EventKind::Move, 0b1110, 2)};
  CHECK(audit_monotonicity(t) == Monotonicity::None);
}

TEST_CASE("capture mode: a visible robber is tracked, an adjacent cop captures") {
  const Graph g = build_path(4);
  const GameSpec spec{g, 3, 1, Mode::Capture, 20, 0};
  ScriptedCops cops({0}, {{1}, {2}, {3}});
  auto robber = make_stationary();
  const auto r = run_capture(spec, cops, *robber);
  CHECK(r.outcome == Outcome::Capture);
  // The robber is placed after the cops, so only the placement event lacks him.
  for (const auto& e : r.trace.events) CHECK(e.robber.has_value() == (e.kind != EventKind::Place));
}

TEST_CASE("capture mode: an unseen robber leaves a candidate set") {
  const Graph g = build_path(7);
  const GameSpec spec{g, 0, 1, Mode::Capture, 3, 0};
  ScriptedCops cops({0}, {});
  auto robber = make_stationary();
  const auto r = run_capture(spec, cops, *robber);
  CHECK(r.outcome == Outcome::Timeout);
  for (const auto& e : r.trace.events) {
    CHECK_FALSE(e.robber.has_value());
    CHECK_FALSE(e.dirty.contains(0));
  }
}
