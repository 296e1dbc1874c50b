#include "pursuit/engine.hpp"

#include <istream>
#include <ostream>

#include "pursuit/errors.hpp"
#include "pursuit/strategy.hpp"

namespace pursuit {

std::string to_string(Mode m) { return m == Mode::Search ? "search" : "capture"; }

std::string to_string(Phase p) {
  switch (p) {
    case Phase::Placement: return "PLACEMENT";
    case Phase::CopTurn: return "COP_TURN";
    case Phase::RobberTurn: return "ROBBER_TURN";
  }
  return "?";
}

std::string to_string(EventKind e) {
  switch (e) {
    case EventKind::Place: return "PLACE";
    case EventKind::Move: return "MOVE";
    case EventKind::See: return "SEE";
    case EventKind::Capture: return "CAPTURE";
    case EventKind::Recontaminate: return "RECONTAMINATE";
    case EventKind::Win: return "WIN";
    case EventKind::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::CopsWin: return "COPS_WIN";
    case Outcome::Capture: return "CAPTURE";
    case Outcome::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Strict: return "STRICT";
    case Monotonicity::Weak: return "WEAK";
    case Monotonicity::None: return "NONE";
  }
  return "?";
}

Mode mode_from_string(const std::string& s) {
  if (s == "search") return Mode::Search;
  if (s == "capture") return Mode::Capture;
  throw ArgumentError("unknown mode: " + s);
}

namespace {

Phase phase_from_string(const std::string& s) {
  for (auto p : {Phase::Placement, Phase::CopTurn, Phase::RobberTurn}) {
    if (to_string(p) == s) return p;
  }
  throw ArgumentError("unknown phase: " + s);
}

EventKind event_from_string(const std::string& s) {
  for (auto e : {EventKind::Place, EventKind::Move, EventKind::See, EventKind::Capture, EventKind::Recontaminate,
                 EventKind::Win, EventKind::Timeout}) {
    if (to_string(e) == s) return e;
  }
  throw ArgumentError("unknown event: " + s);
}

bool occupied(const std::vector<Vertex>& cops, Vertex v) {
  for (Vertex c : cops) {
    if (c == v) return true;
  }
  return false;
}

void check_placements(const Graph& g, const std::vector<Vertex>& cops, std::size_t k) {
  if (cops.size() != k) {
    throw ArgumentError("expected " + std::to_string(k) + " cop placements, got " + std::to_string(cops.size()));
  }
  for (std::size_t i = 0; i < cops.size(); ++i) {
    if (cops[i] >= g.vertex_count()) {
      throw RuleViolation("cop " + std::to_string(i) + " placed off the graph", "cop " + std::to_string(i),
                          static_cast<int>(i));
    }
  }
}

// Capture-mode robber turn given only what the cops observe.
EngineState observed_robber_turn(const GameSpec& spec, const EngineState& state, std::optional<Vertex> visible_at,
                                 bool captured) {
  EngineState next = state;
  next.phase = Phase::RobberTurn;
  next.captured = captured;
  next.robber = visible_at;
  if (visible_at) {
    next.dirty = VertexSet(spec.graph.vertex_count());
    next.dirty.insert(*visible_at);
    return next;
  }
  VertexSet grown = state.dirty;
  state.dirty.for_each([&](Vertex v) {
    for (Vertex w : spec.graph.neighbors(v)) grown.insert(w);
  });
  next.dirty = grown - seen_by(spec.graph, state.cops, spec.ell);
  return next;
}

TraceEvent snapshot(const EngineState& s, EventKind kind) {
  return TraceEvent{s.round, s.phase, s.cops, s.dirty, s.robber, kind};
}

class Recorder {
 public:
  Recorder(const RunOptions& options, Mode mode) : options_(options) { trace_.mode = mode; }
  void emit(const EngineState& s, EventKind kind) {
    TraceEvent e = snapshot(s, kind);
    if (options_.on_event) options_.on_event(s, e);
    if (options_.record_trace) trace_.events.push_back(std::move(e));
  }
  Trace take() { return std::move(trace_); }

 private:
  const RunOptions& options_;
  Trace trace_;
};

}  // namespace

int GameSpec::round_limit() const {
  if (max_rounds > 0) return max_rounds;
  return static_cast<int>(4 * graph.vertex_count() * static_cast<std::size_t>(k + 1));
}

VertexSet seen_by(const Graph& g, const std::vector<Vertex>& cops, int ell) {
  VertexSet out(g.vertex_count());
  for (Vertex c : cops) {
    if (ell == 0) {
      out.insert(c);
    } else if (ell == 1) {
      out |= g.closed_neighborhood(c);
    } else {
      out |= g.ball(c, ell);
    }
  }
  return out;
}

bool robber_visible(const Graph& g, const std::vector<Vertex>& cops, Vertex robber, int ell) {
  for (Vertex c : cops) {
    if (g.distance(c, robber) <= ell) return true;
  }
  return false;
}

VertexSet spread(const Graph& g, const VertexSet& dirty, const std::vector<Vertex>& cops, int ell) {
  return dirty | (spread_ignoring_cops(g, dirty) - seen_by(g, cops, ell));
}

VertexSet spread_ignoring_cops(const Graph& g, const VertexSet& dirty) {
  VertexSet out = dirty;
  dirty.for_each([&](Vertex v) {
    for (Vertex w : g.neighbors(v)) out.insert(w);
  });
  return out;
}

void check_cop_moves(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
  if (to.size() != from.size()) {
    throw RuleViolation("strategy returned " + std::to_string(to.size()) + " moves for " +
                            std::to_string(from.size()) + " cops",
                        "cops");
  }
  for (std::size_t i = 0; i < to.size(); ++i) {
    if (to[i] >= g.vertex_count() || (to[i] != from[i] && !g.adjacent(from[i], to[i]))) {
      throw RuleViolation("cop " + std::to_string(i) + " cannot move from " + std::to_string(from[i]) + " to " +
                              std::to_string(to[i]),
                          "cop " + std::to_string(i), static_cast<int>(i));
    }
  }
}

EngineState initial_state(const GameSpec& spec, const std::vector<Vertex>& placements) {
  check_placements(spec.graph, placements, static_cast<std::size_t>(spec.k));
  EngineState s;
  s.round = 1;
  s.phase = Phase::Placement;
  s.cops = placements;
  s.dirty = spec.graph.all_vertices() - seen_by(spec.graph, placements, spec.ell);
  return s;
}

EngineState cop_turn(const GameSpec& spec, const EngineState& state, const std::vector<Vertex>& moves,
                     std::optional<Vertex> hidden_robber) {
  check_cop_moves(spec.graph, state.cops, moves);
  EngineState next = state;
  next.round = state.round + 1;
  next.phase = Phase::CopTurn;
  next.cops = moves;
  next.robber.reset();
  next.dirty -= seen_by(spec.graph, moves, spec.ell);
  if (spec.mode == Mode::Capture && hidden_robber) {
    const Vertex r = *hidden_robber;
    if (occupied(moves, r) || robber_visible(spec.graph, moves, r, spec.ell)) {
      next.captured = occupied(moves, r);
      next.robber = r;
      next.dirty = VertexSet(spec.graph.vertex_count());
      next.dirty.insert(r);
    }
  }
  return next;
}

EngineState recontaminate(const GameSpec& spec, const EngineState& state) {
  if (spec.mode != Mode::Search) throw UnsupportedMode("recontaminate applies to the search game");
  EngineState next = state;
  next.phase = Phase::RobberTurn;
  next.dirty = spread(spec.graph, state.dirty, state.cops, spec.ell);
  return next;
}

EngineState robber_turn(const GameSpec& spec, const EngineState& state, Vertex robber) {
  if (spec.mode != Mode::Capture) throw UnsupportedMode("robber_turn applies to the capture game");
  if (robber >= spec.graph.vertex_count()) throw RuleViolation("robber moved off the graph", "robber");
  const bool captured = occupied(state.cops, robber);
  const bool visible = captured || robber_visible(spec.graph, state.cops, robber, spec.ell);
  return observed_robber_turn(spec, state, visible ? std::optional<Vertex>(robber) : std::nullopt, captured);
}

RunResult run_search(const GameSpec& spec, CopStrategy& cops, const RunOptions& options) {
  if (spec.mode != Mode::Search) throw UnsupportedMode("run_search needs a search-mode spec");
  Recorder rec(options, Mode::Search);
  const auto placements = cops.place(spec.graph, spec.ell, spec.k);
  check_placements(spec.graph, placements, static_cast<std::size_t>(spec.k));
  EngineState s = initial_state(spec, placements);
  rec.emit(s, EventKind::Place);
  const int limit = spec.round_limit();
  while (!s.dirty.empty()) {
    if (s.round >= limit) {
      rec.emit(s, EventKind::Timeout);
      return RunResult{Outcome::Timeout, s.round, rec.take(), s};
    }
    s = recontaminate(spec, s);
    rec.emit(s, EventKind::Recontaminate);
    const auto moves = cops.next_moves(Observation{spec.graph, spec.ell, spec.mode, s.round + 1, s});
    s = cop_turn(spec, s, moves);
    rec.emit(s, EventKind::Move);
  }
  rec.emit(s, EventKind::Win);
  return RunResult{Outcome::CopsWin, s.round, rec.take(), s};
}

RunResult run_capture(const GameSpec& spec, CopStrategy& cops, RobberStrategy& robber, const RunOptions& options) {
  if (spec.mode != Mode::Capture) throw UnsupportedMode("run_capture needs a capture-mode spec");
  Recorder rec(options, Mode::Capture);
  const Graph& g = spec.graph;
  const auto placements = cops.place(g, spec.ell, spec.k);
  check_placements(g, placements, static_cast<std::size_t>(spec.k));
  EngineState s = initial_state(spec, placements);
  rec.emit(s, EventKind::Place);

  Lookahead lookahead = [&](Vertex dest) {
    if (dest >= g.vertex_count()) throw ArgumentError("lookahead destination off the graph");
    const EngineState hyp = robber_turn(spec, s, dest);
    auto copy = cops.clone();
    return copy->next_moves(Observation{g, spec.ell, spec.mode, hyp.round + 1, hyp});
  };

  Vertex r = robber.place(g, spec.ell, s.cops, lookahead);
  if (r >= g.vertex_count()) throw RuleViolation("robber placed off the graph", "robber");
  s = robber_turn(spec, s, r);
  auto emit_robber = [&] {
    rec.emit(s, EventKind::Recontaminate);
    if (s.captured) {
      rec.emit(s, EventKind::Capture);
    } else if (s.robber) {
      rec.emit(s, EventKind::See);
    }
  };
  emit_robber();
  const int limit = spec.round_limit();
  while (!s.captured) {
    if (s.round >= limit) {
      rec.emit(s, EventKind::Timeout);
      return RunResult{Outcome::Timeout, s.round, rec.take(), s};
    }
    const auto moves = cops.next_moves(Observation{g, spec.ell, spec.mode, s.round + 1, s});
    s = cop_turn(spec, s, moves, r);
    rec.emit(s, EventKind::Move);
    if (s.captured) {
      rec.emit(s, EventKind::Capture);
      break;
    }
    if (s.robber) rec.emit(s, EventKind::See);

    const Vertex next = robber.next_move(RobberView{g, spec.ell, s.round, r, s.cops, s.dirty, lookahead});
    if (next >= g.vertex_count() || (next != r && !g.adjacent(r, next))) {
      throw RuleViolation("robber cannot move from " + std::to_string(r) + " to " + std::to_string(next), "robber");
    }
    r = next;
    s = robber_turn(spec, s, r);
    emit_robber();
  }
  return RunResult{Outcome::Capture, s.round, rec.take(), s};
}

Monotonicity audit_monotonicity(const Trace& trace) {
  if (trace.mode != Mode::Search) throw UnsupportedMode("monotonicity is defined for search traces");
  std::vector<VertexSet> before;  // R_i
  std::vector<VertexSet> after;   // S_i
  for (const auto& e : trace.events) {
    if (e.kind == EventKind::Place) {
      before.push_back(VertexSet(e.dirty.universe(), true));
      after.push_back(e.dirty);
    } else if (e.kind == EventKind::Recontaminate) {
      before.push_back(e.dirty);
    } else if (e.kind == EventKind::Move) {
      after.push_back(e.dirty);
    }
  }
  bool weak = true;
  bool strict = true;
  for (std::size_t i = 0; i + 1 < after.size(); ++i) {
    if (!after[i + 1].is_subset_of(after[i])) weak = false;
  }
  for (std::size_t i = 0; i + 1 < before.size(); ++i) {
    if (!before[i + 1].is_subset_of(before[i])) strict = false;
  }
  if (!weak) return Monotonicity::None;
  return strict ? Monotonicity::Strict : Monotonicity::Weak;
}

std::string event_to_json_line(const TraceEvent& e) {
  nlohmann::ordered_json j;
  j["round"] = e.round;
  j["phase"] = to_string(e.phase);
  j["cops"] = e.cops;
  j["dirty"] = e.dirty.to_hex();
  if (e.robber) {
    j["robber"] = *e.robber;
  } else {
    j["robber"] = nullptr;
  }
  j["event"] = to_string(e.kind);
  return j.dump();
}

void write_jsonl(std::ostream& out, const Trace& trace) {
  for (const auto& e : trace.events) out << event_to_json_line(e) << '\n';
}

Trace read_jsonl(std::istream& in, Mode mode, std::size_t vertex_count) {
  Trace trace;
  trace.mode = mode;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      TraceEvent e;
      e.round = j.at("round").get<int>();
      e.phase = phase_from_string(j.at("phase").get<std::string>());
      e.cops = j.at("cops").get<std::vector<Vertex>>();
      e.dirty = VertexSet::from_hex(j.at("dirty").get<std::string>(), vertex_count);
      if (!j.at("robber").is_null()) e.robber = j["robber"].get<Vertex>();
      e.kind = event_from_string(j.at("event").get<std::string>());
      trace.events.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ArgumentError(std::string("malformed trace line: ") + ex.what());
    }
  }
  return trace;
}

bool replay_trace(const GameSpec& spec, const Trace& trace) {
  if (trace.events.empty() || trace.events.front().kind != EventKind::Place) return false;
  EngineState s;
  auto same = [](const EngineState& st, const TraceEvent& e) {
    return st.round == e.round && st.phase == e.phase && st.cops == e.cops && st.dirty == e.dirty &&
           st.robber == e.robber;
  };
  for (const auto& e : trace.events) {
    switch (e.kind) {
      case EventKind::Place:
        s = initial_state(spec, e.cops);
        break;
      case EventKind::Move:
        s = cop_turn(spec, s, e.cops, e.robber);
        break;
      case EventKind::Recontaminate:
        if (trace.mode == Mode::Search) {
          s = recontaminate(spec, s);
        } else {
          const bool captured = e.robber && occupied(s.cops, *e.robber);
          s = observed_robber_turn(spec, s, e.robber, captured);
        }
        break;
      case EventKind::See:
      case EventKind::Capture:
      case EventKind::Win:
      case EventKind::Timeout:
        break;
    }
    if (!same(s, e)) return false;
  }
  return true;
}

}  // namespace pursuit
