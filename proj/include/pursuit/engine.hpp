#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Mode { Search, Capture };
enum class Phase { Placement, CopTurn, RobberTurn };
enum class EventKind { Place, Move, See, Capture, Recontaminate, Win, Timeout };
enum class Outcome { CopsWin, Capture, Timeout };
enum class Monotonicity { Strict, Weak, None };

std::string to_string(Mode m);
std::string to_string(Phase p);
std::string to_string(EventKind e);
std::string to_string(Outcome o);
std::string to_string(Monotonicity m);
Mode mode_from_string(const std::string& s);

struct GameSpec {
  Graph graph;
  int ell = 0;
  int k = 1;
  Mode mode = Mode::Search;
  int max_rounds = 0;  // 0 selects 4 * |V| * (k + 1)
  std::uint64_t seed = 0;

  int round_limit() const;
};

// Round r is the cop turn of round r followed by the robber turn of round r;
// placement is the cop turn of round 1. `phase` names the half-move played
// last. In capture mode `dirty` is the cops' candidate set for the robber and
// `robber` is set only while he is visible.
struct EngineState {
  int round = 1;
  Phase phase = Phase::Placement;
  std::vector<Vertex> cops;
  VertexSet dirty;
  std::optional<Vertex> robber;
  bool captured = false;
};

struct TraceEvent {
  int round = 0;
  Phase phase = Phase::Placement;
  std::vector<Vertex> cops;
  VertexSet dirty;
  std::optional<Vertex> robber;
  EventKind kind = EventKind::Place;
};

struct Trace {
  Mode mode = Mode::Search;
  std::vector<TraceEvent> events;
};

// Union of the ell-balls around the cops.
VertexSet seen_by(const Graph& g, const std::vector<Vertex>& cops, int ell);
bool robber_visible(const Graph& g, const std::vector<Vertex>& cops, Vertex robber, int ell);

// One synchronous spread step from `dirty`.
VertexSet spread(const Graph& g, const VertexSet& dirty, const std::vector<Vertex>& cops, int ell);
// Every vertex adjacent to a dirty vertex becomes dirty, seen or not.
VertexSet spread_ignoring_cops(const Graph& g, const VertexSet& dirty);

EngineState initial_state(const GameSpec& spec, const std::vector<Vertex>& placements);
// Throws RuleViolation naming the cop on an illegal move. In capture mode
// `hidden_robber` is the robber's true position.
EngineState cop_turn(const GameSpec& spec, const EngineState& state, const std::vector<Vertex>& moves,
                     std::optional<Vertex> hidden_robber = std::nullopt);
// Search-mode robber turn; advances the round.
EngineState recontaminate(const GameSpec& spec, const EngineState& state);
// Capture-mode robber turn with the robber ending on `robber`.
EngineState robber_turn(const GameSpec& spec, const EngineState& state, Vertex robber);

void check_cop_moves(const Graph& g, const std::vector<Vertex>& from, const std::vector<Vertex>& to);

struct RunResult {
  Outcome outcome = Outcome::Timeout;
  int rounds_used = 0;
  Trace trace;
  EngineState final_state;
};

using EventHook = std::function<void(const EngineState&, const TraceEvent&)>;

struct RunOptions {
  bool record_trace = true;
  EventHook on_event;
};

class CopStrategy;
class RobberStrategy;

RunResult run_search(const GameSpec& spec, CopStrategy& cops, const RunOptions& options = {});
RunResult run_capture(const GameSpec& spec, CopStrategy& cops, RobberStrategy& robber,
                      const RunOptions& options = {});

Monotonicity audit_monotonicity(const Trace& trace);

std::string event_to_json_line(const TraceEvent& e);
void write_jsonl(std::ostream& out, const Trace& trace);
Trace read_jsonl(std::istream& in, Mode mode, std::size_t vertex_count);

// Re-derives every snapshot from the recorded moves; throws RuleViolation or
// returns false on the first mismatch.
bool replay_trace(const GameSpec& spec, const Trace& trace);

}  // namespace pursuit
