#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

InnerGame::InnerGame(std::unique_ptr<CopStrategy> inner, Graph graph, int ell) : strategy_(std::move(inner)) {
  spec_.graph = std::move(graph);
  spec_.ell = ell;
  spec_.mode = Mode::Search;
}

InnerGame::InnerGame(const InnerGame& other)
    : strategy_(other.strategy_ ? other.strategy_->clone() : nullptr), spec_(other.spec_), state_(other.state_) {}

InnerGame& InnerGame::operator=(const InnerGame& other) {
  if (this != &other) {
    strategy_ = other.strategy_ ? other.strategy_->clone() : nullptr;
    spec_ = other.spec_;
    state_ = other.state_;
  }
  return *this;
}

int InnerGame::required() const { return strategy_->required_cops(spec_.graph, spec_.ell); }

const std::vector<Vertex>& InnerGame::place() {
  spec_.k = required();
  const auto cops = strategy_->place(spec_.graph, spec_.ell, spec_.k);
  state_ = initial_state(spec_, cops);
  return state_.cops;
}

const std::vector<Vertex>& InnerGame::step() {
  // A finished inner game keeps its cops where they are.
  if (state_.dirty.empty()) return state_.cops;
  state_ = recontaminate(spec_, state_);
  const auto moves = strategy_->next_moves(Observation{spec_.graph, spec_.ell, spec_.mode, state_.round + 1, state_});
  state_ = cop_turn(spec_, state_, moves);
  return state_.cops;
}

namespace {

void require_hamming(const Graph& g, const std::string& who) {
  if (!g.is_hamming()) throw ArgumentError(who + " plays on Hamming graphs");
}

}  // namespace

// ---- dimension lift ----

LiftDimension::LiftDimension(const LiftDimension& other)
    : CopStrategy(other), proto_(other.proto_->clone()), game_(other.game_) {}

int LiftDimension::required_cops(const Graph& g, int ell) const {
  require_hamming(g, name());
  if (g.dimension() < 2) throw ArgumentError(name() + " needs dimension at least 2");
  if (ell < 1) throw UnsupportedMode(name() + " needs visibility at least 1");
  return proto_->required_cops(build_hamming(g.dimension() - 1, g.alphabet()), ell - 1);
}

std::vector<Vertex> LiftDimension::lift(const Graph& outer, const std::vector<Vertex>& inner) const {
  std::vector<Vertex> out;
  out.reserve(inner.size());
  const auto n = static_cast<Vertex>(outer.alphabet());
  // Appending a last coordinate of 1 is index * n in the mixed radix codec.
  for (Vertex v : inner) out.push_back(v * n);
  return out;
}

VertexSet LiftDimension::lifted_clean(const Graph& outer) const {
  VertexSet out(outer.vertex_count());
  const auto n = static_cast<Vertex>(outer.alphabet());
  const VertexSet& dirty = game_.state().dirty;
  for (Vertex v = 0; v < outer.vertex_count(); ++v) {
    if (!dirty.contains(v / n)) out.insert(v);
  }
  return out;
}

std::vector<Vertex> LiftDimension::do_place(const Graph& g, int ell, int) {
  game_ = InnerGame(proto_->clone(), build_hamming(g.dimension() - 1, g.alphabet()), ell - 1);
  return lift(g, game_.place());
}

std::vector<Vertex> LiftDimension::do_moves(const Observation& obs) { return lift(obs.graph, game_.step()); }

// ---- group lift ----

LiftGroup::LiftGroup(const LiftGroup& other)
    : CopStrategy(other), proto_(other.proto_->clone()), game_(other.game_) {}

int LiftGroup::required_cops(const Graph& g, int ell) const {
  require_hamming(g, name());
  return g.alphabet() * proto_->required_cops(g, ell + 1);
}

std::vector<Vertex> LiftGroup::spread_groups(const Graph& g, const std::vector<Vertex>& inner) const {
  std::vector<Vertex> out;
  out.reserve(inner.size() * static_cast<std::size_t>(g.alphabet()));
  for (Vertex v : inner) {
    auto c = g.coords(v);
    for (int j = 1; j <= g.alphabet(); ++j) {
      c[c.size() - 1] = j;
      out.push_back(g.vertex_at(c));
    }
  }
  return out;
}

std::vector<Vertex> LiftGroup::do_place(const Graph& g, int ell, int) {
  game_ = InnerGame(proto_->clone(), g, ell + 1);
  return spread_groups(g, game_.place());
}

std::vector<Vertex> LiftGroup::do_moves(const Observation& obs) { return spread_groups(obs.graph, game_.step()); }

// ---- cylinder lift ----

LiftCylinder::LiftCylinder(const LiftCylinder& other)
    : CopStrategy(other), proto_(other.proto_->clone()), game_(other.game_) {}

int LiftCylinder::required_cops(const Graph& g, int ell) const {
  require_hamming(g, name());
  if (g.dimension() < 2) throw ArgumentError(name() + " needs dimension at least 2");
  return g.alphabet() * proto_->required_cops(build_hamming(g.dimension() - 1, g.alphabet()), ell);
}

Vertex LiftCylinder::project(const Graph& outer, Vertex v) {
  // Dropping the most significant coordinate.
  return static_cast<Vertex>(v % (outer.vertex_count() / static_cast<std::size_t>(outer.alphabet())));
}

std::vector<Vertex> LiftCylinder::spread_fibers(const Graph& g, const std::vector<Vertex>& inner) const {
  const auto layer = static_cast<Vertex>(g.vertex_count() / static_cast<std::size_t>(g.alphabet()));
  std::vector<Vertex> out;
  out.reserve(inner.size() * static_cast<std::size_t>(g.alphabet()));
  for (Vertex v : inner) {
    for (int j = 0; j < g.alphabet(); ++j) out.push_back(static_cast<Vertex>(j) * layer + v);
  }
  return out;
}

std::vector<Vertex> LiftCylinder::do_place(const Graph& g, int ell, int) {
  game_ = InnerGame(proto_->clone(), build_hamming(g.dimension() - 1, g.alphabet()), ell);
  return spread_fibers(g, game_.place());
}

std::vector<Vertex> LiftCylinder::do_moves(const Observation& obs) {
  return spread_fibers(obs.graph, game_.step());
}

// ---- corner guard ----

CornerGuard::CornerGuard(const CornerGuard& other)
    : CopStrategy(other), proto_(other.proto_->clone()), game_(other.game_) {}

int CornerGuard::required_cops(const Graph& g, int ell) const {
  require_hamming(g, name());
  if (g.alphabet() < 2) throw ArgumentError(name() + " needs n at least 2");
  if (ell != g.dimension() - 1) throw UnsupportedMode(name() + " needs visibility d-1");
  return proto_->required_cops(build_hamming(g.dimension(), g.alphabet() - 1), ell) + 1;
}

Vertex CornerGuard::guard_vertex(const Graph& g) const {
  return static_cast<Vertex>(g.vertex_count() - 1);
}

std::vector<Vertex> CornerGuard::embed(const Graph& outer, const std::vector<Vertex>& inner) const {
  const Graph& sub = game_.spec().graph;
  std::vector<Vertex> out;
  out.reserve(inner.size() + 1);
  for (Vertex v : inner) out.push_back(outer.vertex_at(sub.coords(v)));
  out.push_back(guard_vertex(outer));
  return out;
}

std::vector<Vertex> CornerGuard::do_place(const Graph& g, int ell, int) {
  game_ = InnerGame(proto_->clone(), build_hamming(g.dimension(), g.alphabet() - 1), ell);
  return embed(g, game_.place());
}

std::vector<Vertex> CornerGuard::do_moves(const Observation& obs) { return embed(obs.graph, game_.step()); }

}  // namespace pursuit
