#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pursuit/engine.hpp"

namespace pursuit {

struct Observation {
  const Graph& graph;
  int ell;
  Mode mode;
  int round;                 // round whose cop turn is being chosen
  const EngineState& state;  // after the previous robber turn
};

// A cop strategy drives `required_cops` cops. Extra cops beyond that count
// park on cop 0's vertex and copy its moves. Flexible strategies instead use
// every cop they are given.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;

  virtual std::string name() const = 0;
  virtual int required_cops(const Graph& g, int ell) const = 0;
  virtual bool flexible() const { return false; }
  virtual std::unique_ptr<CopStrategy> clone() const = 0;

  std::vector<Vertex> place(const Graph& g, int ell, int k);
  std::vector<Vertex> next_moves(const Observation& obs);

  int active_cops() const noexcept { return active_; }
  int total_cops() const noexcept { return total_; }

 protected:
  virtual std::vector<Vertex> do_place(const Graph& g, int ell, int k) = 0;
  // Moves for the first active_cops() cops.
  virtual std::vector<Vertex> do_moves(const Observation& obs) = 0;

 private:
  int active_ = 0;
  int total_ = 0;
};

// Destination of the robber -> the cops' committed moves of the next round.
using Lookahead = std::function<std::vector<Vertex>(Vertex)>;

struct RobberView {
  const Graph& graph;
  int ell;
  int round;
  Vertex position;
  const std::vector<Vertex>& cops;  // after this round's cop move
  const VertexSet& belief;          // cops' candidate set after their move
  const Lookahead& next_cop_moves;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) = 0;
  virtual Vertex next_move(const RobberView& view) = 0;
};

}  // namespace pursuit
