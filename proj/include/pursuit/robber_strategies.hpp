#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "pursuit/solver.hpp"
#include "pursuit/strategy.hpp"

namespace pursuit {

// Keeps his row or his column free of cops after every cop move on H(2,n),
// using the cops' committed replies. Strict (throws when the invariant cannot
// be kept) at visibility at most 1 when n is even and there are at most n/2
// cops; otherwise it falls back to distance-greedy play.
class EvasionLine final : public RobberStrategy {
 public:
  std::string name() const override { return "evasion-line"; }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) override;
  Vertex next_move(const RobberView& view) override;

  static bool line_free(const Graph& g, const std::vector<Vertex>& cops, Vertex v);
  static bool strict_for(const Graph& g, int ell, std::size_t cops);
};

class GreedyDistance final : public RobberStrategy {
 public:
  std::string name() const override { return "greedy-distance"; }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) override;
  Vertex next_move(const RobberView& view) override;
};

// Follows a solved capture game: stays in robber-winning states, otherwise
// delays capture as long as the labelling allows.
class SolverOptimal final : public RobberStrategy {
 public:
  explicit SolverOptimal(std::shared_ptr<const CaptureSolution> solution) : solution_(std::move(solution)) {}
  std::string name() const override { return "solver-optimal"; }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) override;
  Vertex next_move(const RobberView& view) override;

  const CaptureSolution& solution() const noexcept { return *solution_; }

 private:
  Vertex best(const Graph& g, int ell, const std::vector<Vertex>& cops, const VertexSet& hidden,
              const std::vector<Vertex>& options) const;

  std::shared_ptr<const CaptureSolution> solution_;
};

class Stationary final : public RobberStrategy {
 public:
  std::string name() const override { return "stationary"; }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) override;
  Vertex next_move(const RobberView& view) override { return view.position; }
};

class UniformRandom final : public RobberStrategy {
 public:
  explicit UniformRandom(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "uniform-random"; }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) override;
  Vertex next_move(const RobberView& view) override;

 private:
  std::mt19937_64 rng_;
};

// Starts far from the cops and heads for vertex 0, the all-ones vertex of a
// Hamming graph, fixing one coordinate per move.
class DashToOnes final : public RobberStrategy {
 public:
  std::string name() const override { return "dash-to-ones"; }
  Vertex place(const Graph& g, int ell, const std::vector<Vertex>& cops, const Lookahead& next_cop_moves) override;
  Vertex next_move(const RobberView& view) override;
};

std::unique_ptr<RobberStrategy> make_evasion_line();
std::unique_ptr<RobberStrategy> make_greedy_distance();
std::unique_ptr<RobberStrategy> make_solver_optimal(const Graph& g, int ell, int k,
                                                    const SolverOptions& options = {});
std::unique_ptr<RobberStrategy> make_stationary();
std::unique_ptr<RobberStrategy> make_uniform_random(std::uint64_t seed);
std::unique_ptr<RobberStrategy> make_dash_to_ones();

}  // namespace pursuit
