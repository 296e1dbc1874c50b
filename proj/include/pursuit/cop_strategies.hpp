#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pursuit/strategy.hpp"

namespace pursuit {

// 2-D helpers: vertex (x, y) of H(2,n) is column x, row y, both 1-based.
Vertex cell(const Graph& g, int x, int y);
int column_of(const Graph& g, Vertex v);
int row_of(const Graph& g, Vertex v);

// ---- Zero-visibility sweep of K_n --------------------------------------

class CliqueSweep final : public CopStrategy {
 public:
  std::string name() const override { return "clique-sweep"; }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<CliqueSweep>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;
};

// ---- 1-visibility search on H(2,n) -------------------------------------

// Row and column relabelling that puts the clean rectangle in the corner.
// row[j] is the actual row shown at normalized row j+1; likewise col.
struct NormalizationState {
  std::vector<int> row;
  std::vector<int> col;
  int a = 0;  // clean rows
  int b = 0;  // clean columns

  VertexSet clean_rectangle(const Graph& g) const;
};

class RookSearch final : public CopStrategy {
 public:
  std::string name() const override { return "rook-search"; }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<RookSearch>(*this); }

  // Claimed clean set after the coming recontamination, valid once the
  // strategy has committed its latest cop turn.
  const NormalizationState& normalization() const noexcept { return norm_; }
  // Clean-column counts claimed after each completed expansion cycle.
  const std::vector<int>& column_history() const noexcept { return columns_; }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  enum class Step { Opening, Spread, Fold };
  void renormalize(const std::vector<std::pair<int, int>>& cops, const std::vector<bool>& clean_rows,
                   const std::vector<bool>& clean_cols, int a, int b);
  std::vector<Vertex> to_actual(const Graph& g, const std::vector<std::pair<int, int>>& normalized) const;

  int n_ = 0;
  int k_ = 0;
  Step step_ = Step::Opening;
  NormalizationState norm_;
  std::vector<int> columns_;
};

// ---- 1-visibility capture on H(2,n) ------------------------------------

class RookCapture final : public CopStrategy {
 public:
  // Without the guard the strategy runs the odd-n plan on the leading
  // (n-1)-subgrid with n/2 cops; it is only meaningful as a weakened
  // opponent for even n.
  explicit RookCapture(bool guard = true) : guard_(guard) {}

  std::string name() const override { return guard_ ? "rook-capture" : "rook-capture-noguard"; }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<RookCapture>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  enum class Step { Home, Swept, Pinned, Regroup };
  std::vector<std::pair<int, int>> home() const;

  bool guard_;
  int n_ = 0;
  int m_ = 0;  // side of the subgrid played by the odd plan
  int half_ = 0;
  bool has_guard_ = false;
  Step step_ = Step::Home;
};

// ---- 0-visibility weakly monotone sweep of H(2,n) -----------------------

class SecureSetSweep final : public CopStrategy {
 public:
  std::string name() const override { return "secure-set"; }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<SecureSetSweep>(*this); }

  int secure_rows() const noexcept { return a_; }
  int secure_cols() const noexcept { return b_; }
  VertexSet secure_set(const Graph& g) const;
  VertexSet vulnerable_set(const Graph& g) const;
  const VertexSet& discovered() const noexcept { return discovered_; }
  // Cops assigned to vulnerable or newly discovered vertices in the last move.
  int maintenance_cops() const noexcept { return maintenance_; }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  enum class Step { Opening, Maintain, Grow1, Grow2 };
  struct Pattern {
    std::vector<std::pair<int, int>> cycling;
    std::vector<std::pair<int, int>> fixed;
  };
  Pattern upper(int a, int b) const;
  Pattern lower(int a, int b) const;
  std::vector<std::pair<int, int>> targets(const Pattern& p, int parity) const;
  std::optional<std::vector<Vertex>> assign(const Graph& g, const std::vector<Vertex>& cops,
                                            const std::vector<Vertex>& targets, Vertex staging) const;
  Vertex staging_vertex(const Graph& g) const;

  int n_ = 0;
  int a_ = 0;
  int b_ = 0;
  bool grow_rows_ = true;
  Step step_ = Step::Opening;
  int parity_upper_ = 0;
  int parity_lower_ = 0;
  int maintenance_ = 0;
  VertexSet discovered_;
};

// ---- Lifts -------------------------------------------------------------

// Plays an inner strategy in its own simulated search game.
class InnerGame {
 public:
  InnerGame() = default;
  InnerGame(std::unique_ptr<CopStrategy> inner, Graph graph, int ell);
  InnerGame(const InnerGame& other);
  InnerGame& operator=(const InnerGame& other);
  InnerGame(InnerGame&&) = default;
  InnerGame& operator=(InnerGame&&) = default;

  int required() const;
  const std::vector<Vertex>& place();
  const std::vector<Vertex>& step();

  CopStrategy& strategy() { return *strategy_; }
  const GameSpec& spec() const noexcept { return spec_; }
  const EngineState& state() const noexcept { return state_; }

 private:
  std::unique_ptr<CopStrategy> strategy_;
  GameSpec spec_;
  EngineState state_;
};

// (ell+1)-visibility on H(d+1,n) from ell-visibility on H(d,n).
class LiftDimension final : public CopStrategy {
 public:
  explicit LiftDimension(std::unique_ptr<CopStrategy> inner) : proto_(std::move(inner)) {}
  LiftDimension(const LiftDimension& other);

  std::string name() const override { return "lift-dim:" + proto_->name(); }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<LiftDimension>(*this); }

  const InnerGame& inner() const noexcept { return game_; }
  // Outer vertices whose first d coordinates name a clean inner vertex.
  VertexSet lifted_clean(const Graph& outer) const;

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  std::vector<Vertex> lift(const Graph& outer, const std::vector<Vertex>& inner) const;

  std::unique_ptr<CopStrategy> proto_;
  InnerGame game_;
};

// ell-visibility with n cops per cop of an (ell+1)-visibility strategy. Cop
// (v_1,...,v_d) of the inner game becomes the n cops (v_1,...,v_{d-1},j).
class LiftGroup final : public CopStrategy {
 public:
  explicit LiftGroup(std::unique_ptr<CopStrategy> inner) : proto_(std::move(inner)) {}
  LiftGroup(const LiftGroup& other);

  std::string name() const override { return "lift-group:" + proto_->name(); }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<LiftGroup>(*this); }

  const InnerGame& inner() const noexcept { return game_; }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  std::vector<Vertex> spread_groups(const Graph& g, const std::vector<Vertex>& inner) const;

  std::unique_ptr<CopStrategy> proto_;
  InnerGame game_;
};

// H(d,n) from an ell-visibility strategy on H(d-1,n) with the same ell: inner
// cop (v_2,...,v_d) becomes the n cops (j,v_2,...,v_d), and a vertex is clean
// whenever its projection is clean in the inner game.
class LiftCylinder final : public CopStrategy {
 public:
  explicit LiftCylinder(std::unique_ptr<CopStrategy> inner) : proto_(std::move(inner)) {}
  LiftCylinder(const LiftCylinder& other);

  std::string name() const override { return "lift-cylinder:" + proto_->name(); }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<LiftCylinder>(*this); }

  const InnerGame& inner() const noexcept { return game_; }
  // Inner index of the projection (v_2,...,v_d).
  static Vertex project(const Graph& outer, Vertex v);

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  std::vector<Vertex> spread_fibers(const Graph& g, const std::vector<Vertex>& inner) const;

  std::unique_ptr<CopStrategy> proto_;
  InnerGame game_;
};

// H(d,n+1) from H(d,n): a guard on (n+1,...,n+1) plus the inner strategy on
// the vertices with every coordinate at most n.
class CornerGuard final : public CopStrategy {
 public:
  explicit CornerGuard(std::unique_ptr<CopStrategy> inner) : proto_(std::move(inner)) {}
  CornerGuard(const CornerGuard& other);

  std::string name() const override { return "corner-guard:" + proto_->name(); }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<CornerGuard>(*this); }

  const InnerGame& inner() const noexcept { return game_; }
  Vertex guard_vertex(const Graph& g) const;

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  std::vector<Vertex> embed(const Graph& outer, const std::vector<Vertex>& inner) const;

  std::unique_ptr<CopStrategy> proto_;
  InnerGame game_;
};

// ---- Full-visibility chases on H(d,n) -----------------------------------

class CoordinateChase final : public CopStrategy {
 public:
  std::string name() const override { return "coordinate-chase"; }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<CoordinateChase>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;
};

class ProtectChase final : public CopStrategy {
 public:
  std::string name() const override { return "protect-chase"; }
  int required_cops(const Graph& g, int ell) const override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<ProtectChase>(*this); }

  // t_i: length of the agreeing prefix of cop i's coordinate list.
  static std::vector<int> progress(const Graph& g, const std::vector<Vertex>& cops, Vertex robber);

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;
};

// ---- Test opponents ----------------------------------------------------

class RandomCops final : public CopStrategy {
 public:
  explicit RandomCops(std::uint64_t seed) : rng_(seed) {}
  std::string name() const override { return "random"; }
  int required_cops(const Graph&, int) const override { return 1; }
  bool flexible() const override { return true; }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<RandomCops>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  std::mt19937_64 rng_;
};

// Each cop in turn picks the move that newly sees the most candidate
// vertices; a visible robber is chased along a shortest path.
class GreedyCops final : public CopStrategy {
 public:
  std::string name() const override { return "greedy"; }
  int required_cops(const Graph&, int) const override { return 1; }
  bool flexible() const override { return true; }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<GreedyCops>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;
};

// Replays fixed placements and moves, then stands still.
class ScriptedCops final : public CopStrategy {
 public:
  ScriptedCops(std::vector<Vertex> placement, std::vector<std::vector<Vertex>> moves)
      : placement_(std::move(placement)), moves_(std::move(moves)) {}
  std::string name() const override { return "scripted"; }
  int required_cops(const Graph&, int) const override { return static_cast<int>(placement_.size()); }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<ScriptedCops>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  std::vector<Vertex> placement_;
  std::vector<std::vector<Vertex>> moves_;
  std::size_t next_ = 0;
};

std::unique_ptr<CopStrategy> make_clique_sweep();
std::unique_ptr<CopStrategy> make_rook_search();
std::unique_ptr<CopStrategy> make_rook_capture(bool guard = true);
std::unique_ptr<CopStrategy> make_secure_set_sweep();
std::unique_ptr<CopStrategy> make_lift_dimension(std::unique_ptr<CopStrategy> inner);
std::unique_ptr<CopStrategy> make_lift_group(std::unique_ptr<CopStrategy> inner);
std::unique_ptr<CopStrategy> make_lift_cylinder(std::unique_ptr<CopStrategy> inner);
std::unique_ptr<CopStrategy> make_corner_guard(std::unique_ptr<CopStrategy> inner);
std::unique_ptr<CopStrategy> make_coordinate_chase();
std::unique_ptr<CopStrategy> make_protect_chase();

}  // namespace pursuit
