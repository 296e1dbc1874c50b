#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pursuit/strategy.hpp"

namespace pursuit {

enum class Verdict { CopsWin, RobberWins };
std::string to_string(Verdict v);

struct SolverOptions {
  Budget budget = Budget::from_env();
  // Reduce states by Hamming automorphisms. Disables witnesses.
  bool symmetry = false;
};

inline constexpr std::size_t kSolverMaxVertices = 64;
inline constexpr int kSolverMaxCops = 8;

// A cop-multiset with the cops' knowledge: the dirty set (search) or the
// robber candidate set (capture), as seen at the start of a cop turn.
struct InfoKey {
  std::uint64_t cops = 0;  // sorted cop vertices, one byte each
  std::uint64_t mask = 0;
  bool operator==(const InfoKey&) const = default;
  auto operator<=>(const InfoKey&) const = default;
};

struct InfoKeyHash {
  std::size_t operator()(const InfoKey& k) const noexcept {
    std::uint64_t h = k.cops * 0x9e3779b97f4a7c15ULL;
    h ^= k.mask + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

std::uint64_t pack_cops(std::vector<Vertex> cops);  // sorts
std::vector<Vertex> unpack_cops(std::uint64_t packed, int k);

// Cop move table: placement, then for each information state the joint move
// aligned with the sorted cop list.
struct CopPolicy {
  int k = 0;
  std::vector<Vertex> placement;
  std::map<InfoKey, std::vector<Vertex>> moves;
};

struct GameValue {
  Mode mode = Mode::Search;
  int ell = 0;
  int k = 0;
  Verdict verdict = Verdict::RobberWins;
  std::size_t states_explored = 0;
  std::optional<CopPolicy> witness;
};

// Exhaustive capture-game labelling kept for robber play and witness replay.
class CaptureSolution {
 public:
  struct Label {
    bool cops_win = false;
    int depth = 0;  // cop turns still needed by the cops' fastest win
  };

  Verdict verdict() const noexcept { return verdict_; }
  int k() const noexcept { return k_; }
  int ell() const noexcept { return ell_; }
  std::size_t states() const noexcept { return states_; }
  // Label of the cop-to-move state with the given cops and candidate set.
  std::optional<Label> label(const std::vector<Vertex>& cops, const VertexSet& candidates) const;
  const std::optional<CopPolicy>& witness() const noexcept { return witness_; }

 private:
  friend std::shared_ptr<const CaptureSolution> analyze_capture(const Graph&, int, int, const SolverOptions&);
  friend struct CaptureBuilder;
  Verdict verdict_ = Verdict::RobberWins;
  int k_ = 0;
  int ell_ = 0;
  std::size_t states_ = 0;
  std::size_t universe_ = 0;
  std::unordered_map<InfoKey, Label, InfoKeyHash> labels_;
  std::optional<CopPolicy> witness_;
};

GameValue solve_search(const Graph& g, int ell, int k, const SolverOptions& options = {});
int search_number(const Graph& g, int ell, const SolverOptions& options = {});

std::shared_ptr<const CaptureSolution> analyze_capture(const Graph& g, int ell, int k,
                                                       const SolverOptions& options = {});
GameValue solve_capture(const Graph& g, int ell, int k, const SolverOptions& options = {});
int capture_number(const Graph& g, int ell, const SolverOptions& options = {});
int perfect_info_cop_number(const Graph& g, const SolverOptions& options = {});

// Rough count of the state space; reported in size errors.
std::size_t state_space_estimate(const Graph& g, int k);

nlohmann::json to_json(const GameValue& value, const Graph& g);

// Plays a witness policy in the engine.
class PolicyCops final : public CopStrategy {
 public:
  explicit PolicyCops(CopPolicy policy) : policy_(std::move(policy)) {}
  std::string name() const override { return "solver-policy"; }
  int required_cops(const Graph&, int) const override { return policy_.k; }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<PolicyCops>(*this); }

 protected:
  std::vector<Vertex> do_place(const Graph& g, int ell, int k) override;
  std::vector<Vertex> do_moves(const Observation& obs) override;

 private:
  CopPolicy policy_;
};

}  // namespace pursuit
