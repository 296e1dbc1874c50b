#include "pursuit/registry.hpp"

#include "pursuit/cop_strategies.hpp"
#include "pursuit/errors.hpp"

namespace pursuit {

std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  if (head == "lift-dim" || head == "lift-group" || head == "lift-cylinder" || head == "corner-guard") {
    if (colon == std::string::npos || colon + 1 == spec.size()) {
      throw ArgumentError(head + " needs an inner strategy, e.g. " + head + ":rook-search");
    }
    auto inner = make_cop_strategy(spec.substr(colon + 1), seed);
    if (head == "lift-dim") return make_lift_dimension(std::move(inner));
    if (head == "lift-group") return make_lift_group(std::move(inner));
    if (head == "lift-cylinder") return make_lift_cylinder(std::move(inner));
    return make_corner_guard(std::move(inner));
  }
  if (colon != std::string::npos) throw ArgumentError("strategy " + head + " takes no inner strategy");
  if (spec == "clique-sweep") return make_clique_sweep();
  if (spec == "rook-search") return make_rook_search();
  if (spec == "rook-capture") return make_rook_capture(true);
  if (spec == "rook-capture-noguard") return make_rook_capture(false);
  if (spec == "secure-set") return make_secure_set_sweep();
  if (spec == "coordinate-chase") return make_coordinate_chase();
  if (spec == "protect-chase") return make_protect_chase();
  if (spec == "random") return std::make_unique<RandomCops>(seed);
  if (spec == "greedy") return std::make_unique<GreedyCops>();
  throw ArgumentError("unknown cop strategy: " + spec);
}

std::vector<std::string> cop_strategy_names() {
  return {"clique-sweep", "rook-search",  "rook-capture",     "rook-capture-noguard", "secure-set",
          "lift-dim",     "lift-group",   "lift-cylinder",    "corner-guard",     "coordinate-chase",     "protect-chase",
          "random",       "greedy"};
}

std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name, const Graph& g, int ell, int k,
                                                     std::uint64_t seed) {
  if (name == "evasion-line") return make_evasion_line();
  if (name == "greedy-distance") return make_greedy_distance();
  if (name == "solver-optimal") return make_solver_optimal(g, ell, k);
  if (name == "stationary") return make_stationary();
  if (name == "uniform-random") return make_uniform_random(seed);
  if (name == "dash-to-ones") return make_dash_to_ones();
  throw ArgumentError("unknown robber strategy: " + name);
}

std::vector<std::string> robber_strategy_names() {
  return {"evasion-line", "greedy-distance", "solver-optimal", "stationary", "uniform-random", "dash-to-ones"};
}

}  // namespace pursuit
