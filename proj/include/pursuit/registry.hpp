#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pursuit/robber_strategies.hpp"
#include "pursuit/strategy.hpp"

namespace pursuit {

// Cop strategy by name. Lifts chain with colons, e.g.
// "lift-dim:rook-search" or "corner-guard:lift-dim:rook-search".
std::unique_ptr<CopStrategy> make_cop_strategy(const std::string& spec, std::uint64_t seed = 0);
std::vector<std::string> cop_strategy_names();

// solver-optimal solves the capture game on (g, ell, k) up front.
std::unique_ptr<RobberStrategy> make_robber_strategy(const std::string& name, const Graph& g, int ell, int k,
                                                     std::uint64_t seed = 0);
std::vector<std::string> robber_strategy_names();

}  // namespace pursuit
