#include "pursuit/strategy.hpp"

#include "pursuit/errors.hpp"

namespace pursuit {

std::vector<Vertex> CopStrategy::place(const Graph& g, int ell, int k) {
  if (k < 1) throw ArgumentError("at least one cop is required");
  const int required = required_cops(g, ell);
  if (k < required) {
    throw InsufficientCops(name() + " needs " + std::to_string(required) + " cops, got " + std::to_string(k),
                           required, k);
  }
  total_ = k;
  active_ = flexible() ? k : required;
  auto out = do_place(g, ell, active_);
  if (out.size() != static_cast<std::size_t>(active_)) {
    throw StrategyFailure(name() + " placed " + std::to_string(out.size()) + " cops, expected " +
                          std::to_string(active_));
  }
  out.resize(static_cast<std::size_t>(k), out.front());
  return out;
}

std::vector<Vertex> CopStrategy::next_moves(const Observation& obs) {
  auto out = do_moves(obs);
  if (out.size() != static_cast<std::size_t>(active_)) {
    throw StrategyFailure(name() + " moved " + std::to_string(out.size()) + " cops, expected " +
                          std::to_string(active_));
  }
  out.resize(static_cast<std::size_t>(total_), out.front());
  return out;
}

}  // namespace pursuit
