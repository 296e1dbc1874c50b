#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pursuit {

// Invalid arguments: bad patterns, wrong placement counts, non-total maps.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured vertex or state budget would be exceeded.
class SizeError : public std::runtime_error {
 public:
  SizeError(const std::string& what, std::size_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  std::size_t estimate() const noexcept { return estimate_; }

 private:
  std::size_t estimate_;
};

// An illegal move was submitted to the engine. `offender` names the piece
// ("cop 2", "robber").
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(const std::string& what, std::string offender, int cop_index = -1)
      : std::runtime_error(what), offender_(std::move(offender)), cop_index_(cop_index) {}
  const std::string& offender() const noexcept { return offender_; }
  int cop_index() const noexcept { return cop_index_; }

 private:
  std::string offender_;
  int cop_index_;
};

// The operation is not defined for the requested game mode or visibility.
class UnsupportedMode : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A strategy was given fewer cops than it needs.
class InsufficientCops : public std::invalid_argument {
 public:
  InsufficientCops(const std::string& what, int required, int given)
      : std::invalid_argument(what), required_(required), given_(given) {}
  int required() const noexcept { return required_; }
  int given() const noexcept { return given_; }

 private:
  int required_;
  int given_;
};

// A strategy could not produce a move it promised (internal invariant broken).
class StrategyFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pursuit
