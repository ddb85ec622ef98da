#pragma once

#include <stdexcept>
#include <string>

namespace copsrobber {

// Board or strategy parameters outside the supported range.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed caller input (cycles, siege parameters, policy scripts).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A displacement that leaves the board or is played out of turn.
class MoveError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Cone geometry evaluated through a frame that cannot unwrap the query.
class ConeFrameError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A cop strategy was asked to act from a state it can never reach.
class StrategyInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A robber policy that cannot produce its next move (exhausted script).
class PolicyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Closed-form evaluated outside the hypotheses of its theorem.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A deadline no number of cops can meet under the deadline inequalities.
class InfeasibleDeadline : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Oracle refused a solve because the state space exceeds the budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, unsigned long long estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  unsigned long long estimate() const noexcept { return estimate_; }

 private:
  unsigned long long estimate_;
};

}  // namespace copsrobber
