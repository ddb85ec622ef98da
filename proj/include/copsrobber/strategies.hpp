#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "copsrobber/engine.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/strategy_state.hpp"
#include "copsrobber/topology.hpp"
#include "copsrobber/view.hpp"

namespace copsrobber {

inline constexpr int ceil_div(int a, int b) noexcept {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
inline constexpr int floor_div(int a, int b) noexcept {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

struct Placement {
  std::vector<Vertex> cops;
  CopStrategyState state;
};

struct StrategyMove {
  std::vector<Move> moves;
  CopStrategyState state;
};

namespace detail {

[[noreturn]] inline void config_fail(Algorithm a, const std::string& bound) {
  throw ConfigError(std::string(to_string(a)) + ": requires " + bound);
}

inline void require(bool ok, Algorithm a, const std::string& bound) {
  if (!ok) config_fail(a, bound);
}

// Sizes of `count` cop-free gaps sharing `free` columns, larger gaps first.
inline std::vector<int> gap_sizes(int free, int count) {
  std::vector<int> gaps(count, free / count);
  for (int i = 0; i < free % count; ++i) ++gaps[i];
  return gaps;
}

inline int sign(int x) noexcept { return (x > 0) - (x < 0); }

}  // namespace detail

}  // namespace copsrobber
