#pragma once

#include <algorithm>
#include <string>

#include "copsrobber/grid_strategy.hpp"
#include "copsrobber/sgrid_strategy.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/tgrid_strategy.hpp"

namespace copsrobber {

/// Step 1 of each algorithm: the cops' starting vertices and initial memory.
inline Placement initial_placement(Algorithm algorithm, const GridSpec& spec, int k) {
  using detail::require;
  switch (algorithm) {
    case Algorithm::Grid:
      require(spec.kind() == Topology::PlanarGrid, algorithm, "a planar grid");
      require(k == 2, algorithm, "k = 2");
      return grid::place(spec);
    case Algorithm::SGrid:
      require(spec.kind() == Topology::SemiTorus, algorithm, "a semitorus");
      require(k == 2, algorithm, "k = 2");
      require(spec.rows() >= 3, algorithm, "m >= 3");
      require(spec.cols() >= 4, algorithm, "n >= 4");
      return sgrid::place(spec);
    case Algorithm::GridK:
      require(spec.kind() == Topology::PlanarGrid, algorithm, "a planar grid");
      require(k >= 4 && k % 2 == 0, algorithm, "k = 2h even with h > 1");
      require(spec.rows() >= 4 && spec.cols() >= 4, algorithm, "m >= 4 and n >= 4");
      return grid::place_k(spec, k);
    case Algorithm::SGridK:
      require(spec.kind() == Topology::SemiTorus, algorithm, "a semitorus");
      require(k >= 2, algorithm, "k >= 2");
      require(spec.rows() >= 3, algorithm, "m >= 3");
      require(spec.cols() >= 2 * k, algorithm, "n >= 2k");
      return sgrid::place_k(spec, k);
    case Algorithm::TGrid:
    case Algorithm::TGridK: {
      require(spec.kind() == Topology::Torus, algorithm, "a torus");
      const int lo = std::min(spec.rows(), spec.cols());
      const int hi = std::max(spec.rows(), spec.cols());
      if (algorithm == Algorithm::TGrid) {
        require(k == 3, algorithm, "k = 3");
        require(lo >= 6, algorithm, "m >= 6 and n >= 6");
      } else {
        require(k >= 4, algorithm, "k >= 4");
        require(lo >= 6, algorithm, "m >= 6");
        require(hi >= 2 * k, algorithm, "n >= 2k");
      }
      return tgrid::place(spec, k);
    }
  }
  throw ConfigError(std::string(to_string(algorithm)) + ": not available");
}

/// One joint cop move of the active algorithm.
inline StrategyMove strategy_step(const GameState& state, const CopStrategyState& s) {
  if (state.turn != Turn::CopsToMove || state.captured)
    throw StrategyInvariantError("strategy asked to move outside the cops' turn");
  if (static_cast<int>(state.cops.size()) != s.k)
    throw StrategyInvariantError("cop count does not match the strategy");
  switch (s.algorithm) {
    case Algorithm::Grid: return grid::step(state, s);
    case Algorithm::SGrid: return sgrid::step(state, s);
    case Algorithm::GridK: return grid::step_k(state, s);
    case Algorithm::SGridK: return sgrid::step_k(state, s);
    case Algorithm::TGrid:
    case Algorithm::TGridK: return tgrid::step(state, s);
  }
  throw StrategyInvariantError("algorithm not available");
}

}  // namespace copsrobber
