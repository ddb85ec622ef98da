#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "copsrobber/engine.hpp"
#include "copsrobber/errors.hpp"

namespace copsrobber {

enum class Algorithm : std::uint8_t { Grid, SGrid, TGrid, GridK, SGridK, TGridK };

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Grid: return "grid";
    case Algorithm::SGrid: return "sgrid";
    case Algorithm::TGrid: return "tgrid";
    case Algorithm::GridK: return "grid-k";
    case Algorithm::SGridK: return "sgrid-k";
    case Algorithm::TGridK: return "tgrid-k";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (Algorithm a : {Algorithm::Grid, Algorithm::SGrid, Algorithm::TGrid, Algorithm::GridK,
                      Algorithm::SGridK, Algorithm::TGridK})
    if (to_string(a) == s) return a;
  throw ConfigError("unknown algorithm '" + std::string(s) + "'");
}

enum class Phase : std::uint8_t { Guard, Chase, Done };

inline std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::Guard: return "guard";
    case Phase::Chase: return "chase";
    case Phase::Done: return "done";
  }
  return "?";
}

/// Board symmetry applied before a strategy reasons about positions. The
/// strategy works on the image board; moves are mapped back when emitted.
/// Transpose is applied first, then the reflections.
struct Symmetry {
  bool transpose = false;
  bool flip_rows = false;
  bool flip_cols = false;
  int col_shift = 0;  // applied last, on wrapped columns only

  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// Everything a cop algorithm remembers between turns. Finite and
/// value-comparable so an exhaustive adversary can memoize on it.
struct CopStrategyState {
  Algorithm algorithm = Algorithm::Grid;
  int k = 2;
  Phase phase = Phase::Chase;
  int guard = -1;                     // cop index of the guard, -1 if none
  std::vector<Orientation> cones;     // one per cop, empty until chosen
  int gap_left = -1;                  // cops bounding the robber's gap
  int gap_right = -1;
  Symmetry sym;
  bool tie_claimed = false;           // guard claimed on a simultaneous arrival
  std::vector<int> order;             // torus roles: ring order from the anchor cop

  friend bool operator==(const CopStrategyState&, const CopStrategyState&) = default;

  void append_key(std::vector<int>& key) const {
    key.push_back(static_cast<int>(algorithm));
    key.push_back(k);
    key.push_back(static_cast<int>(phase));
    key.push_back(guard);
    key.push_back(static_cast<int>(cones.size()));
    for (Orientation o : cones) key.push_back(static_cast<int>(o));
    key.push_back(gap_left);
    key.push_back(gap_right);
    key.push_back((sym.transpose ? 1 : 0) | (sym.flip_rows ? 2 : 0) | (sym.flip_cols ? 4 : 0));
    key.push_back(sym.col_shift);
    key.push_back(tie_claimed ? 1 : 0);
    key.push_back(static_cast<int>(order.size()));
    key.insert(key.end(), order.begin(), order.end());
  }
};

}  // namespace copsrobber
