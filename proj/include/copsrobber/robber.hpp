#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "copsrobber/engine.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/strategies.hpp"
#include "copsrobber/topology.hpp"
#include "copsrobber/view.hpp"

namespace copsrobber {

enum class RobberKind { PaperWorstCase, GreedyEscape, Scripted, ExternalChoice };

inline std::string_view to_string(RobberKind k) {
  switch (k) {
    case RobberKind::PaperWorstCase: return "worst-case";
    case RobberKind::GreedyEscape: return "greedy";
    case RobberKind::Scripted: return "scripted";
    case RobberKind::ExternalChoice: return "external";
  }
  return "?";
}

inline RobberKind parse_robber_kind(std::string_view s) {
  for (RobberKind k : {RobberKind::PaperWorstCase, RobberKind::GreedyEscape,
                       RobberKind::Scripted, RobberKind::ExternalChoice})
    if (to_string(k) == s) return k;
  throw ConfigError("unknown robber policy '" + std::string(s) + "'");
}

/// A robber behavior. The only internal state is the script cursor, which
/// robber_policy_step hands back advanced.
struct RobberPolicy {
  RobberKind kind = RobberKind::GreedyEscape;
  std::vector<Move> script;                           // Scripted
  std::size_t cursor = 0;
  std::optional<Vertex> goal;                         // PaperWorstCase: vertex to walk to first
  std::function<Move(const GameState&)> choose;       // ExternalChoice
};

struct RobberStep {
  Move move;
  RobberPolicy next;
};

namespace detail {

inline int distance_to_nearest(const GridSpec& spec, const std::vector<Vertex>& cops, Vertex v,
                               int skip = 0) {
  std::vector<int> d;
  for (const Vertex& c : cops) d.push_back(distance(spec, c, v));
  std::sort(d.begin(), d.end());
  const std::size_t i = std::min<std::size_t>(skip, d.size() - 1);
  return d[i];
}

// Safe vertices are neither a cop nor adjacent to one.
inline bool safe_at(const GridSpec& spec, const std::vector<Vertex>& cops, Vertex v) {
  return distance_to_nearest(spec, cops, v) >= 2;
}

inline Move step_toward(const GridSpec& spec, Vertex from, Vertex to) {
  for (Move mv : {Move::Left, Move::Right, Move::Up, Move::Down}) {
    if (!move_is_legal(spec, from, mv)) continue;
    if (distance(spec, apply_move(spec, from, mv), to) < distance(spec, from, to)) return mv;
  }
  return Move::Stay;
}

inline Move greedy_move(const GameState& state) {
  const GridSpec& spec = state.spec;
  Move best = Move::Stay;
  std::pair<int, int> best_score{-1, -1};
  for (Move mv : kAllMoves) {
    if (!move_is_legal(spec, state.robber, mv)) continue;
    const Vertex v = apply_move(spec, state.robber, mv);
    const std::pair<int, int> score{distance_to_nearest(spec, state.cops, v),
                                    distance_to_nearest(spec, state.cops, v, 1)};
    if (score > best_score) {
      best_score = score;
      best = mv;
    }
  }
  return best;
}

// The proofs' robber: walk to the chosen vertex while that is safe, then hold
// still; when a cop threatens, slip away, downward when possible; inside a
// siege there is nothing left to do.
inline Move paper_worst_case_move(const GameState& state, const std::optional<Vertex>& goal) {
  const GridSpec& spec = state.spec;
  const Vertex r = state.robber;
  if (goal && *goal != r) {
    const Move mv = step_toward(spec, r, *goal);
    if (mv != Move::Stay && safe_at(spec, state.cops, apply_move(spec, r, mv))) return mv;
  }
  if (safe_at(spec, state.cops, r)) return Move::Stay;
  for (Move mv : {Move::Down, Move::Up, Move::Left, Move::Right}) {
    if (!move_is_legal(spec, r, mv)) continue;
    if (safe_at(spec, state.cops, apply_move(spec, r, mv))) return mv;
  }
  return Move::Stay;
}

}  // namespace detail

/// The robber's move on its turn and the policy's advanced state.
inline RobberStep robber_policy_step(const GameState& state, const RobberPolicy& p) {
  if (state.turn != Turn::RobberToMove) throw MoveError("robber asked to move out of turn");
  RobberStep out{Move::Stay, p};
  switch (p.kind) {
    case RobberKind::PaperWorstCase:
      out.move = detail::paper_worst_case_move(state, p.goal);
      break;
    case RobberKind::GreedyEscape:
      out.move = detail::greedy_move(state);
      break;
    case RobberKind::Scripted:
      if (p.cursor >= p.script.size()) throw PolicyError("robber script exhausted");
      out.move = p.script[p.cursor];
      ++out.next.cursor;
      break;
    case RobberKind::ExternalChoice:
      if (!p.choose) throw PolicyError("external robber policy has no chooser");
      out.move = p.choose(state);
      break;
  }
  return out;
}

/// Start vertex and walking goal of the robber from a capture-time proof.
struct WorstCaseStart {
  Vertex start;
  std::optional<Vertex> goal;
};

namespace detail {

// A vertex farthest from its nearest cop; ties go to the lowest index.
inline Vertex farthest_from_cops(const GridSpec& spec, const std::vector<Vertex>& cops) {
  Vertex best = spec.vertex(0);
  int best_d = -1;
  for (int i = 0; i < spec.vertex_count(); ++i) {
    const Vertex v = spec.vertex(i);
    const int d = distance_to_nearest(spec, cops, v);
    if (d > best_d) {
      best_d = d;
      best = v;
    }
  }
  return best;
}

}  // namespace detail

inline WorstCaseStart worst_case_start(Algorithm algorithm, const GridSpec& spec, int k,
                                       const std::vector<Vertex>& cops) {
  switch (algorithm) {
    case Algorithm::Grid:
    case Algorithm::GridK:
      return {detail::farthest_from_cops(spec, cops), std::nullopt};
    case Algorithm::SGrid:
    case Algorithm::SGridK: {
      // On the edge of c1's cone, half a gap to its right.
      const int gap = ceil_div(spec.cols() - k, k);
      const int j = ceil_div(gap, 2);
      return {{(spec.rows() - 1) / 2 + j, j}, std::nullopt};
    }
    case Algorithm::TGrid:
    case Algorithm::TGridK: {
      // Start in the column of the cop that becomes the guard, then walk to
      // the lowest edge vertex of c2's cone at chase time.
      Symmetry sym;
      sym.transpose = spec.rows() > spec.cols();
      const BoardView view(spec, sym);
      const int m = view.image().rows();
      const int n = view.image().cols();
      const int c = ceil_div(n, k - 1);
      int j = m / 2;
      if (m > c) j = c % 2 == 0 ? ceil_div(n, 2 * (k - 1)) : n / (2 * (k - 1));
      j = std::clamp(j, 2, m - 2);
      const int guard_col = ceil_div(n - k, k) + 1;
      return {view.to_real({j, guard_col}), view.to_real({j, GridSpec::mod(c - j, n)})};
    }
  }
  return {cops.front(), std::nullopt};
}

inline Vertex worst_case_robber_placement(Algorithm algorithm, const GridSpec& spec, int k,
                                          const std::vector<Vertex>& cops) {
  return worst_case_start(algorithm, spec, k, cops).start;
}

}  // namespace copsrobber
