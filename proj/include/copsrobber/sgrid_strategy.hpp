#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "copsrobber/strategies.hpp"

namespace copsrobber::sgrid {

/// Unwrapped window around a cop: lateral offsets to the robber are measured
/// the short way around the ring, and on a torus depth is counted downward
/// from the cop's row through the wrap.
inline ConeFrame frame_around(const GridSpec& board, Vertex cop) {
  if (!board.wraps_cols()) return ConeFrame::whole_board();
  ConeFrame f = ConeFrame::columns(cop.col - (board.cols() - 1) / 2, board.cols());
  if (board.wraps_rows()) {
    f.row_lo = cop.row;
    f.row_width = board.rows();
  }
  return f;
}

inline ConeOffset offset_from(const GridSpec& board, Vertex cop, Vertex robber) {
  return cone_offset(board, cop, Orientation::Down, frame_around(board, cop), robber);
}

inline Move down_or_stay(const GridSpec& board, Vertex cop) {
  return move_is_legal(board, cop, Move::Down) ? Move::Down : Move::Stay;
}

// Horizontal step of `cop` toward the robber, the short way around.
inline Move toward(const GridSpec& board, Vertex cop, Vertex robber) {
  const int lat = offset_from(board, cop, robber).lateral;
  if (lat == 0) throw StrategyInvariantError("robber left the shadow cones");
  return lat > 0 ? Move::Right : Move::Left;
}

enum class ChaseRule { Approach, Advance, Shift, Stagger };

struct PairMoves {
  Move first = Move::Stay;
  Move second = Move::Stay;
  ChaseRule rule = ChaseRule::Approach;
};

/// Two cops chasing downward with shadow cones below them. Coordinates are
/// in a view where the chase runs toward increasing rows.
inline PairMoves chase_pair(const GridSpec& board, Vertex c1, Vertex c2, Vertex robber) {
  const ConeOffset o1 = offset_from(board, c1, robber);
  const ConeOffset o2 = offset_from(board, c2, robber);
  const ConeMembership g1 = classify_offset(o1);
  const ConeMembership g2 = classify_offset(o2);
  using CM = ConeMembership;
  PairMoves out;
  if (g1 == CM::Outside && g2 == CM::Outside) {
    out = {toward(board, c1, robber), toward(board, c2, robber), ChaseRule::Approach};
  } else if (g1 == CM::Within || g2 == CM::Within) {
    out = {down_or_stay(board, c1), down_or_stay(board, c2), ChaseRule::Advance};
  } else if (g1 == CM::OnEdge && g2 == CM::Outside) {
    out = {Move::Stay, toward(board, c2, robber), ChaseRule::Shift};
  } else if (g2 == CM::OnEdge && g1 == CM::Outside) {
    out = {toward(board, c1, robber), Move::Stay, ChaseRule::Shift};
  } else {
    // On an edge of both cones: the upper cop, the one farther above the
    // robber, closes in; on a tie the first cop does.
    out.rule = ChaseRule::Stagger;
    if (o2.depth > o1.depth) out.second = down_or_stay(board, c2);
    else out.first = down_or_stay(board, c1);
  }
  return out;
}

/// A cop adjacent to the robber steps onto it.
inline std::optional<std::vector<Move>> capture_move(const GridSpec& board,
                                                     const std::vector<Vertex>& cops,
                                                     Vertex robber) {
  for (std::size_t i = 0; i < cops.size(); ++i) {
    if (const auto mv = move_between(board, cops[i], robber); mv && *mv != Move::Stay) {
      std::vector<Move> moves(cops.size(), Move::Stay);
      moves[i] = *mv;
      return moves;
    }
  }
  return std::nullopt;
}

inline Placement place(const GridSpec& spec) {
  CopStrategyState st;
  st.algorithm = Algorithm::SGrid;
  st.k = 2;
  const int row = (spec.rows() - 1) / 2;
  return {{{row, 0}, {row, ceil_div(spec.cols(), 2)}}, st};
}

inline bool in_some_cone(const GridSpec& board, const std::vector<Vertex>& cops, Vertex robber,
                         bool flipped) {
  const GridSpec& b = board;
  for (const Vertex& c : cops) {
    Vertex cc = c;
    Vertex rr = robber;
    if (flipped) {
      cc.row = b.rows() - 1 - cc.row;
      rr.row = b.rows() - 1 - rr.row;
    }
    if (classify_offset(offset_from(b, cc, rr)) != ConeMembership::Outside) return true;
  }
  return false;
}

/// Chase direction (down, or up via a row flip). It is re-chosen only while
/// the robber is outside every cone of the current direction, since the
/// approach moves made then do not depend on it. Returns false while the
/// robber shares the cops' rows and no direction applies.
inline bool settle_direction(CopStrategyState& st, const GridSpec& board,
                             const std::vector<Vertex>& cops, Vertex robber) {
  const bool flipped = st.sym.flip_rows;
  if (!st.cones.empty() && in_some_cone(board, cops, robber, flipped)) return true;
  if (in_some_cone(board, cops, robber, !flipped)) {
    st.sym.flip_rows = !flipped;
  } else {
    int above = 0;
    int below = 0;
    for (const Vertex& c : cops) {
      above += robber.row < c.row;
      below += robber.row > c.row;
    }
    const int n = static_cast<int>(cops.size());
    if (below == n) st.sym.flip_rows = false;
    else if (above == n) st.sym.flip_rows = true;
    else if (st.cones.empty()) return false;
  }
  st.cones.assign(cops.size(), st.sym.flip_rows ? Orientation::Up : Orientation::Down);
  return true;
}

inline StrategyMove step(const GameState& state, const CopStrategyState& s) {
  StrategyMove out{{}, s};
  if (auto cap = capture_move(state.spec, state.cops, state.robber)) {
    out.moves = *cap;
    return out;
  }
  const bool settled = settle_direction(out.state, state.spec, state.cops, state.robber);
  const BoardView view(state.spec, out.state.sym);
  const Vertex a = view.to_image(state.cops[0]);
  const Vertex b = view.to_image(state.cops[1]);
  const Vertex r = view.to_image(state.robber);
  PairMoves pm;
  if (!settled) pm = {toward(view.image(), a, r), toward(view.image(), b, r), ChaseRule::Approach};
  else pm = chase_pair(view.image(), a, b, r);
  out.moves = {view.to_real(pm.first), view.to_real(pm.second)};
  return out;
}

/// The two cops, consecutive around the ring, whose cop-free gap contains
/// the robber's column. Cops are assumed to share a row.
inline std::pair<int, int> bounding_pair(const GridSpec& board, const std::vector<Vertex>& cops,
                                         Vertex robber) {
  const int n = board.cols();
  std::vector<int> order(cops.size());
  for (std::size_t i = 0; i < cops.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(cops[a].col, a) < std::pair(cops[b].col, b);
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int left = order[i];
    const int right = order[(i + 1) % order.size()];
    const int span = GridSpec::mod(cops[right].col - cops[left].col, n);
    const int pos = GridSpec::mod(robber.col - cops[left].col, n);
    if (pos > 0 && (pos < span || span == 0)) return {left, right};
  }
  throw StrategyInvariantError("robber shares a column with a cop outside its cone");
}

inline Placement place_k(const GridSpec& spec, int k) {
  CopStrategyState st;
  st.algorithm = Algorithm::SGridK;
  st.k = k;
  const int row = (spec.rows() - 1) / 2;
  std::vector<Vertex> cops;
  int col = 0;
  for (int gap : detail::gap_sizes(spec.cols() - k, k)) {
    cops.push_back({row, col});
    col += gap + 1;
  }
  return {cops, st};
}

/// k cops on a semi-torus: all advance while the robber is inside a cone,
/// the two cops bounding its gap close in while it is outside every cone,
/// and once it reaches a cone edge that pair finishes the chase alone.
inline StrategyMove step_k(const GameState& state, const CopStrategyState& s) {
  StrategyMove out{{}, s};
  const std::size_t k = state.cops.size();
  if (auto cap = capture_move(state.spec, state.cops, state.robber)) {
    out.moves = *cap;
    return out;
  }
  std::vector<Vertex> chasers = state.cops;
  const bool locked = s.gap_left >= 0;
  if (locked) chasers = {state.cops[s.gap_left], state.cops[s.gap_right]};
  const bool settled = settle_direction(out.state, state.spec, chasers, state.robber);
  out.state.cones.assign(k, out.state.sym.flip_rows ? Orientation::Up : Orientation::Down);
  const BoardView view(state.spec, out.state.sym);
  const GridSpec& board = view.image();
  std::vector<Vertex> cops(k);
  for (std::size_t i = 0; i < k; ++i) cops[i] = view.to_image(state.cops[i]);
  const Vertex r = view.to_image(state.robber);
  std::vector<Move> moves(k, Move::Stay);

  if (locked) {
    const PairMoves pm = chase_pair(board, cops[s.gap_left], cops[s.gap_right], r);
    moves[s.gap_left] = pm.first;
    moves[s.gap_right] = pm.second;
  } else {
    bool within = false;
    bool on_edge = false;
    for (const Vertex& c : cops) {
      const ConeMembership cm = classify_offset(offset_from(board, c, r));
      within |= cm == ConeMembership::Within;
      on_edge |= cm == ConeMembership::OnEdge;
    }
    if (settled && within) {
      for (std::size_t i = 0; i < k; ++i) moves[i] = down_or_stay(board, cops[i]);
    } else {
      const auto [left, right] = bounding_pair(board, cops, r);
      if (settled && on_edge) {
        out.state.gap_left = left;
        out.state.gap_right = right;
        const PairMoves pm = chase_pair(board, cops[left], cops[right], r);
        moves[left] = pm.first;
        moves[right] = pm.second;
      } else {
        moves[left] = toward(board, cops[left], r);
        moves[right] = toward(board, cops[right], r);
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) out.moves.push_back(view.to_real(moves[i]));
  return out;
}

}  // namespace copsrobber::sgrid
