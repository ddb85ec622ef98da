#pragma once

#include <vector>

#include "copsrobber/strategies.hpp"

namespace copsrobber::grid {

inline bool in_cone(ConeMembership m) noexcept { return m != ConeMembership::Outside; }

/// Opening direction for a group of cops: the first orientation (down, up,
/// left, right) whose cones hold the robber for as many cops as possible.
inline Orientation choose_orientation(const GridSpec& board, const std::vector<Vertex>& cops,
                                      Vertex robber) {
  Orientation best = Orientation::Down;
  int best_score = -1;
  for (Orientation o : {Orientation::Down, Orientation::Up, Orientation::Left,
                        Orientation::Right}) {
    int score = 0;
    for (const Vertex& c : cops)
      score += in_cone(cone_membership(board, c, o, ConeFrame::whole_board(), robber));
    if (score > best_score) {
      best_score = score;
      best = o;
    }
  }
  return best;
}

/// One turn of a cop pair moving in lockstep under the Cone Rule: both
/// advance while the robber is in both cones, otherwise both shift sideways
/// toward it.
inline std::vector<Move> pair_step(const GridSpec& board, Vertex a, Vertex b, Orientation o,
                                   Vertex robber) {
  const auto frame = ConeFrame::whole_board();
  const ConeOffset oa = cone_offset(board, a, o, frame, robber);
  const ConeOffset ob = cone_offset(board, b, o, frame, robber);
  if (in_cone(classify_offset(oa)) && in_cone(classify_offset(ob))) {
    const Move fwd = forward_move(o);
    return {fwd, fwd};
  }
  // Lateral offsets differ by at most one; the robber lies strictly to one
  // side of at least one cop unless it is behind the pair.
  int side = detail::sign(oa.lateral);
  if (side == 0) side = detail::sign(ob.lateral);
  const bool split = oa.lateral != 0 && ob.lateral != 0 &&
                     detail::sign(oa.lateral) == -detail::sign(ob.lateral);
  if (side == 0 || split)
    throw StrategyInvariantError("robber escaped behind the cop pair");
  const Move mv = lateral_move(o, side);
  return {mv, mv};
}

inline Placement place(const GridSpec& spec) {
  const bool transpose = spec.rows() > spec.cols();
  CopStrategyState st;
  st.algorithm = Algorithm::Grid;
  st.k = 2;
  st.sym.transpose = transpose;
  const BoardView view(spec, st.sym);
  const int m = view.image().rows();
  const int n = view.image().cols();
  const int m1 = (m - 1) / 2;
  const int m2 = m / 2;
  const int n1 = (n - 1) / 2;
  const int n2 = n / 2;
  Vertex c1, c2;
  const bool m_even = m % 2 == 0;
  const bool n_even = n % 2 == 0;
  if (m_even) {
    c1 = {m1, n1};
    c2 = {m2, n1};
  } else if (!n_even) {
    c1 = {m1 - 1, n1};
    c2 = {m1, n1};
  } else {
    c1 = {m1, n1};
    c2 = {m1, n2};
  }
  return {{view.to_real(c1), view.to_real(c2)}, st};
}

inline StrategyMove step(const GameState& state, const CopStrategyState& s) {
  if (state.cops.size() != 2) throw StrategyInvariantError("grid: expects two cops");
  StrategyMove out{{}, s};
  const BoardView view(state.spec, s.sym);
  const Vertex a = view.to_image(state.cops[0]);
  const Vertex b = view.to_image(state.cops[1]);
  const Vertex r = view.to_image(state.robber);
  if (out.state.cones.empty()) {
    const Orientation o = choose_orientation(view.image(), {a, b}, r);
    out.state.cones = {o, o};
  }
  const auto moves = pair_step(view.image(), a, b, out.state.cones[0], r);
  for (Move mv : moves) out.moves.push_back(view.to_real(mv));
  return out;
}

/// GRID-K start: h = k/2 vertical pairs straddling the middle rows, spaced
/// by near-equal cop-free gaps; the two outer column groups share one gap.
inline Placement place_k(const GridSpec& spec, int k) {
  CopStrategyState st;
  st.algorithm = Algorithm::GridK;
  st.k = k;
  st.sym.transpose = spec.rows() > spec.cols();
  const BoardView view(spec, st.sym);
  const int m = view.image().rows();
  const int n = view.image().cols();
  const int h = k / 2;
  auto gaps = detail::gap_sizes(n - h, h);
  const int outer = gaps.back();
  gaps.pop_back();
  int col = outer / 2;
  std::vector<Vertex> cops;
  for (int p = 0; p < h; ++p) {
    cops.push_back(view.to_real({m / 2 - 1, col}));
    cops.push_back(view.to_real({m / 2, col}));
    if (p < h - 1) col += gaps[p] + 1;
  }
  return {cops, st};
}

namespace detail {

// Vertical step toward the robber's row for every cop of the team.
inline std::vector<Move> all_vertical(const GridSpec& board, const std::vector<Vertex>& cops,
                                      Vertex robber) {
  std::vector<Move> moves;
  for (const Vertex& c : cops) {
    Move mv = robber.row > c.row ? Move::Down : robber.row < c.row ? Move::Up : Move::Stay;
    if (!move_is_legal(board, c, mv)) mv = Move::Stay;
    moves.push_back(mv);
  }
  return moves;
}

}  // namespace detail

/// GRID-K: pairs move as units, vertically all together while the robber is
/// inside the cones of a neighboring pair, horizontally toward it otherwise.
inline StrategyMove step_k(const GameState& state, const CopStrategyState& s) {
  StrategyMove out{{}, s};
  const int k = static_cast<int>(state.cops.size());
  const int h = k / 2;
  const BoardView view(state.spec, s.sym);
  const GridSpec& board = view.image();
  std::vector<Vertex> cops(k);
  for (int i = 0; i < k; ++i) cops[i] = view.to_image(state.cops[i]);
  const Vertex r = view.to_image(state.robber);
  std::vector<Move> moves(k, Move::Stay);
  auto emit = [&] {
    for (Move mv : moves) out.moves.push_back(view.to_real(mv));
    return out;
  };
  for (int i = 0; i < k; ++i) {
    if (const auto mv = move_between(board, cops[i], r); mv && *mv != Move::Stay) {
      moves[i] = *mv;
      return emit();
    }
  }
  // Pairs keep their order by column. The robber's region is bounded by at
  // most two pairs; beyond the outermost pair only that pair is involved.
  int left = -1;
  while (left + 1 < h && cops[2 * (left + 1)].col <= r.col) ++left;
  int right = left + 1 < h ? left + 1 : -1;
  if (left >= 0 && cops[2 * left].col == r.col) right = -1;
  std::vector<int> bounding;
  if (left >= 0) bounding.push_back(2 * left);
  if (right >= 0) bounding.push_back(2 * right);
  // A robber in both cones of a bounding pair, opened toward it, is
  // approached vertically by everybody; otherwise those pairs close in.
  bool in_pair_cones = false;
  for (int p : bounding) {
    bool both = r.row != cops[p].row && r.row != cops[p + 1].row;
    for (int c : {p, p + 1}) {
      if (!both) break;
      const Orientation o = r.row > cops[c].row ? Orientation::Down : Orientation::Up;
      both = in_cone(cone_membership(board, cops[c], o, ConeFrame::whole_board(), r));
    }
    in_pair_cones |= both;
  }
  if (in_pair_cones) {
    moves = detail::all_vertical(board, cops, r);
  } else {
    for (int p : bounding) {
      const Move mv = r.col > cops[p].col ? Move::Right : Move::Left;
      moves[p] = moves[p + 1] = mv;
    }
  }
  return emit();
}

}  // namespace copsrobber::grid
