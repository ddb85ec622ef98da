#pragma once

#include <algorithm>
#include <vector>

#include "copsrobber/sgrid_strategy.hpp"
#include "copsrobber/strategies.hpp"

namespace copsrobber::tgrid {

/// Row 0 in the order c1, ck, c2, c3, ..., c(k-1), larger gaps first. For
/// k = 3 this is c1, c3, c2 at columns 0, ceil(n/3), ceil(2n/3).
inline Placement place(const GridSpec& spec, int k) {
  CopStrategyState st;
  st.algorithm = k == 3 ? Algorithm::TGrid : Algorithm::TGridK;
  st.k = k;
  st.phase = Phase::Guard;
  st.sym.transpose = spec.rows() > spec.cols();
  const BoardView view(spec, st.sym);
  const int n = view.image().cols();
  std::vector<int> seat(k);
  seat[0] = 0;
  seat[1] = k - 1;
  for (int i = 2; i < k; ++i) seat[i] = i - 1;
  std::vector<Vertex> cops(k);
  int col = 0;
  const auto gaps = detail::gap_sizes(n - k, k);
  for (int i = 0; i < k; ++i) {
    cops[seat[i]] = view.to_real({0, col});
    col += gaps[i] + 1;
  }
  return {cops, st};
}

namespace detail {

inline Move horizontal_toward(const GridSpec& board, int from, int to) {
  const int n = board.cols();
  const int right = GridSpec::mod(to - from, n);
  if (right == 0) return Move::Stay;
  return right <= n - right ? Move::Right : Move::Left;
}

// Ring order of the cops (all in one row) starting from the anchor: the cop
// just before the left end of the robber's gap. The gap of a robber sharing
// a cop's column is the one to the right of that cop.
inline std::vector<int> ring_order(const GridSpec& board, const std::vector<Vertex>& cops,
                                   Vertex robber) {
  const int k = static_cast<int>(cops.size());
  std::vector<int> by_col(k);
  for (int i = 0; i < k; ++i) by_col[i] = i;
  std::sort(by_col.begin(), by_col.end(),
            [&](int a, int b) { return std::pair(cops[a].col, a) < std::pair(cops[b].col, b); });
  int left = 0;
  for (int i = 0; i < k; ++i) {
    const int a = by_col[i];
    const int b = by_col[(i + 1) % k];
    const int span = GridSpec::mod(cops[b].col - cops[a].col, board.cols());
    if (GridSpec::mod(robber.col - cops[a].col, board.cols()) < span) left = i;
  }
  std::vector<int> order;
  for (int i = 0; i < k; ++i) order.push_back(by_col[GridSpec::mod(left - 1 + i, k)]);
  return order;
}

// The chasing team in ring order, the guard left out.
inline std::vector<int> team_of(const CopStrategyState& st) {
  std::vector<int> team;
  for (int c : st.order)
    if (c != st.guard) team.push_back(c);
  return team;
}

// Chase columns: the team spread evenly from the anchor, larger gaps first.
inline std::vector<int> team_targets(const GridSpec& board, const std::vector<Vertex>& cops,
                                     const std::vector<int>& team) {
  const int n = board.cols();
  const auto gaps = copsrobber::detail::gap_sizes(n - static_cast<int>(team.size()),
                                                  static_cast<int>(team.size()));
  std::vector<int> targets;
  int col = cops[team[0]].col;
  for (std::size_t i = 0; i < team.size(); ++i) {
    targets.push_back(GridSpec::mod(col, n));
    col += gaps[i] + 1;
  }
  return targets;
}

}  // namespace detail

/// TGRID and TGRID-K. GUARD: the two cops bounding the robber's gap close in
/// until one of them reaches its column and becomes the guard, while the
/// rest of the team spreads out evenly from the anchor. CHASE: the team
/// pushes the robber down as in SGRID-K toward the guard, which tracks the
/// robber's column and steps up whenever a pre-siege stands.
inline StrategyMove step(const GameState& state, const CopStrategyState& s) {
  StrategyMove out{{}, s};
  CopStrategyState& st = out.state;
  const int k = static_cast<int>(state.cops.size());
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
  if (auto cap = sgrid::capture_move(board, cops, r)) {
    moves = *cap;
    st.phase = Phase::Done;
    return emit();
  }
  if (st.order.empty()) st.order = detail::ring_order(board, cops, r);
  const int left = st.order[1];
  const int right = st.order[2];

  if (st.phase == Phase::Guard) {
    if (st.guard < 0) {
      if (cops[right].col == r.col) st.guard = right;
      else if (cops[left].col == r.col) st.guard = left;
    }
    if (st.guard >= 0) {
      const auto team = detail::team_of(st);
      const auto targets = detail::team_targets(board, cops, team);
      bool placed = true;
      for (std::size_t i = 0; i < team.size(); ++i) placed &= cops[team[i]].col == targets[i];
      if (placed) {
        st.phase = Phase::Chase;
      } else {
        moves[st.guard] = detail::horizontal_toward(board, cops[st.guard].col, r.col);
        for (std::size_t i = 0; i < team.size(); ++i)
          moves[team[i]] = detail::horizontal_toward(board, cops[team[i]].col, targets[i]);
        return emit();
      }
    } else {
      // Both ends of the gap close in; the cops beyond the right end head for
      // their chase columns, computed as if the left end became the guard.
      CopStrategyState provisional = st;
      provisional.guard = left;
      const auto team = detail::team_of(provisional);
      const auto targets = detail::team_targets(board, cops, team);
      for (std::size_t i = 2; i < team.size(); ++i)
        moves[team[i]] = detail::horizontal_toward(board, cops[team[i]].col, targets[i]);
      moves[left] = Move::Right;
      moves[right] = Move::Left;
      const bool left_there = board.wrap(displace(cops[left], Move::Right)).col == r.col;
      const bool right_there = board.wrap(displace(cops[right], Move::Left)).col == r.col;
      if (left_there && right_there) {
        st.guard = std::min(left, right);
        st.tie_claimed = true;
      } else if (right_there) {
        st.guard = right;
      } else if (left_there) {
        st.guard = left;
      }
      return emit();
    }
  }

  // CHASE with the team, cones below the cops.
  const auto team = detail::team_of(st);
  std::vector<Vertex> team_cops;
  for (int c : team) team_cops.push_back(cops[c]);
  if (st.gap_left >= 0) {
    const auto pm = sgrid::chase_pair(board, cops[st.gap_left], cops[st.gap_right], r);
    moves[st.gap_left] = pm.first;
    moves[st.gap_right] = pm.second;
  } else {
    bool within = false;
    bool on_edge = false;
    for (const Vertex& c : team_cops) {
      const ConeMembership cm = classify_offset(sgrid::offset_from(board, c, r));
      within |= cm == ConeMembership::Within;
      on_edge |= cm == ConeMembership::OnEdge;
    }
    if (within) {
      for (int c : team) moves[c] = Move::Down;
    } else {
      const auto [a, b] = sgrid::bounding_pair(board, team_cops, r);
      const int ca = team[a];
      const int cb = team[b];
      if (on_edge) {
        st.gap_left = ca;
        st.gap_right = cb;
        const auto pm = sgrid::chase_pair(board, cops[ca], cops[cb], r);
        moves[ca] = pm.first;
        moves[cb] = pm.second;
      } else {
        moves[ca] = sgrid::toward(board, cops[ca], r);
        moves[cb] = sgrid::toward(board, cops[cb], r);
      }
    }
  }
  // The guard keeps the robber's column and closes in from below once the
  // chasers stand in a pre-siege.
  const Vertex g = cops[st.guard];
  if (g.col != r.col) {
    moves[st.guard] = detail::horizontal_toward(board, g.col, r.col);
  } else {
    std::vector<Vertex> after;
    for (int c : team) after.push_back(board.wrap(displace(cops[c], moves[c])));
    for (std::size_t i = 0; i < after.size(); ++i)
      for (std::size_t j = 0; j < after.size(); ++j)
        if (i != j && is_pre_siege(board, r, after[i], after[j])) moves[st.guard] = Move::Up;
  }
  return emit();
}

}  // namespace copsrobber::tgrid
