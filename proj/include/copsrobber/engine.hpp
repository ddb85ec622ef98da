#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copsrobber/errors.hpp"
#include "copsrobber/topology.hpp"

namespace copsrobber {

enum class Move : std::uint8_t { Stay, Up, Down, Left, Right };

inline constexpr std::array<Move, 5> kAllMoves = {Move::Stay, Move::Up, Move::Down, Move::Left,
                                                  Move::Right};

inline std::string_view to_string(Move mv) {
  switch (mv) {
    case Move::Stay: return "S";
    case Move::Up: return "U";
    case Move::Down: return "D";
    case Move::Left: return "L";
    case Move::Right: return "R";
  }
  return "?";
}

inline Move parse_move(std::string_view s) {
  for (Move mv : kAllMoves)
    if (to_string(mv) == s) return mv;
  throw InputError("unknown move '" + std::string(s) + "'");
}

inline Vertex displace(Vertex v, Move mv) noexcept {
  switch (mv) {
    case Move::Stay: break;
    case Move::Up: --v.row; break;
    case Move::Down: ++v.row; break;
    case Move::Left: --v.col; break;
    case Move::Right: ++v.col; break;
  }
  return v;
}

/// Applies a displacement on the board; throws MoveError when it leaves a
/// planar border.
inline Vertex apply_move(const GridSpec& spec, Vertex v, Move mv) {
  const Vertex w = spec.wrap(displace(v, mv));
  if (!spec.contains(w)) throw MoveError("move leaves the board");
  return w;
}

inline bool move_is_legal(const GridSpec& spec, Vertex v, Move mv) noexcept {
  return spec.contains(spec.wrap(displace(v, mv)));
}

/// The move that takes `from` to the adjacent (or equal) vertex `to`.
inline std::optional<Move> move_between(const GridSpec& spec, Vertex from, Vertex to) {
  for (Move mv : kAllMoves) {
    if (move_is_legal(spec, from, mv) && apply_move(spec, from, mv) == to) return mv;
  }
  return std::nullopt;
}

enum class Turn : std::uint8_t { CopsToMove, RobberToMove };

struct GameState {
  GridSpec spec;
  std::vector<Vertex> cops;
  Vertex robber;
  int round = 0;
  Turn turn = Turn::CopsToMove;
  bool captured = false;

  GameState(GridSpec s, std::vector<Vertex> c, Vertex r)
      : spec(s), cops(std::move(c)), robber(r) {
    if (cops.empty()) throw ConfigError("at least one cop is required");
    for (const Vertex& v : cops)
      if (!spec.contains(v)) throw ConfigError("cop placed outside the board");
    if (!spec.contains(robber)) throw ConfigError("robber placed outside the board");
    captured = robber_on_cop();
  }

  bool robber_on_cop() const {
    return std::find(cops.begin(), cops.end(), robber) != cops.end();
  }

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Simultaneous cop displacement. Completes a round count; the game ends if
/// a cop lands on the robber.
inline GameState apply_cops_turn(const GameState& state, std::span<const Move> moves) {
  if (state.captured) throw MoveError("game already over");
  if (state.turn != Turn::CopsToMove) throw MoveError("not the cops' turn");
  if (moves.size() != state.cops.size()) throw MoveError("one move per cop required");
  GameState next = state;
  for (std::size_t i = 0; i < moves.size(); ++i)
    next.cops[i] = apply_move(state.spec, state.cops[i], moves[i]);
  ++next.round;
  next.captured = next.robber_on_cop();
  next.turn = Turn::RobberToMove;
  return next;
}

/// Robber displacement. Stepping onto a cop is a capture in the current round.
inline GameState apply_robber_turn(const GameState& state, Move mv) {
  if (state.captured) throw MoveError("game already over");
  if (state.turn != Turn::RobberToMove) throw MoveError("not the robber's turn");
  GameState next = state;
  next.robber = apply_move(state.spec, state.robber, mv);
  next.captured = next.robber_on_cop();
  next.turn = Turn::CopsToMove;
  return next;
}

/// Covering conditions of a siege around `robber`: some cop is adjacent, and
/// the cops' closed neighborhoods cover every neighbor of the robber.
inline bool is_siege(const GridSpec& spec, std::span<const Vertex> cops, Vertex robber) {
  const auto escape = neighbors(spec, robber);
  bool some_adjacent = false;
  for (const Vertex& c : cops)
    if (std::binary_search(escape.begin(), escape.end(), c)) some_adjacent = true;
  if (!some_adjacent) return false;
  for (const Vertex& u : escape) {
    bool covered = false;
    for (const Vertex& c : cops) {
      if (c == u || adjacent(spec, c, u)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

inline bool is_siege(const GameState& state) {
  return is_siege(state.spec, state.cops, state.robber);
}

/// Smallest number of cops forming a siege of v, by exhaustive search over
/// the vertices within distance two.
inline int minimal_siege_cardinality(const GridSpec& spec, Vertex v) {
  std::vector<Vertex> candidates;
  for (int idx = 0; idx < spec.vertex_count(); ++idx) {
    const Vertex u = spec.vertex(idx);
    const int d = distance(spec, u, v);
    if (d == 1 || d == 2) candidates.push_back(u);
  }
  const int count = static_cast<int>(candidates.size());
  std::vector<Vertex> chosen;
  for (int size = 1; size <= 4; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    if (size > count) break;
    while (true) {
      chosen.clear();
      for (int i : pick) chosen.push_back(candidates[i]);
      if (is_siege(spec, chosen, v)) return size;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == count - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  throw std::logic_error("no siege of size <= 4");
}

/// Direction a shadow cone opens toward, seen from its apex.
enum class Orientation : std::uint8_t { Down, Up, Left, Right };

inline std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::Down: return "down";
    case Orientation::Up: return "up";
    case Orientation::Left: return "left";
    case Orientation::Right: return "right";
  }
  return "?";
}

inline Move forward_move(Orientation o) noexcept {
  switch (o) {
    case Orientation::Down: return Move::Down;
    case Orientation::Up: return Move::Up;
    case Orientation::Left: return Move::Left;
    case Orientation::Right: return Move::Right;
  }
  return Move::Stay;
}

inline Move backward_move(Orientation o) noexcept {
  switch (o) {
    case Orientation::Down: return Move::Up;
    case Orientation::Up: return Move::Down;
    case Orientation::Left: return Move::Right;
    case Orientation::Right: return Move::Left;
  }
  return Move::Stay;
}

// Sideways step that increases (sign > 0) or decreases the lateral axis.
inline Move lateral_move(Orientation o, int sign) noexcept {
  const bool vertical_axis = o == Orientation::Down || o == Orientation::Up;
  if (vertical_axis) return sign > 0 ? Move::Right : Move::Left;
  return sign > 0 ? Move::Down : Move::Up;
}

/// Unwrapping window for cone geometry. Along a wrapped dimension a
/// coordinate is replaced by its representative in [lo, lo + width); a
/// coordinate with no representative there cannot be classified. Planar
/// dimensions ignore the window.
struct ConeFrame {
  int row_lo = 0;
  int row_width = 0;  // 0 means the full dimension
  int col_lo = 0;
  int col_width = 0;

  static ConeFrame whole_board() { return {}; }

  static ConeFrame columns(int lo, int width) { return {0, 0, lo, width}; }

  friend bool operator==(const ConeFrame&, const ConeFrame&) = default;
};

namespace detail {

inline int unwrap_axis(int x, int size, bool wrapped, int lo, int width) {
  if (!wrapped) return x;
  if (width <= 0 || width > size) width = size;
  const int rep = lo + GridSpec::mod(x - lo, size);
  if (rep >= lo + width) throw ConeFrameError("coordinate outside the cone frame window");
  return rep;
}

}  // namespace detail

/// Position of q relative to the apex in the cone's own axes: depth along
/// the opening direction, lateral offset across it.
struct ConeOffset {
  int depth;
  int lateral;
};

inline ConeOffset cone_offset(const GridSpec& spec, Vertex apex, Orientation o,
                              const ConeFrame& frame, Vertex q) {
  const int ar = detail::unwrap_axis(apex.row, spec.rows(), spec.wraps_rows(), frame.row_lo,
                                     frame.row_width);
  const int ac = detail::unwrap_axis(apex.col, spec.cols(), spec.wraps_cols(), frame.col_lo,
                                     frame.col_width);
  const int qr = detail::unwrap_axis(q.row, spec.rows(), spec.wraps_rows(), frame.row_lo,
                                     frame.row_width);
  const int qc = detail::unwrap_axis(q.col, spec.cols(), spec.wraps_cols(), frame.col_lo,
                                     frame.col_width);
  switch (o) {
    case Orientation::Down: return {qr - ar, qc - ac};
    case Orientation::Up: return {ar - qr, qc - ac};
    case Orientation::Right: return {qc - ac, qr - ar};
    case Orientation::Left: return {ac - qc, qr - ar};
  }
  return {0, 0};
}

enum class ConeMembership { Outside, OnEdge, Within };

inline ConeMembership classify_offset(ConeOffset off) noexcept {
  const int lat = off.lateral < 0 ? -off.lateral : off.lateral;
  if (off.depth > lat) return ConeMembership::Within;
  if (off.depth == lat && off.depth > 0) return ConeMembership::OnEdge;
  return ConeMembership::Outside;
}

inline ConeMembership cone_membership(const GridSpec& spec, Vertex apex, Orientation o,
                                      const ConeFrame& frame, Vertex q) {
  return classify_offset(cone_offset(spec, apex, o, frame, q));
}

/// Two-cop funnel: with the robber at (i,j), one cop beside it at (i,j-1)
/// and the other diagonally behind at (i-1,j+1), or the mirror image. The
/// shape is rotated with the chase direction; the default is a downward
/// chase, leaving the robber a single step down.
inline bool is_pre_siege(const GridSpec& spec, Vertex robber, Vertex c1, Vertex c2,
                         Orientation o = Orientation::Down) {
  auto at = [&](int depth, int lateral) {
    Vertex v = robber;
    switch (o) {
      case Orientation::Down: v = {robber.row + depth, robber.col + lateral}; break;
      case Orientation::Up: v = {robber.row - depth, robber.col + lateral}; break;
      case Orientation::Right: v = {robber.row + lateral, robber.col + depth}; break;
      case Orientation::Left: v = {robber.row + lateral, robber.col - depth}; break;
    }
    return spec.wrap(v);
  };
  for (int side : {-1, 1}) {
    const Vertex beside = at(0, side);
    const Vertex behind = at(-1, -side);
    if (!spec.contains(beside) || !spec.contains(behind)) continue;
    if (c1 == beside && c2 == behind) return true;
  }
  return false;
}

inline bool is_pre_siege(const GameState& state, std::size_t c1_index, std::size_t c2_index,
                         Orientation o = Orientation::Down) {
  if (c1_index >= state.cops.size() || c2_index >= state.cops.size())
    throw InputError("cop index out of range");
  return is_pre_siege(state.spec, state.robber, state.cops[c1_index], state.cops[c2_index], o);
}

}  // namespace copsrobber
