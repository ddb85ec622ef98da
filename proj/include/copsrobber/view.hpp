#pragma once

#include "copsrobber/engine.hpp"
#include "copsrobber/strategy_state.hpp"
#include "copsrobber/topology.hpp"

namespace copsrobber {

/// Coordinates of the board as a strategy sees it after applying a Symmetry.
class BoardView {
 public:
  BoardView(const GridSpec& real, const Symmetry& sym)
      : real_(real),
        image_(real.kind(), sym.transpose ? real.cols() : real.rows(),
               sym.transpose ? real.rows() : real.cols()),
        sym_(sym) {}

  const GridSpec& image() const noexcept { return image_; }
  const GridSpec& real() const noexcept { return real_; }

  Vertex to_image(Vertex v) const noexcept {
    if (sym_.transpose) v = {v.col, v.row};
    if (sym_.flip_rows) v.row = image_.rows() - 1 - v.row;
    if (sym_.flip_cols) v.col = image_.cols() - 1 - v.col;
    if (image_.wraps_cols()) v.col = GridSpec::mod(v.col + sym_.col_shift, image_.cols());
    return v;
  }

  Vertex to_real(Vertex v) const noexcept {
    if (image_.wraps_cols()) v.col = GridSpec::mod(v.col - sym_.col_shift, image_.cols());
    if (sym_.flip_cols) v.col = image_.cols() - 1 - v.col;
    if (sym_.flip_rows) v.row = image_.rows() - 1 - v.row;
    if (sym_.transpose) v = {v.col, v.row};
    return v;
  }

  Move to_real(Move mv) const noexcept {
    if (mv == Move::Stay) return mv;
    if (sym_.flip_cols) {
      if (mv == Move::Left) mv = Move::Right;
      else if (mv == Move::Right) mv = Move::Left;
    }
    if (sym_.flip_rows) {
      if (mv == Move::Up) mv = Move::Down;
      else if (mv == Move::Down) mv = Move::Up;
    }
    if (sym_.transpose) {
      switch (mv) {
        case Move::Up: return Move::Left;
        case Move::Down: return Move::Right;
        case Move::Left: return Move::Up;
        case Move::Right: return Move::Down;
        default: break;
      }
    }
    return mv;
  }

 private:
  GridSpec real_;
  GridSpec image_;
  Symmetry sym_;
};

}  // namespace copsrobber
