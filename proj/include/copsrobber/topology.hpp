#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "copsrobber/errors.hpp"

namespace copsrobber {

enum class Topology { PlanarGrid, SemiTorus, Torus };

inline std::string_view to_string(Topology kind) {
  switch (kind) {
    case Topology::PlanarGrid: return "grid";
    case Topology::SemiTorus: return "semitorus";
    case Topology::Torus: return "torus";
  }
  return "?";
}

inline Topology parse_topology(std::string_view name) {
  if (name == "grid") return Topology::PlanarGrid;
  if (name == "semitorus") return Topology::SemiTorus;
  if (name == "torus") return Topology::Torus;
  throw ConfigError("unknown board kind '" + std::string(name) +
                    "' (expected grid, semitorus or torus)");
}

struct Vertex {
  int row = 0;
  int col = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << '(' << v.row << ',' << v.col << ')';
}

/// An m x n board: a planar grid, a semi-torus whose rows close into rings
/// (column 0 adjacent to column n-1), or a torus closed in both dimensions.
///
/// Construction rejects boards whose wraparound would create parallel edges
/// or self-loops, so every GridSpec describes a simple graph.
class GridSpec {
 public:
  GridSpec(Topology kind, int m, int n) : kind_(kind), m_(m), n_(n) {
    if (m < 1 || n < 1) throw ConfigError("board dimensions must be positive");
    switch (kind) {
      case Topology::PlanarGrid:
        if (m < 2 || n < 2) throw ConfigError("grid requires m >= 2 and n >= 2");
        break;
      case Topology::SemiTorus:
        if (n < 3) throw ConfigError("semitorus requires n >= 3");
        break;
      case Topology::Torus:
        if (m < 3 || n < 3) throw ConfigError("torus requires m >= 3 and n >= 3");
        break;
    }
  }

  Topology kind() const noexcept { return kind_; }
  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }
  int vertex_count() const noexcept { return m_ * n_; }

  bool wraps_rows() const noexcept { return kind_ == Topology::Torus; }
  bool wraps_cols() const noexcept { return kind_ != Topology::PlanarGrid; }

  bool contains(Vertex v) const noexcept {
    return v.row >= 0 && v.row < m_ && v.col >= 0 && v.col < n_;
  }

  int index(Vertex v) const noexcept { return v.row * n_ + v.col; }
  Vertex vertex(int idx) const noexcept { return {idx / n_, idx % n_}; }

  // Reduces wrapped coordinates into range. Coordinates along an unwrapped
  // dimension are returned unchanged and may stay off-board.
  Vertex wrap(Vertex v) const noexcept {
    if (wraps_rows()) v.row = mod(v.row, m_);
    if (wraps_cols()) v.col = mod(v.col, n_);
    return v;
  }

  // Same board with rows and columns exchanged. Semi-tori keep their
  // wrapped dimension on columns, so they cannot be transposed.
  GridSpec transposed() const {
    if (kind_ == Topology::SemiTorus) throw ConfigError("semitorus cannot be transposed");
    return GridSpec(kind_, n_, m_);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

  static int mod(int a, int b) noexcept {
    const int r = a % b;
    return r < 0 ? r + b : r;
  }

 private:
  Topology kind_;
  int m_;
  int n_;
};

inline std::ostream& operator<<(std::ostream& os, const GridSpec& spec) {
  const char* letter = spec.kind() == Topology::PlanarGrid ? "G"
                       : spec.kind() == Topology::SemiTorus ? "S"
                                                            : "T";
  return os << letter << '_' << spec.rows() << 'x' << spec.cols();
}

/// Open neighborhood N(v), sorted.
inline std::vector<Vertex> neighbors(const GridSpec& spec, Vertex v) {
  std::vector<Vertex> out;
  out.reserve(4);
  constexpr int dr[] = {-1, 1, 0, 0};
  constexpr int dc[] = {0, 0, -1, 1};
  for (int d = 0; d < 4; ++d) {
    const Vertex w = spec.wrap({v.row + dr[d], v.col + dc[d]});
    if (spec.contains(w)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Closed neighborhood N[v], sorted.
inline std::vector<Vertex> closed_neighbors(const GridSpec& spec, Vertex v) {
  auto out = neighbors(spec, v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

inline bool adjacent(const GridSpec& spec, Vertex a, Vertex b) {
  const auto nb = neighbors(spec, a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

inline int axis_distance(int a, int b, int size, bool wrapped) noexcept {
  const int d = std::abs(a - b);
  return wrapped ? std::min(d, size - d) : d;
}

inline int distance(const GridSpec& spec, Vertex u, Vertex w) noexcept {
  return axis_distance(u.row, w.row, spec.rows(), spec.wraps_rows()) +
         axis_distance(u.col, w.col, spec.cols(), spec.wraps_cols());
}

enum class VertexClass { Corner, Border, Internal };

inline VertexClass vertex_class(const GridSpec& spec, Vertex v) {
  const bool row_edge = !spec.wraps_rows() && (v.row == 0 || v.row == spec.rows() - 1);
  const bool col_edge = !spec.wraps_cols() && (v.col == 0 || v.col == spec.cols() - 1);
  if (row_edge && col_edge) return VertexClass::Corner;
  if (row_edge || col_edge) return VertexClass::Border;
  return VertexClass::Internal;
}

/// e-loop test: a chordless cycle (e >= 4) such that every vertex off the
/// cycle touches at most one cycle vertex. Throws InputError when the
/// sequence is not a simple closed walk on the board.
inline bool is_e_loop(const GridSpec& spec, const std::vector<Vertex>& cycle) {
  const std::size_t e = cycle.size();
  if (e < 4) throw InputError("e-loop needs at least 4 vertices");
  std::set<Vertex> members;
  for (const Vertex& v : cycle) {
    if (!spec.contains(v)) throw InputError("cycle vertex outside the board");
    if (!members.insert(v).second) throw InputError("cycle repeats a vertex");
  }
  for (std::size_t i = 0; i < e; ++i) {
    if (!adjacent(spec, cycle[i], cycle[(i + 1) % e]))
      throw InputError("consecutive cycle vertices are not adjacent");
  }
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = i + 2; j < e; ++j) {
      if (i == 0 && j == e - 1) continue;
      if (adjacent(spec, cycle[i], cycle[j])) return false;
    }
  }
  for (int idx = 0; idx < spec.vertex_count(); ++idx) {
    const Vertex u = spec.vertex(idx);
    if (members.count(u)) continue;
    int touching = 0;
    for (const Vertex& w : neighbors(spec, u)) touching += static_cast<int>(members.count(w));
    if (touching > 1) return false;
  }
  return true;
}

}  // namespace copsrobber
