#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

#include "copsrobber/topology.hpp"

using namespace copsrobber;

namespace {

std::vector<GridSpec> small_boards(int max_side) {
  std::vector<GridSpec> out;
  for (int m = 2; m <= max_side; ++m)
    for (int n = 2; n <= max_side; ++n) {
      out.emplace_back(Topology::PlanarGrid, m, n);
      if (n >= 3) out.emplace_back(Topology::SemiTorus, m, n);
      if (m >= 3 && n >= 3) out.emplace_back(Topology::Torus, m, n);
    }
  return out;
}

// Distances by breadth-first search over an adjacency built from raw
// coordinate arithmetic, independent of neighbors().
std::vector<int> bfs_from(const GridSpec& g, Vertex s) {
  const int m = g.rows();
  const int n = g.cols();
  std::vector<int> d(m * n, -1);
  std::queue<Vertex> q;
  d[s.row * n + s.col] = 0;
  q.push(s);
  const int dr[4] = {-1, 1, 0, 0};
  const int dc[4] = {0, 0, -1, 1};
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (int i = 0; i < 4; ++i) {
      int r = v.row + dr[i];
      int c = v.col + dc[i];
      if (g.kind() == Topology::Torus) r = (r + m) % m;
      if (g.kind() != Topology::PlanarGrid) c = (c + n) % n;
      if (r < 0 || r >= m || c < 0 || c >= n) continue;
      if (d[r * n + c] >= 0) continue;
      d[r * n + c] = d[v.row * n + v.col] + 1;
      q.push({r, c});
    }
  }
  return d;
}

std::set<Vertex> as_set(const std::vector<Vertex>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Topology, NeighborExamples) {
  EXPECT_EQ(as_set(neighbors(GridSpec(Topology::PlanarGrid, 3, 3), {0, 0})),
            (std::set<Vertex>{{0, 1}, {1, 0}}));
  EXPECT_EQ(as_set(neighbors(GridSpec(Topology::SemiTorus, 3, 4), {0, 0})),
            (std::set<Vertex>{{0, 1}, {0, 3}, {1, 0}}));
  EXPECT_EQ(as_set(neighbors(GridSpec(Topology::Torus, 3, 4), {0, 0})),
            (std::set<Vertex>{{0, 1}, {0, 3}, {1, 0}, {2, 0}}));
}

TEST(Topology, RejectsDegenerateBoards) {
  EXPECT_THROW(GridSpec(Topology::Torus, 2, 5), ConfigError);
  EXPECT_THROW(GridSpec(Topology::Torus, 5, 2), ConfigError);
  EXPECT_THROW(GridSpec(Topology::SemiTorus, 4, 2), ConfigError);
  EXPECT_THROW(GridSpec(Topology::PlanarGrid, 1, 5), ConfigError);
  EXPECT_THROW(GridSpec(Topology::PlanarGrid, 0, 0), ConfigError);
}

TEST(Topology, VertexCountAndIndexRoundTrip) {
  for (const GridSpec& g : small_boards(6)) {
    ASSERT_EQ(g.vertex_count(), g.rows() * g.cols());
    for (int i = 0; i < g.vertex_count(); ++i) EXPECT_EQ(g.index(g.vertex(i)), i);
  }
}

TEST(Topology, SimpleGraphAndDegreeLaw) {
  for (const GridSpec& g : small_boards(8)) {
    for (int i = 0; i < g.vertex_count(); ++i) {
      const Vertex v = g.vertex(i);
      const auto nb = neighbors(g, v);
      ASSERT_EQ(as_set(nb).size(), nb.size()) << g << " " << v;
      ASSERT_EQ(std::count(nb.begin(), nb.end(), v), 0);
      const int deg = static_cast<int>(nb.size());
      switch (g.kind()) {
        case Topology::PlanarGrid: {
          const int expect = vertex_class(g, v) == VertexClass::Corner   ? 2
                             : vertex_class(g, v) == VertexClass::Border ? 3
                                                                         : 4;
          EXPECT_EQ(deg, expect) << g << " " << v;
          break;
        }
        case Topology::SemiTorus:
          EXPECT_TRUE(deg == 3 || deg == 4) << g << " " << v;
          break;
        case Topology::Torus: EXPECT_EQ(deg, 4) << g << " " << v; break;
      }
      for (const Vertex& w : nb) EXPECT_TRUE(adjacent(g, w, v));
    }
  }
}

TEST(Topology, DistanceExamples) {
  EXPECT_EQ(distance(GridSpec(Topology::Torus, 7, 15), {0, 0}, {3, 7}), 10);
  EXPECT_EQ(distance(GridSpec(Topology::SemiTorus, 6, 9), {0, 0}, {5, 4}), 9);
  EXPECT_EQ(distance(GridSpec(Topology::PlanarGrid, 4, 5), {0, 0}, {3, 4}), 7);
}

TEST(Topology, DistanceMatchesBreadthFirstSearch) {
  for (const GridSpec& g : small_boards(8)) {
    for (int i = 0; i < g.vertex_count(); ++i) {
      const auto d = bfs_from(g, g.vertex(i));
      for (int j = 0; j < g.vertex_count(); ++j)
        ASSERT_EQ(distance(g, g.vertex(i), g.vertex(j)), d[j]) << g;
    }
  }
}

TEST(Topology, DistanceIsAMetric) {
  for (const GridSpec& g : small_boards(6)) {
    const int V = g.vertex_count();
    for (int a = 0; a < V; ++a)
      for (int b = 0; b < V; ++b) {
        const Vertex u = g.vertex(a);
        const Vertex w = g.vertex(b);
        ASSERT_EQ(distance(g, u, w), distance(g, w, u));
        ASSERT_EQ(distance(g, u, w) == 0, a == b);
        for (int c = 0; c < V; ++c)
          ASSERT_LE(distance(g, u, w), distance(g, u, g.vertex(c)) + distance(g, g.vertex(c), w));
      }
  }
}

TEST(Topology, VertexClassExamples) {
  EXPECT_EQ(vertex_class(GridSpec(Topology::PlanarGrid, 3, 3), {0, 0}), VertexClass::Corner);
  EXPECT_EQ(vertex_class(GridSpec(Topology::PlanarGrid, 3, 3), {0, 1}), VertexClass::Border);
  EXPECT_EQ(vertex_class(GridSpec(Topology::PlanarGrid, 3, 3), {1, 1}), VertexClass::Internal);
  EXPECT_EQ(vertex_class(GridSpec(Topology::SemiTorus, 6, 9), {5, 3}), VertexClass::Border);
  EXPECT_EQ(vertex_class(GridSpec(Topology::SemiTorus, 6, 9), {2, 0}), VertexClass::Internal);
  EXPECT_EQ(vertex_class(GridSpec(Topology::Torus, 7, 15), {0, 0}), VertexClass::Internal);
}

TEST(Topology, WrapCanonicalizes) {
  const GridSpec t(Topology::Torus, 3, 4);
  EXPECT_EQ(t.wrap({-1, 4}), (Vertex{2, 0}));
  const GridSpec s(Topology::SemiTorus, 3, 4);
  EXPECT_EQ(s.wrap({1, -1}), (Vertex{1, 3}));
}

TEST(Topology, ELoopExamples) {
  const GridSpec g(Topology::PlanarGrid, 4, 5);
  EXPECT_TRUE(is_e_loop(g, {{1, 1}, {1, 2}, {2, 2}, {2, 1}}));
  EXPECT_FALSE(is_e_loop(g, {{1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 2}, {2, 1}}));
  // On a wrapped dimension of size 3 the square's two rows are both adjacent
  // to the third row, so the off-cycle condition fails.
  const GridSpec t(Topology::Torus, 3, 4);
  EXPECT_FALSE(is_e_loop(t, {{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
  EXPECT_TRUE(is_e_loop(GridSpec(Topology::Torus, 4, 4), {{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
}

TEST(Topology, ELoopRejectsMalformedCycles) {
  const GridSpec g(Topology::PlanarGrid, 4, 5);
  EXPECT_THROW(is_e_loop(g, {{1, 1}, {1, 2}, {2, 2}}), InputError);
  EXPECT_THROW(is_e_loop(g, {{1, 1}, {1, 3}, {2, 3}, {2, 1}}), InputError);
  EXPECT_THROW(is_e_loop(g, {{1, 1}, {1, 2}, {1, 1}, {1, 2}}), InputError);
}

TEST(Topology, EveryVertexLiesOnAFourLoop) {
  for (const GridSpec& g : small_boards(7)) {
    if ((g.wraps_rows() && g.rows() < 4) || (g.wraps_cols() && g.cols() < 4)) continue;
    if (g.rows() < 2 || g.cols() < 2) continue;
    for (int i = 0; i < g.vertex_count(); ++i) {
      const Vertex v = g.vertex(i);
      bool found = false;
      for (int dr : {-1, 0})
        for (int dc : {-1, 0}) {
          const Vertex a = g.wrap({v.row + dr, v.col + dc});
          const Vertex b = g.wrap({a.row, a.col + 1});
          const Vertex c = g.wrap({a.row + 1, a.col + 1});
          const Vertex d = g.wrap({a.row + 1, a.col});
          if (!g.wraps_cols() && (v.col + dc < 0 || v.col + dc + 1 >= g.cols())) continue;
          if (!g.wraps_rows() && (v.row + dr < 0 || v.row + dr + 1 >= g.rows())) continue;
          found = found || is_e_loop(g, {a, b, c, d});
        }
      EXPECT_TRUE(found) << g << " " << v;
    }
  }
}
