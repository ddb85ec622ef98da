#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <vector>

#include "copsrobber/engine.hpp"

using namespace copsrobber;

namespace {

// Adjacency by raw coordinate arithmetic, independent of the library.
bool raw_adjacent(const GridSpec& g, Vertex a, Vertex b) {
  int dr = std::abs(a.row - b.row);
  int dc = std::abs(a.col - b.col);
  if (g.kind() == Topology::Torus) dr = std::min(dr, g.rows() - dr);
  if (g.kind() != Topology::PlanarGrid) dc = std::min(dc, g.cols() - dc);
  return dr + dc == 1;
}

bool raw_siege(const GridSpec& g, const std::vector<Vertex>& cops, Vertex v) {
  bool touching = false;
  for (const Vertex& c : cops) touching = touching || raw_adjacent(g, c, v);
  if (!touching) return false;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Vertex u = g.vertex(i);
    if (!raw_adjacent(g, u, v)) continue;
    bool covered = false;
    for (const Vertex& c : cops) covered = covered || c == u || raw_adjacent(g, c, u);
    if (!covered) return false;
  }
  return true;
}

// Smallest siege over every subset of the board off the robber's vertex.
int raw_min_siege(const GridSpec& g, Vertex v) {
  const int V = g.vertex_count();
  for (int size = 1; size <= 4; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<Vertex> cops;
      for (int p : pick) cops.push_back(g.vertex(p));
      if (std::find(cops.begin(), cops.end(), v) == cops.end() && raw_siege(g, cops, v))
        return size;
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == V - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return 5;
}

}  // namespace

TEST(Engine, CopLandingCaptures) {
  const GridSpec g(Topology::PlanarGrid, 3, 3);
  const GameState s(g, {{1, 1}}, {1, 2});
  const std::vector<Move> mv{Move::Right};
  const GameState t = apply_cops_turn(s, mv);
  EXPECT_TRUE(t.captured);
  EXPECT_EQ(t.round, 1);
}

TEST(Engine, StayingKeepsPositionsAndCountsRound) {
  const GridSpec g(Topology::PlanarGrid, 4, 4);
  const GameState s(g, {{0, 0}, {3, 3}}, {1, 2});
  const std::vector<Move> mv{Move::Stay, Move::Stay};
  const GameState t = apply_cops_turn(s, mv);
  EXPECT_EQ(t.cops, s.cops);
  EXPECT_EQ(t.round, 1);
  EXPECT_EQ(t.turn, Turn::RobberToMove);
  EXPECT_FALSE(t.captured);
}

TEST(Engine, WraparoundMoves) {
  const GridSpec t(Topology::Torus, 3, 4);
  const GameState s(t, {{0, 1}}, {1, 3});
  const std::vector<Move> up{Move::Up};
  EXPECT_EQ(apply_cops_turn(s, up).cops[0], (Vertex{2, 1}));
  const GridSpec sg(Topology::SemiTorus, 3, 5);
  GameState r(sg, {{0, 0}}, {2, 4});
  r.turn = Turn::RobberToMove;
  EXPECT_EQ(apply_robber_turn(r, Move::Right).robber, (Vertex{2, 0}));
  EXPECT_EQ(apply_robber_turn(r, Move::Stay).robber, (Vertex{2, 4}));
}

TEST(Engine, RobberSteppingOntoCopIsCaptured) {
  const GridSpec g(Topology::PlanarGrid, 3, 3);
  GameState s(g, {{1, 1}}, {1, 2});
  s.turn = Turn::RobberToMove;
  s.round = 4;
  const GameState t = apply_robber_turn(s, Move::Left);
  EXPECT_TRUE(t.captured);
  EXPECT_EQ(t.round, 4);
}

TEST(Engine, IllegalMovesAreRejected) {
  const GridSpec g(Topology::PlanarGrid, 3, 3);
  const GameState s(g, {{0, 0}}, {2, 2});
  const std::vector<Move> up{Move::Up};
  EXPECT_THROW(apply_cops_turn(s, up), MoveError);
  const std::vector<Move> two{Move::Stay, Move::Stay};
  EXPECT_THROW(apply_cops_turn(s, two), MoveError);
  EXPECT_THROW(apply_robber_turn(s, Move::Stay), MoveError);
  GameState r = s;
  r.turn = Turn::RobberToMove;
  EXPECT_THROW(apply_robber_turn(r, Move::Down), MoveError);
  EXPECT_THROW(GameState(g, {}, {0, 0}), ConfigError);
  EXPECT_THROW(GameState(g, {{3, 0}}, {0, 0}), ConfigError);
}

TEST(Engine, SiegeExamples) {
  const GridSpec g(Topology::PlanarGrid, 3, 3);
  EXPECT_TRUE(is_siege(GameState(g, {{0, 1}, {2, 0}, {1, 2}}, {1, 1})));
  EXPECT_TRUE(is_siege(GameState(g, {{0, 0}, {1, 2}}, {0, 1})));
  const GridSpec big(Topology::PlanarGrid, 5, 5);
  EXPECT_FALSE(is_siege(GameState(big, {{2, 1}}, {2, 2})));
  EXPECT_FALSE(is_siege(GameState(GridSpec(Topology::Torus, 5, 5), {{2, 1}}, {2, 2})));
}

TEST(Engine, SiegeMatchesIndependentPredicate) {
  const GridSpec g(Topology::PlanarGrid, 4, 4);
  const int V = g.vertex_count();
  for (int v = 0; v < V; ++v)
    for (int a = 0; a < V; ++a)
      for (int b = a; b < V; ++b) {
        const std::vector<Vertex> cops{g.vertex(a), g.vertex(b)};
        ASSERT_EQ(is_siege(g, cops, g.vertex(v)), raw_siege(g, cops, g.vertex(v)));
      }
}

TEST(Engine, MinimalSiegeCardinalityExamples) {
  const GridSpec g(Topology::PlanarGrid, 5, 5);
  EXPECT_EQ(minimal_siege_cardinality(g, {2, 2}), 3);
  EXPECT_EQ(minimal_siege_cardinality(g, {0, 0}), 2);
  EXPECT_EQ(minimal_siege_cardinality(g, {0, 2}), 2);
  const GridSpec t(Topology::Torus, 7, 15);
  for (int i = 0; i < t.vertex_count(); ++i) EXPECT_EQ(minimal_siege_cardinality(t, t.vertex(i)), 3);
}

TEST(Engine, MinimalSiegeCardinalityMatchesExhaustiveSubsets) {
  for (auto [kind, m, n] : {std::tuple{Topology::PlanarGrid, 4, 5}, {Topology::PlanarGrid, 5, 5},
                            {Topology::SemiTorus, 4, 5}, {Topology::Torus, 5, 5},
                            {Topology::Torus, 4, 6}}) {
    const GridSpec g(kind, m, n);
    for (int i = 0; i < g.vertex_count(); ++i) {
      const Vertex v = g.vertex(i);
      const int expect = raw_min_siege(g, v);
      ASSERT_EQ(minimal_siege_cardinality(g, v), expect) << g << " " << v;
      if (kind == Topology::PlanarGrid) {
        EXPECT_EQ(expect, vertex_class(g, v) == VertexClass::Internal ? 3 : 2);
      }
      if (kind == Topology::Torus) {
        EXPECT_EQ(expect, 3);
      }
    }
  }
}

TEST(Engine, PreSiegeExamples) {
  const GridSpec g(Topology::PlanarGrid, 7, 9);
  EXPECT_TRUE(is_pre_siege(g, {3, 5}, {3, 4}, {2, 6}));
  EXPECT_FALSE(is_pre_siege(g, {3, 5}, {3, 4}, {2, 5}));
  EXPECT_TRUE(is_pre_siege(g, {3, 5}, {3, 6}, {2, 4}));
  const GridSpec s(Topology::SemiTorus, 6, 9);
  EXPECT_TRUE(is_pre_siege(s, {5, 5}, {5, 4}, {4, 6}));
  EXPECT_TRUE(is_siege(s, std::vector<Vertex>{{5, 4}, {4, 6}}, {5, 5}));
  EXPECT_TRUE(is_pre_siege(s, {2, 0}, {2, 8}, {1, 1}));
}

TEST(Engine, ConeMembershipExamples) {
  const GridSpec g(Topology::PlanarGrid, 7, 9);
  const auto whole = ConeFrame::whole_board();
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Down, whole, {4, 3}), ConeMembership::Within);
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Down, whole, {4, 6}), ConeMembership::OnEdge);
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Down, whole, {1, 4}), ConeMembership::Outside);
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Down, whole, {2, 4}), ConeMembership::Outside);
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Up, whole, {0, 3}), ConeMembership::Within);
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Right, whole, {4, 6}), ConeMembership::OnEdge);
  EXPECT_EQ(cone_membership(g, {2, 4}, Orientation::Left, whole, {2, 1}), ConeMembership::Within);
}

TEST(Engine, ConeFrameUnwrapsColumns) {
  const GridSpec s(Topology::SemiTorus, 6, 9);
  // Apex at column 8 with a window starting at 6: column 1 unwraps to 10.
  const auto frame = ConeFrame::columns(6, 9);
  EXPECT_EQ(cone_membership(s, {0, 8}, Orientation::Down, frame, {3, 1}), ConeMembership::Within);
  EXPECT_THROW(cone_membership(s, {0, 8}, Orientation::Down, ConeFrame::columns(6, 4), {3, 1}),
               ConeFrameError);
}

TEST(Engine, MoveBetween) {
  const GridSpec s(Topology::SemiTorus, 3, 5);
  EXPECT_EQ(move_between(s, {1, 4}, {1, 0}), Move::Right);
  EXPECT_EQ(move_between(s, {1, 4}, {1, 4}), Move::Stay);
  EXPECT_FALSE(move_between(s, {1, 4}, {1, 2}).has_value());
  EXPECT_EQ(parse_move(to_string(Move::Left)), Move::Left);
}
