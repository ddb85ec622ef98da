#include <gtest/gtest.h>

#include <cstdlib>
#include <tuple>
#include <vector>

#include "copsrobber/analysis.hpp"
#include "copsrobber/cop_strategy.hpp"
#include "copsrobber/robber.hpp"
#include "copsrobber/sgrid_strategy.hpp"
#include "copsrobber/verify.hpp"
#include "copsrobber/view.hpp"
#include "explore.hpp"

using namespace copsrobber;

TEST(Placement, PaperStartingPositions) {
  const auto g = initial_placement(Algorithm::Grid, GridSpec(Topology::PlanarGrid, 5, 9), 2);
  EXPECT_EQ(g.cops, (std::vector<Vertex>{{1, 4}, {2, 4}}));
  const auto s = initial_placement(Algorithm::SGrid, GridSpec(Topology::SemiTorus, 6, 9), 2);
  EXPECT_EQ(s.cops, (std::vector<Vertex>{{2, 0}, {2, 5}}));
  const auto t = initial_placement(Algorithm::TGrid, GridSpec(Topology::Torus, 7, 15), 3);
  EXPECT_EQ(t.cops, (std::vector<Vertex>{{0, 0}, {0, 10}, {0, 5}}));
  EXPECT_EQ(t.state.phase, Phase::Guard);
}

TEST(Placement, TeamPlacementsUseNearEqualGaps) {
  const auto gk = initial_placement(Algorithm::GridK, GridSpec(Topology::PlanarGrid, 4, 13), 4);
  EXPECT_EQ(gk.cops, (std::vector<Vertex>{{1, 2}, {2, 2}, {1, 9}, {2, 9}}));
  const auto sk = initial_placement(Algorithm::SGridK, GridSpec(Topology::SemiTorus, 6, 9), 3);
  EXPECT_EQ(sk.cops, (std::vector<Vertex>{{2, 0}, {2, 3}, {2, 6}}));
  // Row 0 in the order c1, c4, c2, c3 with three free columns per gap.
  const auto tk = initial_placement(Algorithm::TGridK, GridSpec(Topology::Torus, 7, 15), 4);
  EXPECT_EQ(tk.cops, (std::vector<Vertex>{{0, 0}, {0, 8}, {0, 12}, {0, 4}}));
}

TEST(Placement, TransposesTallBoards) {
  const GridSpec tall(Topology::Torus, 15, 7);
  const auto t = initial_placement(Algorithm::TGrid, tall, 3);
  EXPECT_EQ(t.cops, (std::vector<Vertex>{{0, 0}, {10, 0}, {5, 0}}));
}

TEST(Placement, SizePreconditionsAreConfigErrors) {
  EXPECT_THROW(initial_placement(Algorithm::TGrid, GridSpec(Topology::Torus, 5, 5), 3), ConfigError);
  EXPECT_THROW(initial_placement(Algorithm::GridK, GridSpec(Topology::PlanarGrid, 5, 5), 3),
               ConfigError);
  EXPECT_THROW(initial_placement(Algorithm::SGrid, GridSpec(Topology::PlanarGrid, 5, 5), 2),
               ConfigError);
  EXPECT_THROW(initial_placement(Algorithm::SGridK, GridSpec(Topology::SemiTorus, 5, 5), 3),
               ConfigError);
  EXPECT_THROW(initial_placement(Algorithm::TGridK, GridSpec(Topology::Torus, 7, 7), 4),
               ConfigError);
  EXPECT_THROW(parse_algorithm("spiral"), ConfigError);
}

TEST(Placement, WorstCaseRobberStarts) {
  const GridSpec s(Topology::SemiTorus, 6, 9);
  const auto ps = initial_placement(Algorithm::SGrid, s, 2);
  EXPECT_EQ(worst_case_robber_placement(Algorithm::SGrid, s, 2, ps.cops), (Vertex{4, 2}));
  const GridSpec g(Topology::PlanarGrid, 5, 9);
  const auto pg = initial_placement(Algorithm::Grid, g, 2);
  const Vertex r = worst_case_robber_placement(Algorithm::Grid, g, 2, pg.cops);
  EXPECT_EQ(std::min(distance(g, r, pg.cops[0]), distance(g, r, pg.cops[1])), 6);
  const GridSpec t(Topology::Torus, 7, 15);
  const auto pt = initial_placement(Algorithm::TGrid, t, 3);
  EXPECT_EQ(worst_case_robber_placement(Algorithm::TGrid, t, 3, pt.cops).row, 3);
  for (const auto& [spec, algo, k] :
       {std::tuple{s, Algorithm::SGrid, 2}, {g, Algorithm::Grid, 2}, {t, Algorithm::TGrid, 3}}) {
    const auto p = initial_placement(algo, spec, k);
    const Vertex v = worst_case_robber_placement(algo, spec, k, p.cops);
    for (const Vertex& c : p.cops) EXPECT_GE(distance(spec, c, v), 2);
  }
}

TEST(StrategyStep, GridAdvancesWhenRobberIsInBothCones) {
  const GridSpec g(Topology::PlanarGrid, 5, 9);
  const auto p = initial_placement(Algorithm::Grid, g, 2);
  const StrategyMove sm = strategy_step(GameState(g, p.cops, {4, 4}), p.state);
  EXPECT_EQ(sm.moves, (std::vector<Move>{Move::Down, Move::Down}));
  EXPECT_EQ(sm.state.cones.size(), 2u);
}

TEST(StrategyStep, SGridMovesOneCopDownWhenRobberIsOnBothEdges) {
  const GridSpec s(Topology::SemiTorus, 6, 9);
  const auto p = initial_placement(Algorithm::SGrid, s, 2);
  const StrategyMove sm = strategy_step(GameState(s, {{2, 0}, {2, 4}}, {4, 2}), p.state);
  int down = 0;
  for (Move mv : sm.moves) down += mv == Move::Down;
  EXPECT_EQ(down, 1);
  EXPECT_EQ(std::count(sm.moves.begin(), sm.moves.end(), Move::Stay), 1);
}

TEST(StrategyStep, TGridGuardGoesToTheCopSharingTheRobberColumn) {
  const GridSpec t(Topology::Torus, 7, 15);
  const auto p = initial_placement(Algorithm::TGrid, t, 3);
  const StrategyMove sm = strategy_step(GameState(t, p.cops, {3, 5}), p.state);
  EXPECT_EQ(sm.state.guard, 2);
  EXPECT_EQ(sm.moves[1], Move::Left);
}

TEST(StrategyStep, IsDeterministic) {
  const GridSpec t(Topology::Torus, 7, 15);
  const auto p = initial_placement(Algorithm::TGrid, t, 3);
  for (int i = 0; i < t.vertex_count(); ++i) {
    const GameState s(t, p.cops, t.vertex(i));
    if (s.captured) continue;
    const StrategyMove a = strategy_step(s, p.state);
    const StrategyMove b = strategy_step(s, p.state);
    EXPECT_EQ(a.moves, b.moves);
    EXPECT_EQ(a.state, b.state);
  }
}

TEST(StrategyStep, RejectsWrongTeamSize) {
  const GridSpec g(Topology::PlanarGrid, 5, 9);
  const auto p = initial_placement(Algorithm::Grid, g, 2);
  EXPECT_THROW(strategy_step(GameState(g, {{0, 0}}, {4, 4}), p.state), StrategyInvariantError);
}

TEST(Robber, GreedyTieBreakIsFixed) {
  const GridSpec g(Topology::PlanarGrid, 5, 5);
  GameState s(g, {{2, 2}}, {0, 2});
  s.turn = Turn::RobberToMove;
  const RobberPolicy p{RobberKind::GreedyEscape};
  // Left and Right both reach distance 3; Left comes first in the order.
  EXPECT_EQ(robber_policy_step(s, p).move, Move::Left);
  EXPECT_EQ(robber_policy_step(s, p).move, robber_policy_step(s, p).move);
}

TEST(Robber, ScriptAdvancesAndRunsOut) {
  const GridSpec g(Topology::PlanarGrid, 5, 5);
  GameState s(g, {{0, 0}}, {3, 3});
  s.turn = Turn::RobberToMove;
  RobberPolicy p{RobberKind::Scripted, {Move::Up}};
  const RobberStep step = robber_policy_step(s, p);
  EXPECT_EQ(step.move, Move::Up);
  EXPECT_THROW(robber_policy_step(s, step.next), PolicyError);
  EXPECT_THROW(robber_policy_step(s, RobberPolicy{RobberKind::ExternalChoice}), PolicyError);
  EXPECT_THROW(parse_robber_kind("lazy"), ConfigError);
}

TEST(Robber, WorstCaseHoldsStillThenSlipsDown) {
  const GridSpec s(Topology::SemiTorus, 6, 9);
  GameState far(s, {{2, 0}, {2, 5}}, {4, 2});
  far.turn = Turn::RobberToMove;
  EXPECT_EQ(robber_policy_step(far, RobberPolicy{RobberKind::PaperWorstCase}).move, Move::Stay);
  GameState pre(s, {{3, 4}, {2, 6}}, {3, 5});
  pre.turn = Turn::RobberToMove;
  ASSERT_TRUE(is_pre_siege(s, {3, 5}, {3, 4}, {2, 6}));
  EXPECT_EQ(robber_policy_step(pre, RobberPolicy{RobberKind::PaperWorstCase}).move, Move::Down);
}

TEST(Invariants, GridRobberStaysInSomeCone) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 6; ++n) {
      const GridSpec g(Topology::PlanarGrid, m, n);
      copsrobber::testing::explore_strategy(g, Algorithm::Grid, 2, [&](auto&, auto&, auto& sm, auto& after) {
        if (after.captured) return;
        const BoardView v(g, sm.state.sym);
        bool in = false;
        for (int i = 0; i < 2; ++i)
          in = in || cone_membership(v.image(), v.to_image(after.cops[i]), sm.state.cones[i],
                                     ConeFrame::whole_board(),
                                     v.to_image(after.robber)) != ConeMembership::Outside;
        ASSERT_TRUE(in) << g << " robber " << after.robber;
      });
    }
}

TEST(Invariants, SGridConeContainmentAndRowDiscipline) {
  for (int m = 3; m <= 5; ++m)
    for (int n = 4; n <= 6; ++n) {
      const GridSpec g(Topology::SemiTorus, m, n);
      copsrobber::testing::explore_strategy(g, Algorithm::SGrid, 2, [&](auto&, auto&, auto& sm, auto& after) {
        ASSERT_LE(std::abs(after.cops[0].row - after.cops[1].row), 1) << g;
        if (after.captured) return;
        ASSERT_TRUE(sgrid::in_some_cone(g, after.cops, after.robber, sm.state.sym.flip_rows))
            << g << " robber " << after.robber;
      });
    }
}

namespace {

struct EdgeWalk {
  long edge_touches = 0;
  long violations = 0;
};

// Records which edge of each cop's cone the robber is on, two bits per cop.
int mark_edges(const GridSpec& g, const GameState& s, const CopStrategyState& st, int bits,
               EdgeWalk& walk) {
  if (st.cones.empty()) return bits;
  const BoardView v(g, st.sym);
  for (std::size_t i = 0; i < s.cops.size(); ++i) {
    const ConeOffset off = cone_offset(v.image(), v.to_image(s.cops[i]), st.cones[i],
                                       ConeFrame::whole_board(), v.to_image(s.robber));
    if (classify_offset(off) != ConeMembership::OnEdge) continue;
    ++walk.edge_touches;
    bits |= (off.lateral > 0 ? 1 : 2) << (2 * i);
  }
  return bits;
}

EdgeWalk opposite_edge_walk(const GridSpec& g) {
  EdgeWalk walk;
  const Placement p = initial_placement(Algorithm::Grid, g, 2);
  struct Node {
    GameState s;
    CopStrategyState st;
    int bits;
  };
  std::vector<Node> stack;
  std::unordered_set<std::vector<int>, copsrobber::testing::KeyHash> seen;
  for (int i = 0; i < g.vertex_count(); ++i) {
    const Vertex r = g.vertex(i);
    bool near = false;
    for (const Vertex& c : p.cops) near = near || c == r || adjacent(g, c, r);
    if (!near) stack.push_back({GameState(g, p.cops, r), p.state, 0});
  }
  while (!stack.empty()) {
    auto [s, st, bits] = stack.back();
    stack.pop_back();
    std::vector<int> key;
    for (const Vertex& c : s.cops) key.push_back(g.index(c));
    key.push_back(g.index(s.robber));
    st.append_key(key);
    key.push_back(bits);
    if (!seen.insert(key).second) continue;
    bits = mark_edges(g, s, st, bits, walk);
    const StrategyMove sm = strategy_step(s, st);
    const GameState after = apply_cops_turn(s, sm.moves);
    if (after.captured) continue;
    bits = mark_edges(g, after, sm.state, bits, walk);
    for (int i = 0; i < 2; ++i) walk.violations += ((bits >> (2 * i)) & 3) == 3;
    for (Move mv : kAllMoves) {
      if (!move_is_legal(g, after.robber, mv)) continue;
      const GameState next = apply_robber_turn(after, mv);
      if (!next.captured) stack.push_back({next, sm.state, bits});
    }
  }
  return walk;
}

}  // namespace

TEST(Invariants, GridRobberNeverReachesTheOppositeConeEdge) {
  long touches = 0;
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 6; ++n) {
      const EdgeWalk w = opposite_edge_walk(GridSpec(Topology::PlanarGrid, m, n));
      EXPECT_EQ(w.violations, 0) << m << "x" << n;
      touches += w.edge_touches;
    }
  EXPECT_GT(touches, 0);
}

TEST(Verify, GridMatchesTheoremOneOnSmallBoards) {
  for (int m = 3; m <= 6; ++m)
    for (int n = 3; n <= 6; ++n) {
      const GridSpec g(Topology::PlanarGrid, m, n);
      const VerifyResult r = verify_strategy_worst_case(g, Algorithm::Grid, 2);
      ASSERT_EQ(r.status, VerifyResult::Status::Captured) << g;
      EXPECT_EQ(r.max_capture_time, (m + n) / 2 - 1) << g;
    }
}

TEST(Verify, TeamAndSemiTorusStrategiesMatchFormulas) {
  const std::vector<std::tuple<Topology, Algorithm, int, int, int>> cases = {
      {Topology::PlanarGrid, Algorithm::GridK, 4, 4, 4}, {Topology::PlanarGrid, Algorithm::GridK, 5, 6, 4},
      {Topology::PlanarGrid, Algorithm::GridK, 6, 6, 4}, {Topology::SemiTorus, Algorithm::SGrid, 3, 4, 2},
      {Topology::SemiTorus, Algorithm::SGrid, 4, 6, 2},  {Topology::SemiTorus, Algorithm::SGrid, 5, 6, 2},
      {Topology::SemiTorus, Algorithm::SGrid, 6, 9, 2},  {Topology::SemiTorus, Algorithm::SGridK, 6, 6, 3},
      {Topology::SemiTorus, Algorithm::SGridK, 6, 9, 3}};
  for (const auto& [kind, algo, m, n, k] : cases) {
    const GridSpec g(kind, m, n);
    const VerifyResult r = verify_strategy_worst_case(g, algo, k);
    ASSERT_EQ(r.status, VerifyResult::Status::Captured) << g;
    const CaptureFormula f = capture_time_formula(g, k);
    EXPECT_EQ(r.max_capture_time, f.hi) << g << " k=" << k;
  }
}

TEST(Verify, TorusStrategyCapturesWithinWindowOrRecordedExcess) {
  const GridSpec t(Topology::Torus, 6, 6);
  const VerifyResult r = verify_strategy_worst_case(t, Algorithm::TGrid, 3);
  ASSERT_EQ(r.status, VerifyResult::Status::Captured);
  const CaptureFormula f = capture_time_formula(t, 3);
  EXPECT_GE(r.max_capture_time, f.lo);
  EXPECT_LE(r.max_capture_time, f.hi);
}
