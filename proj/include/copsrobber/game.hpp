#pragma once

#include <optional>
#include <string>
#include <vector>

#include "copsrobber/cop_strategy.hpp"
#include "copsrobber/engine.hpp"
#include "copsrobber/robber.hpp"
#include "copsrobber/trace.hpp"

namespace copsrobber {

inline int default_round_cap(const GridSpec& spec, int k) {
  return 4 * (spec.rows() + spec.cols()) * k;
}

struct GameConfig {
  GridSpec spec;
  Algorithm algorithm;
  int k;
  RobberPolicy robber;
  std::optional<Vertex> robber_start;  // the policy's worst case when absent
  int round_cap = 0;                   // default_round_cap when not positive
  std::uint64_t seed = 0;
};

inline bool near_any_cop(const GridSpec& spec, const std::vector<Vertex>& cops, Vertex v) {
  for (const Vertex& c : cops)
    if (c == v || adjacent(spec, c, v)) return true;
  return false;
}

/// Plays the cop algorithm against the robber policy until capture or the
/// round cap. Round i holds the cops' i-th turn and the robber's reply.
inline Trace run_game(const GameConfig& cfg) {
  const Placement placement = initial_placement(cfg.algorithm, cfg.spec, cfg.k);
  RobberPolicy policy = cfg.robber;
  Vertex start;
  if (cfg.robber_start) {
    start = *cfg.robber_start;
  } else {
    const WorstCaseStart w = worst_case_start(cfg.algorithm, cfg.spec, cfg.k, placement.cops);
    start = w.start;
    if (policy.kind == RobberKind::PaperWorstCase && !policy.goal) policy.goal = w.goal;
  }
  if (!cfg.spec.contains(start)) throw InputError("robber start is off the board");
  if (near_any_cop(cfg.spec, placement.cops, start))
    throw InputError("robber start is in the closed neighborhood of a cop");
  const int cap = cfg.round_cap > 0 ? cfg.round_cap : default_round_cap(cfg.spec, cfg.k);

  Trace t;
  t.spec = cfg.spec;
  t.algorithm = std::string(to_string(cfg.algorithm));
  t.k = cfg.k;
  t.robber_policy = std::string(to_string(policy.kind));
  t.seed = cfg.seed;
  t.initial_cops = placement.cops;
  t.initial_robber = start;

  GameState s(cfg.spec, placement.cops, start);
  CopStrategyState st = placement.state;
  while (s.round < cap) {
    const StrategyMove sm = strategy_step(s, st);
    TraceRound r;
    if (sm.state.tie_claimed && !st.tie_claimed)
      r.note = "guard tie: cop " + std::to_string(sm.state.guard + 1) + " claims the guard";
    if (sm.state.phase == Phase::Chase && st.phase == Phase::Guard)
      r.note += std::string(r.note.empty() ? "" : "; ") + "chase begins";
    st = sm.state;
    s = apply_cops_turn(s, sm.moves);
    r.round = s.round;
    r.cop_moves = sm.moves;
    r.cops = s.cops;
    r.robber = s.robber;
    if (!s.captured) {
      const RobberStep rs = robber_policy_step(s, policy);
      policy = rs.next;
      s = apply_robber_turn(s, rs.move);
      r.robber_move = rs.move;
      r.robber = s.robber;
      if (!s.captured) {
        r.siege = is_siege(s);
        r.pre_siege = any_pre_siege(cfg.spec, s.cops, s.robber);
      }
    }
    t.rounds.push_back(r);
    if (s.captured) {
      t.outcome = Outcome::Captured;
      t.capture_time = s.round;
      return t;
    }
  }
  t.outcome = Outcome::NoCapture;
  t.capture_time = s.round;
  return t;
}

/// Guard, pre-siege and siege round counts of a torus game, read off its
/// trace as in the capture-time proofs: t = t1 + t2 + t3 + 1.
struct TorusComponents {
  int t1 = 0;
  int t2 = 0;
  int t3 = 0;
  int t = 0;
};

// Rounds are counted up to the cop turn that establishes each formation
// around the robber's standing position.
inline std::optional<TorusComponents> torus_components(const Trace& t) {
  if (t.outcome != Outcome::Captured) return std::nullopt;
  int chase = -1;
  int pre = -1;
  int siege = -1;
  Vertex robber = t.initial_robber;
  for (const TraceRound& r : t.rounds) {
    if (chase < 0 && r.note.find("chase begins") != std::string::npos) chase = r.round;
    if (chase >= 0 && pre < 0 && any_pre_siege(t.spec, r.cops, robber)) pre = r.round;
    if (pre >= 0 && siege < 0 && is_siege(t.spec, r.cops, robber)) siege = r.round;
    robber = r.robber;
  }
  if (chase < 0 || pre < 0 || siege < 0) return std::nullopt;
  TorusComponents c;
  c.t1 = chase - 1;
  c.t2 = pre - c.t1;
  c.t3 = siege - pre;
  c.t = t.capture_time;
  return c;
}

}  // namespace copsrobber
