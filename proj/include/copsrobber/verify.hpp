#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/functional/hash.hpp>

#include "copsrobber/cop_strategy.hpp"
#include "copsrobber/engine.hpp"
#include "copsrobber/trace.hpp"

namespace copsrobber {

struct VerifyResult {
  enum class Status { Captured, NoCapture, StrategyError };
  Status status = Status::Captured;
  int max_capture_time = 0;   // meaningful when status == Captured
  Trace witness;
  std::string message;
  std::size_t explored_states = 0;
};

/// Exact worst case of a deterministic cop strategy against every robber:
/// memoized depth-first maximization over all admissible robber starts and
/// all robber replies, with the cops driven by strategy_step.
class StrategyVerifier {
 public:
  StrategyVerifier(GridSpec spec, Algorithm algorithm, int k)
      : spec_(spec), algorithm_(algorithm), k_(k),
        placement_(initial_placement(algorithm, spec, k)) {}

  VerifyResult run() {
    VerifyResult result;
    int worst = -1;
    std::optional<Vertex> worst_start;
    try {
      for (int idx = 0; idx < spec_.vertex_count(); ++idx) {
        const Vertex r = spec_.vertex(idx);
        if (near_cop(placement_.cops, r)) continue;
        GameState s(spec_, placement_.cops, r);
        const int v = value(s, placement_.state);
        if (v > worst) {
          worst = v;
          worst_start = r;
        }
        if (v >= kInfinite) break;
      }
    } catch (const std::logic_error& e) {
      result.status = VerifyResult::Status::StrategyError;
      result.message = e.what();
      result.explored_states = memo_.size();
      result.witness = partial_witness();
      return result;
    }
    result.explored_states = memo_.size();
    if (!worst_start) {
      result.message = "no admissible robber start";
      return result;
    }
    result.witness = witness(*worst_start);
    if (worst >= kInfinite) {
      result.status = VerifyResult::Status::NoCapture;
      result.message = "robber can avoid capture forever";
    } else {
      result.max_capture_time = worst;
    }
    return result;
  }

  const Placement& placement() const { return placement_; }

 private:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;
  static constexpr int kInProgress = -1;

  struct Entry {
    int value = kInProgress;
    int best_move = -1;
  };

  using Key = std::vector<int>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
  };

  bool near_cop(const std::vector<Vertex>& cops, Vertex r) const {
    for (const Vertex& c : cops)
      if (c == r || adjacent(spec_, c, r)) return true;
    return false;
  }

  Key key_of(const GameState& s, const CopStrategyState& st) const {
    Key key;
    key.reserve(s.cops.size() + 16);
    for (const Vertex& c : s.cops) key.push_back(spec_.index(c));
    key.push_back(spec_.index(s.robber));
    st.append_key(key);
    return key;
  }

  // Remaining cop turns until capture from a cops-to-move state.
  int value(const GameState& s, const CopStrategyState& st) {
    Key key = key_of(s, st);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (it->second.value == kInProgress) return kInfinite;
      return it->second.value;
    }
    memo_.emplace(key, Entry{});
    path_.push_back({s, st});
    const StrategyMove sm = strategy_step(s, st);
    const GameState after = apply_cops_turn(s, sm.moves);
    Entry e;
    if (after.captured) {
      e.value = 1;
    } else {
      int best = -1;
      for (int i = 0; i < static_cast<int>(kAllMoves.size()); ++i) {
        const Move mv = kAllMoves[i];
        if (!move_is_legal(spec_, after.robber, mv)) continue;
        const GameState next = apply_robber_turn(after, mv);
        int v = 1;
        if (!next.captured) {
          const int sub = value(next, sm.state);
          v = sub >= kInfinite ? kInfinite : 1 + sub;
        }
        if (v > best) {
          best = v;
          e.best_move = i;
        }
        if (best >= kInfinite) break;
      }
      e.value = best;
    }
    path_.pop_back();
    memo_[key] = e;
    return e.value;
  }

  Trace base_trace(Vertex robber_start) const {
    Trace t;
    t.spec = spec_;
    t.algorithm = std::string(to_string(algorithm_));
    t.k = k_;
    t.robber_policy = "external";
    t.initial_cops = placement_.cops;
    t.initial_robber = robber_start;
    return t;
  }

  // Follows the memoized maximizing replies from the worst start.
  Trace witness(Vertex robber_start) {
    Trace t = base_trace(robber_start);
    GameState s(spec_, placement_.cops, robber_start);
    CopStrategyState st = placement_.state;
    std::unordered_map<Key, int, KeyHash> seen;
    while (true) {
      Key key = key_of(s, st);
      if (seen.count(key)) {
        t.outcome = Outcome::NoCapture;
        t.capture_time = s.round;
        return t;
      }
      seen.emplace(key, s.round);
      const StrategyMove sm = strategy_step(s, st);
      s = apply_cops_turn(s, sm.moves);
      TraceRound r;
      r.round = s.round;
      r.cop_moves = sm.moves;
      r.cops = s.cops;
      r.robber = s.robber;
      if (s.captured) {
        t.rounds.push_back(r);
        t.outcome = Outcome::Captured;
        t.capture_time = s.round;
        return t;
      }
      const auto it = memo_.find(key);
      const Move mv = kAllMoves[it != memo_.end() && it->second.best_move >= 0
                                    ? it->second.best_move
                                    : 0];
      s = apply_robber_turn(s, mv);
      st = sm.state;
      r.robber_move = mv;
      r.robber = s.robber;
      r.siege = is_siege(s);
      r.pre_siege = any_pre_siege(spec_, s.cops, s.robber);
      t.rounds.push_back(r);
      if (s.captured) {
        t.outcome = Outcome::Captured;
        t.capture_time = s.round;
        return t;
      }
    }
  }

  // Positions leading to a strategy failure, as far as they were recorded.
  Trace partial_witness() const {
    if (path_.empty()) return base_trace(placement_.cops.front());
    Trace t = base_trace(path_.front().first.robber);
    for (const auto& [s, st] : path_) {
      TraceRound r;
      r.round = s.round;
      r.cops = s.cops;
      r.robber = s.robber;
      t.rounds.push_back(r);
    }
    t.outcome = Outcome::NoCapture;
    t.capture_time = path_.back().first.round;
    return t;
  }

  GridSpec spec_;
  Algorithm algorithm_;
  int k_;
  Placement placement_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::vector<std::pair<GameState, CopStrategyState>> path_;
};

inline VerifyResult verify_strategy_worst_case(const GridSpec& spec, Algorithm algorithm, int k) {
  return StrategyVerifier(spec, algorithm, k).run();
}

/// Rounds the strategy's placement needs against a robber allowed anywhere
/// off the cops. A robber next to a cop falls in the first cop turn, which
/// matters on boards where no admissible start exists.
inline int placement_capture_bound(const VerifyResult& r) {
  return std::max(r.max_capture_time, 1);
}

}  // namespace copsrobber
