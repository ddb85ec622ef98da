#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "copsrobber/engine.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/topology.hpp"

namespace copsrobber {

inline constexpr std::uint64_t kDefaultStateBudget = 50'000'000ULL;

/// Dense index of (cop multiset, robber vertex, turn). Cops are sorted and
/// ranked in the combinatorial number system, so interchangeable cops share
/// one index.
class StateCodec {
 public:
  StateCodec(const GridSpec& spec, int k) : v_(spec.vertex_count()), k_(k) {
    if (k < 1) throw ConfigError("at least one cop is required");
    const int top = v_ + k_;
    binom_.assign(top + 1, std::vector<std::uint64_t>(k_ + 2, 0));
    for (int a = 0; a <= top; ++a) {
      binom_[a][0] = 1;
      for (int b = 1; b <= std::min(a, k_ + 1); ++b) {
        const std::uint64_t x = binom_[a - 1][b - 1];
        const std::uint64_t y = b <= a - 1 ? binom_[a - 1][b] : 0;
        binom_[a][b] = x > kSaturate - y ? kSaturate : x + y;
      }
    }
    multisets_ = binom_[v_ + k_ - 1][k_];
  }

  static std::uint64_t estimate(const GridSpec& spec, int k) {
    const StateCodec codec(spec, k);
    const std::uint64_t per = static_cast<std::uint64_t>(spec.vertex_count()) * 2;
    if (codec.multisets_ >= kSaturate / per) return kSaturate;
    return codec.multisets_ * per;
  }

  std::uint64_t multisets() const noexcept { return multisets_; }
  std::uint64_t size() const noexcept { return multisets_ * v_ * 2; }
  int vertices() const noexcept { return v_; }
  int cops() const noexcept { return k_; }

  /// Rank of a sorted vertex-index multiset.
  std::uint64_t rank(const std::vector<int>& sorted) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += binom_[sorted[i] + i][i + 1];
    return r;
  }

  std::vector<int> unrank(std::uint64_t r) const {
    std::vector<int> out(k_);
    for (int i = k_ - 1; i >= 0; --i) {
      int c = out.size() > static_cast<std::size_t>(i + 1) ? out[i + 1] : v_ - 1;
      while (binom_[c + i][i + 1] > r) --c;
      out[i] = c;
      r -= binom_[c + i][i + 1];
    }
    return out;
  }

  std::uint64_t index(std::uint64_t multiset, int robber, Turn turn) const noexcept {
    return (multiset * v_ + robber) * 2 + (turn == Turn::RobberToMove ? 1 : 0);
  }

  struct Decoded {
    std::uint64_t multiset;
    int robber;
    Turn turn;
  };

  Decoded decode(std::uint64_t idx) const noexcept {
    const Turn turn = idx % 2 ? Turn::RobberToMove : Turn::CopsToMove;
    idx /= 2;
    return {idx / v_, static_cast<int>(idx % v_), turn};
  }

 private:
  static constexpr std::uint64_t kSaturate = std::numeric_limits<std::uint64_t>::max() / 4;
  int v_;
  int k_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::uint64_t multisets_ = 0;
};

/// Remaining cop turns to capture under optimal play, per packed state.
/// Values live in one byte; the rare large ones spill into a side map.
class ValueTable {
 public:
  static constexpr int kInfinite = -1;

  ValueTable(const GridSpec& spec, int k)
      : spec_(spec), codec_(spec, k), bytes_(codec_.size(), kUnresolved) {}

  const GridSpec& spec() const noexcept { return spec_; }
  const StateCodec& codec() const noexcept { return codec_; }
  int cops() const noexcept { return codec_.cops(); }
  std::uint64_t size() const noexcept { return bytes_.size(); }

  int value(std::uint64_t idx) const {
    const std::uint8_t b = bytes_[idx];
    if (b == kUnresolved) return kInfinite;
    if (b == kSpilled) return spill_.at(idx);
    return b;
  }
  bool resolved(std::uint64_t idx) const noexcept { return bytes_[idx] != kUnresolved; }

  void set(std::uint64_t idx, int v) {
    if (v < kSpilled) {
      bytes_[idx] = static_cast<std::uint8_t>(v);
    } else {
      bytes_[idx] = kSpilled;
      spill_[idx] = v;
    }
  }

  /// Index of a position given as vertices, cops in any order.
  std::uint64_t index_of(const std::vector<Vertex>& cops, Vertex robber, Turn turn) const {
    std::vector<int> ids;
    for (const Vertex& c : cops) ids.push_back(spec_.index(c));
    std::sort(ids.begin(), ids.end());
    return codec_.index(codec_.rank(ids), spec_.index(robber), turn);
  }

  std::vector<Vertex> cops_of(std::uint64_t multiset) const {
    std::vector<Vertex> out;
    for (int id : codec_.unrank(multiset)) out.push_back(spec_.vertex(id));
    return out;
  }

  void write(std::ostream& os) const;
  static ValueTable read(std::istream& is);

 private:
  static constexpr std::uint8_t kUnresolved = 255;
  static constexpr std::uint8_t kSpilled = 254;

  GridSpec spec_;
  StateCodec codec_;
  std::vector<std::uint8_t> bytes_;
  std::unordered_map<std::uint64_t, int> spill_;
};

namespace oracle_detail {

inline std::vector<std::vector<int>> closed_neighbor_ids(const GridSpec& spec) {
  std::vector<std::vector<int>> out(spec.vertex_count());
  for (int i = 0; i < spec.vertex_count(); ++i)
    for (const Vertex& w : closed_neighbors(spec, spec.vertex(i))) out[i].push_back(spec.index(w));
  return out;
}

// Every sorted cop multiset reachable in one joint move from (or, the moves
// being reversible, into) the given one.
inline void for_each_joint_move(const std::vector<int>& cops,
                                const std::vector<std::vector<int>>& nbrs,
                                const std::function<void(const std::vector<int>&)>& fn) {
  const std::size_t k = cops.size();
  std::vector<std::size_t> pick(k, 0);
  std::vector<int> moved(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) moved[i] = nbrs[cops[i]][pick[i]];
    std::vector<int> sorted = moved;
    std::sort(sorted.begin(), sorted.end());
    fn(sorted);
    std::size_t i = 0;
    while (i < k && ++pick[i] == nbrs[cops[i]].size()) pick[i++] = 0;
    if (i == k) return;
  }
}

inline bool holds(const std::vector<int>& cops, int v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

}  // namespace oracle_detail

/// Backward induction from the capture states, one value layer at a time.
/// A cops-to-move state takes 1 + its first resolved successor; a
/// robber-to-move state is resolved by its last successor.
inline ValueTable retrograde_solve(const GridSpec& spec, int k,
                                   std::uint64_t budget = kDefaultStateBudget) {
  const std::uint64_t estimate = StateCodec::estimate(spec, k);
  if (estimate > budget)
    throw BudgetError("state space of " + std::to_string(estimate) +
                          " states exceeds the budget of " + std::to_string(budget),
                      estimate);
  ValueTable table(spec, k);
  const StateCodec& codec = table.codec();
  const auto nbrs = oracle_detail::closed_neighbor_ids(spec);
  const int nv = codec.vertices();
  std::vector<std::uint8_t> pending(codec.multisets() * nv, 0);

  std::vector<std::uint64_t> cop_layer;
  std::vector<std::uint64_t> robber_layer;
  for (std::uint64_t ms = 0; ms < codec.multisets(); ++ms) {
    const auto cops = codec.unrank(ms);
    for (int r = 0; r < nv; ++r) {
      if (oracle_detail::holds(cops, r)) {
        const auto c = codec.index(ms, r, Turn::CopsToMove);
        const auto rb = codec.index(ms, r, Turn::RobberToMove);
        table.set(c, 0);
        table.set(rb, 0);
        cop_layer.push_back(c);
        robber_layer.push_back(rb);
      } else {
        pending[ms * nv + r] = static_cast<std::uint8_t>(nbrs[r].size());
      }
    }
  }

  for (int v = 0; !cop_layer.empty() || !robber_layer.empty(); ++v) {
    for (const std::uint64_t c : cop_layer) {
      const auto d = codec.decode(c);
      for (int from : nbrs[d.robber]) {
        const auto pred = codec.index(d.multiset, from, Turn::RobberToMove);
        if (table.resolved(pred)) continue;
        if (--pending[d.multiset * nv + from] == 0) {
          table.set(pred, v);
          robber_layer.push_back(pred);
        }
      }
    }
    // Sorting groups the layer by cop multiset, whose predecessor multisets
    // are then enumerated once for all robber vertices.
    std::sort(robber_layer.begin(), robber_layer.end());
    std::vector<std::uint64_t> next;
    std::vector<std::uint64_t> before;
    std::uint64_t current = std::numeric_limits<std::uint64_t>::max();
    for (const std::uint64_t rb : robber_layer) {
      const auto d = codec.decode(rb);
      if (d.multiset != current) {
        current = d.multiset;
        before.clear();
        oracle_detail::for_each_joint_move(
            codec.unrank(d.multiset), nbrs,
            [&](const std::vector<int>& ms) { before.push_back(codec.rank(ms)); });
        std::sort(before.begin(), before.end());
        before.erase(std::unique(before.begin(), before.end()), before.end());
      }
      for (const std::uint64_t ms : before) {
        const auto pred = codec.index(ms, d.robber, Turn::CopsToMove);
        if (table.resolved(pred)) continue;
        table.set(pred, v + 1);
        next.push_back(pred);
      }
    }
    cop_layer = std::move(next);
    robber_layer.clear();
  }
  return table;
}

/// Successor values of a state, for Bellman checks and optimal play.
inline std::vector<std::pair<std::uint64_t, int>> successors(const ValueTable& table,
                                                             std::uint64_t idx) {
  const StateCodec& codec = table.codec();
  const auto d = codec.decode(idx);
  const auto nbrs = closed_neighbors(table.spec(), table.spec().vertex(d.robber));
  std::vector<std::pair<std::uint64_t, int>> out;
  if (d.turn == Turn::RobberToMove) {
    for (const Vertex& w : nbrs) {
      const auto s = codec.index(d.multiset, table.spec().index(w), Turn::CopsToMove);
      out.emplace_back(s, table.value(s));
    }
  } else {
    const auto ids = oracle_detail::closed_neighbor_ids(table.spec());
    oracle_detail::for_each_joint_move(codec.unrank(d.multiset), ids,
                                       [&](const std::vector<int>& after) {
                                         const auto s = codec.index(codec.rank(after), d.robber,
                                                                    Turn::RobberToMove);
                                         out.emplace_back(s, table.value(s));
                                       });
  }
  return out;
}

/// Checks the fixed-point equations at one state.
inline bool bellman_holds(const ValueTable& table, std::uint64_t idx) {
  const auto d = table.codec().decode(idx);
  const auto cops = table.codec().unrank(d.multiset);
  const int value = table.value(idx);
  if (oracle_detail::holds(cops, d.robber)) return value == 0;
  if (value == 0) return false;
  const auto succ = successors(table, idx);
  constexpr int inf = std::numeric_limits<int>::max();
  auto finite = [&](int v) { return v == ValueTable::kInfinite ? inf : v; };
  int expect = 0;
  if (d.turn == Turn::CopsToMove) {
    int best = inf;
    for (const auto& [s, v] : succ) best = std::min(best, finite(v));
    expect = best == inf ? inf : best + 1;
  } else {
    for (const auto& [s, v] : succ) expect = std::max(expect, finite(v));
  }
  return finite(value) == expect;
}

/// Number of sampled states violating the fixed-point equations.
inline int bellman_spot_check(const ValueTable& table, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, table.size() - 1);
  int bad = 0;
  for (int i = 0; i < samples; ++i) bad += !bellman_holds(table, pick(rng));
  return bad;
}

struct OptimalResult {
  std::optional<int> value;         // absent: the robber escapes forever
  std::vector<Vertex> cops;         // a best placement
  Vertex robber;                    // the robber's best reply to it
};

/// min over cop placements of max over robber placements (any vertex not
/// holding a cop) of the cops-to-move value.
inline OptimalResult optimal_from_table(const ValueTable& table) {
  const StateCodec& codec = table.codec();
  OptimalResult best;
  constexpr int inf = std::numeric_limits<int>::max();
  int best_value = inf;
  bool first = true;
  for (std::uint64_t ms = 0; ms < codec.multisets(); ++ms) {
    const auto cops = codec.unrank(ms);
    int worst = -1;
    int worst_r = -1;
    for (int r = 0; r < codec.vertices(); ++r) {
      if (oracle_detail::holds(cops, r)) continue;
      int v = table.value(codec.index(ms, r, Turn::CopsToMove));
      if (v == ValueTable::kInfinite) v = inf;
      if (v > worst) {
        worst = v;
        worst_r = r;
      }
      if (worst == inf) break;
    }
    if (worst_r < 0) continue;
    if (first || worst < best_value) {
      first = false;
      best_value = worst;
      best.cops = table.cops_of(ms);
      best.robber = table.spec().vertex(worst_r);
    }
  }
  if (best_value != inf) best.value = best_value;
  return best;
}

inline std::optional<int> optimal_capture_time(const GridSpec& spec, int k,
                                               std::uint64_t budget = kDefaultStateBudget) {
  return optimal_from_table(retrograde_solve(spec, k, budget)).value;
}

struct CopNumberResult {
  std::optional<int> cop_number;
  int untested_from = 0;  // set when the budget stopped the search
};

inline CopNumberResult cop_number(const GridSpec& spec, int k_max = 4,
                                  std::uint64_t budget = kDefaultStateBudget) {
  CopNumberResult out;
  for (int k = 1; k <= k_max; ++k) {
    if (StateCodec::estimate(spec, k) > budget) {
      out.untested_from = k;
      return out;
    }
    if (optimal_capture_time(spec, k, budget)) {
      out.cop_number = k;
      return out;
    }
  }
  out.untested_from = k_max + 1;
  return out;
}

/// Plays both sides optimally from a cops-to-move state; returns the value
/// of every visited state, cop and robber turns alternating.
inline std::vector<int> optimal_play_values(const ValueTable& table, std::uint64_t idx) {
  std::vector<int> values{table.value(idx)};
  while (values.back() > 0) {
    const auto succ = successors(table, idx);
    const bool cops = table.codec().decode(idx).turn == Turn::CopsToMove;
    auto better = [&](int a, int b) {
      if (a == ValueTable::kInfinite) return !cops && b != ValueTable::kInfinite;
      if (b == ValueTable::kInfinite) return cops;
      return cops ? a < b : a > b;
    };
    std::size_t pick = 0;
    for (std::size_t i = 1; i < succ.size(); ++i)
      if (better(succ[i].second, succ[pick].second)) pick = i;
    idx = succ[pick].first;
    values.push_back(succ[pick].second);
    if (values.back() == ValueTable::kInfinite) break;
  }
  return values;
}

namespace oracle_detail {

inline constexpr char kMagic[4] = {'C', 'R', 'V', 'T'};
inline constexpr std::uint32_t kVersion = 1;
inline constexpr std::uint16_t kBlobInfinite = 0xFFFF;

template <class T>
void put(std::ostream& os, T x) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(x >> (8 * i));
  os.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char*>(buf), sizeof(T))) throw InputError("truncated table blob");
  T x = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) x |= static_cast<T>(buf[i]) << (8 * i);
  return x;
}

}  // namespace oracle_detail

/// Binary blob: magic, encoding version, board, k, state count, then one
/// little-endian 16-bit value per state (0xFFFF for no capture).
inline void ValueTable::write(std::ostream& os) const {
  using namespace oracle_detail;
  os.write(kMagic, 4);
  put<std::uint32_t>(os, kVersion);
  put<std::uint8_t>(os, static_cast<std::uint8_t>(spec_.kind()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(spec_.rows()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(spec_.cols()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(cops()));
  put<std::uint64_t>(os, size());
  for (std::uint64_t i = 0; i < size(); ++i) {
    const int v = value(i);
    put<std::uint16_t>(os, v == kInfinite ? kBlobInfinite : static_cast<std::uint16_t>(v));
  }
}

inline ValueTable ValueTable::read(std::istream& is) {
  using namespace oracle_detail;
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
    throw InputError("not a value table blob");
  if (get<std::uint32_t>(is) != kVersion) throw InputError("unsupported table encoding version");
  const auto kind = static_cast<Topology>(get<std::uint8_t>(is));
  const int m = static_cast<int>(get<std::uint32_t>(is));
  const int n = static_cast<int>(get<std::uint32_t>(is));
  const int k = static_cast<int>(get<std::uint32_t>(is));
  ValueTable table(GridSpec(kind, m, n), k);
  if (get<std::uint64_t>(is) != table.size()) throw InputError("table blob size mismatch");
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    const auto v = get<std::uint16_t>(is);
    if (v != kBlobInfinite) table.set(i, v);
  }
  return table;
}

}  // namespace copsrobber
