#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "copsrobber/engine.hpp"
#include "copsrobber/errors.hpp"
#include "copsrobber/topology.hpp"

namespace copsrobber {

enum class Outcome { Captured, NoCapture };

struct TraceRound {
  int round = 0;
  std::vector<Move> cop_moves;
  std::vector<Vertex> cops;          // after the cops' turn
  std::optional<Move> robber_move;   // absent when the cops captured
  Vertex robber;                     // after the robber's turn
  bool siege = false;                // at the end of the round
  bool pre_siege = false;
  std::string note;

  friend bool operator==(const TraceRound&, const TraceRound&) = default;
};

/// Replayable log of one game.
struct Trace {
  GridSpec spec{Topology::PlanarGrid, 2, 2};
  std::string algorithm;
  int k = 0;
  std::string robber_policy;
  std::uint64_t seed = 0;
  std::vector<Vertex> initial_cops;
  Vertex initial_robber;
  std::vector<TraceRound> rounds;
  Outcome outcome = Outcome::NoCapture;
  int capture_time = 0;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Any pair of cops forming a pre-siege in any chase direction.
inline bool any_pre_siege(const GridSpec& spec, const std::vector<Vertex>& cops, Vertex robber) {
  for (std::size_t i = 0; i < cops.size(); ++i)
    for (std::size_t j = 0; j < cops.size(); ++j) {
      if (i == j) continue;
      for (Orientation o : {Orientation::Down, Orientation::Up, Orientation::Left,
                            Orientation::Right})
        if (is_pre_siege(spec, robber, cops[i], cops[j], o)) return true;
    }
  return false;
}

namespace trace_io {

using nlohmann::json;

inline json vertex_json(Vertex v) { return json::array({v.row, v.col}); }
inline Vertex vertex_from(const json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

inline json spec_json(const GridSpec& spec) {
  return {{"kind", std::string(to_string(spec.kind()))}, {"m", spec.rows()}, {"n", spec.cols()}};
}

inline GridSpec spec_from(const json& j) {
  return GridSpec(parse_topology(j.at("kind").get<std::string>()), j.at("m").get<int>(),
                  j.at("n").get<int>());
}

inline std::string moves_string(const std::vector<Move>& moves) {
  std::string s;
  for (Move mv : moves) s += to_string(mv);
  return s;
}

}  // namespace trace_io

/// Line-delimited JSON: a header object, one object per round, a footer.
inline void write_trace(std::ostream& os, const Trace& t) {
  using trace_io::json;
  json header = {{"type", "header"},
                 {"spec", trace_io::spec_json(t.spec)},
                 {"algorithm", t.algorithm},
                 {"k", t.k},
                 {"robber_policy", t.robber_policy},
                 {"seed", t.seed}};
  json cops = json::array();
  for (const Vertex& c : t.initial_cops) cops.push_back(trace_io::vertex_json(c));
  header["cops"] = cops;
  header["robber"] = trace_io::vertex_json(t.initial_robber);
  os << header.dump() << '\n';
  for (const TraceRound& r : t.rounds) {
    json row = {{"round", r.round},
                {"cop_moves", trace_io::moves_string(r.cop_moves)},
                {"robber_move", r.robber_move ? json(std::string(to_string(*r.robber_move)))
                                              : json(nullptr)},
                {"robber", trace_io::vertex_json(r.robber)},
                {"siege", r.siege},
                {"pre_siege", r.pre_siege}};
    json rc = json::array();
    for (const Vertex& c : r.cops) rc.push_back(trace_io::vertex_json(c));
    row["cops"] = rc;
    if (!r.note.empty()) row["note"] = r.note;
    os << row.dump() << '\n';
  }
  json footer = {{"type", "footer"},
                 {"outcome", t.outcome == Outcome::Captured ? "captured" : "no_capture"},
                 {"t", t.capture_time}};
  os << footer.dump() << '\n';
}

inline std::string trace_to_string(const Trace& t) {
  std::ostringstream os;
  write_trace(os, t);
  return os.str();
}

inline Trace read_trace(std::istream& is) {
  using trace_io::json;
  Trace t;
  std::string line;
  bool have_header = false;
  bool have_footer = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    const std::string type = j.value("type", "round");
    if (type == "header") {
      t.spec = trace_io::spec_from(j.at("spec"));
      t.algorithm = j.at("algorithm").get<std::string>();
      t.k = j.at("k").get<int>();
      t.robber_policy = j.at("robber_policy").get<std::string>();
      t.seed = j.at("seed").get<std::uint64_t>();
      for (const auto& c : j.at("cops")) t.initial_cops.push_back(trace_io::vertex_from(c));
      t.initial_robber = trace_io::vertex_from(j.at("robber"));
      have_header = true;
    } else if (type == "footer") {
      t.outcome = j.at("outcome").get<std::string>() == "captured" ? Outcome::Captured
                                                                   : Outcome::NoCapture;
      t.capture_time = j.at("t").get<int>();
      have_footer = true;
    } else {
      TraceRound r;
      r.round = j.at("round").get<int>();
      for (char ch : j.at("cop_moves").get<std::string>())
        r.cop_moves.push_back(parse_move(std::string(1, ch)));
      for (const auto& c : j.at("cops")) r.cops.push_back(trace_io::vertex_from(c));
      if (!j.at("robber_move").is_null())
        r.robber_move = parse_move(j.at("robber_move").get<std::string>());
      r.robber = trace_io::vertex_from(j.at("robber"));
      r.siege = j.at("siege").get<bool>();
      r.pre_siege = j.at("pre_siege").get<bool>();
      r.note = j.value("note", "");
      t.rounds.push_back(std::move(r));
    }
  }
  if (!have_header || !have_footer) throw InputError("trace is missing its header or footer");
  return t;
}

/// Re-applies every recorded action from the initial state and checks that
/// each recorded position is reproduced.
inline bool replay_matches(const Trace& t) {
  GameState s(t.spec, t.initial_cops, t.initial_robber);
  for (const TraceRound& r : t.rounds) {
    if (s.captured) return false;
    s = apply_cops_turn(s, r.cop_moves);
    if (s.cops != r.cops || s.round != r.round) return false;
    if (s.captured) return !r.robber_move && r.robber == s.robber;
    if (!r.robber_move) return false;
    s = apply_robber_turn(s, *r.robber_move);
    if (s.robber != r.robber) return false;
    if (s.captured) return t.outcome == Outcome::Captured && t.capture_time == s.round;
  }
  return t.outcome == Outcome::NoCapture || (s.captured && t.capture_time == s.round);
}

}  // namespace copsrobber
