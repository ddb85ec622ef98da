#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "copsrobber/errors.hpp"
#include "copsrobber/topology.hpp"

namespace copsrobber {

using Rational = boost::rational<long long>;

namespace analysis_detail {

inline long long floor_of(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return q;
}

inline long long ceil_of(const Rational& r) { return -floor_of(-r); }

inline int cdiv(int a, int b) {
  int q = a / b;
  if (a % b != 0 && (a < 0) == (b < 0)) ++q;
  return q;
}

inline Rational frac(long long p, long long q) { return Rational(p, q); }

}  // namespace analysis_detail

/// Exact "p/q" rendering, or "p" for integers.
inline std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

/// Fixed-point rendering rounded half away from zero; for display only.
inline std::string to_decimal(const Rational& r, int places) {
  long long scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const Rational scaled = r * scale;
  const bool neg = scaled < Rational(0);
  const Rational mag = neg ? -scaled : scaled;
  const long long units = analysis_detail::floor_of(mag + Rational(1, 2));
  std::string digits = std::to_string(units);
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places)
      digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
  }
  return (neg && units != 0 ? "-" : "") + digits;
}

enum class CaseTag { CaseI, CaseII, NA };

inline std::string_view to_string(CaseTag c) {
  switch (c) {
    case CaseTag::CaseI: return "CaseI";
    case CaseTag::CaseII: return "CaseII";
    case CaseTag::NA: return "NA";
  }
  return "?";
}

/// Real-valued bracket around a capture time, as stated by a theorem.
struct RealBracket {
  Rational lo;
  Rational hi;
  bool hi_strict = false;
};

/// Capture time of one algorithm on one board: a point, or the integer
/// window implied by a real bracket.
struct CaptureFormula {
  int lo = 0;
  int hi = 0;
  std::optional<RealBracket> bracket;
  CaseTag tag = CaseTag::NA;
  std::string source;

  bool is_point() const noexcept { return !bracket; }
  /// High end used when bracketing a measured time: a strict real bound is
  /// widened by one.
  int bracket_high() const noexcept { return bracket && bracket->hi_strict ? hi + 1 : hi; }
};

namespace analysis_detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("formula hypothesis violated: " + what);
}

// Rows and columns with the longer side as columns, as the strategies use.
inline std::pair<int, int> oriented(const GridSpec& spec) {
  return {std::min(spec.rows(), spec.cols()), std::max(spec.rows(), spec.cols())};
}

inline CaptureFormula point(int t, CaseTag tag, std::string source) {
  return {t, t, std::nullopt, tag, std::move(source)};
}

inline CaptureFormula window(Rational lo, Rational hi, bool strict, CaseTag tag,
                             std::string source) {
  CaptureFormula f;
  f.lo = static_cast<int>(ceil_of(lo));
  f.hi = static_cast<int>(strict ? ceil_of(hi) - 1 : floor_of(hi));
  f.bracket = RealBracket{lo, hi, strict};
  f.tag = tag;
  f.source = std::move(source);
  return f;
}

inline void torus_hypotheses(int m, int n, int k) {
  require(k >= 3, "k >= 3 on a torus");
  require(m >= 6, "min(m, n) >= 6");
  if (k > 3) require(n >= 2 * k, "max(m, n) >= 2k");
}

}  // namespace analysis_detail

/// Capture time of the matching algorithm: GRID and GRID-K on planar grids,
/// SGRID and SGRID-K on semi-tori, TGRID and TGRID-K on tori.
inline CaptureFormula capture_time_formula(const GridSpec& spec, int k) {
  using namespace analysis_detail;
  switch (spec.kind()) {
    case Topology::PlanarGrid: {
      const auto [m, n] = oriented(spec);
      if (k == 2) return point((m + n) / 2 - 1, CaseTag::NA, "grid, two cops");
      require(k >= 4 && k % 2 == 0, "k even and k >= 4 for cop pairs");
      require(m >= 4, "m >= 4 and n >= 4");
      const int h = k / 2;
      return point(cdiv(n - h, 2 * h) + cdiv(m - 2, 2), CaseTag::NA, "grid, cop pairs");
    }
    case Topology::SemiTorus: {
      const int m = spec.rows();
      const int n = spec.cols();
      require(k >= 2, "k >= 2 on a semi-torus");
      require(m >= 3, "m >= 3");
      require(n >= 2 * k, "n >= 2k");
      const int half = m / 2;
      const int gap = cdiv(n - k, 2 * k);
      if (half <= gap)
        return point(cdiv(n, k) + 2 * half - 2, CaseTag::CaseI, "semi-torus, floor(m/2) <= gap");
      return point(cdiv(n, k) + gap + half - 2, CaseTag::CaseII, "semi-torus, floor(m/2) > gap");
    }
    case Topology::Torus: {
      const auto [m, n] = oriented(spec);
      torus_hypotheses(m, n, k);
      const int c = cdiv(n, k - 1);
      if (k == 3) {
        if (m <= c)
          // The low end follows the worked example's arithmetic, n/2 in
          // place of 2n/3; it only widens the window.
          return window(frac(n, 2) + frac(5 * m, 4) - frac(9, 2),
                        frac(2 * n, 3) + frac(5 * m, 4) - frac(25, 12), false, CaseTag::CaseI,
                        "torus, three cops, m <= ceil(n/2)");
        return window(frac(25 * n, 24) + frac(m, 2) - frac(9, 2),
                      frac(25 * n, 24) + frac(m, 2) - frac(17, 8), false, CaseTag::CaseII,
                      "torus, three cops, m > ceil(n/2)");
      }
      if (m <= c)
        return window(frac(2 * n, k) + frac(5 * m, 4) - frac(9, 2),
                      frac(2 * n, k) + frac(5 * m, 4) + frac(k - 1, k) - frac(11, 4), false,
                      CaseTag::CaseI, "torus, k cops, m <= ceil(n/(k-1))");
      const Rational base = frac(2 * n, k) + frac(3 * n, 4 * (k - 1)) + frac(m, 2);
      return window(base - frac(9, 2), base - frac(1, 2), true, CaseTag::CaseII,
                    "torus, k cops, m > ceil(n/(k-1))");
    }
  }
  throw DomainError("unknown board kind");
}

/// Guard, pre-siege and siege round counts of the torus chase, un-approximated,
/// with t = t1 + t2 + t3 + 1.
struct TorusExact {
  int t1 = 0;
  int t2 = 0;
  int t3 = 0;
  int t = 0;
  CaseTag tag = CaseTag::NA;
};

inline TorusExact torus_exact_components(const GridSpec& spec, int k) {
  using namespace analysis_detail;
  require(spec.kind() == Topology::Torus, "a torus");
  const auto [m, n] = oriented(spec);
  torus_hypotheses(m, n, k);
  const int c = cdiv(n, k - 1);
  TorusExact out;
  out.t1 = cdiv(2 * n, k) - c;
  if (m <= c) {
    out.tag = CaseTag::CaseI;
    out.t2 = c + 2 * (m / 2) - 3;
    out.t3 = cdiv(m - 6, 4);
  } else {
    out.tag = CaseTag::CaseII;
    const bool even = c % 2 == 0;
    const int row = even ? cdiv(n, 2 * (k - 1)) : n / (2 * (k - 1));
    out.t2 = even ? 2 * c - 3 : 2 * c - 4;
    out.t3 = cdiv(m - row - 3, 2);
  }
  out.t = out.t1 + out.t2 + out.t3 + 1;
  return out;
}

/// Capture-time lower bound from the board alone: the semi-torus and torus
/// bound floor(n/2) + floor(m/2) - 2.
inline int lower_bound(const GridSpec& spec) {
  if (spec.kind() == Topology::PlanarGrid)
    throw DomainError("formula hypothesis violated: the board-only bound needs a wrapped board");
  return spec.cols() / 2 + spec.rows() / 2 - 2;
}

/// Lower bound from fixed starting positions: max(d1, d_h - floor(e/2)),
/// the second term only when the robber starts on an e-loop (e = 0 for none).
inline int lower_bound(int d1, int d_h, int e, int h, int k) {
  if (h < 2 || h > k) throw InputError("siege cardinality h must satisfy 2 <= h <= k");
  if (d1 > d_h) throw InputError("distances must satisfy d1 <= d_h");
  if (e != 0 && e < 4) throw InputError("loop size must be at least 4");
  return e == 0 ? d1 : std::max(d1, d_h - e / 2);
}

/// Smallest over cop placements of the robber's farthest distance to the
/// nearest cop: the best the cops can force against a robber that stands
/// still. Exhaustive over cop multisets.
inline int distance_lower_bound(const GridSpec& spec, int k) {
  const int v = spec.vertex_count();
  std::vector<std::vector<int>> dist(v, std::vector<int>(v));
  for (int a = 0; a < v; ++a)
    for (int b = 0; b < v; ++b) dist[a][b] = distance(spec, spec.vertex(a), spec.vertex(b));
  int best = std::numeric_limits<int>::max();
  std::vector<int> cops(k, 0);
  std::vector<int> nearest(v);
  while (true) {
    int worst = 0;
    for (int r = 0; r < v; ++r) {
      int d = std::numeric_limits<int>::max();
      for (int c : cops) d = std::min(d, dist[c][r]);
      worst = std::max(worst, d);
    }
    best = std::min(best, worst);
    int i = k - 1;
    while (i >= 0 && cops[i] == v - 1) --i;
    if (i < 0) break;
    ++cops[i];
    for (int j = i + 1; j < k; ++j) cops[j] = cops[i];
  }
  return best;
}

/// Capture-time lower bound for k cops. The board-only bound assumes the
/// minimal team (two cops on a semi-torus, three on a torus) and fails with
/// more; otherwise the distance bound is used when the placements are few
/// enough to enumerate, and 1 beyond that.
inline int capture_lower_bound(const GridSpec& spec, int k,
                               std::uint64_t max_placements = 2'000'000) {
  int best = 1;
  if ((spec.kind() == Topology::SemiTorus && k == 2) || (spec.kind() == Topology::Torus && k == 3))
    best = lower_bound(spec);
  long double placements = 1;
  for (int i = 0; i < k; ++i)
    placements = placements * (spec.vertex_count() + i) / (i + 1);
  if (placements <= static_cast<long double>(max_placements))
    best = std::max(best, distance_lower_bound(spec, k));
  return best;
}

/// Number of cops needed to meet a deadline t*.
struct DeadlineAnswer {
  Rational lo;                  // k >= lo (strict when lo_strict)
  std::optional<Rational> hi;   // k < hi, reported for tori
  bool lo_strict = false;
  int k = 0;
  CaseTag tag = CaseTag::NA;
  std::string equation;
};

namespace analysis_detail {

inline int smallest_at_least(const Rational& r, bool strict) {
  const long long c = ceil_of(r);
  return static_cast<int>(strict && Rational(c) == r ? c + 1 : c);
}

}  // namespace analysis_detail

inline DeadlineAnswer min_cops_for_deadline(const GridSpec& spec, int t_star) {
  using namespace analysis_detail;
  switch (spec.kind()) {
    case Topology::PlanarGrid: {
      const auto [m, n] = oriented(spec);
      const int den = 2 * t_star - m + 3;
      if (den <= 0) throw InfeasibleDeadline("deadline too small: 2t* - m + 3 <= 0");
      DeadlineAnswer a;
      a.lo = Rational(2 * n, den);
      a.k = std::max(2, smallest_at_least(a.lo, false));
      a.k += a.k % 2;
      a.equation = "k >= 2n/(2t* - m + 3), rounded up to whole pairs";
      return a;
    }
    case Topology::SemiTorus: {
      const int m = spec.rows();
      const int n = spec.cols();
      const bool even = m % 2 == 0;
      std::vector<DeadlineAnswer> valid;
      std::vector<DeadlineAnswer> all;
      auto branch = [&](int num, int den, CaseTag tag, const char* eq) {
        if (den <= 0) return;
        DeadlineAnswer a;
        a.lo = Rational(num, den);
        a.k = std::max(2, smallest_at_least(a.lo, false));
        a.tag = tag;
        a.equation = eq;
        const bool case_one = m / 2 <= cdiv(n - a.k, 2 * a.k);
        all.push_back(a);
        if (case_one == (tag == CaseTag::CaseI)) valid.push_back(a);
      };
      if (even) {
        branch(n, t_star - m + 2, CaseTag::CaseI, "k >= n/(t* - m + 2)");
        branch(3 * n, 2 * t_star - m + 5, CaseTag::CaseII, "k >= 3n/(2t* - m + 5)");
      } else {
        branch(n, t_star - m + 3, CaseTag::CaseI, "k >= n/(t* - m + 3)");
        branch(3 * n, 2 * t_star - m + 7, CaseTag::CaseII, "k >= 3n/(2t* - m + 7)");
      }
      if (all.empty()) throw InfeasibleDeadline("deadline too small: every denominator <= 0");
      const auto& pool = valid.empty() ? all : valid;
      return *std::min_element(pool.begin(), pool.end(),
                               [](const auto& a, const auto& b) { return a.k < b.k; });
    }
    case Topology::Torus: {
      const auto [m, n] = oriented(spec);
      std::vector<DeadlineAnswer> valid;
      std::vector<DeadlineAnswer> all;
      auto branch = [&](Rational lo, bool lo_strict, Rational hi, int lo_den, CaseTag tag,
                        const char* eq) {
        if (lo_den <= 0) return;
        DeadlineAnswer a;
        a.lo = lo;
        a.lo_strict = lo_strict;
        a.hi = hi;
        a.k = std::max(3, smallest_at_least(lo, lo_strict));
        a.tag = tag;
        a.equation = eq;
        const bool case_one = m <= cdiv(n, a.k - 1);
        all.push_back(a);
        if (case_one == (tag == CaseTag::CaseI)) valid.push_back(a);
      };
      const int d1 = 4 * t_star - 5 * m + 18;
      const int d1_hi = 4 * t_star - 5 * m + 7;
      if (d1 > 0)
        branch(Rational(8 * n, d1), false,
               d1_hi > 0 ? Rational(8 * n, d1_hi) : Rational(std::numeric_limits<int>::max()), d1,
               CaseTag::CaseI, "8n/(4t* - 5m + 18) <= k < 8n/(4t* - 5m + 7)");
      const int d2 = 4 * t_star - 2 * m + 18;
      const int d2_hi = 4 * t_star - 2 * m + 2;
      if (d2 > 0)
        branch(Rational(11 * n, d2), true,
               d2_hi > 0 ? Rational(11 * n, d2_hi) + 1 : Rational(std::numeric_limits<int>::max()),
               d2, CaseTag::CaseII, "11n/(4t* - 2m + 18) < k < 11n/(4t* - 2m + 2) + 1");
      if (all.empty()) throw InfeasibleDeadline("deadline too small: every denominator <= 0");
      const auto& pool = valid.empty() ? all : valid;
      return *std::min_element(pool.begin(), pool.end(),
                               [](const auto& a, const auto& b) { return a.k < b.k; });
    }
  }
  throw DomainError("unknown board kind");
}

struct WorkEntry {
  int k = 0;
  int t = 0;
  long long work = 0;
};

struct WorkRatio {
  int k_i = 0;
  int k_j = 0;
  Rational ratio;  // w_i / w_j
};

struct SpeedupReport {
  std::vector<WorkEntry> entries;
  std::vector<WorkRatio> ratios;
};

/// Work k * t_k per instance and the ratios w_i / w_j for i < j.
inline SpeedupReport work_and_speedup(const std::vector<std::pair<int, int>>& instances) {
  SpeedupReport out;
  for (const auto& [k, t] : instances)
    out.entries.push_back({k, t, static_cast<long long>(k) * t});
  for (std::size_t i = 0; i < out.entries.size(); ++i)
    for (std::size_t j = i + 1; j < out.entries.size(); ++j)
      out.ratios.push_back({out.entries[i].k, out.entries[j].k,
                            Rational(out.entries[i].work, out.entries[j].work)});
  return out;
}

enum class TrendSchedule {
  Widening,   // n/m grows: (4, 4 * 2^i) on semi-tori, (8, 8 * 2^i) on tori
  Narrowing,  // n/m shrinks: (4 * 2^i, 4) on semi-tori
  Square,     // n = m from 8 to 64 on tori
};

struct TrendPoint {
  int m = 0;
  int n = 0;
  Rational upper;
  int lower = 0;
  Rational ratio;
};

/// Upper capture-time bound of the two-cop (semi-torus) or three-cop
/// (torus) algorithm over the board lower bound, along a schedule.
inline std::vector<TrendPoint> bound_ratio_trend(Topology kind, TrendSchedule schedule,
                                                 int steps = 8) {
  std::vector<std::pair<int, int>> boards;
  if (kind == Topology::SemiTorus && schedule == TrendSchedule::Widening) {
    for (int i = 0; i <= steps; ++i) boards.emplace_back(4, 4 << i);
  } else if (kind == Topology::SemiTorus && schedule == TrendSchedule::Narrowing) {
    for (int i = 0; i <= steps; ++i) boards.emplace_back(4 << i, 4);
  } else if (kind == Topology::Torus && schedule == TrendSchedule::Widening) {
    for (int i = 0; i <= steps; ++i) boards.emplace_back(8, 8 << i);
  } else if (kind == Topology::Torus && schedule == TrendSchedule::Square) {
    for (int m = 8; m <= 64; m += 8) boards.emplace_back(m, m);
  } else {
    throw DomainError("no trend schedule for this board kind");
  }
  std::vector<TrendPoint> out;
  for (const auto& [m, n] : boards) {
    const GridSpec spec(kind, m, n);
    TrendPoint p;
    p.m = m;
    p.n = n;
    if (kind == Topology::SemiTorus) {
      // The semi-torus formula is stated for any m >= 3 and n >= 4; the
      // narrow schedule keeps n = 4.
      const int half = m / 2;
      const int gap = analysis_detail::cdiv(n - 2, 4);
      const int t = half <= gap ? analysis_detail::cdiv(n, 2) + 2 * half - 2
                                : analysis_detail::cdiv(n, 2) + gap + half - 2;
      p.upper = t;
    } else {
      p.upper = capture_time_formula(spec, 3).bracket->hi;
    }
    p.lower = lower_bound(spec);
    p.ratio = p.upper / p.lower;
    out.push_back(p);
  }
  return out;
}

/// Closed-form summary of one (board, k) instance.
struct BoundsReport {
  GridSpec spec;
  int k = 0;
  std::optional<CaptureFormula> formula;
  std::optional<TorusExact> exact;
  std::optional<int> lower;
  std::optional<long long> work;
  std::optional<int> deadline;
  std::optional<DeadlineAnswer> min_k;
  std::vector<std::string> notes;  // provenance and n/a reasons
};

inline BoundsReport bounds_report(const GridSpec& spec, int k,
                                  std::optional<int> deadline = std::nullopt) {
  BoundsReport r{spec, k, {}, {}, {}, {}, {}, {}, {}};
  try {
    r.formula = capture_time_formula(spec, k);
    r.notes.push_back("t: " + r.formula->source);
    if (spec.kind() == Topology::Torus) {
      r.exact = torus_exact_components(spec, k);
      r.work = static_cast<long long>(k) * r.exact->t;
      r.notes.push_back("work: k times the exact torus time");
    } else {
      r.work = static_cast<long long>(k) * r.formula->lo;
      r.notes.push_back("work: k times t");
    }
  } catch (const DomainError& e) {
    r.notes.push_back(std::string("n/a: ") + e.what());
  }
  if (spec.kind() != Topology::PlanarGrid) {
    r.lower = lower_bound(spec);
    r.notes.push_back("lower: floor(n/2) + floor(m/2) - 2");
  }
  if (deadline) {
    r.deadline = deadline;
    try {
      r.min_k = min_cops_for_deadline(spec, *deadline);
      r.notes.push_back("min_k: " + r.min_k->equation);
    } catch (const InfeasibleDeadline& e) {
      r.notes.push_back(std::string("n/a: ") + e.what());
    }
  }
  return r;
}

inline std::string bounds_csv_header() {
  return "kind,m,n,k,case,t_lo,t_hi,t_exact,t1,t2,t3,lower,work,deadline,min_k_lo,min_k_hi,"
         "min_k,note";
}

namespace analysis_detail {

inline std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline std::string na_reason(const BoundsReport& r) {
  for (const auto& n : r.notes)
    if (n.rfind("n/a: ", 0) == 0) return n;
  return "n/a";
}

}  // namespace analysis_detail

/// One CSV row; cells a theorem does not cover carry an explicit n/a reason.
inline std::string to_csv_row(const BoundsReport& r) {
  using analysis_detail::csv_cell;
  const std::string na = analysis_detail::na_reason(r);
  auto opt = [&](const auto& v) { return v ? std::to_string(*v) : na; };
  std::ostringstream os;
  os << to_string(r.spec.kind()) << ',' << r.spec.rows() << ',' << r.spec.cols() << ',' << r.k
     << ',';
  if (r.formula) {
    os << to_string(r.formula->tag) << ',' << r.formula->lo << ',' << r.formula->hi << ',';
  } else {
    os << csv_cell(na) << ',' << csv_cell(na) << ',' << csv_cell(na) << ',';
  }
  if (r.exact) {
    os << r.exact->t << ',' << r.exact->t1 << ',' << r.exact->t2 << ',' << r.exact->t3 << ',';
  } else {
    const std::string cell = csv_cell(r.formula ? "n/a: not a torus" : na);
    os << cell << ',' << cell << ',' << cell << ',' << cell << ',';
  }
  os << csv_cell(r.lower ? std::to_string(*r.lower) : "n/a: no board-only bound") << ','
     << csv_cell(opt(r.work)) << ',';
  if (r.deadline) {
    os << *r.deadline << ',';
    if (r.min_k) {
      os << to_string(r.min_k->lo) << ',' << (r.min_k->hi ? to_string(*r.min_k->hi) : "") << ','
         << r.min_k->k << ',';
    } else {
      os << csv_cell(na) << ',' << csv_cell(na) << ',' << csv_cell(na) << ',';
    }
  } else {
    os << ",,,,";
  }
  std::string notes;
  for (const auto& n : r.notes) notes += (notes.empty() ? "" : "; ") + n;
  os << csv_cell(notes);
  return os.str();
}

inline nlohmann::json to_json(const BoundsReport& r) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(r.spec.kind()));
  j["m"] = r.spec.rows();
  j["n"] = r.spec.cols();
  j["k"] = r.k;
  if (r.formula) {
    j["case"] = std::string(to_string(r.formula->tag));
    j["t_lo"] = r.formula->lo;
    j["t_hi"] = r.formula->hi;
    if (r.formula->bracket) {
      j["bracket"] = {{"lo", to_string(r.formula->bracket->lo)},
                      {"hi", to_string(r.formula->bracket->hi)},
                      {"hi_strict", r.formula->bracket->hi_strict}};
    }
  }
  if (r.exact)
    j["exact"] = {{"t1", r.exact->t1}, {"t2", r.exact->t2}, {"t3", r.exact->t3}, {"t", r.exact->t}};
  if (r.lower) j["lower"] = *r.lower;
  if (r.work) j["work"] = *r.work;
  if (r.deadline) j["deadline"] = *r.deadline;
  if (r.min_k) {
    j["min_k"] = {{"lo", to_string(r.min_k->lo)}, {"lo_strict", r.min_k->lo_strict},
                  {"k", r.min_k->k}, {"equation", r.min_k->equation}};
    if (r.min_k->hi) j["min_k"]["hi"] = to_string(*r.min_k->hi);
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace copsrobber
