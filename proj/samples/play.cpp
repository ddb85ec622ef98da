// Plays TGRID on a 7x15 torus against the worst-case robber, prints the
// trace, then compares the result with the capture-time window.
#include <iostream>

#include "copsrobber/analysis.hpp"
#include "copsrobber/game.hpp"

int main() {
  using namespace copsrobber;
  const GridSpec spec(Topology::Torus, 7, 15);
  GameConfig cfg{spec, Algorithm::TGrid, 3, RobberPolicy{RobberKind::PaperWorstCase}, {}, 0, 0};
  const Trace t = run_game(cfg);
  std::cout << trace_to_string(t);
  const CaptureFormula f = capture_time_formula(spec, 3);
  std::cout << "captured at round " << t.capture_time << ", window " << f.lo << ".." << f.hi
            << "\n";
  if (const auto c = torus_components(t))
    std::cout << "t1=" << c->t1 << " t2=" << c->t2 << " t3=" << c->t3 << "\n";
  return 0;
}
