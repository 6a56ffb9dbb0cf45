#include <cstdlib>
#include <iostream>

#include <subgame/engine.hpp>
#include <subgame/harness.hpp>

int main() {
  const auto r = subgame::find_periodicity(subgame::MoveSet{2, 4, 7});
  std::cout << "{2,4,7}: N=" << r.preperiod << " p=" << r.period << '\n';
  if (r.preperiod != 4 || r.period != 3) return EXIT_FAILURE;
  for (const auto& m : subgame::run_oeis_checks()) {
    std::cout << m.id << ' ' << (m.match ? "match" : "mismatch") << '\n';
    if (!m.match) return EXIT_FAILURE;
  }
  return EXIT_SUCCESS;
}
