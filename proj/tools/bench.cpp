#include <chrono>
#include <iostream>
#include <string>

#include "ccalc/exec.hpp"
#include "ccalc/formula.hpp"
#include "ccalc/heyting.hpp"
#include "ccalc/kripke.hpp"
#include "ccalc/machines.hpp"

// Serial against parallel on the three sweep kernels, with a result
// equality check so a speedup never hides a divergence.

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double ms(F&& f) {
  auto t0 = Clock::now();
  f();
  auto t1 = Clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool same) {
  std::cout << name << ": serial " << serial << " ms, parallel " << parallel
            << " ms, speedup " << (parallel > 0 ? serial / parallel : 0)
            << (same ? "" : "  RESULTS DIFFER") << "\n";
}

}  // namespace

int main() {
  using namespace ccalc;
  std::cout << "threads: " << max_threads() << "\n";

  {
    machines::EnumReport rs{}, rp{};
    double ts = ms([&] { rs = machines::enumerate_specs(2, 2, 1000, ExecMode::Serial); });
    double tp = ms([&] { rp = machines::enumerate_specs(2, 2, 1000, ExecMode::Parallel); });
    report("machine census [2,2]", ts, tp, rs.str() == rp.str());
  }

  {
    logic::Formula f = logic::parse_formula("(p & (p -> q)) -> q");
    bool oks = false, okp = false;
    double ts = ms([&] { oks = !kripke::countermodel_search(f, 4, ExecMode::Serial); });
    double tp = ms([&] { okp = !kripke::countermodel_search(f, 4, ExecMode::Parallel); });
    report("countermodel sweep (valid formula, 4 worlds)", ts, tp, oks == okp);
  }

  {
    heyting::SurveyReport rs, rp;
    double ts = ms([&] { rs = heyting::downset_law_survey(4, ExecMode::Serial); });
    double tp = ms([&] { rp = heyting::downset_law_survey(4, ExecMode::Parallel); });
    report("downset law survey (posets to 4 elements)", ts, tp,
           rs.str() == rp.str());
  }

  return 0;
}
