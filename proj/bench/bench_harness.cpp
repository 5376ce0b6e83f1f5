// Serial vs OpenMP timing of the axiom and theorem suites.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "infothermo/harness/harness.hpp"
#include "infothermo/macro/macro_model.hpp"
#include "infothermo/quantum/quantum_model.hpp"

using namespace infothermo;
namespace h = infothermo::harness;

namespace {

double time_run(const ModelOracle& oracle, const h::SuiteConfig& cfg, h::Execution mode, std::size_t& violations) {
  const auto t0 = std::chrono::steady_clock::now();
  violations = h::run_axiom_suite(oracle, cfg, mode).violations.size() +
               h::run_theorem_suite(oracle, cfg, mode).violations.size();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  h::SuiteConfig cfg;
  cfg.cases_per_check = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200;
  std::printf("threads: %d, cases per check: %zu\n", omp_get_max_threads(), cfg.cases_per_check);
  const macro::MacroModel m;
  const quantum::QuantumModel q;
  for (const ModelOracle* o : {static_cast<const ModelOracle*>(&m), static_cast<const ModelOracle*>(&q)}) {
    std::size_t vs = 0, vp = 0;
    const double serial = time_run(*o, cfg, h::Execution::Serial, vs);
    const double parallel = time_run(*o, cfg, h::Execution::Parallel, vp);
    std::printf("%-8s serial %7.3f s  parallel %7.3f s  speedup %.2fx  violations %zu/%zu\n",
                o->model_name().c_str(), serial, parallel, serial / parallel, vs, vp);
  }
}
