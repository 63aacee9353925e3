#include <chrono>
#include <cstdio>

#include "sunada/hyperbolic.hpp"
#include "sunada/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sunada;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads available: %d\n\n", threads);

  BuiltExperiment ex = build_experiment(ExperimentConfig::example(3));
  std::printf("isospectrality kernel, |G| = %d, index = %d\n", ex.group->order,
              ex.cover_a.index());

  auto t0 = Clock::now();
  IsospectralityReport serial = combinatorial_isospectrality_serial(ex.cover_a, ex.cover_b);
  double t_serial = ms_since(t0);

  t0 = Clock::now();
  IsospectralityReport parallel = combinatorial_isospectrality(ex.cover_a, ex.cover_b);
  double t_parallel = ms_since(t0);

  std::printf("  serial   %8.2f ms  (%s)\n", t_serial, serial.pass ? "pass" : "fail");
  std::printf("  parallel %8.2f ms  (%s)  speedup %.2fx\n\n", t_parallel,
              parallel.pass ? "pass" : "fail", t_serial / t_parallel);
  if (serial.pass != parallel.pass) {
    std::printf("kernel mismatch!\n");
    return 1;
  }

  PuncturedTorusRep rep = PuncturedTorusRep::standard();
  Alphabet al = Alphabet::free2();
  Word w = parse_word("a^3 b^-2 a b", al);
  int radius = 12;
  std::printf("self-intersection oracle, word a^3 b^-2 a b, radius %d\n", radius);

#ifdef _OPENMP
  omp_set_num_threads(1);
#endif
  t0 = Clock::now();
  OracleResult one = self_intersection_oracle(rep, w, nullptr, radius);
  double t_one = ms_since(t0);
#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
  t0 = Clock::now();
  OracleResult many = self_intersection_oracle(rep, w, nullptr, radius);
  double t_many = ms_since(t0);

  std::printf("  1 thread  %8.2f ms  (count %d)\n", t_one, one.count);
  std::printf("  %d threads %8.2f ms  (count %d)  speedup %.2fx\n", threads, t_many,
              many.count, t_one / t_many);
  if (one.count != many.count) {
    std::printf("kernel mismatch!\n");
    return 1;
  }
  return 0;
}
