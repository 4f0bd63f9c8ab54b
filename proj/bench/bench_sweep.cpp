// Times the frame sweep, serial reference vs OpenMP.
//   bench_sweep [max_n]   (default 4)
#include "il/correspondence.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

int main(int argc, char **argv) {
  int max_n = argc > 1 ? std::atoi(argv[1]) : 4;
  for (bool parallel : {false, true}) {
    auto t0 = std::chrono::steady_clock::now();
    il::SweepStats st = il::sweep_veltman_frames(max_n, parallel);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%s: %llu frames, %llu witness, %llu full, %llu disagree, "
                "%lld ms\n",
                parallel ? "openmp" : "serial",
                (unsigned long long)st.frames,
                (unsigned long long)st.witness_checks,
                (unsigned long long)st.full_checks,
                (unsigned long long)st.disagreements, (long long)ms);
  }
  return 0;
}
