// Compares the serial reference kernels against the OpenMP-parallel ones on
// the signed basis loops, which give arbitrarily large C-loops to scan.
#include <chrono>
#include <cstdio>
#include <string>

#include "cloops/cayley_dickson.hpp"
#include "cloops/identities.hpp"
#include "cloops/invariants.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <class F>
double time_of(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int level = 7;
  int reps = 3;
  if (argc > 1) level = std::stoi(argv[1]);
  if (argc > 2) reps = std::stoi(argv[2]);

  const cloops::LoopTable l = cloops::signed_loop(cloops::doubled_to_level(level));
#ifdef _OPENMP
  std::printf("loop order %d, OpenMP threads %d\n", l.size(), omp_get_max_threads());
#else
  std::printf("loop order %d, OpenMP disabled (serial fallback)\n", l.size());
#endif

  struct Case {
    const char* name;
    cloops::IdentityReport (*run)(const cloops::LoopTable&, cloops::Exec);
  };
  const Case cases[] = {
      {"c_loop", [](const cloops::LoopTable& t, cloops::Exec e) { return cloops::c_loop(t, e); }},
      {"moufang",
       [](const cloops::LoopTable& t, cloops::Exec e) {
         return cloops::check_identity(t, "moufang", e);
       }},
      {"inverse_property",
       [](const cloops::LoopTable& t, cloops::Exec e) {
         return cloops::check_identity(t, "inverse_property", e);
       }},
  };
  std::printf("%-18s %12s %12s %9s\n", "kernel", "serial [s]", "parallel [s]", "speedup");
  for (const Case& c : cases) {
    double ts = 1e300, tp = 1e300;
    bool hs = false, hp = false;
    for (int r = 0; r < reps; ++r) {
      ts = std::min(ts, time_of([&] { hs = c.run(l, cloops::Exec::Serial).holds; }));
      tp = std::min(tp, time_of([&] { hp = c.run(l, cloops::Exec::Parallel).holds; }));
    }
    if (hs != hp) {
      std::printf("%-18s DISAGREE\n", c.name);
      return 1;
    }
    std::printf("%-18s %12.4f %12.4f %8.2fx\n", c.name, ts, tp, ts / tp);
  }
  {
    double ts = 1e300, tp = 1e300;
    size_t ns = 0, np = 0;
    for (int r = 0; r < reps; ++r) {
      ts = std::min(ts, time_of([&] { ns = cloops::nuclei(l, cloops::Exec::Serial).nucleus.size(); }));
      tp = std::min(tp, time_of([&] { np = cloops::nuclei(l, cloops::Exec::Parallel).nucleus.size(); }));
    }
    if (ns != np) {
      std::printf("%-18s DISAGREE\n", "nuclei");
      return 1;
    }
    std::printf("%-18s %12.4f %12.4f %8.2fx\n", "nuclei", ts, tp, ts / tp);
  }
  return 0;
}
