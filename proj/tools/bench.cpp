// Serial vs OpenMP timing for the data-parallel kernels.
#include <chrono>
#include <cstdio>
#include <memory>

#include "nilforge/presentation.hpp"
#include "nilforge/word.hpp"

using namespace nilforge;
using Clock = std::chrono::steady_clock;

template <typename F>
static double time_ms(F&& f, int reps = 3) {
  double best = 1e18;
  for (int i = 0; i < reps; ++i) {
    auto t0 = Clock::now();
    f();
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

int main(int argc, char** argv) {
  int level = argc > 1 ? std::atoi(argv[1]) : 6;
  BuildOptions opts;
  opts.max_level = std::max(level, max_level_cap());
  auto cx = std::make_shared<const Complex>(build(level, opts));
  std::printf("level %d: %zu vertices, %zu carriers\n", level, cx->vertices.size(),
              cx->carriers.size());

  double rs = time_ms([&] { refined_codes_serial(*cx, 2, 2); });
  double rp = time_ms([&] { refined_codes_parallel(*cx, 2, 2); });
  std::printf("%-28s serial %8.2f ms   openmp %8.2f ms   speedup %.2fx\n",
              "coloring refinement", rs, rp, rs / rp);

  // Use a coloring the determinism sweep accepts, so both sides group the
  // full tile set instead of stopping at the first conflict.
  ColoringSearch cs = find_deterministic_coloring(cx);
  auto col = cs.coloring;
  std::printf("coloring: env_radius=%d info_depth=%d determinism=%s\n", cs.env_radius,
              cs.info_depth, cs.pass ? "pass" : "fail");
  int enum_edges = level >= 6 ? 2 : 3;
  double es = time_ms([&] { enumerate_words_serial(*col, enum_edges); }, 2);
  double ep = time_ms([&] { enumerate_words(*col, enum_edges); }, 2);
  std::printf("%-28s serial %8.2f ms   openmp %8.2f ms   speedup %.2fx\n",
              "path-word enumeration", es, ep, es / ep);

  double ds = time_ms([&] { determinism_check_serial(*col); });
  double dp = time_ms([&] { determinism_check(*col); });
  std::printf("%-28s serial %8.2f ms   openmp %8.2f ms   speedup %.2fx\n",
              "determinism grouping", ds, dp, ds / dp);
  return 0;
}
