// Benchmark of the two OpenMP scan kernels against their serial references:
// the distinguished-subset scan (2^|Delta| exact LPs) and the system
// enumeration (independent parabolic-set partitions).

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wonder/enumerate.hpp"
#include "wonder/quotient.hpp"

using namespace wonder;
using clk = std::chrono::steady_clock;

namespace {

double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

// a wide system: product of full A2 blocks, 4 colors and 2 sigma per block,
// with enough negative pairings to make the feasibility tests nontrivial
SphericalSystem wide_system(int blocks) {
  std::string spec;
  for (int k = 0; k < blocks; ++k) spec += (k ? "xA2" : "A2");
  SphericalSystem s;
  s.rs = RootSystem::parse(spec);
  int r = 2 * blocks;
  for (int j = 0; j < r; ++j) {
    Weight w(r, 0);
    w[j] = 1;
    s.sigma.push_back(w);
  }
  for (int k = 0; k < blocks; ++k) {
    auto row = [&](int a, int b) {
      std::vector<int> v(r, 0);
      v[2 * k] = a;
      v[2 * k + 1] = b;
      return v;
    };
    std::string suffix = std::to_string(k + 1);
    s.a_rows.push_back({"Dp1_" + suffix, row(1, 0)});
    s.a_rows.push_back({"Dm1_" + suffix, row(1, -1)});
    s.a_rows.push_back({"Dp2_" + suffix, row(0, 1)});
    s.a_rows.push_back({"Dm2_" + suffix, row(-1, 1)});
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  int blocks = argc > 1 ? std::atoi(argv[1]) : 3;
  const char* group = argc > 2 ? argv[2] : "C4";
  RankOneTable table = RankOneTable::builtin();

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled (serial build)\n");
#endif

  {
    auto sys = wide_system(blocks);
    auto cs = colors(sys);
    std::printf("distinguished-subset scan over %zu colors (%lu subsets)\n", cs.colors.size(),
                1ul << cs.colors.size());
    auto t0 = clk::now();
    auto serial = enumerate_distinguished_serial(cs, 24);
    auto t1 = clk::now();
    auto parallel = enumerate_distinguished(cs, 24);
    auto t2 = clk::now();
    std::printf("  serial   %8.3fs  (%zu found)\n", secs(t0, t1), serial.size());
    std::printf("  parallel %8.3fs  (%zu found)\n", secs(t1, t2), parallel.size());
    if (serial.size() != parallel.size()) {
      std::printf("  MISMATCH\n");
      return 1;
    }
  }

  {
    auto rs = RootSystem::parse(group);
    std::printf("system enumeration on %s\n", rs.spec_string().c_str());
    auto t0 = clk::now();
    auto serial = enumerate_systems_serial(rs, table);
    auto t1 = clk::now();
    auto parallel = enumerate_systems(rs, table);
    auto t2 = clk::now();
    std::printf("  serial   %8.3fs  (%zu systems)\n", secs(t0, t1), serial.size());
    std::printf("  parallel %8.3fs  (%zu systems)\n", secs(t1, t2), parallel.size());
    if (serial.size() != parallel.size()) {
      std::printf("  MISMATCH\n");
      return 1;
    }
  }
  return 0;
}
