// Digits of p-adic precision lost by F5 on random dense systems in
// Q_p[x,y,z], for a few primes.

#include <cstdio>

#include "tropf5/tropf5.hpp"

using namespace tropf5;

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 10;
  std::printf("%8s %10s  (mean, max) for D = 4..7\n", "p", "w");
  for (unsigned long p : {2ul, 3ul, 101ul, 65519ul}) {
    for (bool weighted : {false, true}) {
      PrecisionConfig cfg;
      cfg.p = p;
      cfg.reps = reps;
      cfg.min_degree = 2;
      cfg.max_degree = 3;
      if (weighted) cfg.weight = {1, -3, 2};
      const auto r = precision_experiment(cfg);
      std::printf("%8lu %10s ", p, weighted ? "1,-3,2" : "0,0,0");
      for (const auto& b : r.buckets) std::printf(" (%.2f, %lld)", b.mean, b.max);
      std::printf("\n");
    }
  }
}
