// Compares the exact radius, farthest-first and two of the deciders on a few cycles.
#include <cstdio>

#include "kcenter/kcenter.hpp"

int main() {
  using namespace kcenter;
  ApproxConfig cfg;
  cfg.seed = 7;
  cfg.trials = 2;
  for (std::size_t n : {12, 18, 36}) {
    const Graph g = make_cycle(n);
    for (std::size_t k : {2, 3}) {
      const Dist exact = exact_k_radius(g, k).radius;
      const Dist greedy = gonzalez_2approx(g, k).radius;
      auto alg1 = approximate_radius(
          g, k, [k](const Graph& h, Radius R, const ApproxConfig& c) { return decide_kcenter_2k(h, k, R, c); }, cfg);
      auto halves = approximate_radius(
          g, k, [k](const Graph& h, Radius R, const ApproxConfig& c) { return decide_kcenter_32(h, k, R, c); }, cfg);
      std::printf("C%-3zu k=%zu exact=%u gonzalez=%u k-2k=%u k-32=%u\n", n, k, exact, greedy, alg1.solution.radius,
                  halves.solution.radius);
    }
  }
  return 0;
}
