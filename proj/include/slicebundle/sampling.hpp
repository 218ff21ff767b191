#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "slicebundle/several.hpp"

namespace slicebundle {

// Worker cap from SLICEBUNDLE_THREADS (unset or 0 = hardware concurrency).
inline int worker_cap() {
  const char* env = std::getenv("SLICEBUNDLE_THREADS");
  long v = 0;
  if (env != nullptr) {
    char* end = nullptr;
    v = std::strtol(env, &end, 10);
    if (end == env || v < 0) v = 0;
  }
  if (v == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    v = hw == 0 ? 1 : static_cast<long>(hw);
  }
  return static_cast<int>(v);
}

// Max-reduction over [0, count). Max is order-insensitive, so chunked threads
// give the same result as the serial sweep bit for bit.
inline double parallel_max(std::size_t count, const std::function<double(std::size_t)>& fn) {
  const int workers = std::min<long>(worker_cap(), static_cast<long>(count));
  if (workers <= 1 || count < 256) {
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, fn(i));
    return worst;
  }
  std::vector<double> partial(workers, 0.0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      const std::size_t lo = static_cast<std::size_t>(w) * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      double worst = 0.0;
      for (std::size_t i = lo; i < hi; ++i) worst = std::max(worst, fn(i));
      partial[w] = worst;
    });
  }
  for (auto& t : pool) t.join();
  double worst = 0.0;
  for (double v : partial) worst = std::max(worst, v);
  return worst;
}

// Tensor grid for the identity checks: `per` symmetric values per real
// coordinate, the (x, y) box of each variable inscribed in its reduced disc
// so every point is strictly interior and Inv^l maps the grid onto itself.
inline std::vector<GridPoint> identity_grid(const Domain& dom, int per = 8,
                                            double radius_fraction = 0.9) {
  const int n = dom.vars();
  std::vector<std::vector<double>> coord(2 * n);
  for (int k = 0; k < n; ++k) {
    const double half = radius_fraction * dom.radius[k] / std::sqrt(2.0);
    for (int t = 0; t < per; ++t) {
      const double g = (2.0 * t + 1.0 - per) / per;
      coord[2 * k].push_back(dom.center[k] + half * g);
      coord[2 * k + 1].push_back(half * g);
    }
  }
  std::vector<GridPoint> grid;
  grid.reserve(static_cast<std::size_t>(std::pow(per, 2 * n)));
  std::vector<int> digit(2 * n, 0);
  while (true) {
    GridPoint p;
    p.xy.resize(n);
    for (int k = 0; k < n; ++k)
      p.xy[k] = {coord[2 * k][digit[2 * k]], coord[2 * k + 1][digit[2 * k + 1]]};
    grid.push_back(std::move(p));
    int k = 2 * n - 1;
    while (k >= 0 && ++digit[k] == per) digit[k--] = 0;
    if (k < 0) break;
  }
  return grid;
}

// Boundary-biased sampling for sup-norm estimates: Chebyshev radial nodes
// clustered at the rim, uniform angles. Inequality checks evaluate both of
// their sides on this same grid.
inline std::vector<GridPoint> supnorm_grid(const Domain& dom, int radial = 4, int angular = 64,
                                           double radius_fraction = 0.95) {
  const int n = dom.vars();
  std::vector<std::vector<std::array<double, 2>>> per_var(n);
  const double pi = 3.14159265358979323846;
  for (int k = 0; k < n; ++k) {
    for (int t = 0; t < radial; ++t) {
      const double rho =
          radius_fraction * dom.radius[k] * std::cos(pi * (2.0 * t + 1.0) / (4.0 * radial));
      for (int a = 0; a < angular; ++a) {
        const double th = 2.0 * pi * a / angular;
        per_var[k].push_back(
            {dom.center[k] + rho * std::cos(th), rho * std::sin(th)});
      }
    }
  }
  std::vector<GridPoint> grid;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    GridPoint p;
    p.xy.resize(n);
    for (int k = 0; k < n; ++k) p.xy[k] = per_var[k][digit[k]];
    grid.push_back(std::move(p));
    int k = n - 1;
    while (k >= 0 && ++digit[k] == per_var[k].size()) digit[k--] = 0;
    if (k < 0) break;
  }
  return grid;
}

}  // namespace slicebundle
