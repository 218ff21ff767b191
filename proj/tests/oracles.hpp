#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they check. Quaternion products go through the structure-constant table,
// series products through dense array convolution, holomorphic values
// through std::complex arithmetic.

#include <array>
#include <complex>
#include <vector>

#include "slicebundle/quaternion.hpp"
#include "slicebundle/series.hpp"

namespace oracle {

using slicebundle::Quaternion;

// Basis products e_a e_b via the multiplication table of (1, e1, e2, e3):
// sign[a][b] and target index[a][b].
inline Quaternion mul(const Quaternion& a, const Quaternion& b) {
  static const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const double sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const double av[4] = {a.w, a.x, a.y, a.z};
  const double bv[4] = {b.w, b.x, b.y, b.z};
  double out[4] = {0, 0, 0, 0};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[idx[i][j]] += sgn[i][j] * av[i] * bv[j];
  return {out[0], out[1], out[2], out[3]};
}

inline Quaternion pow(const Quaternion& q, int m) {
  Quaternion r{1, 0, 0, 0};
  for (int t = 0; t < m; ++t) r = mul(r, q);
  return r;
}

// Dense one-variable convolution of quaternion coefficient vectors.
inline std::vector<Quaternion> conv(const std::vector<Quaternion>& a,
                                    const std::vector<Quaternion>& b) {
  std::vector<Quaternion> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += mul(a[i], b[j]);
  return c;
}

inline std::vector<Quaternion> dense1(const slicebundle::MultiSeries& f) {
  std::vector<Quaternion> c(f.max_degree() + 1);
  for (const auto& [alpha, u] : f.terms()) c[alpha[0]] = u;
  return c;
}

// Direct power-sum evaluation of a complex polynomial given by (alpha -> c).
inline std::complex<double> poly_eval(
    const std::vector<std::pair<std::vector<int>, std::complex<double>>>& terms,
    const std::vector<std::complex<double>>& z) {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [alpha, c] : terms) {
    std::complex<double> m{1.0, 0.0};
    for (std::size_t k = 0; k < alpha.size(); ++k)
      for (int t = 0; t < alpha[k]; ++t) m *= z[k];
    acc += c * m;
  }
  return acc;
}

}  // namespace oracle
