#pragma once

#include <complex>
#include <vector>

#include "slicebundle/series.hpp"

namespace slicebundle {

inline constexpr double kPoleGuard = 1e-12;
inline constexpr double kTargetRadiusFraction = 0.95;

// Closed polydisc D(A, r)^n in a fixed slice: n complex centers, one shared
// radius, the slice axis. The distinguished torus T(A, r) carries the
// quadrature nodes.
struct Polydisc {
  std::vector<Complex> centers;
  double radius = 1.0;
  UnitImaginary axis = sentinel_axis();

  int vars() const { return static_cast<int>(centers.size()); }
};

// (w - q)^{-*} = 1/2 (1 + I_q i) (w - conj z)^{-1} + 1/2 (1 - I_q i) (w - z)^{-1}
// with z = x + i y the slot slice coordinates. For q in the axis slice this
// is the ordinary resolvent (w - q)^{-1}.
inline Quaternion slice_kernel(const Complex& w, const Quaternion& q, const UnitImaginary& axis) {
  const SliceCoords sc = slice_coords(q);
  const Complex z{sc.x, sc.y};
  if (std::abs(w - z) <= kPoleGuard || std::abs(w - std::conj(z)) <= kPoleGuard)
    throw PoleHit("slice_kernel: evaluation at a kernel pole");
  const Complex plus_half = 1.0 / (w - std::conj(z));
  const Complex minus_half = 1.0 / (w - z);
  const Quaternion mix = sc.axis.q() * axis.q();
  return 0.5 * ((kOne + mix) * embed(plus_half, axis) + (kOne - mix) * embed(minus_half, axis));
}

// Slice extension of the negative power (w - q)^{-(alpha+1)}; alpha = 0
// reduces to slice_kernel.
inline Quaternion slice_kernel_power(const Complex& w, const Quaternion& q,
                                     const UnitImaginary& axis, int alpha) {
  const SliceCoords sc = slice_coords(q);
  const Complex z{sc.x, sc.y};
  if (std::abs(w - z) <= kPoleGuard || std::abs(w - std::conj(z)) <= kPoleGuard)
    throw PoleHit("slice_kernel_power: evaluation at a kernel pole");
  const Complex plus_half = 1.0 / cpow_int(w - std::conj(z), alpha + 1);
  const Complex minus_half = 1.0 / cpow_int(w - z, alpha + 1);
  const Quaternion mix = sc.axis.q() * axis.q();
  return 0.5 * ((kOne + mix) * embed(plus_half, axis) + (kOne - mix) * embed(minus_half, axis));
}

namespace detail {

struct TorusSetup {
  // node[k][t]: k-th circle value at angle t; nodefac[k][t] = r e^{i theta}/m,
  // the per-node share of dw_k / (2 pi i) under the m-point trapezoid rule.
  std::vector<std::vector<Complex>> node;
  std::vector<std::vector<Complex>> nodefac;
  // powtab[k][t][d] = (node - center_k)^d for the series factors.
  std::vector<std::vector<std::vector<Complex>>> powtab;
};

inline TorusSetup make_torus(const MultiSeries& f, const Polydisc& pd, int m,
                             double theta_offset) {
  TorusSetup t;
  const int n = pd.vars();
  const int deg = f.max_degree();
  t.node.resize(n);
  t.nodefac.resize(n);
  t.powtab.resize(n);
  const double step = 2.0 * 3.14159265358979323846 / m;
  for (int k = 0; k < n; ++k) {
    t.node[k].resize(m);
    t.nodefac[k].resize(m);
    t.powtab[k].assign(m, std::vector<Complex>(deg + 1));
    for (int s = 0; s < m; ++s) {
      const double th = theta_offset + step * s;
      const Complex e{std::cos(th), std::sin(th)};
      t.node[k][s] = pd.centers[k] + pd.radius * e;
      t.nodefac[k][s] = pd.radius * e / static_cast<double>(m);
      t.powtab[k][s][0] = {1.0, 0.0};
      const Complex dz = t.node[k][s] - f.center()[k];
      for (int d = 1; d <= deg; ++d) t.powtab[k][s][d] = t.powtab[k][s][d - 1] * dz;
    }
  }
  return t;
}

inline void check_cauchy_inputs(const MultiSeries& f, const Polydisc& pd, int ell,
                                const Frame& fr, const EvalPoint& target, int m) {
  if (f.vars() != pd.vars()) throw DimensionMismatch("cauchy: series/polydisc arity differ");
  if (target.slot != ell) throw DimensionMismatch("cauchy: target slot differs from ell");
  if (static_cast<int>(target.zs.size()) != f.vars() - 1)
    throw DimensionMismatch("cauchy: target arity mismatch");
  if (m < 2) throw DimensionMismatch("cauchy: need at least two nodes per circle");
  const Quaternion axis_gap = fr.i().q() - pd.axis.q();
  if (norm(axis_gap) > 1e-12) throw FrameMismatch("cauchy: frame axis differs from polydisc axis");
  if (norm(target.axis.q() - pd.axis.q()) > 1e-12)
    throw FrameMismatch("cauchy: target axis differs from polydisc axis");

  // Both kernel poles x +- i y must stay strictly inside the reduced disc.
  const SliceCoords sc = slice_coords(target.q);
  const Complex zslot{sc.x, sc.y};
  const double rmax = kTargetRadiusFraction * pd.radius;
  int zi = 0;
  for (int k = 0; k < f.vars(); ++k) {
    if (k + 1 == ell) {
      if (std::abs(zslot - pd.centers[k]) > rmax ||
          std::abs(std::conj(zslot) - pd.centers[k]) > rmax)
        throw OutOfDomain("cauchy: slot target outside the reduced polydisc");
    } else {
      const Complex z{target.zs[zi][0], target.zs[zi][1]};
      ++zi;
      if (std::abs(z - pd.centers[k]) > rmax)
        throw OutOfDomain("cauchy: target outside the reduced polydisc");
    }
  }
}

}  // namespace detail

// Trapezoid realization of the slice Cauchy formula on the distinguished
// torus: sum over nodes of
//   kernel(w_l, q) * [complex block] * f(W),
// where the complex block collects the commuting C(i) scalars: the inverse
// factors (w_k - z_k)^{-1} for k != l, and r e^{i theta}/m per circle (the
// per-node share of dw_k/(2 pi i)). Node order is lexicographic; doubling m
// squares the aliasing error until rounding.
inline Quaternion cauchy_eval(const MultiSeries& f, const Polydisc& pd, int ell, const Frame& fr,
                              const EvalPoint& target, int m, double theta_offset = 0.0) {
  detail::check_cauchy_inputs(f, pd, ell, fr, target, m);
  const int n = f.vars();
  const detail::TorusSetup torus = detail::make_torus(f, pd, m, theta_offset);

  std::vector<Complex> ztarget(n);  // target complex coordinates, slot unused
  {
    int zi = 0;
    for (int k = 0; k < n; ++k)
      if (k + 1 != ell) ztarget[k] = Complex{target.zs[zi][0], target.zs[zi][1]}, ++zi;
  }

  Quaternion acc;
  std::vector<int> digit(n, 0);
  while (true) {
    Complex block{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
      block *= torus.nodefac[k][digit[k]];
      if (k + 1 == ell) continue;
      const Complex gap = torus.node[k][digit[k]] - ztarget[k];
      if (std::abs(gap) <= kPoleGuard) throw PoleHit("cauchy_eval: target meets a node circle");
      block /= gap;
    }
    const Quaternion kernel = slice_kernel(torus.node[ell - 1][digit[ell - 1]], target.q, pd.axis);
    Quaternion fW;
    for (const auto& [alpha, u] : f.terms()) {
      Complex monomial{1.0, 0.0};
      for (int k = 0; k < n; ++k) monomial *= torus.powtab[k][digit[k]][alpha[k]];
      fW += embed(monomial, pd.axis) * u;
    }
    acc += kernel * embed(block, pd.axis) * fW;

    int k = n - 1;
    while (k >= 0 && ++digit[k] == m) digit[k--] = 0;
    if (k < 0) break;
  }
  return acc;
}

// Derivative extension: prefactor alpha!, kernel power alpha_l + 1 on the
// slot, inverse powers alpha_k + 1 on the remaining circles.
inline Quaternion cauchy_deriv(const MultiSeries& f, const Polydisc& pd, int ell, const Frame& fr,
                               const EvalPoint& target, const MultiIndex& alpha, int m,
                               double theta_offset = 0.0) {
  detail::check_cauchy_inputs(f, pd, ell, fr, target, m);
  if (static_cast<int>(alpha.size()) != f.vars())
    throw DimensionMismatch("cauchy_deriv: derivative order arity mismatch");
  const int n = f.vars();
  const detail::TorusSetup torus = detail::make_torus(f, pd, m, theta_offset);

  std::vector<Complex> ztarget(n);
  {
    int zi = 0;
    for (int k = 0; k < n; ++k)
      if (k + 1 != ell) ztarget[k] = Complex{target.zs[zi][0], target.zs[zi][1]}, ++zi;
  }
  double factorial = 1.0;
  for (int k = 0; k < n; ++k)
    for (int t = 2; t <= alpha[k]; ++t) factorial *= t;

  Quaternion acc;
  std::vector<int> digit(n, 0);
  while (true) {
    Complex block{1.0, 0.0};
    for (int k = 0; k < n; ++k) {
      block *= torus.nodefac[k][digit[k]];
      if (k + 1 == ell) continue;
      const Complex gap = torus.node[k][digit[k]] - ztarget[k];
      if (std::abs(gap) <= kPoleGuard) throw PoleHit("cauchy_deriv: target meets a node circle");
      block /= cpow_int(gap, alpha[k] + 1);
    }
    const Quaternion kernel = slice_kernel_power(torus.node[ell - 1][digit[ell - 1]], target.q,
                                                 pd.axis, alpha[ell - 1]);
    Quaternion fW;
    for (const auto& [idx, u] : f.terms()) {
      Complex monomial{1.0, 0.0};
      for (int k = 0; k < n; ++k) monomial *= torus.powtab[k][digit[k]][idx[k]];
      fW += embed(monomial, pd.axis) * u;
    }
    acc += kernel * embed(block, pd.axis) * fW;

    int k = n - 1;
    while (k >= 0 && ++digit[k] == m) digit[k--] = 0;
    if (k < 0) break;
  }
  return factorial * acc;
}

}  // namespace slicebundle
