#pragma once

#include <array>
#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "slicebundle/quaternion.hpp"
#include "slicebundle/slice.hpp"

namespace slicebundle {

using MultiIndex = std::vector<int>;
using Complex = std::complex<double>;
// (x_k, y_k) pairs of the complex coordinates accompanying a slot evaluation.
using PairList = std::vector<std::array<double, 2>>;

inline constexpr double kCoeffPruneTol = 1e-300;

// Embedding of C into the slice C(axis) and its left inverse.
inline Quaternion embed(const Complex& c, const UnitImaginary& axis) {
  return Quaternion(c.real()) + c.imag() * axis.q();
}

inline Complex slice_part(const Quaternion& q, const UnitImaginary& axis) {
  return {q.scalar(), -(q * axis.q()).scalar()};
}

// Integer power by repeated multiplication (deterministic, exact flop order).
inline Complex cpow_int(Complex c, int m) {
  Complex r{1.0, 0.0};
  for (int t = 0; t < m; ++t) r *= c;
  return r;
}

// Truncated power series in n variables with quaternion coefficients and
// real expansion centers. Terms are kept in lexicographic multi-index order;
// coefficients below kCoeffPruneTol are pruned (canonical form).
class MultiSeries {
 public:
  MultiSeries(int n, int max_deg, std::vector<double> center)
      : n_(n), max_deg_(max_deg), center_(std::move(center)) {
    if (n_ < 1 || static_cast<int>(center_.size()) != n_)
      throw DimensionMismatch("MultiSeries: center arity does not match n");
    if (max_deg_ < 0) throw std::out_of_range("MultiSeries: negative degree bound");
  }

  static MultiSeries constant(int n, std::vector<double> center, const Quaternion& c) {
    MultiSeries s(n, 0, std::move(center));
    s.set(MultiIndex(n, 0), c);
    return s;
  }

  int vars() const { return n_; }
  int max_degree() const { return max_deg_; }
  const std::vector<double>& center() const { return center_; }
  const std::map<MultiIndex, Quaternion>& terms() const { return terms_; }

  void set(const MultiIndex& alpha, const Quaternion& c) {
    check_index(alpha);
    if (norm(c) <= kCoeffPruneTol) {
      terms_.erase(alpha);
    } else {
      terms_[alpha] = c;
    }
  }

  void add_to(const MultiIndex& alpha, const Quaternion& c) {
    check_index(alpha);
    auto it = terms_.find(alpha);
    Quaternion next = (it == terms_.end()) ? c : it->second + c;
    set(alpha, next);
  }

  Quaternion at(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Quaternion() : it->second;
  }

  bool same_shape(const MultiSeries& other) const {
    return n_ == other.n_ && center_ == other.center_;
  }

 private:
  void check_index(const MultiIndex& alpha) const {
    if (static_cast<int>(alpha.size()) != n_)
      throw DimensionMismatch("MultiSeries: multi-index arity mismatch");
    for (int a : alpha)
      if (a < 0 || a > max_deg_)
        throw std::out_of_range("MultiSeries: multi-index outside degree bound");
  }

  int n_;
  int max_deg_;
  std::vector<double> center_;
  std::map<MultiIndex, Quaternion> terms_;
};

// Evaluation request: variable `slot` (1-based) carries the quaternion q, the
// remaining variables carry complex values x_k + axis y_k in increasing k
// order.
struct EvalPoint {
  int slot = 1;
  Quaternion q;
  PairList zs;
  UnitImaginary axis = sentinel_axis();
};

// (q - w)^{*m} = 1/2 (1 + I_q i)(conj(z) - w)^m + 1/2 (1 - I_q i)(z - w)^m,
// with z = x + i y from slice_coords(q). For q in the axis slice this is the
// ordinary power (q - w)^m.
inline Quaternion star_power(const Quaternion& q, double w, int m, const UnitImaginary& axis) {
  const SliceCoords sc = slice_coords(q);
  const Complex z{sc.x, sc.y};
  const Complex minus_half = cpow_int(std::conj(z) - w, m);
  const Complex plus_half = cpow_int(z - w, m);
  const Quaternion mix = sc.axis.q() * axis.q();
  return 0.5 * ((kOne + mix) * embed(minus_half, axis) + (kOne - mix) * embed(plus_half, axis));
}

namespace detail {

inline void check_point(const MultiSeries& f, const EvalPoint& p) {
  if (p.slot < 1 || p.slot > f.vars())
    throw DimensionMismatch("eval_slice: slot outside 1..n");
  if (static_cast<int>(p.zs.size()) != f.vars() - 1)
    throw DimensionMismatch("eval_slice: point arity does not match n");
}

// Power tables for the complex factors (one row per variable, slot row empty)
// and the star powers of the slot variable.
struct EvalTables {
  std::vector<std::vector<Complex>> zpow;
  std::vector<Quaternion> spow;
};

inline EvalTables make_tables(const MultiSeries& f, const EvalPoint& p) {
  EvalTables t;
  const int n = f.vars();
  const int deg = f.max_degree();
  t.zpow.resize(n);
  int zi = 0;
  for (int k = 0; k < n; ++k) {
    if (k + 1 == p.slot) continue;
    const Complex z{p.zs[zi][0], p.zs[zi][1]};
    ++zi;
    auto& row = t.zpow[k];
    row.resize(deg + 1);
    row[0] = {1.0, 0.0};
    for (int d = 1; d <= deg; ++d) row[d] = row[d - 1] * (z - f.center()[k]);
  }
  t.spow.resize(deg + 1);
  for (int d = 0; d <= deg; ++d)
    t.spow[d] = star_power(p.q, f.center()[p.slot - 1], d, p.axis);
  return t;
}

}  // namespace detail

// f(..., q, ...) = sum over alpha of
//   (q - w_l)^{*a_l} * prod_{k != l} (z_k - w_k)^{a_k} * u_alpha,
// factors multiplied in exactly this order, terms in lexicographic order.
inline Quaternion eval_slice(const MultiSeries& f, const EvalPoint& p) {
  detail::check_point(f, p);
  const detail::EvalTables t = detail::make_tables(f, p);
  Quaternion acc;
  for (const auto& [alpha, u] : f.terms()) {
    Complex block{1.0, 0.0};
    for (int k = 0; k < f.vars(); ++k) {
      if (k + 1 == p.slot) continue;
      block *= t.zpow[k][alpha[k]];
    }
    acc += t.spow[alpha[p.slot - 1]] * embed(block, p.axis) * u;
  }
  return acc;
}

// Evaluation with every variable in the slice C(axis); equals eval_slice with
// the slot value embedded in-slice.
inline Quaternion eval_at_complex_point(const MultiSeries& f, const std::vector<Complex>& Z,
                                        const UnitImaginary& axis) {
  if (static_cast<int>(Z.size()) != f.vars())
    throw DimensionMismatch("eval_at_complex_point: arity mismatch");
  const int deg = f.max_degree();
  std::vector<std::vector<Complex>> zpow(f.vars());
  for (int k = 0; k < f.vars(); ++k) {
    zpow[k].resize(deg + 1);
    zpow[k][0] = {1.0, 0.0};
    for (int d = 1; d <= deg; ++d) zpow[k][d] = zpow[k][d - 1] * (Z[k] - f.center()[k]);
  }
  Quaternion acc;
  for (const auto& [alpha, u] : f.terms()) {
    Complex block{1.0, 0.0};
    for (int k = 0; k < f.vars(); ++k) block *= zpow[k][alpha[k]];
    acc += embed(block, axis) * u;
  }
  return acc;
}

inline MultiSeries series_add(const MultiSeries& f, const MultiSeries& g) {
  if (f.vars() != g.vars()) throw DimensionMismatch("series_add: variable count differs");
  if (f.center() != g.center()) throw CenterMismatch("series_add: centers differ");
  MultiSeries out(f.vars(), std::max(f.max_degree(), g.max_degree()), f.center());
  for (const auto& [a, u] : f.terms()) out.add_to(a, u);
  for (const auto& [b, v] : g.terms()) out.add_to(b, v);
  return out;
}

// Right scalar action f * b, coefficient-wise u_alpha b.
inline MultiSeries series_scale_right(const MultiSeries& f, const Quaternion& b) {
  MultiSeries out(f.vars(), f.max_degree(), f.center());
  for (const auto& [a, u] : f.terms()) out.set(a, u * b);
  return out;
}

// Star product: coefficient convolution with quaternion multiplication,
// (f * g)_delta = sum_{alpha + beta = delta} u_alpha v_beta.
inline MultiSeries star_product(const MultiSeries& f, const MultiSeries& g) {
  if (f.vars() != g.vars()) throw DimensionMismatch("star_product: variable count differs");
  if (f.center() != g.center()) throw CenterMismatch("star_product: centers differ");
  MultiSeries out(f.vars(), f.max_degree() + g.max_degree(), f.center());
  MultiIndex delta(f.vars());
  for (const auto& [a, u] : f.terms()) {
    for (const auto& [b, v] : g.terms()) {
      for (int k = 0; k < f.vars(); ++k) delta[k] = a[k] + b[k];
      out.add_to(delta, u * v);
    }
  }
  return out;
}

// Frame split of a coefficient: u = c + d j with c, d in C(i).
inline std::pair<Complex, Complex> coefficient_split(const Quaternion& u, const Frame& fr) {
  const FrameComponents d = split_components(u, fr);
  return {Complex{d.d1, d.d2}, Complex{d.d3, d.d4}};
}

// Bullet product: split every coefficient as c + d j in the frame and
// convolve the two complex legs independently, (c*c')_delta + (d*d')_delta j.
// Cross legs annihilate; the product depends on the frame.
inline MultiSeries bullet_product(const MultiSeries& f, const MultiSeries& g, const Frame& fr) {
  if (f.vars() != g.vars()) throw DimensionMismatch("bullet_product: variable count differs");
  if (f.center() != g.center()) throw CenterMismatch("bullet_product: centers differ");
  MultiSeries out(f.vars(), f.max_degree() + g.max_degree(), f.center());
  MultiIndex delta(f.vars());
  for (const auto& [a, u] : f.terms()) {
    const auto [cu, du] = coefficient_split(u, fr);
    for (const auto& [b, v] : g.terms()) {
      const auto [cv, dv] = coefficient_split(v, fr);
      for (int k = 0; k < f.vars(); ++k) delta[k] = a[k] + b[k];
      const Complex cleg = cu * cv;
      const Complex dleg = du * dv;
      out.add_to(delta, assemble_components(cleg.real(), cleg.imag(), dleg.real(),
                                            dleg.imag(), fr));
    }
  }
  return out;
}

// f^c: coefficient-wise quaternion conjugation.
inline MultiSeries series_conjugate(const MultiSeries& f) {
  MultiSeries out(f.vars(), f.max_degree(), f.center());
  for (const auto& [a, u] : f.terms()) out.set(a, conj(u));
  return out;
}

// f^s = f * f^c (one variable).
inline MultiSeries symmetrize(const MultiSeries& f) {
  if (f.vars() != 1) throw ArityUnsupported("symmetrize: defined for one variable");
  return star_product(f, series_conjugate(f));
}

namespace detail {

inline std::vector<Quaternion> dense_coefficients(const MultiSeries& f, int upto) {
  std::vector<Quaternion> c(upto + 1);
  for (const auto& [a, u] : f.terms())
    if (a[0] <= upto) c[a[0]] = u;
  return c;
}

}  // namespace detail

// Truncated star inverse of a one-variable series: g with (f * g) = 1 through
// degree N, by the convolution recursion g_0 = u_0^{-1},
// g_m = -u_0^{-1} sum_{k=1..m} u_k g_{m-k}.
inline MultiSeries star_inverse(const MultiSeries& f, int N) {
  if (f.vars() != 1) throw ArityUnsupported("star_inverse: defined for one variable");
  const Quaternion u0 = f.at({0});
  if (norm(u0) < 1e-10)
    throw NonInvertibleConstantTerm("star_inverse: constant term too small");
  const Quaternion u0inv = quat_inverse(u0);
  const std::vector<Quaternion> u = detail::dense_coefficients(f, std::min(N, f.max_degree()));
  std::vector<Quaternion> g(N + 1);
  g[0] = u0inv;
  for (int m = 1; m <= N; ++m) {
    Quaternion s;
    for (int k = 1; k <= m && k < static_cast<int>(u.size()); ++k) s += u[k] * g[m - k];
    g[m] = -(u0inv * s);
  }
  MultiSeries out(1, N, f.center());
  for (int m = 0; m <= N; ++m) out.set({m}, g[m]);
  return out;
}

// Formal partial derivative in variable k (1-based): alpha -> alpha_k times
// the lowered index. Matches the slice derivative on the slot variable and
// the complex derivative elsewhere.
inline MultiSeries coefficient_derivative(const MultiSeries& f, int k) {
  if (k < 1 || k > f.vars()) throw DimensionMismatch("coefficient_derivative: bad variable");
  MultiSeries out(f.vars(), f.max_degree(), f.center());
  for (const auto& [a, u] : f.terms()) {
    if (a[k - 1] == 0) continue;
    MultiIndex b = a;
    b[k - 1] -= 1;
    out.add_to(b, static_cast<double>(a[k - 1]) * u);
  }
  return out;
}

// Even/odd split in the slot variable: f1 = (f(q) + f(conj q))/2 and
// f2 = (f(q) - f(conj q))/2. Requires centered series.
inline std::pair<Quaternion, Quaternion> holo_antiholo_split(const MultiSeries& f,
                                                             const EvalPoint& p) {
  for (double c : f.center())
    if (c != 0.0)
      throw DomainUnsupported("holo_antiholo_split: requires centered series");
  const Quaternion plus = eval_slice(f, p);
  EvalPoint pc = p;
  pc.q = conj(p.q);
  const Quaternion minus = eval_slice(f, pc);
  return {0.5 * (plus + minus), 0.5 * (plus - minus)};
}

// A series bound to a choice of quaternionic slot. Swapping the slot keeps
// the coefficients and rebinds which variable the evaluation treats as
// quaternionic.
struct SlotView {
  const MultiSeries* series = nullptr;
  int slot = 1;

  Quaternion eval(const Quaternion& q, const PairList& others, const UnitImaginary& axis) const {
    return eval_slice(*series, EvalPoint{slot, q, others, axis});
  }
};

inline SlotView slot_view(const MultiSeries& f, int ell) {
  if (ell < 1 || ell > f.vars()) throw DimensionMismatch("slot_view: bad slot");
  return {&f, ell};
}

inline SlotView gamma_swap(const MultiSeries& f, int ell, int m) {
  if (ell < 1 || ell > f.vars() || m < 1 || m > f.vars())
    throw DimensionMismatch("gamma_swap: bad slot");
  return {&f, m};
}

inline SlotView gamma_swap(const SlotView& v, int ell, int m) {
  if (ell < 1 || m < 1 || ell > v.series->vars() || m > v.series->vars())
    throw DimensionMismatch("gamma_swap: bad slot");
  SlotView out = v;
  if (v.slot == ell)
    out.slot = m;
  else if (v.slot == m)
    out.slot = ell;
  return out;
}

}  // namespace slicebundle
