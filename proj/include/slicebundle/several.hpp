#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "slicebundle/series.hpp"

namespace slicebundle {

// Point of the product of slice half-discs: n pairs (x_k, y_k).
struct GridPoint {
  PairList xy;

  int vars() const { return static_cast<int>(xy.size()); }
};

// Product of discs (x_k - c_k)^2 + y_k^2 < r_k^2 with real centers; the slice
// shadow of a product of balls B^4(c_k, r_k).
struct Domain {
  std::vector<double> center;
  std::vector<double> radius;

  static Domain unit_balls(int n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
  }

  int vars() const { return static_cast<int>(center.size()); }

  bool contains(double x, double y, int k) const {
    const double dx = x - center[k];
    return dx * dx + y * y < radius[k] * radius[k];
  }

  bool contains(const GridPoint& p) const {
    if (p.vars() != vars()) return false;
    for (int k = 0; k < vars(); ++k)
      if (!contains(p.xy[k][0], p.xy[k][1], k)) return false;
    return true;
  }

  bool is_unit_balls() const {
    for (int k = 0; k < vars(); ++k)
      if (center[k] != 0.0 || radius[k] != 1.0) return false;
    return true;
  }
};

// Inv^l flips the sign of y_l and fixes everything else; an involution.
inline GridPoint inv_ell(GridPoint p, int ell) {
  if (ell < 1 || ell > p.vars()) throw DimensionMismatch("inv_ell: bad slot");
  p.xy[ell - 1][1] = -p.xy[ell - 1][1];
  return p;
}

// Values of the four harmonic components at one grid point.
struct QuadComponents {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

inline Quaternion assemble_components(const QuadComponents& c, const Frame& fr) {
  return assemble_components(c.alpha, c.beta, c.gamma, c.delta, fr);
}

// Evaluates a series with C(axis) coefficients at an all-complex grid point.
inline Complex eval_complex(const MultiSeries& f, const GridPoint& p, const UnitImaginary& axis) {
  if (p.vars() != f.vars()) throw DimensionMismatch("eval_complex: arity mismatch");
  Complex acc{0.0, 0.0};
  const int deg = f.max_degree();
  std::vector<std::vector<Complex>> zpow(f.vars());
  for (int k = 0; k < f.vars(); ++k) {
    zpow[k].resize(deg + 1);
    zpow[k][0] = {1.0, 0.0};
    const Complex dz = Complex{p.xy[k][0], p.xy[k][1]} - f.center()[k];
    for (int d = 1; d <= deg; ++d) zpow[k][d] = zpow[k][d - 1] * dz;
  }
  for (const auto& [alpha, u] : f.terms()) {
    Complex block{1.0, 0.0};
    for (int k = 0; k < f.vars(); ++k) block *= zpow[k][alpha[k]];
    acc += block * slice_part(u, axis);
  }
  return acc;
}

// Pair of conjugate-harmonic pairs witnessed by two holomorphic series F, G
// whose coefficients live in C(frame.i). The induced components are
// (alpha, beta, gamma, delta) = (Re F, Im F, Re G, Im G).
class HarmonicQuadruple {
 public:
  HarmonicQuadruple(MultiSeries F, MultiSeries G, Frame frame,
                    std::optional<Domain> domain = std::nullopt)
      : F_(std::move(F)), G_(std::move(G)), frame_(std::move(frame)) {
    if (F_.vars() != G_.vars())
      throw DimensionMismatch("HarmonicQuadruple: F and G arity differ");
    if (F_.center() != G_.center())
      throw CenterMismatch("HarmonicQuadruple: F and G centers differ");
    check_coefficients(F_);
    check_coefficients(G_);
    if (domain) {
      if (domain->vars() != F_.vars())
        throw DimensionMismatch("HarmonicQuadruple: domain arity mismatch");
      domain_ = *domain;
    } else {
      domain_ = Domain{F_.center(), std::vector<double>(F_.vars(), 1.0)};
    }
  }

  const MultiSeries& F() const { return F_; }
  const MultiSeries& G() const { return G_; }
  const Frame& frame() const { return frame_; }
  const Domain& domain() const { return domain_; }
  int vars() const { return F_.vars(); }

  QuadComponents components(const GridPoint& p) const {
    const Complex fv = eval_complex(F_, p, frame_.i());
    const Complex gv = eval_complex(G_, p, frame_.i());
    return {fv.real(), fv.imag(), gv.real(), gv.imag()};
  }

  // The quaternion series u_alpha = c_alpha + d_alpha j whose slot evaluation
  // reproduces the extension of this quadruple.
  MultiSeries combined() const {
    MultiSeries out(F_.vars(), std::max(F_.max_degree(), G_.max_degree()), F_.center());
    for (const auto& [a, u] : F_.terms()) out.add_to(a, u);
    for (const auto& [a, u] : G_.terms()) out.add_to(a, u * frame_.j().q());
    return out;
  }

 private:
  void check_coefficients(const MultiSeries& s) const {
    for (const auto& [a, u] : s.terms()) {
      const Quaternion rem = u - embed(slice_part(u, frame_.i()), frame_.i());
      if (norm(rem) > 1e-12)
        throw OffSliceCoefficient("HarmonicQuadruple: coefficient leaves C(i)");
    }
  }

  MultiSeries F_;
  MultiSeries G_;
  Frame frame_;
  Domain domain_;
};

inline HarmonicQuadruple quad_add(const HarmonicQuadruple& a, const HarmonicQuadruple& b) {
  return HarmonicQuadruple(series_add(a.F(), b.F()), series_add(a.G(), b.G()), a.frame(),
                           a.domain());
}

// Right action f -> f b carried to the component series: with b = b1 + b2 j
// in the frame, (F, G) -> (F b1 - G conj(b2), F b2 + G conj(b1)).
inline HarmonicQuadruple quad_scale_right(const HarmonicQuadruple& a, const Quaternion& b) {
  const auto [b1, b2] = coefficient_split(b, a.frame());
  const UnitImaginary& i = a.frame().i();
  const Quaternion q1 = embed(b1, i);
  const Quaternion q2 = embed(b2, i);
  const Quaternion q1c = embed(std::conj(b1), i);
  const Quaternion q2c = embed(std::conj(b2), i);
  MultiSeries F = series_add(series_scale_right(a.F(), q1),
                             series_scale_right(a.G(), -1.0 * q2c));
  MultiSeries G = series_add(series_scale_right(a.F(), q2),
                             series_scale_right(a.G(), q1c));
  return HarmonicQuadruple(std::move(F), std::move(G), a.frame(), a.domain());
}

// Component data fed to the extension operator; series-backed quadruples and
// derived restriction data share this evaluation surface.
using QuadEvaluator = std::function<QuadComponents(const GridPoint&)>;

// Slot-l function handle: evaluation at a quaternion in slot l with the other
// variables as real pairs.
using SlotFunction = std::function<Quaternion(const Quaternion& q, const PairList& others)>;

inline GridPoint grid_insert(const PairList& others, int ell, double x, double y) {
  GridPoint p;
  p.xy.reserve(others.size() + 1);
  int zi = 0;
  for (int k = 0; k < static_cast<int>(others.size()) + 1; ++k) {
    if (k + 1 == ell)
      p.xy.push_back({x, y});
    else
      p.xy.push_back(others[zi++]);
  }
  return p;
}

inline PairList grid_drop(const GridPoint& p, int ell) {
  PairList others;
  others.reserve(p.xy.size() - 1);
  for (int k = 0; k < p.vars(); ++k)
    if (k + 1 != ell) others.push_back(p.xy[k]);
  return others;
}

// Core of P^l over any component evaluator:
//   1/2 (1 + I i)[assembled components after Inv^l]
// + 1/2 (1 - I i)[assembled components],
// both brackets read at (x_1, y_1, ..., x_l, y_l, ..., x_n, y_n).
inline Quaternion extend_eval(const QuadEvaluator& comps, const Frame& fr, int ell, double x,
                              double y, const UnitImaginary& target_axis,
                              const PairList& others) {
  const GridPoint p = grid_insert(others, ell, x, y);
  const Quaternion plus = assemble_components(comps(p), fr);
  const Quaternion minus = assemble_components(comps(inv_ell(p, ell)), fr);
  const Quaternion mix = target_axis.q() * fr.i().q();
  return 0.5 * ((kOne + mix) * minus + (kOne - mix) * plus);
}

// Raw extension formula with explicit slot slice coordinates; the sentinel
// independence of real slot values is checked against this entry point.
inline Quaternion p_ell_at(const HarmonicQuadruple& quad, int ell, double x, double y,
                           const UnitImaginary& target_axis, const PairList& others) {
  if (ell < 1 || ell > quad.vars()) throw DimensionMismatch("p_ell: bad slot");
  if (static_cast<int>(others.size()) != quad.vars() - 1)
    throw DimensionMismatch("p_ell: point arity mismatch");
  return extend_eval([&quad](const GridPoint& p) { return quad.components(p); }, quad.frame(),
                     ell, x, y, target_axis, others);
}

// P^l of the quadruple at slot value q and real pairs `others`.
inline Quaternion p_ell(const HarmonicQuadruple& quad, int ell, const Quaternion& q,
                        const PairList& others) {
  const SliceCoords sc = slice_coords(q);
  const GridPoint full = grid_insert(others, ell, sc.x, sc.y);
  if (!quad.domain().contains(full)) throw OutOfDomain("p_ell: point outside domain");
  return p_ell_at(quad, ell, sc.x, sc.y, sc.axis, others);
}

// Q^l restriction: evaluate h at (..., x_l + i y_l, ...) and take the frame
// components. For n = 1 this is exactly the one-slice component split.
inline QuadComponents e_components(const SlotFunction& h, const Frame& fr, int ell,
                                   const GridPoint& p) {
  const Quaternion slot_value =
      Quaternion(p.xy[ell - 1][0]) + p.xy[ell - 1][1] * fr.i().q();
  const Quaternion v = h(slot_value, grid_drop(p, ell));
  const FrameComponents d = split_components(v, fr);
  return {d.d1, d.d2, d.d3, d.d4};
}

inline SlotFunction extension_function(const HarmonicQuadruple& quad, int ell) {
  return [&quad, ell](const Quaternion& q, const PairList& others) {
    return p_ell(quad, ell, q, others);
  };
}

struct RoundtripResidual {
  double restriction_after_extension = 0.0;  // Q^l(P^l quad) against the components
  double extension_after_restriction = 0.0;  // P^l rebuilt from E values against P^l
  double max() const {
    return restriction_after_extension > extension_after_restriction
               ? restriction_after_extension
               : extension_after_restriction;
  }
};

// Both identity checks over a sample set. The dual direction rebuilds the
// extension from restriction values via extend_eval and draws the target
// axis per point from the supplied callback.
inline RoundtripResidual q_after_p_roundtrip(
    const HarmonicQuadruple& quad, int ell, const std::vector<GridPoint>& samples,
    const std::function<UnitImaginary(std::size_t)>& axis_for_sample) {
  RoundtripResidual r;
  const SlotFunction h = extension_function(quad, ell);
  const QuadEvaluator restricted = [&](const GridPoint& p) {
    return e_components(h, quad.frame(), ell, p);
  };
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const GridPoint& p = samples[s];
    const QuadComponents truth = quad.components(p);
    const QuadComponents back = restricted(p);
    const double res = std::max(
        std::max(std::abs(truth.alpha - back.alpha), std::abs(truth.beta - back.beta)),
        std::max(std::abs(truth.gamma - back.gamma), std::abs(truth.delta - back.delta)));
    if (res > r.restriction_after_extension) r.restriction_after_extension = res;

    const double x = p.xy[ell - 1][0];
    const double y = std::abs(p.xy[ell - 1][1]);
    const UnitImaginary axis = axis_for_sample(s);
    const PairList others = grid_drop(p, ell);
    const Quaternion direct = p_ell_at(quad, ell, x, y, axis, others);
    const Quaternion rebuilt = extend_eval(restricted, quad.frame(), ell, x, y, axis, others);
    const double dual = norm(direct - rebuilt);
    if (dual > r.extension_after_restriction) r.extension_after_restriction = dual;
  }
  return r;
}

// The aggregate projection family: one slot extension per variable backed by
// a single quadruple.
class SliceRegularFamily {
 public:
  explicit SliceRegularFamily(HarmonicQuadruple quad) : quad_(std::move(quad)) {}

  const HarmonicQuadruple& quad() const { return quad_; }
  int vars() const { return quad_.vars(); }

  Quaternion eval(int ell, const Quaternion& q, const PairList& others) const {
    return p_ell(quad_, ell, q, others);
  }

 private:
  HarmonicQuadruple quad_;
};

inline SliceRegularFamily family_project(HarmonicQuadruple quad) {
  return SliceRegularFamily(std::move(quad));
}

}  // namespace slicebundle
