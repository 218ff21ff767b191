#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "slicebundle/several.hpp"

namespace slicebundle {

inline constexpr double kFrameMatchTol = 1e-12;

// Element of the slot-l base space: an evaluable extension with its variable
// count and domain. Carries shared ownership of whatever data backs the
// evaluation, so handles stay valid independently of their origin.
class BaseFunction {
 public:
  BaseFunction(SlotFunction fn, int ell, int n, Domain domain,
               std::shared_ptr<const HarmonicQuadruple> backing = nullptr)
      : fn_(std::move(fn)), ell_(ell), n_(n), domain_(std::move(domain)),
        backing_(std::move(backing)) {}

  Quaternion operator()(const Quaternion& q, const PairList& others) const {
    return fn_(q, others);
  }

  int slot() const { return ell_; }
  int vars() const { return n_; }
  const Domain& domain() const { return domain_; }
  const SlotFunction& fn() const { return fn_; }
  // Series backing when the handle came straight from a quadruple; null for
  // restriction-derived handles.
  const std::shared_ptr<const HarmonicQuadruple>& backing() const { return backing_; }

 private:
  SlotFunction fn_;
  int ell_;
  int n_;
  Domain domain_;
  std::shared_ptr<const HarmonicQuadruple> backing_;
};

// Point of the total space: component data plus a frame. Components are
// always evaluable on the grid; points built from quadruples additionally
// keep the series backing (required by the coefficient-level products).
class BundlePoint {
 public:
  BundlePoint(QuadEvaluator components, Frame frame, Domain domain,
              std::shared_ptr<const HarmonicQuadruple> series = nullptr)
      : components_(std::move(components)), frame_(std::move(frame)),
        domain_(std::move(domain)), series_(std::move(series)) {}

  QuadComponents components(const GridPoint& p) const { return components_(p); }
  const Frame& frame() const { return frame_; }
  const Domain& domain() const { return domain_; }

  bool series_backed() const { return series_ != nullptr; }
  const HarmonicQuadruple& quad() const {
    if (!series_) throw DomainUnsupported("BundlePoint: no series backing");
    return *series_;
  }
  const std::shared_ptr<const HarmonicQuadruple>& quad_ptr() const { return series_; }

 private:
  QuadEvaluator components_;
  Frame frame_;
  Domain domain_;
  std::shared_ptr<const HarmonicQuadruple> series_;
};

inline BundlePoint make_bundle_point(HarmonicQuadruple quad) {
  auto shared = std::make_shared<const HarmonicQuadruple>(std::move(quad));
  QuadEvaluator comps = [shared](const GridPoint& p) { return shared->components(p); };
  return BundlePoint(std::move(comps), shared->frame(), shared->domain(), shared);
}

// P_l: extend the component data of the point into a slot-l function.
inline BaseFunction project(const BundlePoint& bp, int ell) {
  const Frame fr = bp.frame();
  QuadEvaluator comps = [bp](const GridPoint& p) { return bp.components(p); };
  SlotFunction fn = [comps, fr, ell](const Quaternion& q, const PairList& others) {
    const SliceCoords sc = slice_coords(q);
    return extend_eval(comps, fr, ell, sc.x, sc.y, sc.axis, others);
  };
  return BaseFunction(std::move(fn), ell, bp.domain().vars(), bp.domain(), bp.quad_ptr());
}

// S^l_{i,j}: restriction data of f in the frame, bundled with that frame.
inline BundlePoint section(const BaseFunction& f, const Frame& fr, int ell) {
  if (ell != f.slot()) throw DimensionMismatch("section: slot differs from the handle's slot");
  QuadEvaluator comps = [f, fr, ell](const GridPoint& p) {
    return e_components(f.fn(), fr, ell, p);
  };
  return BundlePoint(std::move(comps), fr, f.domain());
}

// phi_u[f, (i,j)] = S^l in the rotated frame R_u(i,j).
inline BundlePoint trivialize(const UnitQuaternion& u, const BaseFunction& f, const Frame& fr,
                              int ell) {
  return section(f, frame_rotate(u, fr), ell);
}

// Inverse of phi_u: project the point through its own frame and rotate the
// fiber coordinate back.
inline std::pair<BaseFunction, Frame> untrivialize(const UnitQuaternion& u, const BundlePoint& bp,
                                                   int ell) {
  return {project(bp, ell), frame_rotate(u.conjugate(), bp.frame())};
}

// One section per frame; every one projects back to f and for a fixed frame
// the section is unique.
inline std::vector<BundlePoint> fiber_sample(const BaseFunction& f,
                                             const std::vector<Frame>& frames, int ell) {
  std::vector<BundlePoint> out;
  out.reserve(frames.size());
  for (const Frame& fr : frames) out.push_back(section(f, fr, ell));
  return out;
}

namespace detail {

inline void require_same_frame(const BundlePoint& a, const BundlePoint& b, const char* who) {
  if (frame_distance(a.frame(), b.frame()) > kFrameMatchTol)
    throw FrameMismatch(std::string(who) + ": operand frames differ");
}

inline GridPoint flip_all(GridPoint p) {
  for (auto& pair : p.xy) pair[1] = -pair[1];
  return p;
}

}  // namespace detail

// Entry-wise sum of the component matrices.
inline BundlePoint bp_add(const BundlePoint& a, const BundlePoint& b) {
  detail::require_same_frame(a, b, "bp_add");
  QuadEvaluator comps = [a, b](const GridPoint& p) {
    const QuadComponents x = a.components(p);
    const QuadComponents y = b.components(p);
    return QuadComponents{x.alpha + y.alpha, x.beta + y.beta, x.gamma + y.gamma,
                          x.delta + y.delta};
  };
  std::shared_ptr<const HarmonicQuadruple> series;
  if (a.series_backed() && b.series_backed())
    series = std::make_shared<const HarmonicQuadruple>(quad_add(a.quad(), b.quad()));
  return BundlePoint(std::move(comps), a.frame(), a.domain(), std::move(series));
}

// Entry formulas (alpha rho - beta sigma, alpha sigma + beta rho;
// gamma tau - delta eta, gamma eta + delta tau): the two complex legs
// multiply independently.
inline BundlePoint bp_bullet(const BundlePoint& a, const BundlePoint& b) {
  detail::require_same_frame(a, b, "bp_bullet");
  QuadEvaluator comps = [a, b](const GridPoint& p) {
    const QuadComponents x = a.components(p);
    const QuadComponents y = b.components(p);
    return QuadComponents{x.alpha * y.alpha - x.beta * y.beta,
                          x.alpha * y.beta + x.beta * y.alpha,
                          x.gamma * y.gamma - x.delta * y.delta,
                          x.gamma * y.delta + x.delta * y.gamma};
  };
  std::shared_ptr<const HarmonicQuadruple> series;
  if (a.series_backed() && b.series_backed()) {
    series = std::make_shared<const HarmonicQuadruple>(
        HarmonicQuadruple(star_product(a.quad().F(), b.quad().F()),
                          star_product(a.quad().G(), b.quad().G()), a.frame(), a.domain()));
  }
  return BundlePoint(std::move(comps), a.frame(), a.domain(), std::move(series));
}

// Star product of bundle points on unit balls. The component entries combine
// the two matrices with the flip J(x_1, y_1, ...) = (x_1, -y_1, ...) on the
// second operand:
//   alpha'' = alpha rho - beta sigma - gamma (tau o J) - delta (eta o J)
//   beta''  = alpha sigma + beta rho + gamma (eta o J) - delta (tau o J)
//   gamma'' = alpha tau - beta eta + gamma (rho o J) + delta (sigma o J)
//   delta'' = alpha eta + beta tau - gamma (sigma o J) + delta (rho o J)
// which is the unique entry pattern compatible with the series star product
// under the projections (two of the printed source signs solve differently;
// see the star homomorphism check).
inline BundlePoint bp_star(const BundlePoint& a, const BundlePoint& b) {
  detail::require_same_frame(a, b, "bp_star");
  if (!a.domain().is_unit_balls() || !b.domain().is_unit_balls())
    throw DomainUnsupported("bp_star: defined on unit balls only");
  QuadEvaluator comps = [a, b](const GridPoint& p) {
    const QuadComponents x = a.components(p);
    const QuadComponents y = b.components(p);
    const QuadComponents yI = b.components(detail::flip_all(p));
    return QuadComponents{
        x.alpha * y.alpha - x.beta * y.beta - x.gamma * yI.gamma - x.delta * yI.delta,
        x.alpha * y.beta + x.beta * y.alpha + x.gamma * yI.delta - x.delta * yI.gamma,
        x.alpha * y.gamma - x.beta * y.delta + x.gamma * yI.alpha + x.delta * yI.beta,
        x.alpha * y.delta + x.beta * y.gamma - x.gamma * yI.beta + x.delta * yI.alpha};
  };
  std::shared_ptr<const HarmonicQuadruple> series;
  if (a.series_backed() && b.series_backed()) {
    const MultiSeries& Fa = a.quad().F();
    const MultiSeries& Ga = a.quad().G();
    const MultiSeries& Fb = b.quad().F();
    const MultiSeries& Gb = b.quad().G();
    MultiSeries Fout = series_add(star_product(Fa, Fb),
                                  series_scale_right(star_product(Ga, series_conjugate(Gb)),
                                                     Quaternion(-1.0)));
    MultiSeries Gout = series_add(star_product(Fa, Gb),
                                  star_product(Ga, series_conjugate(Fb)));
    series = std::make_shared<const HarmonicQuadruple>(
        HarmonicQuadruple(std::move(Fout), std::move(Gout), a.frame(), a.domain()));
  }
  return BundlePoint(std::move(comps), a.frame(), a.domain(), std::move(series));
}

// R_u: same component matrix, rotated frame. Series coefficients follow the
// slice, c = a + b i -> a + b (u i u^-), i.e. conjugation by u.
inline BundlePoint bp_rotate(const UnitQuaternion& u, const BundlePoint& a) {
  const Frame rotated = frame_rotate(u, a.frame());
  QuadEvaluator comps = [a](const GridPoint& p) { return a.components(p); };
  std::shared_ptr<const HarmonicQuadruple> series;
  if (a.series_backed()) {
    MultiSeries F(a.quad().F().vars(), a.quad().F().max_degree(), a.quad().F().center());
    MultiSeries G = F;
    for (const auto& [idx, c] : a.quad().F().terms()) F.set(idx, rotate(u, c));
    for (const auto& [idx, c] : a.quad().G().terms()) G.set(idx, rotate(u, c));
    series = std::make_shared<const HarmonicQuadruple>(
        HarmonicQuadruple(std::move(F), std::move(G), rotated, a.domain()));
  }
  return BundlePoint(std::move(comps), rotated, a.domain(), std::move(series));
}

// Sample plan shared by the bundle-level identity and norm checks: grid
// points plus one target axis per point for off-slice probing.
struct SamplePlan {
  std::vector<GridPoint> points;
  std::vector<UnitImaginary> axes;
};

inline double base_function_distance(const BaseFunction& f, const BaseFunction& g,
                                     const SamplePlan& plan, int ell) {
  double worst = 0.0;
  for (std::size_t s = 0; s < plan.points.size(); ++s) {
    const GridPoint& p = plan.points[s];
    const Quaternion q =
        Quaternion(p.xy[ell - 1][0]) + std::abs(p.xy[ell - 1][1]) * plan.axes[s].q();
    const PairList others = grid_drop(p, ell);
    const double d = norm(f(q, others) - g(q, others));
    if (d > worst) worst = d;
  }
  return worst;
}

// Membership in the pullback of the holomorphic base: the point must project
// onto the extension of (Re f, Im f, 0, 0).
inline bool pullback_member(const MultiSeries& candidate, const BundlePoint& bp, const Frame& fr,
                            int ell, const SamplePlan& plan, double tol = 1e-10) {
  MultiSeries zero(candidate.vars(), 0, candidate.center());
  const HarmonicQuadruple holo(candidate, std::move(zero), fr, bp.domain());
  const BaseFunction lhs = project(bp, ell);
  double worst = 0.0;
  for (std::size_t s = 0; s < plan.points.size(); ++s) {
    const GridPoint& p = plan.points[s];
    const double x = p.xy[ell - 1][0];
    const double y = std::abs(p.xy[ell - 1][1]);
    const PairList others = grid_drop(p, ell);
    const Quaternion q = Quaternion(x) + y * plan.axes[s].q();
    const double d = norm(lhs(q, others) - p_ell_at(holo, ell, x, y, plan.axes[s], others));
    if (d > worst) worst = d;
  }
  return worst <= tol;
}

// Sampled sup norm of a bundle point: sum of the component sups plus the R^6
// norm of the frame pair.
inline double bp_norm_inf(const BundlePoint& bp, const std::vector<GridPoint>& samples) {
  double sup[4] = {0.0, 0.0, 0.0, 0.0};
  for (const GridPoint& p : samples) {
    const QuadComponents c = bp.components(p);
    sup[0] = std::max(sup[0], std::abs(c.alpha));
    sup[1] = std::max(sup[1], std::abs(c.beta));
    sup[2] = std::max(sup[2], std::abs(c.gamma));
    sup[3] = std::max(sup[3], std::abs(c.delta));
  }
  const double frame_norm = std::sqrt(2.0);
  return sup[0] + sup[1] + sup[2] + sup[3] + frame_norm;
}

inline double bp_diff_norm_inf(const BundlePoint& a, const BundlePoint& b,
                               const std::vector<GridPoint>& samples) {
  double sup[4] = {0.0, 0.0, 0.0, 0.0};
  for (const GridPoint& p : samples) {
    const QuadComponents x = a.components(p);
    const QuadComponents y = b.components(p);
    sup[0] = std::max(sup[0], std::abs(x.alpha - y.alpha));
    sup[1] = std::max(sup[1], std::abs(x.beta - y.beta));
    sup[2] = std::max(sup[2], std::abs(x.gamma - y.gamma));
    sup[3] = std::max(sup[3], std::abs(x.delta - y.delta));
  }
  return sup[0] + sup[1] + sup[2] + sup[3] + frame_distance(a.frame(), b.frame());
}

}  // namespace slicebundle
