#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "slicebundle/bundle.hpp"
#include "slicebundle/rng.hpp"
#include "slicebundle/sampling.hpp"

using namespace slicebundle;
using Catch::Approx;

namespace {

const UnitImaginary kAxisE1(1, 0, 0);

Frame e1e2() { return Frame(UnitImaginary(1, 0, 0), UnitImaginary(0, 1, 0)); }

HarmonicQuadruple example_quad() {
  MultiSeries F(2, 2, {0.0, 0.0});
  F.set({1, 1}, kOne);
  F.set({0, 2}, kOne);
  MultiSeries G(2, 2, {0.0, 0.0});
  G.set({2, 0}, kOne);
  G.set({0, 1}, Quaternion(-3.0));
  return HarmonicQuadruple(std::move(F), std::move(G), e1e2(),
                           Domain{{0.0, 0.0}, {4.0, 4.0}});
}

SamplePlan make_plan(Rng& rng, const Domain& dom, int count, double fraction = 0.7) {
  SamplePlan plan;
  for (int t = 0; t < count; ++t) {
    plan.points.push_back(rng.interior_point(dom, fraction));
    plan.axes.push_back(rng.unit_imaginary());
  }
  return plan;
}

double plan_distance(const BaseFunction& f, const BaseFunction& g, const SamplePlan& plan,
                     int ell) {
  return base_function_distance(f, g, plan, ell);
}

}  // namespace

TEST_CASE("project") {
  Rng rng(81);
  const Frame fr = e1e2();

  // Zero quadruple projects to the zero function.
  const HarmonicQuadruple zq(MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}), fr);
  const BaseFunction zero = project(make_bundle_point(zq), 1);
  CHECK(norm(zero(0.2 * kE3, {{0.1, -0.2}})) == 0.0);

  // The running example projects to its extension (frozen off-slice value).
  const BundlePoint bp = make_bundle_point(example_quad());
  const BaseFunction f = project(bp, 1);
  CHECK(norm(f(kE3, {{1.0, 0.0}}) - Quaternion{1.0, 0.0, -4.0, 1.0}) <= 1e-14);

  // project after section is the identity on base functions.
  const SamplePlan plan = make_plan(rng, bp.domain(), 40);
  for (int t = 0; t < 10; ++t) {
    const Frame random_frame = rng.frame();
    const BaseFunction back = project(section(f, random_frame, 1), 1);
    CHECK(plan_distance(back, f, plan, 1) <= 1e-11);
  }
}

TEST_CASE("section") {
  Rng rng(82);
  const Frame fr = rng.frame();
  const HarmonicQuadruple quad = rng.quadruple(2, 3, 1.0, fr);
  const BundlePoint bp = make_bundle_point(quad);
  const BaseFunction f = project(bp, 1);

  // Zero function gives the zero component matrix.
  const HarmonicQuadruple zq(MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}), fr);
  const BundlePoint zsec = section(project(make_bundle_point(zq), 1), fr, 1);
  const QuadComponents zc = zsec.components(rng.interior_point(zq.domain()));
  CHECK(std::abs(zc.alpha) + std::abs(zc.beta) + std::abs(zc.gamma) + std::abs(zc.delta) == 0.0);

  // Sectioning the projection in the same frame recovers the quad values.
  const BundlePoint again = section(f, fr, 1);
  for (int t = 0; t < 30; ++t) {
    const GridPoint p = rng.interior_point(quad.domain());
    const QuadComponents a = again.components(p);
    const QuadComponents b = bp.components(p);
    CHECK(std::abs(a.alpha - b.alpha) <= 1e-12);
    CHECK(std::abs(a.beta - b.beta) <= 1e-12);
    CHECK(std::abs(a.gamma - b.gamma) <= 1e-12);
    CHECK(std::abs(a.delta - b.delta) <= 1e-12);
  }

  // Section continuity bound on sampled sup norms.
  const std::vector<GridPoint> sup_grid = supnorm_grid(quad.domain(), 3, 16);
  for (int t = 0; t < 10; ++t) {
    const HarmonicQuadruple qg = rng.quadruple(2, 3, 1.0, fr);
    const BaseFunction g = project(make_bundle_point(qg), 1);
    const BundlePoint sf = section(f, fr, 1);
    const BundlePoint sg = section(g, fr, 1);
    double fg = 0.0;
    for (const GridPoint& p : sup_grid) {
      const Quaternion qv = Quaternion(p.xy[0][0]) + p.xy[0][1] * fr.i().q();
      fg = std::max(fg, norm(f(qv, grid_drop(p, 1)) - g(qv, grid_drop(p, 1))));
    }
    double sums[4] = {0, 0, 0, 0};
    for (const GridPoint& p : sup_grid) {
      const QuadComponents a = sf.components(p);
      const QuadComponents b = sg.components(p);
      sums[0] = std::max(sums[0], std::abs(a.alpha - b.alpha));
      sums[1] = std::max(sums[1], std::abs(a.beta - b.beta));
      sums[2] = std::max(sums[2], std::abs(a.gamma - b.gamma));
      sums[3] = std::max(sums[3], std::abs(a.delta - b.delta));
    }
    CHECK(sums[0] + sums[1] + sums[2] + sums[3] <= 4.0 * fg * (1.0 + 1e-12));
  }
}

TEST_CASE("trivialize") {
  Rng rng(83);
  const Frame fr0 = rng.frame();
  const HarmonicQuadruple quad = rng.quadruple(2, 3, 1.0, fr0);
  const BundlePoint bp = make_bundle_point(quad);
  const BaseFunction f = project(bp, 1);
  const SamplePlan plan = make_plan(rng, bp.domain(), 30);

  // u = 1 is the plain section.
  const Frame fiber = rng.frame();
  const BundlePoint a = trivialize(UnitQuaternion(kOne), f, fiber, 1);
  const BundlePoint b = section(f, fiber, 1);
  for (const GridPoint& p : plan.points) {
    CHECK(std::abs(a.components(p).alpha - b.components(p).alpha) == 0.0);
    CHECK(std::abs(a.components(p).delta - b.components(p).delta) == 0.0);
  }

  // phi_u[f,(i,j)] = phi_v[f, R_{v^- u}(i,j)] (same extraction frame).
  for (int t = 0; t < 10; ++t) {
    const UnitQuaternion u = rng.unit_quaternion();
    const UnitQuaternion v = rng.unit_quaternion();
    const Frame ij = rng.frame();
    const BundlePoint lhs = trivialize(u, f, ij, 1);
    const BundlePoint rhs = trivialize(v, f, transition(u, v, ij), 1);
    CHECK(frame_distance(lhs.frame(), rhs.frame()) <= 1e-12);
    for (int s = 0; s < 8; ++s) {
      const GridPoint& p = plan.points[s];
      const QuadComponents ca = lhs.components(p);
      const QuadComponents cb = rhs.components(p);
      const double d = std::abs(ca.alpha - cb.alpha) + std::abs(ca.beta - cb.beta) +
                       std::abs(ca.gamma - cb.gamma) + std::abs(ca.delta - cb.delta);
      CHECK(d <= 1e-11);
    }
  }

  // Projection after trivialization returns the first coordinate.
  for (int t = 0; t < 10; ++t) {
    const UnitQuaternion u = rng.unit_quaternion();
    const Frame ij = rng.frame();
    const BaseFunction back = project(trivialize(u, f, ij, 1), 1);
    CHECK(plan_distance(back, f, plan, 1) <= 1e-11);
  }
}

TEST_CASE("untrivialize round trips") {
  Rng rng(84);
  const Frame fr0 = rng.frame();
  const HarmonicQuadruple quad = rng.quadruple(2, 3, 1.0, fr0);
  const BundlePoint bp = make_bundle_point(quad);
  const BaseFunction f = project(bp, 1);
  const SamplePlan plan = make_plan(rng, bp.domain(), 30);

  // u = 1: the identity chart.
  const auto [f1, fr1] = untrivialize(UnitQuaternion(kOne), bp, 1);
  CHECK(frame_distance(fr1, bp.frame()) <= 1e-15);
  CHECK(plan_distance(f1, f, plan, 1) <= 1e-13);

  for (int t = 0; t < 10; ++t) {
    const UnitQuaternion u = rng.unit_quaternion();
    const Frame ij = rng.frame();

    // phi_u^{-1} after phi_u on (f, (i,j)).
    const BundlePoint up = trivialize(u, f, ij, 1);
    const auto [fb, ijb] = untrivialize(u, up, 1);
    CHECK(frame_distance(ijb, ij) <= 1e-12);
    CHECK(plan_distance(fb, f, plan, 1) <= 1e-11);

    // phi_u after phi_u^{-1} on a bundle point.
    const auto [g, fiber] = untrivialize(u, bp, 1);
    const BundlePoint back = trivialize(u, g, fiber, 1);
    CHECK(frame_distance(back.frame(), bp.frame()) <= 1e-12);
    for (int s = 0; s < 10; ++s) {
      const GridPoint& p = plan.points[s];
      const QuadComponents ca = back.components(p);
      const QuadComponents cb = bp.components(p);
      const double d = std::abs(ca.alpha - cb.alpha) + std::abs(ca.beta - cb.beta) +
                       std::abs(ca.gamma - cb.gamma) + std::abs(ca.delta - cb.delta);
      CHECK(d <= 1e-11);
    }
  }
}

TEST_CASE("fiber_sample") {
  Rng rng(85);
  const Frame fr0 = rng.frame();
  const HarmonicQuadruple quad = rng.quadruple(1, 3, 1.0, fr0);
  const BundlePoint bp = make_bundle_point(quad);
  const BaseFunction f = project(bp, 1);
  const SamplePlan plan = make_plan(rng, bp.domain(), 30);

  const std::vector<BundlePoint> single = fiber_sample(f, {fr0}, 1);
  CHECK(single.size() == 1);

  std::vector<Frame> frames;
  for (int t = 0; t < 10; ++t) frames.push_back(rng.frame());
  const std::vector<BundlePoint> fiber = fiber_sample(f, frames, 1);
  for (const BundlePoint& pt : fiber) {
    const BaseFunction back = project(pt, 1);
    CHECK(plan_distance(back, f, plan, 1) <= 1e-11);
  }

  // Uniqueness: re-sectioning at the same frame reproduces the data.
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const BundlePoint redo = section(f, frames[k], 1);
    for (int s = 0; s < 5; ++s) {
      const GridPoint& p = plan.points[s];
      const QuadComponents a = fiber[k].components(p);
      const QuadComponents b = redo.components(p);
      CHECK(std::abs(a.alpha - b.alpha) <= 1e-12);
      CHECK(std::abs(a.beta - b.beta) <= 1e-12);
      CHECK(std::abs(a.gamma - b.gamma) <= 1e-12);
      CHECK(std::abs(a.delta - b.delta) <= 1e-12);
    }
  }
}

TEST_CASE("bundle point algebra") {
  Rng rng(86);
  const Frame fr = rng.frame();
  const BundlePoint A = make_bundle_point(rng.quadruple(2, 3, 0.8, fr));
  const BundlePoint B = make_bundle_point(rng.quadruple(2, 3, 0.8, fr));
  const SamplePlan plan = make_plan(rng, A.domain(), 25);

  // A + 0 = A.
  const BundlePoint zero = make_bundle_point(
      HarmonicQuadruple(MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}), fr));
  const BundlePoint sum = bp_add(A, zero);
  for (const GridPoint& p : plan.points) {
    CHECK(std::abs(sum.components(p).alpha - A.components(p).alpha) == 0.0);
    CHECK(std::abs(sum.components(p).gamma - A.components(p).gamma) == 0.0);
  }

  // Bullet entries: top-left is alpha rho - beta sigma pointwise.
  const BundlePoint AB = bp_bullet(A, B);
  for (const GridPoint& p : plan.points) {
    const QuadComponents a = A.components(p);
    const QuadComponents b = B.components(p);
    const QuadComponents c = AB.components(p);
    CHECK(c.alpha == Approx(a.alpha * b.alpha - a.beta * b.beta).margin(1e-12));
    CHECK(c.beta == Approx(a.alpha * b.beta + a.beta * b.alpha).margin(1e-12));
  }

  // Entry route and series route agree.
  CHECK(AB.series_backed());
  for (const GridPoint& p : plan.points) {
    const QuadComponents c = AB.components(p);
    const QuadComponents s = AB.quad().components(p);
    CHECK(std::abs(c.alpha - s.alpha) <= 1e-11);
    CHECK(std::abs(c.beta - s.beta) <= 1e-11);
    CHECK(std::abs(c.gamma - s.gamma) <= 1e-11);
    CHECK(std::abs(c.delta - s.delta) <= 1e-11);
  }

  const Frame other = rng.frame();
  const BundlePoint C = make_bundle_point(rng.quadruple(2, 2, 1.0, other));
  CHECK_THROWS_AS(bp_add(A, C), FrameMismatch);
  CHECK_THROWS_AS(bp_bullet(A, C), FrameMismatch);
  CHECK_THROWS_AS(bp_star(A, C), FrameMismatch);

  const BundlePoint wide = make_bundle_point(HarmonicQuadruple(
      MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}), fr,
      Domain{{0.0, 0.0}, {2.0, 2.0}}));
  CHECK_THROWS_AS(bp_star(A, wide), DomainUnsupported);
}

TEST_CASE("projection homomorphisms") {
  Rng rng(87);
  const Frame fr = rng.frame();
  const BundlePoint A = make_bundle_point(rng.quadruple(2, 3, 0.7, fr));
  const BundlePoint B = make_bundle_point(rng.quadruple(2, 3, 0.7, fr));
  const SamplePlan plan = make_plan(rng, A.domain(), 30, 0.6);
  const MultiSeries combA = A.quad().combined();
  const MultiSeries combB = B.quad().combined();

  // P(A + B) = P(A) + P(B).
  {
    const BaseFunction lhs = project(bp_add(A, B), 1);
    const BaseFunction pa = project(A, 1);
    const BaseFunction pb = project(B, 1);
    for (std::size_t s = 0; s < plan.points.size(); ++s) {
      const GridPoint& p = plan.points[s];
      const Quaternion q =
          Quaternion(p.xy[0][0]) + std::abs(p.xy[0][1]) * plan.axes[s].q();
      const PairList others = grid_drop(p, 1);
      CHECK(norm(lhs(q, others) - (pa(q, others) + pb(q, others))) <= 1e-10);
    }
  }

  // P(A bullet B) = P(A) bullet P(B): the right side through the series
  // convolution of the combined coefficients.
  {
    const BaseFunction lhs = project(bp_bullet(A, B), 1);
    const MultiSeries rhs = bullet_product(combA, combB, fr);
    for (std::size_t s = 0; s < plan.points.size(); ++s) {
      const GridPoint& p = plan.points[s];
      const Quaternion q =
          Quaternion(p.xy[0][0]) + std::abs(p.xy[0][1]) * plan.axes[s].q();
      const PairList others = grid_drop(p, 1);
      CHECK(norm(lhs(q, others) - eval_slice(rhs, EvalPoint{1, q, others, fr.i()})) <= 1e-10);
    }
  }

  // P(A * B) = P(A) * P(B): right side through the quaternion convolution.
  {
    const BaseFunction lhs = project(bp_star(A, B), 1);
    const MultiSeries rhs = star_product(combA, combB);
    for (std::size_t s = 0; s < plan.points.size(); ++s) {
      const GridPoint& p = plan.points[s];
      const Quaternion q =
          Quaternion(p.xy[0][0]) + std::abs(p.xy[0][1]) * plan.axes[s].q();
      const PairList others = grid_drop(p, 1);
      CHECK(norm(lhs(q, others) - eval_slice(rhs, EvalPoint{1, q, others, fr.i()})) <= 1e-10);
    }
  }

  // R_u identity: P(R_u A) = P^l in the rotated frame of u Q^l[P(A)] u^-.
  {
    const UnitQuaternion u = rng.unit_quaternion();
    const BundlePoint rA = bp_rotate(u, A);
    const BaseFunction lhs = project(rA, 1);
    const BaseFunction pa = project(A, 1);
    const Frame rot = frame_rotate(u, fr);
    const QuadEvaluator sandwich = [&pa, &fr, &u, &rot](const GridPoint& p) {
      const Quaternion val =
          assemble_components(e_components(pa.fn(), fr, 1, p), fr);
      const Quaternion rotated = rotate(u, val);
      const FrameComponents d = split_components(rotated, rot);
      return QuadComponents{d.d1, d.d2, d.d3, d.d4};
    };
    for (std::size_t s = 0; s < plan.points.size(); ++s) {
      const GridPoint& p = plan.points[s];
      const double x = p.xy[0][0];
      const double y = std::abs(p.xy[0][1]);
      const PairList others = grid_drop(p, 1);
      const Quaternion q = Quaternion(x) + y * plan.axes[s].q();
      const Quaternion rhs = extend_eval(sandwich, rot, 1, x, y, plan.axes[s], others);
      CHECK(norm(lhs(q, others) - rhs) <= 1e-10);
    }
  }
}

TEST_CASE("star entry signs are pinned by the series product") {
  // A = B with F = 0, G = z: the star square has F'' = -z^2, whose imaginary
  // part is -2xy. The alternate sign pattern (flipping the gamma (eta o J)
  // term) would zero that entry out; pin the resolved signs.
  const Frame fr = e1e2();
  MultiSeries G(1, 1, {0.0});
  G.set({1}, kOne);
  const HarmonicQuadruple quad(MultiSeries(1, 1, {0.0}), G, fr);
  const BundlePoint A = make_bundle_point(quad);
  const BundlePoint AA = bp_star(A, A);

  const GridPoint p{{{0.3, 0.4}}};
  const QuadComponents c = AA.components(p);
  CHECK(c.alpha == Approx(-(0.3 * 0.3 - 0.4 * 0.4)).margin(1e-14));
  CHECK(c.beta == Approx(-2.0 * 0.3 * 0.4).margin(1e-14));  // the pinned sign
  CHECK(c.gamma == Approx(0.0).margin(1e-14));
  CHECK(c.delta == Approx(0.0).margin(1e-14));

  // Series route agrees: combined star square is -q^2.
  const MultiSeries sq = star_product(quad.combined(), quad.combined());
  CHECK(norm(sq.at({2}) - Quaternion(-1.0)) <= 1e-15);
}

TEST_CASE("pullback membership") {
  Rng rng(88);
  const Frame fr = e1e2();

  // Zero against zero.
  const HarmonicQuadruple zq(MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}), fr);
  const BundlePoint zb = make_bundle_point(zq);
  SamplePlan plan = make_plan(rng, zb.domain(), 25, 0.6);
  CHECK(pullback_member(MultiSeries(2, 0, {0.0, 0.0}), zb, fr, 1, plan));

  // f = z1 z2 + z2^2 against the section of its own extension.
  MultiSeries F(2, 2, {0.0, 0.0});
  F.set({1, 1}, kOne);
  F.set({0, 2}, kOne);
  const HarmonicQuadruple holo(F, MultiSeries(2, 0, {0.0, 0.0}), fr);
  const BundlePoint member = make_bundle_point(holo);
  CHECK(pullback_member(F, member, fr, 1, plan));

  // A point with a j leg is not in the holomorphic pullback.
  MultiSeries G(2, 1, {0.0, 0.0});
  G.set({1, 0}, kOne);
  const BundlePoint off = make_bundle_point(HarmonicQuadruple(F, G, fr));
  CHECK_FALSE(pullback_member(F, off, fr, 1, plan));
}

TEST_CASE("bundle norm triangle on the shared grid") {
  Rng rng(89);
  const Frame fr = rng.frame();
  const BundlePoint A = make_bundle_point(rng.quadruple(2, 3, 1.0, fr));
  const BundlePoint B = make_bundle_point(rng.quadruple(2, 3, 1.0, fr));
  const std::vector<GridPoint> grid = supnorm_grid(A.domain(), 3, 16);
  const double lhs = bp_norm_inf(bp_add(A, B), grid);
  const double rhs = bp_norm_inf(A, grid) + bp_norm_inf(B, grid);
  CHECK(lhs <= rhs + 1e-12);
}
