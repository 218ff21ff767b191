#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "slicebundle/rng.hpp"
#include "slicebundle/sampling.hpp"
#include "slicebundle/several.hpp"

using namespace slicebundle;
using Catch::Approx;

namespace {

const UnitImaginary kAxisE1(1, 0, 0);

Frame e1e2() { return Frame(UnitImaginary(1, 0, 0), UnitImaginary(0, 1, 0)); }

// F = z1 z2 + z2^2, G = z1^2 - 3 z2 over the frame (e1, e2); the running
// two-variable example used across the suites.
HarmonicQuadruple example_quad(double radius = 4.0) {
  MultiSeries F(2, 2, {0.0, 0.0});
  F.set({1, 1}, kOne);
  F.set({0, 2}, kOne);
  MultiSeries G(2, 2, {0.0, 0.0});
  G.set({2, 0}, kOne);
  G.set({0, 1}, Quaternion(-3.0));
  return HarmonicQuadruple(std::move(F), std::move(G), e1e2(),
                           Domain{{0.0, 0.0}, {radius, radius}});
}

}  // namespace

TEST_CASE("inv_ell") {
  GridPoint p{{{1, 2}, {3, 4}}};
  const GridPoint q = inv_ell(p, 2);
  CHECK(q.xy[0][0] == 1.0);
  CHECK(q.xy[0][1] == 2.0);
  CHECK(q.xy[1][0] == 3.0);
  CHECK(q.xy[1][1] == -4.0);

  GridPoint on_axis{{{0.5, 0.0}}};
  CHECK(inv_ell(on_axis, 1).xy[0][1] == 0.0);

  const GridPoint twice = inv_ell(inv_ell(p, 1), 1);
  CHECK(twice.xy[0][1] == p.xy[0][1]);
}

TEST_CASE("harmonic quadruple validation") {
  MultiSeries F(1, 1, {0.0});
  F.set({1}, kE2);  // sticks out of C(e1)
  MultiSeries G(1, 1, {0.0});
  CHECK_THROWS_AS(HarmonicQuadruple(F, G, e1e2()), OffSliceCoefficient);

  MultiSeries F2(1, 1, {0.5});
  CHECK_THROWS_AS(HarmonicQuadruple(F2, G, e1e2()), CenterMismatch);
}

TEST_CASE("p_ell reduces to F + G j on the slice") {
  const HarmonicQuadruple quad = example_quad();

  // q = e1, (x2, y2) = (1, 0): F(i,1) + G(i,1) j by the complex oracle.
  const std::complex<double> Fv =
      oracle::poly_eval({{{1, 1}, {1, 0}}, {{0, 2}, {1, 0}}}, {{0, 1}, {1, 0}});
  const std::complex<double> Gv =
      oracle::poly_eval({{{2, 0}, {1, 0}}, {{0, 1}, {-3, 0}}}, {{0, 1}, {1, 0}});
  const Quaternion expect =
      embed(Complex{Fv.real(), Fv.imag()}, kAxisE1) +
      embed(Complex{Gv.real(), Gv.imag()}, kAxisE1) * kE2;
  CHECK(norm(expect - (kOne + kE1 - 4.0 * kE2)) <= 1e-15);
  CHECK(norm(p_ell(quad, 1, kE1, {{1.0, 0.0}}) - expect) <= 1e-14);

  // In-slice with negative y: picks the flipped bracket.
  const Quaternion qm = Quaternion(0.3) - 0.7 * kE1;
  const GridPoint flipped{{{0.3, -0.7}, {0.5, 0.2}}};
  const Complex Fm = eval_complex(quad.F(), flipped, kAxisE1);
  const Complex Gm = eval_complex(quad.G(), flipped, kAxisE1);
  const Quaternion expect_m = embed(Fm, kAxisE1) + embed(Gm, kAxisE1) * kE2;
  CHECK(norm(p_ell(quad, 1, qm, {{0.5, 0.2}}) - expect_m) <= 1e-14);

  // G = 0 at a real slot value: the F value, frame independent.
  MultiSeries F(1, 2, {0.0});
  F.set({2}, kOne);
  const HarmonicQuadruple holo(F, MultiSeries(1, 0, {0.0}), e1e2());
  const Quaternion at_real = p_ell(holo, 1, Quaternion(0.5), {});
  CHECK(norm(at_real - Quaternion(0.25)) <= 1e-15);

  CHECK_THROWS_AS(p_ell(example_quad(0.5), 1, kE1, {{0.0, 0.0}}), OutOfDomain);
}

TEST_CASE("p_ell frozen off-slice value") {
  // ell = 1, q = e3, (x2, y2) = (1, 0); expansion done by hand and confirmed
  // through the combined-series route below: 1 - 4 e2 + e3.
  const HarmonicQuadruple quad = example_quad();
  const Quaternion frozen{1.0, 0.0, -4.0, 1.0};
  CHECK(norm(p_ell(quad, 1, kE3, {{1.0, 0.0}}) - frozen) <= 1e-14);
}

TEST_CASE("p_ell equals the combined series evaluation") {
  Rng rng(61);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 3;
    const Frame fr = rng.frame();
    const HarmonicQuadruple quad = rng.quadruple(n, 3, 0.8, fr);
    const MultiSeries combined = quad.combined();
    for (int rep = 0; rep < 5; ++rep) {
      const int ell = 1 + static_cast<int>(rng.uniform(0, n)) % n;
      const GridPoint p = rng.interior_point(quad.domain());
      const UnitImaginary axis = rng.unit_imaginary();
      const double x = p.xy[ell - 1][0];
      const double y = std::abs(p.xy[ell - 1][1]);
      const Quaternion q = Quaternion(x) + y * axis.q();
      const PairList others = grid_drop(p, ell);
      const Quaternion via_p = p_ell(quad, ell, q, others);
      const Quaternion via_series = eval_slice(combined, EvalPoint{ell, q, others, fr.i()});
      CHECK(norm(via_p - via_series) <= 1e-12);
    }
  }
}

TEST_CASE("e_components") {
  const Frame fr = e1e2();

  // Constant 1.
  const SlotFunction one = [](const Quaternion&, const PairList&) { return kOne; };
  const QuadComponents c = e_components(one, fr, 1, GridPoint{{{0.2, 0.1}, {0.0, 0.3}}});
  CHECK(c.alpha == 1.0);
  CHECK(c.beta == 0.0);
  CHECK(c.gamma == 0.0);
  CHECK(c.delta == 0.0);

  // Running example at (1,0,1,0): value F(1,1) + G(1,1) j = 2 - 2 e2.
  const HarmonicQuadruple quad = example_quad();
  const QuadComponents e =
      e_components(extension_function(quad, 1), fr, 1, GridPoint{{{1.0, 0.0}, {1.0, 0.0}}});
  CHECK(e.alpha == Approx(2.0).margin(1e-13));
  CHECK(e.beta == Approx(0.0).margin(1e-13));
  CHECK(e.gamma == Approx(-2.0).margin(1e-13));
  CHECK(e.delta == Approx(0.0).margin(1e-13));

  // n = 1: the restriction components are the one-slice split.
  Rng rng(62);
  const HarmonicQuadruple q1 = rng.quadruple(1, 3, 1.0, fr);
  for (int t = 0; t < 20; ++t) {
    const GridPoint p = rng.interior_point(q1.domain());
    const QuadComponents ec = e_components(extension_function(q1, 1), fr, 1, p);
    const Quaternion val =
        p_ell(q1, 1, Quaternion(p.xy[0][0]) + p.xy[0][1] * fr.i().q(), {});
    const FrameComponents d = split_components(val, fr);
    CHECK(ec.alpha == Approx(d.d1).margin(1e-14));
    CHECK(ec.beta == Approx(d.d2).margin(1e-14));
    CHECK(ec.gamma == Approx(d.d3).margin(1e-14));
    CHECK(ec.delta == Approx(d.d4).margin(1e-14));
  }
}

TEST_CASE("restriction after extension is the identity") {
  Rng rng(63);

  // Zero quadruple.
  const HarmonicQuadruple zero(MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}),
                               e1e2());
  const auto zero_grid = identity_grid(zero.domain(), 4);
  std::vector<UnitImaginary> axes;
  for (std::size_t s = 0; s < zero_grid.size(); ++s) axes.push_back(rng.unit_imaginary());
  const auto axis_of = [&axes](std::size_t s) { return axes[s % axes.size()]; };
  CHECK(q_after_p_roundtrip(zero, 1, zero_grid, axis_of).max() == 0.0);

  // Running example on an 8^2-per-pair grid.
  const HarmonicQuadruple quad = example_quad();
  const auto grid = identity_grid(quad.domain(), 8);
  const RoundtripResidual r = q_after_p_roundtrip(quad, 1, grid, axis_of);
  CHECK(r.restriction_after_extension <= 1e-11);
  CHECK(r.extension_after_restriction <= 1e-11);

  // Random degree-4 quadruples.
  for (int t = 0; t < 6; ++t) {
    const Frame fr = rng.frame();
    const HarmonicQuadruple rq = rng.quadruple(2, 4, 1.0, fr);
    const auto g = identity_grid(rq.domain(), 4);
    const RoundtripResidual rr = q_after_p_roundtrip(rq, 1 + t % 2, g, axis_of);
    CHECK(rr.max() <= 1e-10);
  }
}

TEST_CASE("extension at a real slot value ignores the axis sentinel") {
  Rng rng(64);
  const HarmonicQuadruple quad = example_quad();
  const PairList others{{0.4, -0.3}};
  const Quaternion base = p_ell_at(quad, 1, 0.2, 0.0, sentinel_axis(), others);
  for (int t = 0; t < 10; ++t) {
    const Quaternion alt = p_ell_at(quad, 1, 0.2, 0.0, rng.unit_imaginary(), others);
    CHECK(norm(alt - base) <= 1e-14);
  }
}

TEST_CASE("projection family is right linear and slot consistent") {
  Rng rng(65);
  const Frame fr = rng.frame();
  const HarmonicQuadruple qf = rng.quadruple(2, 3, 0.8, fr);
  const HarmonicQuadruple qg = rng.quadruple(2, 3, 0.8, fr);

  // P[f a + g] = P[f] a + P[g] on sampled points, a = e3 among random draws.
  for (int t = 0; t < 25; ++t) {
    const Quaternion a = (t == 0) ? kE3 : rng.quaternion();
    const HarmonicQuadruple lhs_quad = quad_add(quad_scale_right(qf, a), qg);
    const int ell = 1 + t % 2;
    const GridPoint p = rng.interior_point(qf.domain());
    const UnitImaginary axis = rng.unit_imaginary();
    const double x = p.xy[ell - 1][0];
    const double y = std::abs(p.xy[ell - 1][1]);
    const Quaternion q = Quaternion(x) + y * axis.q();
    const PairList others = grid_drop(p, ell);
    const Quaternion lhs = p_ell(lhs_quad, ell, q, others);
    const Quaternion rhs = p_ell(qf, ell, q, others) * a + p_ell(qg, ell, q, others);
    CHECK(norm(lhs - rhs) <= 1e-11 * (1.0 + norm(rhs)));
  }

  // The same quadruple serves every slot: each slot evaluation matches the
  // combined series bound to that slot.
  const SliceRegularFamily fam = family_project(qf);
  const MultiSeries combined = qf.combined();
  for (int t = 0; t < 20; ++t) {
    const int ell = 1 + t % 2;
    const GridPoint p = rng.interior_point(qf.domain());
    const UnitImaginary axis = rng.unit_imaginary();
    const Quaternion q =
        Quaternion(p.xy[ell - 1][0]) + std::abs(p.xy[ell - 1][1]) * axis.q();
    const PairList others = grid_drop(p, ell);
    const Quaternion lhs = fam.eval(ell, q, others);
    const Quaternion rhs = slot_view(combined, ell).eval(q, others, fr.i());
    CHECK(norm(lhs - rhs) <= 1e-11);
  }

  // Zero quadruple projects to the zero family.
  const HarmonicQuadruple zq(MultiSeries(2, 0, {0.0, 0.0}), MultiSeries(2, 0, {0.0, 0.0}), fr);
  const SliceRegularFamily zero = family_project(zq);
  CHECK(norm(zero.eval(1, 0.3 * kE2, {{0.1, 0.2}})) == 0.0);
}

TEST_CASE("components are conjugate harmonic: central difference ratio") {
  // Cauchy-Riemann residual of (alpha, beta) and (gamma, delta) drops by
  // about 4x when the step halves (second order stencil).
  Rng rng(66);
  const Frame fr = rng.frame();
  const HarmonicQuadruple quad = rng.quadruple(2, 4, 1.0, fr);
  const double h1 = 1e-2;
  const double h2 = 5e-3;
  double worst_ratio = 1e9;
  for (int t = 0; t < 10; ++t) {
    const GridPoint p = rng.interior_point(quad.domain(), 0.5);
    for (int k = 0; k < 2; ++k) {
      auto cr_residual = [&](double h) {
        GridPoint xp = p, xm = p, yp = p, ym = p;
        xp.xy[k][0] += h;
        xm.xy[k][0] -= h;
        yp.xy[k][1] += h;
        ym.xy[k][1] -= h;
        const QuadComponents cxp = quad.components(xp);
        const QuadComponents cxm = quad.components(xm);
        const QuadComponents cyp = quad.components(yp);
        const QuadComponents cym = quad.components(ym);
        const double ax = (cxp.alpha - cxm.alpha) / (2 * h);
        const double ay = (cyp.alpha - cym.alpha) / (2 * h);
        const double bx = (cxp.beta - cxm.beta) / (2 * h);
        const double by = (cyp.beta - cym.beta) / (2 * h);
        const double gx = (cxp.gamma - cxm.gamma) / (2 * h);
        const double gy = (cyp.gamma - cym.gamma) / (2 * h);
        const double dx = (cxp.delta - cxm.delta) / (2 * h);
        const double dy = (cyp.delta - cym.delta) / (2 * h);
        return std::max(std::max(std::abs(ax - by), std::abs(ay + bx)),
                        std::max(std::abs(gx - dy), std::abs(gy + dx)));
      };
      const double r1 = cr_residual(h1);
      const double r2 = cr_residual(h2);
      if (r2 < 1e-9) continue;  // at the rounding floor
      worst_ratio = std::min(worst_ratio, r1 / r2);
    }
  }
  CHECK(worst_ratio >= 3.5);
}
