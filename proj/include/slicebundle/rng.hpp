#pragma once

#include <cstdint>
#include <random>

#include "slicebundle/several.hpp"

namespace slicebundle {

// Seeded draw source for the verification suites. Distributions are built
// from the raw 64-bit stream (53-bit uniforms, Box-Muller normals) so a seed
// reproduces the same values on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Quaternion quaternion(double scale = 1.0) {
    return {scale * gauss(), scale * gauss(), scale * gauss(), scale * gauss()};
  }

  UnitImaginary unit_imaginary() {
    while (true) {
      const double x = gauss();
      const double y = gauss();
      const double z = gauss();
      if (x * x + y * y + z * z > 1e-12) return UnitImaginary::normalized(x, y, z);
    }
  }

  UnitQuaternion unit_quaternion() {
    while (true) {
      const Quaternion q = quaternion();
      if (norm_sq(q) > 1e-12) return UnitQuaternion::normalized(q);
    }
  }

  Frame frame() {
    while (true) {
      const UnitImaginary i = unit_imaginary();
      const double gx = gauss();
      const double gy = gauss();
      const double gz = gauss();
      const double d = gx * i.x() + gy * i.y() + gz * i.z();
      const double jx = gx - d * i.x();
      const double jy = gy - d * i.y();
      const double jz = gz - d * i.z();
      if (jx * jx + jy * jy + jz * jz > 1e-8) {
        return Frame(i, UnitImaginary::normalized(jx, jy, jz));
      }
    }
  }

  // Dense random series: every multi-index within the per-variable degree
  // bound gets a coefficient of the given scale.
  MultiSeries series(int n, int deg, double coeff_scale,
                     std::vector<double> center = {}) {
    if (center.empty()) center.assign(n, 0.0);
    MultiSeries out(n, deg, std::move(center));
    MultiIndex alpha(n, 0);
    while (true) {
      out.set(alpha, quaternion(coeff_scale));
      int k = n - 1;
      while (k >= 0 && ++alpha[k] > deg) alpha[k--] = 0;
      if (k < 0) break;
    }
    return out;
  }

  // Random series with coefficients confined to C(axis); the building block
  // of random quadruples.
  MultiSeries slice_series(int n, int deg, double coeff_scale, const UnitImaginary& axis,
                           std::vector<double> center = {}) {
    if (center.empty()) center.assign(n, 0.0);
    MultiSeries out(n, deg, std::move(center));
    MultiIndex alpha(n, 0);
    while (true) {
      out.set(alpha, embed(Complex{coeff_scale * gauss(), coeff_scale * gauss()}, axis));
      int k = n - 1;
      while (k >= 0 && ++alpha[k] > deg) alpha[k--] = 0;
      if (k < 0) break;
    }
    return out;
  }

  HarmonicQuadruple quadruple(int n, int deg, double coeff_scale, const Frame& fr,
                              std::optional<Domain> domain = std::nullopt) {
    MultiSeries F = slice_series(n, deg, coeff_scale, fr.i());
    MultiSeries G = slice_series(n, deg, coeff_scale, fr.i());
    return HarmonicQuadruple(std::move(F), std::move(G), fr, std::move(domain));
  }

  GridPoint interior_point(const Domain& dom, double radius_fraction = 0.8) {
    GridPoint p;
    p.xy.resize(dom.vars());
    for (int k = 0; k < dom.vars(); ++k) {
      const double rho = dom.radius[k] * radius_fraction * std::sqrt(uniform());
      const double th = uniform(0.0, 2.0 * 3.14159265358979323846);
      p.xy[k] = {dom.center[k] + rho * std::cos(th), rho * std::sin(th)};
    }
    return p;
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace slicebundle
