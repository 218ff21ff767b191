#pragma once

#include "slicebundle/quaternion.hpp"

namespace slicebundle {

// Values of a slice function on one complex slice: f(x + i y) and f(x - i y)
// for the slice axis i.
struct SliceValuePair {
  Quaternion f_plus;
  Quaternion f_minus;
  UnitImaginary frame_axis;
};

// f(x + I y) = 1/2 [f(x+iy) + f(x-iy)] + 1/2 I i [f(x-iy) - f(x+iy)].
inline Quaternion representation_formula(const SliceValuePair& sv, const UnitImaginary& target) {
  const Quaternion avg = 0.5 * (sv.f_plus + sv.f_minus);
  return avg + 0.5 * (target.q() * sv.frame_axis.q()) * (sv.f_minus - sv.f_plus);
}

// Real coordinates of v in the basis (1, i, j, ij) of a frame.
struct FrameComponents {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
};

// d1 = Re v, d2 = -Re(v i), d3 = -Re(v j), d4 = Re(v j i). Exact pairings,
// no linear solve.
inline FrameComponents split_components(const Quaternion& v, const Frame& fr) {
  const Quaternion i = fr.i().q();
  const Quaternion j = fr.j().q();
  FrameComponents d;
  d.d1 = v.scalar();
  d.d2 = -(v * i).scalar();
  d.d3 = -(v * j).scalar();
  d.d4 = (v * j * i).scalar();
  return d;
}

inline Quaternion assemble_components(double d1, double d2, double d3, double d4,
                                      const Frame& fr) {
  return Quaternion(d1) + d2 * fr.i().q() + d3 * fr.j().q() + d4 * fr.ij();
}

inline Quaternion assemble_components(const FrameComponents& d, const Frame& fr) {
  return assemble_components(d.d1, d.d2, d.d3, d.d4, fr);
}

}  // namespace slicebundle
