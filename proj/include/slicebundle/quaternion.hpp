#pragma once

#include <array>
#include <cmath>
#include <ostream>

#include "slicebundle/errors.hpp"

namespace slicebundle {

inline constexpr double kUnitTol = 1e-12;
inline constexpr double kFrameBuildTol = 1e-10;
inline constexpr double kRealAxisTol = 1e-14;

// Quaternion w + x e1 + y e2 + z e3 over doubles. Value type, all operations
// pure. e1 e2 = e3 and cyclic.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  // Real scalars embed on the w leg.
  constexpr Quaternion(double real) : w(real) {}  // NOLINT(google-explicit-constructor)

  constexpr double scalar() const { return w; }
  constexpr Quaternion vec() const { return {0.0, x, y, z}; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  // Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, double s) {
    return {a.w * s, a.x * s, a.y * s, a.z * s};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }
  friend constexpr Quaternion operator/(const Quaternion& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
  }
  Quaternion& operator+=(const Quaternion& b) { return *this = *this + b; }
  Quaternion& operator-=(const Quaternion& b) { return *this = *this - b; }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << "[" << q.w << "," << q.x << "," << q.y << "," << q.z << "]";
  }
};

inline constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kE1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kE2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kE3{0.0, 0.0, 0.0, 1.0};

// a^{-1} = conj(a) / |a|^2.
inline Quaternion quat_inverse(const Quaternion& a) {
  if (norm(a) <= 1e-300) throw ZeroDivision("quat_inverse: zero quaternion");
  return conj(a) / norm_sq(a);
}

// Pure unit quaternion (element of S^2). Scalar part is identically zero.
class UnitImaginary {
 public:
  UnitImaginary(double x, double y, double z) : x_(x), y_(y), z_(z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (std::abs(n - 1.0) > kUnitTol)
      throw NotUnit("UnitImaginary: vector norm deviates from 1");
  }

  // Scales an arbitrary nonzero vector onto S^2.
  static UnitImaginary normalized(double x, double y, double z) {
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n <= 1e-300) throw ZeroDivision("UnitImaginary: zero direction");
    return UnitImaginary(x / n, y / n, z / n);
  }

  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }
  Quaternion q() const { return {0.0, x_, y_, z_}; }
  UnitImaginary operator-() const { return UnitImaginary(-x_, -y_, -z_); }

 private:
  double x_, y_, z_;
};

inline double dot(const UnitImaginary& a, const UnitImaginary& b) {
  return a.x() * b.x() + a.y() * b.y() + a.z() * b.z();
}

inline const UnitImaginary& sentinel_axis() {
  static const UnitImaginary e1(1.0, 0.0, 0.0);
  return e1;
}

// Ordered orthonormal pair (i, j) of pure unit quaternions, with (i, j, ij)
// co-oriented to (e1, e2, e3). Construction rejects off-tolerance input
// rather than re-orthonormalizing.
class Frame {
 public:
  Frame(const UnitImaginary& i, const UnitImaginary& j) : i_(i), j_(j) {
    if (std::abs(dot(i, j)) > kFrameBuildTol)
      throw NotOrthonormal("Frame: legs are not orthogonal");
    const Quaternion k = i.q() * j.q();
    const double det = i.x() * (j.y() * k.z - j.z() * k.y) -
                       i.y() * (j.x() * k.z - j.z() * k.x) +
                       i.z() * (j.x() * k.y - j.y() * k.x);
    if (std::abs(det - 1.0) > kFrameBuildTol)
      throw NotOrthonormal("Frame: triple (i, j, ij) is not co-oriented");
  }

  const UnitImaginary& i() const { return i_; }
  const UnitImaginary& j() const { return j_; }
  Quaternion ij() const { return i_.q() * j_.q(); }

 private:
  UnitImaginary i_, j_;
};

// Euclidean distance of two frames as points of R^6.
inline double frame_distance(const Frame& a, const Frame& b) {
  const double di[3] = {a.i().x() - b.i().x(), a.i().y() - b.i().y(), a.i().z() - b.i().z()};
  const double dj[3] = {a.j().x() - b.j().x(), a.j().y() - b.j().y(), a.j().z() - b.j().z()};
  return std::sqrt(di[0] * di[0] + di[1] * di[1] + di[2] * di[2] +
                   dj[0] * dj[0] + dj[1] * dj[1] + dj[2] * dj[2]);
}

// Element of S^3.
class UnitQuaternion {
 public:
  explicit UnitQuaternion(const Quaternion& u) : u_(u) {
    if (std::abs(norm(u) - 1.0) > kUnitTol)
      throw NotUnit("UnitQuaternion: norm deviates from 1");
  }

  static UnitQuaternion normalized(const Quaternion& u) {
    const double n = norm(u);
    if (n <= 1e-300) throw ZeroDivision("UnitQuaternion: zero quaternion");
    return UnitQuaternion(u / n);
  }

  const Quaternion& q() const { return u_; }
  UnitQuaternion conjugate() const { return UnitQuaternion(conj(u_)); }

 private:
  Quaternion u_;
};

// q = x + I y with y >= 0. Real points (vector part below kRealAxisTol) get
// y = 0 and the e1 sentinel axis; downstream formulas are insensitive to the
// sentinel because both half-terms coincide at y = 0.
struct SliceCoords {
  double x;
  double y;
  UnitImaginary axis;
};

inline SliceCoords slice_coords(const Quaternion& q) {
  const double vn = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (vn <= kRealAxisTol) return {q.w, 0.0, sentinel_axis()};
  return {q.w, vn, UnitImaginary::normalized(q.x, q.y, q.z)};
}

// Rotation q -> u q u^- ; preserves R^3 and the scalar part.
inline Quaternion rotate(const UnitQuaternion& u, const Quaternion& p) {
  return u.q() * p * conj(u.q());
}

inline UnitImaginary rotate(const UnitQuaternion& u, const UnitImaginary& v) {
  const Quaternion r = rotate(u, v.q());
  return UnitImaginary::normalized(r.x, r.y, r.z);
}

// R_u(i, j) = (u i u^-, u j u^-). Preserves T.
inline Frame frame_rotate(const UnitQuaternion& u, const Frame& fr) {
  return Frame(rotate(u, fr.i()), rotate(u, fr.j()));
}

// Transition between the trivializations labelled u and v: R_{v^- u}.
inline Frame transition(const UnitQuaternion& u, const UnitQuaternion& v, const Frame& fr) {
  return frame_rotate(UnitQuaternion::normalized(conj(v.q()) * u.q()), fr);
}

}  // namespace slicebundle
