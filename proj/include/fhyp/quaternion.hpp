#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <Eigen/Core>

namespace fhyp {

// Hamilton quaternion over a real scalar type T.  Multiplication is
// noncommutative; throughout the library scalars multiply vectors from the
// left and matrices act on row vectors from the right, so there is no
// two-sided division operator: write inv(a)*b or b*inv(a) explicitly.
template <typename T>
struct Quaternion {
  T w{0}, x{0}, y{0}, z{0};

  Quaternion() = default;
  Quaternion(T re) : w(re) {}  // real embedding, intentionally implicit
  Quaternion(T w_, T x_, T y_, T z_) : w(w_), x(x_), y(y_), z(z_) {}

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  Quaternion& operator*=(const Quaternion& o) { return *this = *this * o; }
  Quaternion& operator*=(T s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
  Quaternion& operator/=(T s) {
    w /= s; x /= s; y /= s; z /= s;
    return *this;
  }

  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend Quaternion operator*(Quaternion a, T s) { return a *= s; }
  friend Quaternion operator*(T s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, T s) { return a /= s; }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
  }
};

using Quaterniond = Quaternion<double>;

template <typename T>
Quaternion<T> conj(const Quaternion<T>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename T>
T re(const Quaternion<T>& q) {
  return q.w;
}

template <typename T>
Quaternion<T> im(const Quaternion<T>& q) {
  return {T(0), q.x, q.y, q.z};
}

template <typename T>
T abs2(const Quaternion<T>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <typename T>
T abs(const Quaternion<T>& q) {
  using std::sqrt;
  return sqrt(abs2(q));
}

template <typename T>
T im_abs(const Quaternion<T>& q) {
  using std::sqrt;
  return sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
}

// Eigen's IsComplex code paths resolve real() and imag() through ADL; they
// only consult imag() as a zero test for realness, which the modulus of the
// 3-dimensional imaginary part answers faithfully.
template <typename T>
T real(const Quaternion<T>& q) {
  return q.w;
}

template <typename T>
T imag(const Quaternion<T>& q) {
  return im_abs(q);
}

template <typename T>
Quaternion<T> inv(const Quaternion<T>& q) {
  const T n = abs2(q);
  if (n == T(0)) throw std::domain_error("quaternion inverse of zero");
  return conj(q) / n;
}

template <typename T>
Quaternion<T> normalized(const Quaternion<T>& q) {
  const T a = abs(q);
  if (a == T(0)) throw std::domain_error("cannot normalize zero quaternion");
  return q / a;
}

// Angle between the line R·1 and q, in [0, pi/2].  The line (not ray)
// convention makes the value insensitive to the sign of Re q.
template <typename T>
T line_angle(const Quaternion<T>& q) {
  if (abs2(q) == T(0)) throw std::domain_error("line_angle of zero");
  using std::atan2;
  using std::abs;
  return atan2(im_abs(q), abs(re(q)));
}

// Unit purely-imaginary quaternion serving as a rotation axis.
template <typename T>
struct ImaginaryDirection {
  Quaternion<T> u;  // re = 0, |u| = 1

  static ImaginaryDirection from_components(T x, T y, T z) {
    Quaternion<T> q{T(0), x, y, z};
    const T a = abs(q);
    if (!(a > T(0))) throw std::invalid_argument("zero rotation axis");
    return {q / a};
  }
};

using ImaginaryDirectiond = ImaginaryDirection<double>;

// nu = cos(eta) + sin(eta)*axis.  Conjugation v -> conj(nu) v nu rotates the
// imaginary plane orthogonal to the axis by 2*eta; left multiplication by
// inv(nu) tilts the boundary ray R+ by the geometric angle eta, which is the
// bending parameter exposed to users.
template <typename T>
Quaternion<T> unit_rotation(const ImaginaryDirection<T>& axis, T eta) {
  using std::cos;
  using std::sin;
  return Quaternion<T>(cos(eta)) + sin(eta) * axis.u;
}

// conj(nu) v nu, the rotation of the imaginary 3-space induced by unit nu.
template <typename T>
Quaternion<T> rotate_by(const Quaternion<T>& nu, const Quaternion<T>& v) {
  return conj(nu) * v * nu;
}

}  // namespace fhyp

namespace Eigen {

template <typename T>
struct NumTraits<fhyp::Quaternion<T>> : GenericNumTraits<fhyp::Quaternion<T>> {
  typedef T Real;
  typedef fhyp::Quaternion<T> NonInteger;
  typedef fhyp::Quaternion<T> Nested;
  typedef T Literal;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
  static inline Real epsilon() { return NumTraits<T>::epsilon(); }
  static inline Real dummy_precision() { return NumTraits<T>::dummy_precision(); }
  static inline int digits10() { return NumTraits<T>::digits10(); }
};

}  // namespace Eigen
