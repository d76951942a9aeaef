#pragma once

#include <array>
#include <ostream>

#include "fhyp/quaternion.hpp"

namespace fhyp {

// Octonion as a Cayley-Dickson pair of quaternions with the product
//   (q1,q2)(p1,p2) = (q1 p1 - conj(p2) q2, p2 q1 + q2 conj(p1))
// and conjugation (q1,q2) -> (conj(q1), -q2).  The basis is
// e0..e3 = (1,i,j,k | 0) and e4..e7 = (0 | 1,i,j,k).
template <typename T>
struct Octonion {
  Quaternion<T> a{}, b{};

  Octonion() = default;
  Octonion(T re) : a(re) {}  // real embedding, intentionally implicit
  Octonion(Quaternion<T> a_, Quaternion<T> b_) : a(a_), b(b_) {}

  static Octonion from_components(const std::array<T, 8>& c) {
    return {{c[0], c[1], c[2], c[3]}, {c[4], c[5], c[6], c[7]}};
  }
  std::array<T, 8> components() const {
    return {a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z};
  }

  Octonion& operator+=(const Octonion& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    a -= o.a;
    b -= o.b;
    return *this;
  }
  Octonion& operator*=(T s) {
    a *= s;
    b *= s;
    return *this;
  }
  Octonion& operator/=(T s) {
    a /= s;
    b /= s;
    return *this;
  }

  Octonion operator-() const { return {-a, -b}; }

  friend Octonion operator+(Octonion x, const Octonion& y) { return x += y; }
  friend Octonion operator-(Octonion x, const Octonion& y) { return x -= y; }
  friend Octonion operator*(const Octonion& x, const Octonion& y) {
    return {x.a * y.a - conj(y.b) * x.b, y.b * x.a + x.b * conj(y.a)};
  }
  friend Octonion operator*(Octonion x, T s) { return x *= s; }
  friend Octonion operator*(T s, Octonion x) { return x *= s; }
  friend Octonion operator/(Octonion x, T s) { return x /= s; }

  friend bool operator==(const Octonion& x, const Octonion& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const Octonion& x, const Octonion& y) { return !(x == y); }

  friend std::ostream& operator<<(std::ostream& os, const Octonion& o) {
    return os << '[' << o.a << ';' << o.b << ']';
  }
};

using Octoniond = Octonion<double>;

template <typename T>
Octonion<T> conj(const Octonion<T>& o) {
  return {conj(o.a), -o.b};
}

template <typename T>
T re(const Octonion<T>& o) {
  return re(o.a);
}

template <typename T>
Octonion<T> im(const Octonion<T>& o) {
  return {im(o.a), o.b};
}

template <typename T>
T abs2(const Octonion<T>& o) {
  return abs2(o.a) + abs2(o.b);
}

template <typename T>
T abs(const Octonion<T>& o) {
  using std::sqrt;
  return sqrt(abs2(o));
}

template <typename T>
T im_abs(const Octonion<T>& o) {
  using std::sqrt;
  const T ia = im_abs(o.a);
  return sqrt(ia * ia + abs2(o.b));
}

// Valid because octonions are alternative: o * conj(o) = |o|^2.
template <typename T>
Octonion<T> inv(const Octonion<T>& o) {
  const T n = abs2(o);
  if (n == T(0)) throw std::domain_error("octonion inverse of zero");
  return conj(o) / n;
}

template <typename T>
T line_angle(const Octonion<T>& o) {
  if (abs2(o) == T(0)) throw std::domain_error("line_angle of zero");
  using std::atan2;
  using std::abs;
  return atan2(im_abs(o), abs(re(o)));
}

// (xy)z - x(yz); nonzero in general, zero on 2-generated subalgebras.
template <typename T>
Octonion<T> associator(const Octonion<T>& x, const Octonion<T>& y, const Octonion<T>& z) {
  return (x * y) * z - x * (y * z);
}

}  // namespace fhyp
