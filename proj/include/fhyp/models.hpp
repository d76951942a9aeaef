#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fhyp/hermitian.hpp"
#include "fhyp/linear.hpp"

namespace fhyp {

namespace detail {
template <typename F>
void require_imaginary(const F& v, const char* what) {
  if (std::fabs(re(v)) > 1e-12) throw std::invalid_argument(what);
}

// sum xi_i conj(xi'_i) over the horizontal slots.
template <typename F>
F horizontal_pairing(const FRow<F>& a, const FRow<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("horizontal pairing: size mismatch");
  F s{};
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * conj(b(i));
  return s;
}
}  // namespace detail

// Element (xi, v) of the Carnot group N = F^{n-1} x Im F with
//   (xi,v)(xi',v') = (xi+xi', v+v'+2 Im<xi,xi'>).
template <typename F>
struct CarnotElement {
  FRow<F> xi;
  F v;

  CarnotElement(FRow<F> xi_, F v_) : xi(std::move(xi_)), v(v_) {
    detail::require_imaginary(v, "carnot element: v must be imaginary");
  }
  static CarnotElement identity(int h) { return {FRow<F>::Zero(h), F{}}; }
};

// Point (xi, v, u) of the Siegel domain closure attached to N; u = 0 is the
// boundary, u > 0 the interior.
template <typename F>
struct CarnotPoint {
  FRow<F> xi;
  F v;
  double u;

  CarnotPoint(FRow<F> xi_, F v_, double u_) : xi(std::move(xi_)), v(v_), u(u_) {
    detail::require_imaginary(v, "carnot point: v must be imaginary");
    if (u < 0.0) throw std::invalid_argument("carnot point: u must be nonnegative");
  }
};

template <typename F>
CarnotElement<F> carnot_mul(const CarnotElement<F>& a, const CarnotElement<F>& b) {
  const F cross = detail::horizontal_pairing<F>(a.xi, b.xi);
  return {a.xi + b.xi, a.v + b.v + 2.0 * im(cross)};
}

template <typename F>
CarnotElement<F> carnot_inverse(const CarnotElement<F>& a) {
  return {-a.xi, -a.v};
}

// Left translation of a Siegel point; the height u is untouched.
template <typename F>
CarnotPoint<F> translate(const CarnotElement<F>& g, const CarnotPoint<F>& p) {
  const F cross = detail::horizontal_pairing<F>(g.xi, p.xi);
  return {g.xi + p.xi, g.v + p.v + 2.0 * im(cross), p.u};
}

// |(xi,v,u)|_c = | |xi|^2 + u - v |^{1/2}.
template <typename F>
double cygan_norm(const CarnotPoint<F>& p) {
  const F inner = F(re(detail::horizontal_pairing<F>(p.xi, p.xi)) + p.u) - p.v;
  return std::sqrt(abs(inner));
}

// rho((xi,v,u),(xi',v',u')) = | |xi-xi'|^2 + |u-u'| - (v - v' + 2 Im<xi,xi'>) |^{1/2}.
// Im<xi,xi'> is evaluated as -Im<xi, xi-xi'>, equal because Im<xi,xi> = 0;
// this keeps coincident and nearby points from losing all their accuracy to
// the outer half power.
template <typename F>
double cygan_dist(const CarnotPoint<F>& p, const CarnotPoint<F>& q) {
  const FRow<F> d = p.xi - q.xi;
  const double r2 = re(detail::horizontal_pairing<F>(d, d));
  const F twist = p.v - q.v - 2.0 * im(detail::horizontal_pairing<F>(p.xi, d));
  const F inner = F(r2 + std::fabs(p.u - q.u)) - twist;
  return std::sqrt(abs(inner));
}

// delta_r (xi, v, u) = (r xi, r^2 v, r^2 u), r > 0.
template <typename F>
CarnotPoint<F> dilate(double r, const CarnotPoint<F>& p) {
  if (!(r > 0.0)) throw std::invalid_argument("dilation factor must be positive");
  return {p.xi * F(r), (r * r) * p.v, r * r * p.u};
}

// Boundary point [z, t] of the Carnot-horospherical coordinates, with one
// point at infinity closing the sphere.
template <typename F>
struct NPoint {
  FRow<F> xi;
  F t;
  bool infinite = false;

  NPoint(FRow<F> xi_, F t_) : xi(std::move(xi_)), t(t_) {
    detail::require_imaginary(t, "boundary point: t must be imaginary");
  }
  static NPoint infinity(int h) {
    NPoint p{FRow<F>::Zero(h), F{}};
    p.infinite = true;
    return p;
  }

  CarnotPoint<F> carnot() const {
    if (infinite) throw std::domain_error("the point at infinity has no carnot coordinates");
    return {xi, t, 0.0};
  }
};

template <typename F>
double cygan_dist(const NPoint<F>& p, const NPoint<F>& q) {
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite || q.infinite) return std::numeric_limits<double>::infinity();
  return cygan_dist<F>(p.carnot(), q.carnot());
}

// [z,t] -> ( 2 inv(conj(s)) z , inv(conj(s)) (1 - |z|^2 + t) ) with
// s = 1 + |z|^2 + t; infinity maps to (0,..,0,-1) and [0,0] to (0,..,0,1).
template <typename F>
BallPoint<F> boundary_to_ball(const NPoint<F>& p) {
  const int h = int(p.xi.size());
  FRow<F> w(h + 1);
  if (p.infinite) {
    w.setZero();
    w(h) = F(-1);
    return BallPoint<F>(std::move(w));
  }
  const double z2 = re(detail::horizontal_pairing<F>(p.xi, p.xi));
  const F s = F(1.0 + z2) + p.t;
  const F a = inv(conj(s));
  for (int i = 0; i < h; ++i) w(i) = 2.0 * (a * p.xi(i));
  w(h) = a * (F(1.0 - z2) + p.t);
  return BallPoint<F>(std::move(w));
}

// Inverse of boundary_to_ball: z = inv(1 + w_n) w', t = -Im(2 inv(1 + w_n)).
// The antipode w_n = -1 returns the point at infinity.
template <typename F>
NPoint<F> ball_to_boundary(const BallPoint<F>& b) {
  if (b.kind() != PointKind::boundary)
    throw std::domain_error("ball_to_boundary requires a boundary point");
  const int h = b.n() - 1;
  const F wn = b.z(h);
  if (abs2(F(1.0) + wn) < 1e-28) return NPoint<F>::infinity(h);
  const F a = inv(F(1.0) + wn);
  FRow<F> xi(h);
  for (int i = 0; i < h; ++i) xi(i) = a * b.z(i);
  const F t = -im(2.0 * a);
  return NPoint<F>(std::move(xi), t);
}

}  // namespace fhyp
