#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "fhyp/linear.hpp"
#include "fhyp/random.hpp"
#include "fhyp/tolerances.hpp"

namespace fhyp {

// The Hermitian form of signature (n,1) on row lifts in F^{n+1},
//   <<z,w>> = sum_{i<n} z_i conj(w_i) - z_n conj(w_n),
// left-linear in the first argument: <<l z, m w>> = l <<z,w>> conj(m).
template <typename F>
F form(const FRow<F>& a, const FRow<F>& b) {
  const Eigen::Index m = a.size();
  if (b.size() != m || m < 2) throw std::invalid_argument("form: bad lift sizes");
  F s{};
  for (Eigen::Index i = 0; i + 1 < m; ++i) s += a(i) * conj(b(i));
  s -= a(m - 1) * conj(b(m - 1));
  return s;
}

enum class PointKind { interior, boundary };

// Point of the closed unit ball in F^n, n >= 1.  Construction rejects
// points outside the ball beyond the boundary band.
template <typename F>
struct BallPoint {
  FRow<F> z;

  explicit BallPoint(FRow<F> coords) : z(std::move(coords)) {
    if (z.size() < 1) throw std::invalid_argument("ball point needs at least one coordinate");
    if (norm() > 1.0 + tol::boundary_band)
      throw std::invalid_argument("point lies outside the closed unit ball");
  }

  static BallPoint origin(int n) { return BallPoint(FRow<F>::Zero(n)); }

  int n() const { return int(z.size()); }

  double norm2() const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) s += abs2(z(i));
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }

  PointKind kind() const {
    return norm() < 1.0 - tol::boundary_band ? PointKind::interior : PointKind::boundary;
  }
  bool is_boundary() const { return kind() == PointKind::boundary; }

  // Affine lift (z_1, .., z_n, 1).
  FRow<F> lift() const {
    FRow<F> l(z.size() + 1);
    l.head(z.size()) = z;
    l(z.size()) = F(1);
    return l;
  }
};

// Projectivization by left multiplication: scale so the last coordinate
// becomes 1 and drop it.
template <typename F>
BallPoint<F> from_lift(const FRow<F>& l) {
  const Eigen::Index m = l.size();
  const F last = l(m - 1);
  if (abs2(last) < 1e-28) throw std::domain_error("lift has vanishing last coordinate");
  const F s = inv(last);
  FRow<F> z(m - 1);
  for (Eigen::Index i = 0; i + 1 < m; ++i) z(i) = s * l(i);
  return BallPoint<F>(std::move(z));
}

template <typename F>
F form(const BallPoint<F>& p, const BallPoint<F>& q) {
  return form<F>(p.lift(), q.lift());
}

// cosh^2(d/2) = <<z,w>><<w,z>> / (<<z,z>><<w,w>>), curvature normalized so
// d(0, r e_n) = 2 artanh r.
template <typename F>
double distance(const BallPoint<F>& p, const BallPoint<F>& q) {
  if (p.kind() != PointKind::interior || q.kind() != PointKind::interior)
    throw std::domain_error("distance requires interior points");
  const FRow<F> a = p.lift(), b = q.lift();
  const double num = abs2(form<F>(a, b));
  const double den = re(form<F>(a, a)) * re(form<F>(b, b));
  const double c2 = num / den;
  return 2.0 * std::acosh(std::sqrt(std::max(1.0, c2)));
}

// <<x1,x2>><<x2,x3>><<x3,x1>>.  Throws when a pairwise product is too small
// to carry a well-defined angular invariant.
template <typename F>
F triple_product(const BallPoint<F>& x1, const BallPoint<F>& x2, const BallPoint<F>& x3) {
  const FRow<F> a = x1.lift(), b = x2.lift(), c = x3.lift();
  const F g12 = form<F>(a, b), g23 = form<F>(b, c), g31 = form<F>(c, a);
  if (abs(g12) < tol::degenerate_form || abs(g23) < tol::degenerate_form ||
      abs(g31) < tol::degenerate_form)
    throw std::domain_error("degenerate triple: vanishing pairwise product");
  return g12 * g23 * g31;
}

template <typename F>
struct Triple {
  BallPoint<F> x1, x2, x3;
};

// Euclidean distance of ball coordinate rows; the comparison metric for
// marker values and limit point clouds.
template <typename F>
double chordal(const BallPoint<F>& p, const BallPoint<F>& q) {
  if (p.n() != q.n()) throw std::invalid_argument("chordal: dimension mismatch");
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.z.size(); ++i) s += abs2(p.z(i) - q.z(i));
  return std::sqrt(s);
}

// Action of a form-preserving matrix on the ball: lift, act on the row from
// the right, projectivize.
template <typename F>
BallPoint<F> apply(const FMat<F>& M, const BallPoint<F>& p) {
  return from_lift<F>(apply_row<F>(p.lift(), M));
}

// Boundary triple with pairwise Hermitian products bounded away from zero;
// regenerates until well conditioned.
template <typename F>
std::array<BallPoint<F>, 3> random_boundary_triple(Rng& rng, int n, double min_form = 1e-2) {
  for (;;) {
    BallPoint<F> x1{random_boundary_point<F>(rng, n)};
    BallPoint<F> x2{random_boundary_point<F>(rng, n)};
    BallPoint<F> x3{random_boundary_point<F>(rng, n)};
    const FRow<F> a = x1.lift(), b = x2.lift(), c = x3.lift();
    if (abs(form<F>(a, b)) < min_form) continue;
    if (abs(form<F>(b, c)) < min_form) continue;
    if (abs(form<F>(c, a)) < min_form) continue;
    return {x1, x2, x3};
  }
}

}  // namespace fhyp
