#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fhyp/hermitian.hpp"
#include "fhyp/linear.hpp"
#include "fhyp/tolerances.hpp"

namespace fhyp {

namespace detail {

// Interior lift scaled to <<p,p>> = -1.
template <typename F>
FRow<F> unit_interior_lift(const BallPoint<F>& x) {
  if (x.kind() != PointKind::interior)
    throw std::domain_error("expected an interior point");
  const FRow<F> l = x.lift();
  const double q = -re(form<F>(l, l));
  return l * F(1.0 / std::sqrt(q));
}

// Boundary lift with the coordinate row renormalized onto the unit sphere,
// so the lift is null to machine precision rather than to the band width.
template <typename F>
FRow<F> null_boundary_lift(const BallPoint<F>& x) {
  if (x.kind() != PointKind::boundary)
    throw std::domain_error("expected a boundary point");
  const BallPoint<F> r{x.z * F(1.0 / x.norm())};
  return r.lift();
}

// Left rescale l by -|c| inv(c), turning a pairing value c into -|c|.
template <typename F>
FRow<F> make_pairing_real(const FRow<F>& l, const F& c) {
  if (abs(c) < tol::degenerate_form)
    throw std::domain_error("coincident projective points");
  const F lambda = F(-abs(c)) * inv(c);
  return lambda * l;
}

}  // namespace detail

// Unit-speed geodesic gamma(s) = cosh(s/2) p + sinh(s/2) u with
// <<p,p>> = -1, <<u,u>> = 1, <<p,u>> = 0.
template <typename F>
struct Geodesic {
  FRow<F> p, u;

  // gamma(0) = x, gamma(d(x,y)) = y for interior x != y.
  static Geodesic through(const BallPoint<F>& x, const BallPoint<F>& y) {
    const FRow<F> ph = detail::unit_interior_lift<F>(x);
    const FRow<F> l2 = detail::unit_interior_lift<F>(y);
    const F c = form<F>(l2, ph);
    const double m = abs(c);
    if (m - 1.0 < 1e-14) throw std::domain_error("geodesic through coincident points");
    const FRow<F> q = detail::make_pairing_real<F>(l2, c);  // <<q,ph>> = -m
    FRow<F> u0 = q - F(m) * ph;
    return {ph, u0 * F(1.0 / std::sqrt(m * m - 1.0))};
  }

  // gamma(-inf) = A, gamma(+inf) = B for distinct boundary A, B.
  static Geodesic from_endpoints(const BallPoint<F>& A, const BallPoint<F>& B) {
    const FRow<F> la = detail::null_boundary_lift<F>(A);
    const FRow<F> lb = detail::null_boundary_lift<F>(B);
    const F c = form<F>(lb, la);
    const double m = abs(c);
    const FRow<F> a = detail::make_pairing_real<F>(lb, c);  // <<a,la>> = -m
    const double s = 1.0 / std::sqrt(2.0 * m);
    return {(a + la) * F(s), (a - la) * F(s)};
  }

  // gamma(0) = x, gamma(+inf) = A for interior x and boundary A.
  static Geodesic toward(const BallPoint<F>& x, const BallPoint<F>& A) {
    const FRow<F> ph = detail::unit_interior_lift<F>(x);
    const FRow<F> a = detail::null_boundary_lift<F>(A);
    const F g = form<F>(a, ph);
    if (abs(g) < tol::degenerate_form) throw std::domain_error("degenerate direction");
    const F c = -inv(g);
    return {ph, c * a - ph};
  }
};

template <typename F>
BallPoint<F> geodesic_point(const Geodesic<F>& geo, double s) {
  const FRow<F> l = F(std::cosh(s / 2)) * geo.p + F(std::sinh(s / 2)) * geo.u;
  return from_lift<F>(l);
}

// (gamma(-inf), gamma(+inf)).
template <typename F>
std::pair<BallPoint<F>, BallPoint<F>> geodesic_endpoints(const Geodesic<F>& geo) {
  return {from_lift<F>(geo.p - geo.u), from_lift<F>(geo.p + geo.u)};
}

// Positive-definite orthobasis of the orthogonal complement of the row span
// of B (whose Gram matrix is G), built from standard basis candidates with
// pivoting.  Returns (dim - rows(B)) rows of unit positive vectors.
template <typename F>
FMat<F> complete_positive_orthobasis(const FMat<F>& B, const FMat<F>& G) {
  const Eigen::Index k = B.rows(), dim = B.cols();
  const Eigen::Index want = dim - k;
  const FMat<F> J = form_matrix<F>(dim);
  FMat<F> W(want, dim);
  Eigen::Index got = 0;
  for (Eigen::Index cand = 0; cand < dim && got < want; ++cand) {
    FRow<F> w = FRow<F>::Zero(dim);
    w(cand) = F(1);
    FMat<F> rhs(1, k);
    for (Eigen::Index j = 0; j < k; ++j) rhs(0, j) = form<F>(w, FRow<F>(B.row(j)));
    const FMat<F> coef = solve_right<F>(G, rhs);
    for (Eigen::Index j = 0; j < k; ++j) w -= coef(0, j) * FRow<F>(B.row(j));
    for (Eigen::Index j = 0; j < got; ++j) {
      const FRow<F> wj = W.row(j);
      w -= form<F>(w, wj) * wj;
    }
    const double r = re(form<F>(w, w));
    if (r > tol::pivot) {
      W.row(got++) = w * F(1.0 / std::sqrt(r));
    }
  }
  if (got != want) throw std::runtime_error("orthobasis completion ran out of candidates");
  return W;
}

// F-line spanned by the lifts of two distinct points of the closed ball.
template <typename F>
struct FLine {
  FRow<F> a, b;
  FMat<F> gram;

  FLine(const BallPoint<F>& x, const BallPoint<F>& y)
      : a(x.kind() == PointKind::boundary ? detail::null_boundary_lift<F>(x) : x.lift()),
        b(y.kind() == PointKind::boundary ? detail::null_boundary_lift<F>(y) : y.lift()),
        gram(2, 2) {
    gram(0, 0) = form<F>(a, a);
    gram(0, 1) = form<F>(a, b);
    gram(1, 0) = form<F>(b, a);
    gram(1, 1) = form<F>(b, b);
    const double det = re(gram(0, 0)) * re(gram(1, 1)) - abs2(gram(0, 1));
    if (std::fabs(det) < tol::degenerate_form)
      throw std::domain_error("degenerate span: points projectively equal");
    if (det > 0.0) throw std::domain_error("span does not have signature (1,1)");
  }
};

// Orthogonal projection onto the line: q = alpha a + beta b with
// [alpha beta] gram = [<<p,a>>, <<p,b>>].
template <typename F>
BallPoint<F> project_to_fline(const BallPoint<F>& p, const FLine<F>& L) {
  const FRow<F> l = p.lift();
  FMat<F> rhs(1, 2);
  rhs(0, 0) = form<F>(l, L.a);
  rhs(0, 1) = form<F>(l, L.b);
  const FMat<F> coef = solve_right<F>(L.gram, rhs);
  const FRow<F> q = coef(0, 0) * L.a + coef(0, 1) * L.b;
  if (re(form<F>(q, q)) >= 0.0)
    throw std::domain_error("projection falls outside the ball");
  return from_lift<F>(q);
}

// Residual of cosh^2(d(p,x)/2) = cosh^2(d(p,q)/2) cosh^2(d(q,x)/2) with
// q the projection of p; exact for any x on the line.
template <typename F>
double pythagoras_residual(const BallPoint<F>& p, const FLine<F>& L, const BallPoint<F>& x) {
  const BallPoint<F> q = project_to_fline<F>(p, L);
  auto c2 = [](const BallPoint<F>& s, const BallPoint<F>& t) {
    const double d = distance<F>(s, t);
    const double c = std::cosh(d / 2);
    return c * c;
  };
  return std::fabs(c2(p, x) - c2(p, q) * c2(q, x));
}

// Isometry sending the boundary pair (x1, x2) to ((0,..,-1), (0,..,1)).
// Exact-identity on the already-standard pair.
template <typename F>
FMat<F> move_to_standard(const BallPoint<F>& x1, const BallPoint<F>& x2) {
  const int n = x1.n();
  const Eigen::Index dim = n + 1;
  const FRow<F> v1 = detail::null_boundary_lift<F>(x1);
  const FRow<F> l2 = detail::null_boundary_lift<F>(x2);
  const F c = form<F>(v1, l2);
  if (abs(c) < tol::degenerate_form)
    throw std::domain_error("move_to_standard: coincident boundary points");
  const F lambda = F(-2.0) * conj(inv(c));
  const FRow<F> v2 = lambda * l2;  // <<v1,v2>> = <<v2,v1>> = -2

  FMat<F> B(2, dim);
  B.row(0) = v1;
  B.row(1) = v2;
  FMat<F> G = FMat<F>::Zero(2, 2);
  G(0, 1) = F(-2);
  G(1, 0) = F(-2);
  const FMat<F> W = complete_positive_orthobasis<F>(B, G);

  FMat<F> V(dim, dim), S = FMat<F>::Zero(dim, dim);
  V.row(0) = v1;
  V.row(1) = v2;
  S(0, n - 1) = F(-1);
  S(0, n) = F(1);
  S(1, n - 1) = F(1);
  S(1, n) = F(1);
  for (Eigen::Index j = 0; j + 2 < dim; ++j) {
    V.row(j + 2) = W.row(j);
    S(j + 2, j) = F(1);
  }
  FMat<F> g = solve_left<F>(V, S);
  if (form_residual<F>(g) > tol::form_preservation)
    throw std::runtime_error("move_to_standard: form preservation lost");
  return g;
}

// Distance from x3 to the spine of the bisector with vertices x1, x2, read
// in standard position: sinh d = 2 |Im z| / (1 - |z|^2) for the last ball
// coordinate z of the moved point.  Points with |z| = 1 lie on the boundary
// of the spanned line's closure and get the infinity sentinel.
template <typename F>
double dist_to_spine(const BallPoint<F>& x1, const BallPoint<F>& x2, const BallPoint<F>& x3) {
  if (x3.kind() != PointKind::boundary)
    throw std::domain_error("dist_to_spine expects a boundary point");
  const FMat<F> g = move_to_standard<F>(x1, x2);
  const BallPoint<F> renorm{x3.z * F(1.0 / x3.norm())};
  const BallPoint<F> w = apply<F>(g, renorm);
  const F z = w.z(w.n() - 1);
  const double den = 1.0 - abs2(z);
  if (den < tol::degenerate_form) return std::numeric_limits<double>::infinity();
  return std::asinh(2.0 * im_abs(z) / den);
}

// Bisector of two distinct interior points, with its spine parametrized as
// [alpha a + conj(alpha) b] over the normalized lifts.
template <typename F>
struct Bisector {
  BallPoint<F> z1, z2;
  FRow<F> a, b;  // <<a,a>> = <<b,b>> = -1, <<a,b>> = -c
  double c;      // cosh(d(z1,z2)/2) > 1
  FMat<F> ortho;  // rows spanning the orthocomplement of span{a,b}

  Bisector(BallPoint<F> p1, BallPoint<F> p2) : z1(std::move(p1)), z2(std::move(p2)) {
    a = detail::unit_interior_lift<F>(z1);
    const FRow<F> l2 = detail::unit_interior_lift<F>(z2);
    const F c0 = form<F>(l2, a);
    if (abs(c0) - 1.0 < 1e-14) throw std::domain_error("bisector of coincident points");
    b = detail::make_pairing_real<F>(l2, c0);
    c = abs(c0);
    FMat<F> B(2, a.size());
    B.row(0) = a;
    B.row(1) = b;
    FMat<F> G(2, 2);
    G(0, 0) = F(-1);
    G(0, 1) = F(-c);
    G(1, 0) = F(-c);
    G(1, 1) = F(-1);
    ortho = complete_positive_orthobasis<F>(B, G);
  }
};

// d(p, z1) - d(p, z2); zero on the bisector, positive on the z2 side.
template <typename F>
double bisector_contains(const Bisector<F>& B, const BallPoint<F>& p) {
  return distance<F>(p, B.z1) - distance<F>(p, B.z2);
}

template <typename F>
FRow<F> spine_lift(const Bisector<F>& B, const F& alpha) {
  const double w = abs2(alpha) + B.c * re(alpha * alpha);
  if (!(w > 0.0)) throw std::domain_error("parameter leaves the spine");
  return alpha * B.a + conj(alpha) * B.b;
}

template <typename F>
BallPoint<F> spine_sample(const Bisector<F>& B, const F& alpha) {
  return from_lift<F>(spine_lift<F>(B, alpha));
}

// Geodesic midpoint of [z1, z2]; alpha = 1.
template <typename F>
BallPoint<F> spine_point(const Bisector<F>& B) {
  return spine_sample<F>(B, F(1));
}

// Point of the slice over the spine point at alpha: lift + coeffs * ortho.
template <typename F>
BallPoint<F> slice_sample(const Bisector<F>& B, const F& alpha, const FRow<F>& coeffs) {
  if (coeffs.size() != B.ortho.rows())
    throw std::invalid_argument("slice_sample: wrong number of coefficients");
  const FRow<F> l = spine_lift<F>(B, alpha) + apply_row<F>(coeffs, B.ortho);
  if (re(form<F>(l, l)) >= 0.0) throw std::domain_error("slice point outside the ball");
  return from_lift<F>(l);
}

// d(y, w) - d(y, z): positive when y is strictly on the z side.
template <typename F>
double halfspace_side(const BallPoint<F>& z, const BallPoint<F>& w, const BallPoint<F>& y) {
  return distance<F>(y, w) - distance<F>(y, z);
}

struct DirichletResult {
  bool inside;
  bool vacuous;
  double margin;
};

// Strict membership of y in the Dirichlet domain centered at z0 with
// respect to the given orbit maps.  An empty family is vacuously true.
template <typename F>
DirichletResult dirichlet_membership(const BallPoint<F>& y, const BallPoint<F>& z0,
                                     const std::vector<FMat<F>>& maps) {
  if (maps.empty()) return {true, true, std::numeric_limits<double>::infinity()};
  double margin = std::numeric_limits<double>::infinity();
  for (const FMat<F>& g : maps) {
    const double m = halfspace_side<F>(z0, apply<F>(g, z0), y);
    margin = std::min(margin, m);
  }
  return {margin > 0.0, false, margin};
}

}  // namespace fhyp
