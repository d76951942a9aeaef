#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fhyp/geometry.hpp"
#include "fhyp/hermitian.hpp"
#include "fhyp/octonion.hpp"

namespace fhyp {

// Angular invariant of a boundary triple, in [0, pi/2].
template <typename F>
double cartan_angular(const BallPoint<F>& x1, const BallPoint<F>& x2, const BallPoint<F>& x3) {
  return line_angle(triple_product<F>(x1, x2, x3));
}

template <typename F>
double toledo(const BallPoint<F>& x1, const BallPoint<F>& x2, const BallPoint<F>& x3) {
  return 2.0 * cartan_angular<F>(x1, x2, x3);
}

enum class TripleKind { real_plane, f_line, generic };

inline TripleKind classify(double angle, double band = tol::geometric) {
  if (angle < band) return TripleKind::real_plane;
  if (M_PI_2 - angle < band) return TripleKind::f_line;
  return TripleKind::generic;
}

// Angle at the interior vertex w between the geodesics toward a and b.
template <typename F>
double triangle_angle(const BallPoint<F>& w, const BallPoint<F>& a, const BallPoint<F>& b) {
  auto tangent = [&w](const BallPoint<F>& v) {
    return v.kind() == PointKind::boundary ? Geodesic<F>::toward(w, v).u
                                           : Geodesic<F>::through(w, v).u;
  };
  const FRow<F> u1 = tangent(a), u2 = tangent(b);
  const double c = std::clamp(re(form<F>(u1, u2)), -1.0, 1.0);
  return std::acos(c);
}

// Gauss-Bonnet area of a geodesic triangle inside a totally geodesic
// surface: pi minus the interior-vertex angle sum (ideal vertices count 0).
template <typename F>
double triangle_area_gb(const BallPoint<F>& v1, const BallPoint<F>& v2, const BallPoint<F>& v3) {
  const std::array<const BallPoint<F>*, 3> v{&v1, &v2, &v3};
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (v[i]->kind() == PointKind::interior)
      sum += triangle_angle<F>(*v[i], *v[(i + 1) % 3], *v[(i + 2) % 3]);
  }
  return M_PI - sum;
}

// Area route to the Toledo invariant: the triangle with ideal vertices
// x1, x2 and the projection of x3 onto their line has area 2A.
template <typename F>
double toledo_gb(const BallPoint<F>& x1, const BallPoint<F>& x2, const BallPoint<F>& x3) {
  const FLine<F> L(x1, x2);
  const BallPoint<F> w = project_to_fline<F>(x3, L);
  return triangle_area_gb<F>(x1, x2, w);
}

namespace detail {

// Unit quaternionic scalar u with u a conj(u) = b for imaginary a, b of
// equal modulus; empty when the field has no rotation joining them.
template <typename F>
std::optional<F> rotation_between(const F& a, const F& b) {
  const double na = abs(a), nb = abs(b);
  if (na < 1e-13 && nb < 1e-13) return F(1);
  const F q = F(na * nb) - b * a;
  if (abs(q) > 1e-12 * na * nb) return normalized(q);
  if (field_traits<F>::im_components < 2) return std::nullopt;
  // Antipodal pair: rotate by pi about an axis orthogonal to b.
  std::array<double, field_traits<F>::components> comp{};
  comp[0] = 0.0;
  int k = 1;
  {
    std::array<double, field_traits<F>::components> bc{};
    field_traits<F>::pack(b, bc);
    for (int i = 2; i < int(field_traits<F>::components); ++i)
      if (std::fabs(bc[i]) < std::fabs(bc[k])) k = i;
  }
  comp[k] = 1.0;
  const F e = field_traits<F>::unpack(comp);
  const F v = (b * e - e * b) * 0.5;
  if (abs(v) < 1e-13) return std::nullopt;
  return normalized(v);
}

}  // namespace detail

// Isometry carrying the boundary triple xs to ys, which exists exactly when
// the angular invariants agree (with matching orientation over C).  The
// lifts are rescaled until both Gram matrices coincide and the map is then
// solved directly from matched bases; failures return empty.
template <typename F>
std::optional<FMat<F>> triple_isometry(const std::array<BallPoint<F>, 3>& xs,
                                       const std::array<BallPoint<F>, 3>& ys,
                                       double angle_tol = 1e-6) {
  const int n = xs[0].n();
  const Eigen::Index dim = n + 1;
  std::array<FRow<F>, 3> lx, ly;
  for (int i = 0; i < 3; ++i) {
    lx[i] = detail::null_boundary_lift<F>(xs[i]);
    ly[i] = detail::null_boundary_lift<F>(ys[i]);
  }
  auto pair_of = [](const std::array<FRow<F>, 3>& l, int i, int j) {
    return form<F>(l[i], l[j]);
  };
  const F G12 = pair_of(lx, 0, 1), G23 = pair_of(lx, 1, 2), G31 = pair_of(lx, 2, 0);
  const F H12 = pair_of(ly, 0, 1), H23 = pair_of(ly, 1, 2), H31 = pair_of(ly, 2, 0);
  const F X = G12 * G23 * G31, Y = H12 * H23 * H31;
  if (std::fabs(line_angle(X) - line_angle(Y)) > angle_tol) return std::nullopt;

  const F Xh = X * (1.0 / abs(X)), Yh = Y * (1.0 / abs(Y));
  const std::optional<F> u = detail::rotation_between<F>(im(Xh), im(Yh));
  if (!u) return std::nullopt;

  const double t = std::sqrt(abs(H12) * abs(H31) * abs(G23) /
                             (abs(G12) * abs(G31) * abs(H23)));
  const F nu1 = F(t) * *u;
  const F nu3 = H31 * inv(conj(nu1)) * inv(G31);
  const F nu2 = H23 * inv(conj(nu3)) * inv(G23);

  const std::array<F, 3> nu{nu1, nu2, nu3};
  std::array<FRow<F>, 3> rx;
  for (int i = 0; i < 3; ++i) rx[i] = nu[i] * lx[i];
  const double hscale = std::max({abs(H12), abs(H23), abs(H31)});
  double gram_res = 0.0;
  gram_res = std::max(gram_res, abs(pair_of(rx, 0, 1) - H12));
  gram_res = std::max(gram_res, abs(pair_of(rx, 1, 2) - H23));
  gram_res = std::max(gram_res, abs(pair_of(rx, 2, 0) - H31));
  if (gram_res > 1e-8 * hscale) return std::nullopt;

  // Span test: a triple with A = pi/2 spans only the pair's line, and the
  // third vector's coefficients then match on both sides automatically.
  FMat<F> G2 = FMat<F>::Zero(2, 2);
  G2(0, 1) = H12;
  G2(1, 0) = conj(H12);
  auto span_defect = [&](const std::array<FRow<F>, 3>& l) {
    FMat<F> rhs(1, 2);
    rhs(0, 0) = form<F>(l[2], l[0]);
    rhs(0, 1) = form<F>(l[2], l[1]);
    const FMat<F> coef = solve_right<F>(G2, rhs);
    const FRow<F> resid = l[2] - coef(0, 0) * l[0] - coef(0, 1) * l[1];
    return max_abs(resid);
  };
  const bool degenerate_x = span_defect(rx) < 1e-8;
  const bool degenerate_y = span_defect(ly) < 1e-8;
  if (degenerate_x != degenerate_y) return std::nullopt;

  const Eigen::Index k = degenerate_x ? 2 : 3;
  FMat<F> Bx(k, dim), By(k, dim), Gx(k, k), Gy(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    Bx.row(i) = rx[i];
    By.row(i) = ly[i];
    for (Eigen::Index j = 0; j < k; ++j) {
      Gx(i, j) = pair_of(rx, int(i), int(j));
      Gy(i, j) = pair_of(ly, int(i), int(j));
    }
  }
  FMat<F> Vx(dim, dim), Vy(dim, dim);
  Vx.topRows(k) = Bx;
  Vy.topRows(k) = By;
  if (dim > k) {
    Vx.bottomRows(dim - k) = complete_positive_orthobasis<F>(Bx, Gx);
    Vy.bottomRows(dim - k) = complete_positive_orthobasis<F>(By, Gy);
  }
  FMat<F> g = solve_left<F>(Vx, Vy);
  if (form_residual<F>(g) > tol::form_preservation) return std::nullopt;
  for (int i = 0; i < 3; ++i)
    if (chordal<F>(apply<F>(g, xs[i]), ys[i]) > tol::image_residual) return std::nullopt;
  return g;
}

// Angular invariant of the octonionic standard-position triple
// ((0,..,-1), (0,..,1), boundary point with last coordinate z).
inline double octonion_angular(const Octonion<double>& z) {
  const double a2 = abs2(z);
  if (a2 > 1.0 + tol::boundary_band)
    throw std::domain_error("octonion_angular: coordinate outside the closed disk");
  const double num = 2.0 * im_abs(z), den = 1.0 - a2;
  if (num < 1e-12 && std::fabs(den) < 1e-12)
    throw std::domain_error("octonion_angular: degenerate triple");
  return std::atan2(num, den);
}

struct CycleTriangle {
  int a, b, c;
  int mult = 1;
};

template <typename F>
struct TriangulatedCycle {
  std::vector<BallPoint<F>> vertices;  // boundary points
  std::vector<CycleTriangle> triangles;
};

struct CharacterResult {
  double value;
  bool closed;
  double max_term;
};

// Character value sum(mult * 4 pi * toledo) with a closedness check via
// oriented edge cancellation.  Open chains still evaluate, flagged open.
template <typename F>
CharacterResult character_eval(const TriangulatedCycle<F>& cycle) {
  const int nv = static_cast<int>(cycle.vertices.size());
  std::map<std::pair<int, int>, long long> net;
  double value = 0.0, max_term = 0.0;
  for (const CycleTriangle& t : cycle.triangles) {
    for (int v : {t.a, t.b, t.c})
      if (v < 0 || v >= nv) throw std::out_of_range("character_eval: vertex index");
    const std::array<std::pair<int, int>, 3> edges{
        std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}};
    for (auto [u, v] : edges) {
      if (u < v)
        net[{u, v}] += t.mult;
      else
        net[{v, u}] -= t.mult;
    }
    const double term =
        4.0 * M_PI * toledo<F>(cycle.vertices[t.a], cycle.vertices[t.b], cycle.vertices[t.c]);
    value += t.mult * term;
    max_term = std::max(max_term, std::fabs(t.mult * term));
  }
  bool closed = true;
  for (const auto& [edge, coef] : net)
    if (coef != 0) closed = false;
  return {value, closed, max_term};
}

}  // namespace fhyp
