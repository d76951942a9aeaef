#include "fhyp/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "fhyp/groups.hpp"
#include "fhyp/octonion.hpp"

namespace fhyp {
namespace {

using H = Quaterniond;
using Cplx = std::complex<double>;

int pick(int count, int fallback) { return count > 0 ? count : fallback; }

struct Checker {
  SuiteReport rep;

  explicit Checker(std::string suite) { rep.suite = std::move(suite); }

  void bound(std::string name, double residual, double tolerance) {
    rep.checks.push_back({std::move(name), residual, tolerance, residual <= tolerance});
  }
  void flag(std::string name, bool ok) { bound(std::move(name), ok ? 0.0 : 1.0, 0.0); }
  // For quantities that must stay above a floor; records the shortfall.
  void exceeds(std::string name, double value, double floor) {
    bound(std::move(name), std::max(0.0, floor - value), 0.0);
  }
};

template <typename F>
BallPoint<F> axis_point(int n, double t) {
  FRow<F> z = FRow<F>::Zero(n);
  z(n - 1) = F(t);
  return BallPoint<F>{z};
}

template <typename F>
F imaginary_unit_times(double t) {
  if constexpr (std::is_same_v<F, Cplx>) {
    return Cplx(0.0, t);
  } else {
    return F(0, t, 0, 0);
  }
}

// ((0,..,-1), (0,..,1), (sqrt(1-t^2), 0,.., i t)): angular invariant 2 atan t.
template <typename F>
std::array<BallPoint<F>, 3> standard_triple(int n, double t) {
  FRow<F> z = FRow<F>::Zero(n);
  z(0) = F(std::sqrt(1.0 - t * t));
  z(n - 1) = imaginary_unit_times<F>(t);
  return {axis_point<F>(n, -1.0), axis_point<F>(n, 1.0), BallPoint<F>{z}};
}

template <typename F>
BallPoint<F> promote(const BallPoint<double>& p) {
  FRow<F> z(p.n());
  for (int i = 0; i < p.n(); ++i) z(i) = F(p.z(i));
  return BallPoint<F>{z};
}

template <typename F>
double im_norm(const BallPoint<F>& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.z.size(); ++i) {
    const double a = im_abs(p.z(i));
    s += a * a;
  }
  return std::sqrt(s);
}

SuiteReport suite_algebra(std::uint64_t seed, int count) {
  Checker ck("algebra");
  Rng rng(seed);
  const int N = pick(count, 2000);

  double r_norm = 0, r_assoc = 0, r_conj = 0, r_inv = 0, r_rot = 0;
  for (int i = 0; i < N; ++i) {
    const H a = random_scalar<H>(rng), b = random_scalar<H>(rng), c = random_scalar<H>(rng);
    r_norm = std::max(r_norm, std::fabs(abs(a * b) - abs(a) * abs(b)));
    r_assoc = std::max(r_assoc, abs((a * b) * c - a * (b * c)));
    r_conj = std::max(r_conj, abs(conj(a * b) - conj(b) * conj(a)));
    if (abs(a) > 1e-2) r_inv = std::max(r_inv, abs(a * inv(a) - H(1)));
    const H nu = random_unit_scalar<H>(rng);
    r_rot = std::max(r_rot, std::fabs(abs(nu * a * conj(nu)) - abs(a)));
    r_rot = std::max(r_rot, std::fabs(re(nu * a * conj(nu)) - re(a)));
  }
  ck.bound("quaternion norm is multiplicative", r_norm, 1e-12);
  ck.bound("quaternion product is associative", r_assoc, 1e-12);
  ck.bound("conjugation reverses products", r_conj, 1e-12);
  ck.bound("two-sided inverses", r_inv, 1e-12);
  ck.bound("unit conjugation preserves modulus and real part", r_rot, 1e-12);

  double r_unit = 0;
  const auto axis = ImaginaryDirection<double>::from_components(0.3, -1.2, 0.5);
  for (int k = 0; k <= 16; ++k) {
    const H u = unit_rotation<double>(axis, 0.1 * k);
    r_unit = std::max(r_unit, std::fabs(abs(u) - 1.0));
  }
  ck.bound("axis rotations are unit scalars", r_unit, 1e-12);
  return ck.rep;
}

SuiteReport suite_hermitian(std::uint64_t seed, int count) {
  Checker ck("hermitian");
  Rng rng(seed);
  const int N = pick(count, 500);
  const int n = 2;

  double r_sesq = 0, r_sym = 0, r_form = 0, r_dist = 0, r_comp = 0;
  for (int i = 0; i < N; ++i) {
    const FRow<H> a = random_row<H>(rng, n + 1), b = random_row<H>(rng, n + 1);
    const H lam = random_scalar<H>(rng);
    r_sesq = std::max(r_sesq, abs(form<H>(FRow<H>(lam * a), b) - lam * form<H>(a, b)));
    r_sym = std::max(r_sym, abs(form<H>(a, b) - conj(form<H>(b, a))));

    const FMat<H> g = random_isometry<H>(rng, n);
    r_form = std::max(r_form, form_residual<H>(g));
    const BallPoint<H> x{random_ball_point<H>(rng, n)}, y{random_ball_point<H>(rng, n)};
    r_dist = std::max(r_dist, std::fabs(distance<H>(apply<H>(g, x), apply<H>(g, y)) -
                                        distance<H>(x, y)));
    const FMat<H> h = random_isometry<H>(rng, n);
    r_comp = std::max(r_comp, chordal<H>(apply<H>(FMat<H>(g * h), x),
                                         apply<H>(h, apply<H>(g, x))));
  }
  ck.bound("form is left sesquilinear", r_sesq, 1e-12);
  ck.bound("form is hermitian symmetric", r_sym, 1e-12);
  ck.bound("random isometries preserve the form", r_form, tol::form_preservation);
  ck.bound("isometries preserve the distance", r_dist, tol::geometric);
  ck.bound("matrix product composes the action", r_comp, 1e-10);

  const double r = 0.5;
  ck.bound("axis distance normalization d(0, r e_n) = 2 artanh r",
           std::fabs(distance<H>(BallPoint<H>::origin(n), axis_point<H>(n, r)) -
                     2.0 * std::atanh(r)),
           1e-13);
  return ck.rep;
}

SuiteReport suite_carnot(std::uint64_t seed, int count) {
  Checker ck("carnot");
  Rng rng(seed);
  const int N = pick(count, 1000);

  double r_assoc = 0, r_inv = 0, r_center = 0, r_dil = 0, r_tri = 0, r_invar = 0, r_round = 0;
  auto elem_diff = [](const CarnotElement<H>& a, const CarnotElement<H>& b) {
    double r = abs(a.v - b.v);
    for (Eigen::Index i = 0; i < a.xi.size(); ++i) r = std::max(r, abs(a.xi(i) - b.xi(i)));
    return r;
  };
  std::uniform_real_distribution<double> Ur(0.5, 2.0), Uu(0.0, 2.0);
  for (int i = 0; i < N; ++i) {
    const int h = 1 + (i % 2);
    const CarnotElement<H> a{random_row<H>(rng, h), im(random_scalar<H>(rng))};
    const CarnotElement<H> b{random_row<H>(rng, h), im(random_scalar<H>(rng))};
    const CarnotElement<H> c{random_row<H>(rng, h), im(random_scalar<H>(rng))};
    r_assoc = std::max(r_assoc, elem_diff(carnot_mul<H>(carnot_mul<H>(a, b), c),
                                          carnot_mul<H>(a, carnot_mul<H>(b, c))));
    r_inv = std::max(r_inv, elem_diff(carnot_mul<H>(a, carnot_inverse<H>(a)),
                                      CarnotElement<H>::identity(h)));
    const CarnotElement<H> z{FRow<H>::Zero(h), im(random_scalar<H>(rng))};
    r_center = std::max(r_center, elem_diff(carnot_mul<H>(z, a), carnot_mul<H>(a, z)));

    const CarnotPoint<H> p{random_row<H>(rng, h), im(random_scalar<H>(rng)), Uu(rng)};
    const CarnotPoint<H> q{random_row<H>(rng, h), im(random_scalar<H>(rng)), Uu(rng)};
    const CarnotPoint<H> s{random_row<H>(rng, h), im(random_scalar<H>(rng)), Uu(rng)};
    const double rr = Ur(rng);
    r_dil = std::max(r_dil, std::fabs(cygan_dist<H>(dilate<H>(rr, p), dilate<H>(rr, q)) -
                                      rr * cygan_dist<H>(p, q)));
    r_tri = std::max(r_tri, cygan_dist<H>(p, s) - cygan_dist<H>(p, q) - cygan_dist<H>(q, s));
    r_invar = std::max(r_invar, std::fabs(cygan_dist<H>(translate<H>(a, p), translate<H>(a, q)) -
                                          cygan_dist<H>(p, q)));

    // Coordinate residual: the cygan metric is a half power of coordinate
    // differences, so exact round trips still sit near sqrt(eps) in it.
    const NPoint<H> bp{random_row<H>(rng, h), im(random_scalar<H>(rng))};
    const NPoint<H> back = ball_to_boundary<H>(boundary_to_ball<H>(bp));
    r_round = std::max(r_round, max_abs(FRow<H>(back.xi - bp.xi)));
    r_round = std::max(r_round, abs(back.t - bp.t));
    const BallPoint<H> onb{random_boundary_point<H>(rng, h + 1)};
    if (abs2(H(1.0) + onb.z(h)) > 1e-4)
      r_round = std::max(r_round, chordal<H>(boundary_to_ball<H>(ball_to_boundary<H>(onb)), onb));
  }
  ck.bound("group law is associative", r_assoc, 1e-12);
  ck.bound("inverses reach the identity", r_inv, 1e-12);
  ck.bound("vertical factor is central", r_center, 1e-12);
  ck.bound("cygan distance is dilation homogeneous", r_dil, 1e-12);
  ck.bound("cygan triangle inequality", std::max(0.0, r_tri), 1e-12);
  ck.bound("cygan distance is left invariant", r_invar, 1e-12);
  ck.bound("boundary chart round trip", r_round, tol::geometric);

  FRow<H> zero1(1);
  zero1(0) = H(0);
  ck.bound("chart origin lands on (0, 1)",
           chordal<H>(boundary_to_ball<H>(NPoint<H>(zero1, H(0))), axis_point<H>(2, 1.0)), 0.0);
  ck.bound("infinity lands on (0, -1)",
           chordal<H>(boundary_to_ball<H>(NPoint<H>::infinity(1)), axis_point<H>(2, -1.0)), 0.0);
  return ck.rep;
}

SuiteReport suite_cartan(std::uint64_t seed, int count) {
  Checker ck("cartan");
  Rng rng(seed);
  const int N = pick(count, 1000);
  const int n = 2;

  double r_perm = 0, r_range = 0, r_toledo = 0;
  for (int i = 0; i < N; ++i) {
    const auto t = random_boundary_triple<H>(rng, n);
    const double base = cartan_angular<H>(t[0], t[1], t[2]);
    const std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : perms)
      r_perm = std::max(r_perm, std::fabs(cartan_angular<H>(t[p[0]], t[p[1]], t[p[2]]) - base));
    r_range = std::max({r_range, -base, base - M_PI_2});
    r_toledo = std::max(r_toledo, std::fabs(toledo<H>(t[0], t[1], t[2]) - 2.0 * base));
  }
  ck.bound("all six permutations agree", r_perm, tol::algebraic);
  ck.bound("values stay in [0, pi/2]", std::max(0.0, r_range), 1e-15);
  ck.bound("toledo is twice the angular invariant", r_toledo, 1e-15);

  double r_isom = 0;
  const int M = std::max(1, N / 10);
  for (int i = 0; i < M; ++i) {
    const FMat<H> g = random_isometry<H>(rng, n);
    const auto t = random_boundary_triple<H>(rng, n);
    const double a = cartan_angular<H>(t[0], t[1], t[2]);
    const double b =
        cartan_angular<H>(apply<H>(g, t[0]), apply<H>(g, t[1]), apply<H>(g, t[2]));
    r_isom = std::max(r_isom, std::fabs(a - b));
  }
  ck.bound("isometry invariance", r_isom, 1e-10);
  return ck.rep;
}

SuiteReport suite_spine(std::uint64_t seed, int count) {
  Checker ck("spine");
  Rng rng(seed);
  const int N = pick(count, 1000);
  const int n = 2;

  // tan of the angular invariant equals sinh of the spine distance; triples
  // with angle near pi/2 are resampled since both sides blow up together.
  double r_tan = 0;
  int done = 0;
  while (done < N) {
    const auto t = random_boundary_triple<H>(rng, n);
    const double a = cartan_angular<H>(t[0], t[1], t[2]);
    if (a > 1.45) continue;
    const double d = dist_to_spine<H>(t[0], t[1], t[2]);
    if (std::isinf(d)) continue;
    r_tan = std::max(r_tan, std::fabs(std::tan(a) - std::sinh(d)));
    ++done;
  }
  ck.bound("tan(angle) matches sinh(spine distance)", r_tan, tol::geometric);

  FRow<H> z = FRow<H>::Zero(n);
  z(1) = H(0, 0.5, 0, 0);
  const double a0 =
      cartan_angular<H>(axis_point<H>(n, -1.0), axis_point<H>(n, 1.0), BallPoint<H>{z});
  ck.bound("worked case z = i/2 has tan = 4/3", std::fabs(std::tan(a0) - 4.0 / 3.0), 1e-12);

  FRow<H> real2(n);
  real2(0) = H(0.6);
  real2(1) = H(0.8);
  ck.bound("real boundary points sit on the spine",
           dist_to_spine<H>(axis_point<H>(n, -1.0), axis_point<H>(n, 1.0), BallPoint<H>{real2}),
           1e-12);
  FRow<H> on_line = FRow<H>::Zero(n);
  on_line(1) = H(0, 1, 0, 0);
  ck.flag("line points at angle pi/2 report infinite distance",
          std::isinf(dist_to_spine<H>(axis_point<H>(n, -1.0), axis_point<H>(n, 1.0),
                                      BallPoint<H>{on_line})));
  return ck.rep;
}

SuiteReport suite_extremal(std::uint64_t seed, int count) {
  Checker ck("extremal");
  Rng rng(seed);
  const int N = pick(count, 100);
  const int n = 2;

  double r_real = 0, r_line = 0, r_conv_real = 0, r_conv_line = 0;
  bool classes_ok = true, conv_ok = true;
  for (int i = 0; i < N; ++i) {
    const auto rt = random_boundary_triple<double>(rng, n);
    const FMat<H> g = random_isometry<H>(rng, n);
    std::array<BallPoint<H>, 3> tr{apply<H>(g, promote<H>(rt[0])),
                                   apply<H>(g, promote<H>(rt[1])),
                                   apply<H>(g, promote<H>(rt[2]))};
    const double ar = cartan_angular<H>(tr[0], tr[1], tr[2]);
    r_real = std::max(r_real, ar);
    classes_ok = classes_ok && classify(ar) == TripleKind::real_plane;

    const auto gc = triple_isometry<H>(tr, standard_triple<H>(n, 0.0));
    if (!gc) {
      conv_ok = false;
    } else {
      for (int k = 0; k < 3; ++k)
        r_conv_real = std::max(r_conv_real, chordal<H>(apply<H>(*gc, tr[k]),
                                                       standard_triple<H>(n, 0.0)[k]));
    }

    H nu = random_unit_scalar<H>(rng);
    if (im_abs(nu) < 0.1) nu = H(0, 1, 0, 0);
    FRow<H> zl = FRow<H>::Zero(n);
    zl(n - 1) = nu;
    std::array<BallPoint<H>, 3> tl{apply<H>(g, axis_point<H>(n, -1.0)),
                                   apply<H>(g, axis_point<H>(n, 1.0)),
                                   apply<H>(g, BallPoint<H>{zl})};
    const double al = cartan_angular<H>(tl[0], tl[1], tl[2]);
    r_line = std::max(r_line, std::fabs(al - M_PI_2));
    classes_ok = classes_ok && classify(al) == TripleKind::f_line;

    const auto gl = triple_isometry<H>(tl, standard_triple<H>(n, 1.0));
    if (!gl) {
      conv_ok = false;
    } else {
      for (int k = 0; k < 3; ++k)
        r_conv_line = std::max(r_conv_line, chordal<H>(apply<H>(*gl, tl[k]),
                                                       standard_triple<H>(n, 1.0)[k]));
    }
  }
  ck.bound("real-plane triples have angle 0", r_real, tol::geometric);
  ck.bound("line triples have angle pi/2", r_line, tol::geometric);
  ck.flag("classification labels the extremes", classes_ok);
  ck.flag("extremal triples admit isometries to the standard models", conv_ok);
  ck.bound("angle-0 triples move onto the real model", r_conv_real, tol::image_residual);
  ck.bound("angle-pi/2 triples move onto the line model", r_conv_line, tol::image_residual);
  ck.flag("midrange angles classify as generic", classify(0.7) == TripleKind::generic);
  return ck.rep;
}

SuiteReport suite_toledo(std::uint64_t seed, int count) {
  Checker ck("toledo");
  Rng rng(seed);
  const int N = pick(count, 500);
  const int n = 2;

  double r_gb = 0;
  int done = 0;
  while (done < N) {
    const auto t = random_boundary_triple<H>(rng, n);
    const double a = cartan_angular<H>(t[0], t[1], t[2]);
    if (a < 0.05 || a > M_PI_2 - 0.05) continue;
    r_gb = std::max(r_gb, std::fabs(toledo_gb<H>(t[0], t[1], t[2]) - 2.0 * a));
    ++done;
  }
  ck.bound("projection triangle area equals the invariant", r_gb, tol::double_oracle);

  const auto ideal = standard_triple<H>(n, 1.0);
  ck.bound("ideal line triple attains tau = pi",
           std::fabs(toledo<H>(ideal[0], ideal[1], ideal[2]) - M_PI), tol::geometric);

  const auto tri = standard_triple<H>(n, 0.4);
  const double tau = toledo<H>(tri[0], tri[1], tri[2]);
  ck.bound("worked value tau = 4 atan(0.4)", std::fabs(tau - 4.0 * std::atan(0.4)), 1e-13);
  ck.bound("worked value via the area route",
           std::fabs(toledo_gb<H>(tri[0], tri[1], tri[2]) - 4.0 * std::atan(0.4)),
           tol::geometric);
  return ck.rep;
}

SuiteReport suite_isometry(std::uint64_t seed, int count) {
  Checker ck("isometry");
  Rng rng(seed);
  const int N = pick(count, 100);
  const int n = 2;

  double r_orbit = 0, r_form = 0, r_degen = 0;
  bool found = true, degen_found = true, rejected = true;
  for (int i = 0; i < N; ++i) {
    const auto tx = random_boundary_triple<H>(rng, n);
    const FMat<H> h = random_isometry<H>(rng, n);
    const std::array<BallPoint<H>, 3> ty{apply<H>(h, tx[0]), apply<H>(h, tx[1]),
                                         apply<H>(h, tx[2])};
    const auto g = triple_isometry<H>(tx, ty);
    if (!g) {
      found = false;
      continue;
    }
    r_form = std::max(r_form, form_residual<H>(*g));
    for (int k = 0; k < 3; ++k)
      r_orbit = std::max(r_orbit, chordal<H>(apply<H>(*g, tx[k]), ty[k]));
  }
  ck.flag("orbit pairs always admit a matching isometry", found);
  ck.bound("matched images agree", r_orbit, tol::image_residual);
  ck.bound("matching isometries preserve the form", r_form, tol::form_preservation);

  for (int i = 0; i < std::max(1, N / 10); ++i) {
    H nu1 = random_unit_scalar<H>(rng), nu2 = random_unit_scalar<H>(rng);
    if (im_abs(nu1) < 0.1) nu1 = H(0, 1, 0, 0);
    if (im_abs(nu2) < 0.1) nu2 = H(0, 0, 1, 0);
    FRow<H> z1 = FRow<H>::Zero(n), z2 = FRow<H>::Zero(n);
    z1(n - 1) = nu1;
    z2(n - 1) = nu2;
    const std::array<BallPoint<H>, 3> tx{axis_point<H>(n, -1.0), axis_point<H>(n, 1.0),
                                         BallPoint<H>{z1}};
    const FMat<H> h = random_isometry<H>(rng, n);
    const std::array<BallPoint<H>, 3> ty{apply<H>(h, tx[0]), apply<H>(h, tx[1]),
                                         apply<H>(h, BallPoint<H>{z2})};
    const auto g = triple_isometry<H>(tx, ty);
    if (!g) {
      degen_found = false;
      continue;
    }
    for (int k = 0; k < 3; ++k)
      r_degen = std::max(r_degen, chordal<H>(apply<H>(*g, tx[k]), ty[k]));

    const auto bad = triple_isometry<H>(tx, standard_triple<H>(n, 0.3));
    rejected = rejected && !bad.has_value();
  }
  ck.flag("line triples with equal angles also match", degen_found);
  ck.bound("degenerate matched images agree", r_degen, tol::image_residual);
  ck.flag("mismatched angles admit no isometry", rejected);
  return ck.rep;
}

SuiteReport suite_bisector(std::uint64_t seed, int count) {
  Checker ck("bisector");
  Rng rng(seed);
  const int N = pick(count, 1000);
  const int n = 2;

  double r_slice = 0;
  int done = 0;
  while (done < N) {
    const BallPoint<H> z1{random_ball_point<H>(rng, n)};
    const BallPoint<H> z2{random_ball_point<H>(rng, n)};
    if (chordal<H>(z1, z2) < 1e-2) continue;
    const Bisector<H> B(z1, z2);
    H alpha = random_scalar<H>(rng) + H(1.5);
    if (!(abs2(alpha) + B.c * re(alpha * alpha) > 1e-3)) continue;
    const FRow<H> coeffs = random_row<H>(rng, n - 1) * H(0.3);
    try {
      const BallPoint<H> y = slice_sample<H>(B, alpha, coeffs);
      r_slice = std::max(r_slice, std::fabs(bisector_contains<H>(B, y)));
      ++done;
    } catch (const std::domain_error&) {
    }
  }
  ck.bound("slice points are equidistant from the vertices", r_slice, tol::geometric);

  double r_pyth = 0;
  done = 0;
  while (done < N) {
    const auto bt = random_boundary_triple<H>(rng, n);
    const FLine<H> L(bt[0], bt[1]);
    const BallPoint<H> p{random_ball_point<H>(rng, n)};
    try {
      const BallPoint<H> x = project_to_fline<H>(BallPoint<H>{random_ball_point<H>(rng, n)}, L);
      r_pyth = std::max(r_pyth, pythagoras_residual<H>(p, L, x));
      ++done;
    } catch (const std::domain_error&) {
    }
  }
  ck.bound("projection satisfies the right-angle distance law", r_pyth, tol::geometric);

  // Frozen witness: the geodesic midpoint of two slice points leaves the
  // bisector, so bisectors are not totally geodesic.
  const Bisector<H> B(axis_point<H>(n, 0.5), axis_point<H>(n, -0.5));
  FRow<H> c1(1), c2(1);
  c1(0) = H(0.4);
  c2(0) = H(0, 0.1, 0.3, 0);
  const BallPoint<H> p = slice_sample<H>(B, H(1), c1);
  const BallPoint<H> q = slice_sample<H>(B, H(1, 0.4, 0, 0.25), c2);
  const Geodesic<H> geo = Geodesic<H>::through(p, q);
  const BallPoint<H> m = geodesic_point<H>(geo, distance<H>(p, q) / 2);
  ck.bound("witness endpoints lie on the bisector",
           std::max(std::fabs(bisector_contains<H>(B, p)), std::fabs(bisector_contains<H>(B, q))),
           1e-10);
  ck.exceeds("midpoint deviation shows the bisector is not geodesic",
             std::fabs(bisector_contains<H>(B, m)), 1e-3);
  return ck.rep;
}

SuiteReport suite_octonion(std::uint64_t seed, int count) {
  Checker ck("octonion");
  Rng rng(seed);
  const int N = pick(count, 10000);
  using O = Octonion<double>;
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  auto random_oct = [&] {
    std::array<double, 8> c{};
    for (auto& x : c) x = U(rng);
    return O::from_components(c);
  };

  double r_norm = 0, r_alt = 0, r_conj = 0;
  for (int i = 0; i < N; ++i) {
    const O x = random_oct(), y = random_oct();
    r_norm = std::max(r_norm, std::fabs(abs(x * y) - abs(x) * abs(y)));
    if (i % 10 == 0) {
      r_alt = std::max(r_alt, abs((x * x) * y - x * (x * y)));
      r_alt = std::max(r_alt, abs((x * y) * y - x * (y * y)));
      r_conj = std::max(r_conj, abs(conj(x * y) - conj(y) * conj(x)));
    }
  }
  ck.bound("octonion norm is multiplicative", r_norm, 1e-12);
  ck.bound("octonions are alternative", r_alt, 1e-12);
  ck.bound("conjugation reverses products", r_conj, 1e-12);

  auto basis = [](int k) {
    std::array<double, 8> c{};
    c[k] = 1.0;
    return O::from_components(c);
  };
  ck.exceeds("basis associator witness has norm above 0.1",
             abs(associator(basis(1), basis(2), basis(4))), 0.1);

  ck.bound("real coordinate gives angle 0", std::fabs(octonion_angular(O(0.3))), 1e-12);
  std::array<double, 8> cu{};
  cu[4] = 0.6;
  cu[7] = 0.8;
  ck.bound("unit non-real coordinate gives angle pi/2",
           std::fabs(octonion_angular(O::from_components(cu)) - M_PI_2), 1e-12);

  std::array<double, 8> qc{};
  qc[0] = 0.3;
  qc[1] = 0.4;
  FRow<H> z(2);
  z(0) = H(std::sqrt(1.0 - 0.25));
  z(1) = H(0.3, 0.4, 0, 0);
  const double qa =
      cartan_angular<H>(axis_point<H>(2, -1.0), axis_point<H>(2, 1.0), BallPoint<H>{z});
  ck.bound("agrees with the quaternionic invariant on a subalgebra",
           std::fabs(octonion_angular(O::from_components(qc)) - qa), 1e-12);
  return ck.rep;
}

SuiteReport suite_character(std::uint64_t seed, int count) {
  Checker ck("character");
  Rng rng(seed);
  const int N = pick(count, 1000);
  const int n = 2;
  const double bound = 4.0 * M_PI * M_PI;

  double worst = 0;
  for (int i = 0; i < N; ++i) {
    const auto t = random_boundary_triple<H>(rng, n);
    worst = std::max(worst, std::fabs(4.0 * M_PI * toledo<H>(t[0], t[1], t[2])));
  }
  ck.bound("per-triangle values stay below 4 pi^2", std::max(0.0, worst - bound), 1e-9);

  const auto ideal = standard_triple<H>(n, 1.0);
  ck.bound("ideal line triangle attains 4 pi^2",
           std::fabs(4.0 * M_PI * toledo<H>(ideal[0], ideal[1], ideal[2]) - bound), 1e-8);

  TriangulatedCycle<H> tetra;
  for (double th : {0.3, 1.1, 2.2, 4.0}) {
    FRow<H> z(2);
    z(0) = H(std::cos(th));
    z(1) = H(std::sin(th));
    tetra.vertices.push_back(BallPoint<H>{z});
  }
  tetra.triangles = {{1, 2, 3, +1}, {0, 2, 3, -1}, {0, 1, 3, +1}, {0, 1, 2, -1}};
  const auto rt = character_eval<H>(tetra);
  ck.flag("real-circle tetrahedron boundary is closed", rt.closed);
  ck.bound("closed real cycle evaluates to 0", std::fabs(rt.value), tol::geometric);

  TriangulatedCycle<H> quad;
  for (double v : {1.0, -1.0}) quad.vertices.push_back(axis_point<H>(2, v));
  for (double s : {1.0, -1.0}) {
    FRow<H> z = FRow<H>::Zero(2);
    z(1) = H(0, s, 0, 0);
    quad.vertices.push_back(BallPoint<H>{z});
  }
  quad.triangles = {{0, 2, 1}, {0, 1, 3}};
  const auto rq = character_eval<H>(quad);
  ck.flag("line quadrilateral chain is open", !rq.closed);
  ck.bound("line quadrilateral evaluates to 8 pi^2", std::fabs(rq.value - 2.0 * bound), 1e-9);
  ck.bound("each quadrilateral triangle attains the extreme",
           std::fabs(rq.max_term - bound), 1e-8);
  return ck.rep;
}

SuiteReport suite_bending(std::uint64_t seed, int count) {
  Checker ck("bending");
  const int K = pick(count, 20);
  const auto cfg = schottky_bend_config<H>();
  const auto axis = ImaginaryDirection<double>::from_components(1, 0, 0);

  const CollarBound collar = collar_check(cfg.length, cfg.separation);
  ck.bound("collar product stays below 1/2", collar.product, 0.5);
  ck.flag("collar criterion accepts the configuration", collar.ok);

  const GroupData<H> G0 = bend_amalgam<H>(cfg.group, unit_rotation<double>(axis, 0.0));
  ck.bound("unbent marker vanishes", marker_invariant<H>(G0, cfg.marker_point), tol::geometric);
  const LimitSample<H> s0 = limit_set_sample<H>(G0, 5, 60, seed);
  double r_real = 0;
  for (const auto& p : s0.points) r_real = std::max(r_real, im_norm<H>(p));
  ck.bound("unbent limit samples stay on the real circle", r_real, tol::image_residual);
  ck.flag("limit sampler accounts for every attempt",
          int(s0.points.size()) + s0.skipped == 60 && !s0.points.empty());

  std::vector<double> markers;
  double r_half = 0, r_form = 0, r_fixed = 0;
  for (int k = 1; k <= K; ++k) {
    const double eta = 0.3 * k / K;
    const GroupData<H> Gb = bend_amalgam<H>(cfg.group, unit_rotation<double>(axis, eta));
    const double m = marker_invariant<H>(Gb, cfg.marker_point);
    markers.push_back(m);
    r_half = std::max(r_half, std::fabs(m - eta / 2.0));
    for (const auto& g : Gb.gamma2) r_form = std::max(r_form, form_residual<H>(g));
    for (std::size_t i = 0; i < Gb.gamma1.size(); ++i)
      r_fixed = std::max(r_fixed, max_abs(FMat<H>(Gb.gamma1[i] - cfg.group.gamma1[i])));
  }
  ck.bound("grid markers stay within (0, pi/2)",
           std::max(0.0, *std::max_element(markers.begin(), markers.end()) - M_PI_2), 0.0);
  ck.exceeds("grid markers stay positive", *std::min_element(markers.begin(), markers.end()),
             1e-9);
  double min_gap = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (std::size_t i = 0; i < markers.size(); ++i) {
    if (i + 1 < markers.size() && markers[i + 1] <= markers[i]) monotone = false;
    for (std::size_t j = i + 1; j < markers.size(); ++j)
      min_gap = std::min(min_gap, std::fabs(markers[i] - markers[j]));
  }
  ck.exceeds("grid markers are pairwise separated", min_gap, 1e-6);
  ck.flag("grid markers increase with the twist", monotone);
  ck.bound("mirror symmetry pins the marker at eta/2", r_half, tol::geometric);
  ck.bound("bent generators preserve the form", r_form, tol::geometric);
  ck.bound("bending restricts to the identity on the first factor", r_fixed, 0.0);

  const GroupData<H> Gb = bend_amalgam<H>(cfg.group, unit_rotation<double>(axis, 0.3));
  const LimitSample<H> sb = limit_set_sample<H>(Gb, 5, 60, seed);
  double off = 0;
  for (const auto& p : sb.points) off = std::max(off, im_norm<H>(p));
  ck.exceeds("bent limit samples leave the real circle", off, 1e-3);
  return ck.rep;
}

SuiteReport suite_realbend(std::uint64_t seed, int count) {
  Checker ck("realbend");
  const int N = pick(count, 30);

  FMat<double> A5 = FMat<double>::Identity(5, 5);
  A5(0, 0) = A5(4, 4) = std::cosh(0.6);
  A5(0, 4) = A5(4, 0) = std::sinh(0.6);
  const FMat<double> B5 = standard_loxodromic<double>(0.4, 1.0, 4);
  const RealBendData D{{embed_o41_in_o81(A5)}, {embed_o41_in_o81(B5)}};

  const Eigen::Vector4d dir(1, 0, 0, 0);
  const RealBendData D0 = real_bend_octonion_line(D, 0.0, dir);
  ck.bound("zero twist returns the generators unchanged",
           std::max(max_abs(FMat<double>(D0.gamma1[0] - D.gamma1[0])),
                    max_abs(FMat<double>(D0.gamma2[0] - D.gamma2[0]))),
           0.0);

  const double theta = 0.35;
  const RealBendData Db = real_bend_octonion_line(D, theta, dir);
  double r_form = 0;
  for (const auto& g : Db.gamma1) r_form = std::max(r_form, form_residual<double>(g));
  for (const auto& g : Db.gamma2) r_form = std::max(r_form, form_residual<double>(g));
  ck.bound("deformed generators preserve the (8,1) form", r_form, tol::geometric);
  ck.bound("wall-side generators are untouched",
           max_abs(FMat<double>(Db.gamma1[0] - D.gamma1[0])), 0.0);
  ck.exceeds("deformed generator leaves the 4-space stabilizer",
             detail::h4_preservation_residual(Db.gamma2[0]), 1e-3);

  auto extra_block = [](const BallPoint<double>& p) {
    double s = 0.0;
    for (int i = 4; i < 8; ++i) s += p.z(i) * p.z(i);
    return std::sqrt(s);
  };
  const GroupData<double> flat{GroupKind::amalgam, D.gamma1, D.gamma2, D.gamma1[0]};
  const LimitSample<double> s0 = limit_set_sample<double>(flat, 4, N, seed);
  double on_wall = 0;
  for (const auto& p : s0.points) on_wall = std::max(on_wall, extra_block(p));
  ck.flag("undeformed sampler finds loxodromic words", !s0.points.empty());
  ck.bound("undeformed limit samples stay on the 4-space boundary", on_wall, 0.0);

  const GroupData<double> bent{GroupKind::amalgam, Db.gamma1, Db.gamma2, Db.gamma1[0]};
  const LimitSample<double> sb = limit_set_sample<double>(bent, 4, N, seed);
  double off_wall = 0;
  for (const auto& p : sb.points) off_wall = std::max(off_wall, extra_block(p));
  ck.flag("deformed sampler finds loxodromic words", !sb.points.empty());
  ck.exceeds("a deformed limit sample leaves the 4-space boundary", off_wall, 1e-3);
  return ck.rep;
}

using SuiteFn = SuiteReport (*)(std::uint64_t, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> R{
      {"algebra", suite_algebra},     {"hermitian", suite_hermitian},
      {"carnot", suite_carnot},       {"cartan", suite_cartan},
      {"spine", suite_spine},         {"extremal", suite_extremal},
      {"toledo", suite_toledo},       {"isometry", suite_isometry},
      {"bisector", suite_bisector},   {"octonion", suite_octonion},
      {"character", suite_character}, {"bending", suite_bending},
      {"realbend", suite_realbend},
  };
  return R;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, int count) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(seed, count);
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<SuiteReport> run_suites(const std::string& name, std::uint64_t seed, int count) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& [n, fn] : registry()) out.push_back(fn(seed, count));
  } else {
    out.push_back(run_suite(name, seed, count));
  }
  return out;
}

}  // namespace fhyp
