#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "fhyp/groups.hpp"
#include "fhyp/models.hpp"
#include "fhyp/random.hpp"

using fhyp::BallPoint;
using fhyp::FMat;
using fhyp::FRow;
using fhyp::GroupData;
using fhyp::GroupKind;
using H = fhyp::Quaternion<double>;

namespace {

template <typename F>
BallPoint<F> axis_point(int n, double last) {
  FRow<F> z = FRow<F>::Zero(n);
  z(n - 1) = F(last);
  return BallPoint<F>{z};
}

// Boundary point of the real hyperbolic plane with horospherical
// coordinate a on the real line.
template <typename F>
BallPoint<F> real_boundary(double a) {
  FRow<F> xi(1);
  xi(0) = F(a);
  return fhyp::boundary_to_ball<F>(fhyp::NPoint<F>(std::move(xi), F(0)));
}

double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = f(d);
    }
  }
  return std::min(fc, fd);
}

const double kR0 = (32.0 + std::sqrt(63.0)) / (32.0 - std::sqrt(63.0));

}  // namespace

TEST_CASE("standard blocks preserve the form and compose exactly") {
  fhyp::Rng rng(201);
  for (int n : {2, 3}) {
    const H mu = fhyp::random_unit_scalar<H>(rng);
    const H nu = fhyp::random_unit_scalar<H>(rng);
    const FMat<H> U = fhyp::rotation_U<H>(mu, n);
    const FMat<H> V = fhyp::rotation_U<H>(nu, n);
    CHECK(fhyp::form_residual<H>(U) <= 1e-15);
    CHECK(fhyp::max_abs(FMat<H>(U * V - fhyp::rotation_U<H>(mu * nu, n))) == 0.0);

    const FMat<H> T = fhyp::standard_loxodromic<H>(0.25, H(1), n);
    CHECK(fhyp::form_residual<H>(T) <= 1e-15);
    const FMat<H> S = fhyp::standard_loxodromic<H>(0.4, H(1), n);
    CHECK(fhyp::max_abs(FMat<H>(T * S - fhyp::standard_loxodromic<H>(0.65, H(1), n))) <= 1e-14);

    // rotation about the standard axis commutes with translation along it
    CHECK(fhyp::max_abs(FMat<H>(U * T - T * U)) == 0.0);

    const FMat<H> R = fhyp::standard_loxodromic<H>(0.3, nu, n);
    CHECK(fhyp::form_residual<H>(R) <= 1e-15);
  }
  CHECK_THROWS_AS(fhyp::rotation_U<H>(H(0.9), 2), std::invalid_argument);
  CHECK_THROWS_AS(fhyp::standard_loxodromic<H>(0.2, H(2), 2), std::invalid_argument);
}

TEST_CASE("fixed points and translation length of loxodromics") {
  fhyp::Rng rng(211);
  for (int n : {2, 3}) {
    const H nu = fhyp::random_unit_scalar<H>(rng);
    const double r = 0.3;
    const FMat<H> T = fhyp::standard_loxodromic<H>(r, nu, n);
    const auto fp = fhyp::fixed_points<H>(T);
    CHECK(fhyp::chordal<H>(fp.attracting, axis_point<H>(n, 1.0)) <= 1e-9);
    CHECK(fhyp::chordal<H>(fp.repelling, axis_point<H>(n, -1.0)) <= 1e-9);
    CHECK(fp.growth == doctest::Approx(std::exp(r)).epsilon(1e-9));

    // screw motions translate every axis point by the same amount
    const auto tl = fhyp::translation_length<H>(T);
    CHECK(tl.spectral == doctest::Approx(2 * r).epsilon(1e-9));
    CHECK(tl.min_sampled == doctest::Approx(2 * r).epsilon(1e-8));
    CHECK(tl.at_midpoint == doctest::Approx(2 * r).epsilon(1e-8));

    const auto tl2 = fhyp::translation_length<H>(FMat<H>(T * T));
    CHECK(tl2.spectral == doctest::Approx(2 * tl.spectral).epsilon(1e-9));

    // conjugation moves the fixed points and keeps the length
    const FMat<H> g = fhyp::random_isometry<H>(rng, n);
    const FMat<H> gi = fhyp::form_inverse<H>(g);
    const FMat<H> C = g * T * gi;
    const auto fpc = fhyp::fixed_points<H>(C);
    CHECK(fhyp::chordal<H>(fpc.attracting, fhyp::apply<H>(gi, axis_point<H>(n, 1.0))) <= 1e-8);
    CHECK(fhyp::chordal<H>(fpc.repelling, fhyp::apply<H>(gi, axis_point<H>(n, -1.0))) <= 1e-8);
    const auto tlc = fhyp::translation_length<H>(C);
    CHECK(tlc.spectral == doctest::Approx(2 * r).epsilon(1e-8));
    CHECK(tlc.min_sampled == doctest::Approx(2 * r).epsilon(1e-7));
  }

  // elliptic and identity have no spectral growth
  const H w = fhyp::unit_rotation<double>(fhyp::ImaginaryDirection<double>::from_components(1, 0, 0), 0.4);
  CHECK_THROWS_AS(fhyp::fixed_points<H>(fhyp::rotation_U<H>(w, 2)), std::domain_error);
  CHECK_THROWS_AS(fhyp::fixed_points<H>(FMat<H>(FMat<H>::Identity(3, 3))), std::domain_error);
}

TEST_CASE("fuchsian embedding acts like its real source") {
  fhyp::Rng rng(221);
  for (int rep = 0; rep < 20; ++rep) {
    const FMat<double> R = fhyp::random_isometry<double>(rng, 2);
    const FMat<H> M = fhyp::embed_fuchsian<H>(R);
    CHECK(fhyp::form_residual<H>(M) <= 1e-12);
    const BallPoint<double> p{fhyp::random_ball_point<double>(rng, 2)};
    FRow<H> zq(2);
    for (int i = 0; i < 2; ++i) zq(i) = H(p.z(i));
    const BallPoint<H> q{zq};
    const BallPoint<double> ip = fhyp::apply<double>(R, p);
    const BallPoint<H> iq = fhyp::apply<H>(M, q);
    for (int i = 0; i < 2; ++i) CHECK(abs(iq.z(i) - H(ip.z(i))) <= 1e-13);
  }
  FMat<double> bad = FMat<double>::Identity(3, 3);
  bad(0, 0) = 1.5;
  CHECK_THROWS_AS(fhyp::embed_fuchsian<H>(bad), std::invalid_argument);
}

TEST_CASE("loxodromic with prescribed axis") {
  const BallPoint<H> A = real_boundary<H>(1.0);
  const BallPoint<H> B = real_boundary<H>(kR0);
  const FMat<H> g2 = fhyp::loxodromic_with_axis<H>(A, B, 1.0);
  CHECK(fhyp::form_residual<H>(g2) <= 1e-9);
  CHECK(fhyp::chordal<H>(fhyp::apply<H>(g2, A), A) <= 1e-9);
  CHECK(fhyp::chordal<H>(fhyp::apply<H>(g2, B), B) <= 1e-9);
  const auto fp = fhyp::fixed_points<H>(g2);
  CHECK(fhyp::chordal<H>(fp.attracting, B) <= 1e-8);
  CHECK(fhyp::chordal<H>(fp.repelling, A) <= 1e-8);
  const auto tl = fhyp::translation_length<H>(g2);
  CHECK(tl.spectral == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(tl.min_sampled == doctest::Approx(1.0).epsilon(1e-7));
  CHECK_THROWS_AS(fhyp::loxodromic_with_axis<H>(A, B, -1.0), std::invalid_argument);
}

TEST_CASE("bending an amalgam moves only the second factor") {
  const auto cfg = fhyp::schottky_bend_config<H>();
  const GroupData<H>& G = cfg.group;
  const auto axis = fhyp::ImaginaryDirection<double>::from_components(1, 0, 0);

  // eta = 0 is the identity deformation, bit for bit
  const GroupData<H> G0 = fhyp::bend_amalgam<H>(G, fhyp::unit_rotation<double>(axis, 0.0));
  CHECK(fhyp::max_abs(FMat<H>(G0.gamma2[0] - G.gamma2[0])) == 0.0);
  CHECK(fhyp::marker_invariant<H>(G0, cfg.marker_point) <= 1e-12);

  const H nu = fhyp::unit_rotation<double>(axis, 0.15);
  const GroupData<H> Gb = fhyp::bend_amalgam<H>(G, nu);
  for (std::size_t i = 0; i < G.gamma1.size(); ++i)
    CHECK(fhyp::max_abs(FMat<H>(Gb.gamma1[i] - G.gamma1[i])) == 0.0);
  for (const FMat<H>& g : Gb.gamma2) CHECK(fhyp::form_residual<H>(g) <= 1e-9);

  // the amalgamated cyclic group is untouched by the twist
  const int n = 2;
  const FMat<H> U = fhyp::rotation_U<H>(nu, n);
  const FMat<H> Ui = fhyp::rotation_U<H>(conj(nu), n);
  CHECK(fhyp::max_abs(FMat<H>(U * G.gamma_alpha * Ui - G.gamma_alpha)) <= 1e-14);

  // mirror symmetry of the seed configuration pins the marker at eta / 2
  std::vector<double> markers;
  for (int k = 1; k <= 6; ++k) {
    const double eta = 0.05 * k;
    const GroupData<H> Gk = fhyp::bend_amalgam<H>(G, fhyp::unit_rotation<double>(axis, eta));
    const double m = fhyp::marker_invariant<H>(Gk, cfg.marker_point);
    CHECK(m > 0.0);
    CHECK(m < std::numbers::pi / 2);
    CHECK(m == doctest::Approx(eta / 2).epsilon(1e-10));
    markers.push_back(m);
  }
  for (std::size_t i = 0; i < markers.size(); ++i)
    for (std::size_t j = i + 1; j < markers.size(); ++j)
      CHECK(std::fabs(markers[i] - markers[j]) > 1e-6);

  // continuity of the marker in the bending parameter
  const auto marker_at = [&](double eta) {
    const GroupData<H> Gk = fhyp::bend_amalgam<H>(G, fhyp::unit_rotation<double>(axis, eta));
    return fhyp::marker_invariant<H>(Gk, cfg.marker_point);
  };
  CHECK(std::fabs(marker_at(0.15 + 1e-5) - marker_at(0.15)) <= 1e-3);

  // markers stay injective for a generic non-mirror marker point too
  const BallPoint<H> alt = real_boundary<H>(-1.0);
  const double m1 = fhyp::marker_invariant<H>(fhyp::bend_amalgam<H>(G, fhyp::unit_rotation<double>(axis, 0.1)), alt);
  const double m2 = fhyp::marker_invariant<H>(fhyp::bend_amalgam<H>(G, fhyp::unit_rotation<double>(axis, 0.2)), alt);
  CHECK(m1 > 0.0);
  CHECK(m2 > m1 + 1e-6);

  // a non-standard amalgamating axis is rejected
  fhyp::Rng rng(231);
  GroupData<H> shifted = G;
  const FMat<H> h = fhyp::random_isometry<H>(rng, n);
  shifted.gamma_alpha = h * G.gamma_alpha * fhyp::form_inverse<H>(h);
  CHECK_THROWS_AS(fhyp::bend_amalgam<H>(shifted, nu), std::invalid_argument);
  CHECK_THROWS_AS(fhyp::bend_hnn<H>(G, nu), std::invalid_argument);

  // interior marker points are rejected
  CHECK_THROWS_AS(fhyp::marker_invariant<H>(G, BallPoint<H>::origin(2)), std::invalid_argument);
}

TEST_CASE("bending an HNN splitting twists the stable letter") {
  const int n = 2;
  GroupData<H> G{GroupKind::hnn,
                 {fhyp::standard_loxodromic<H>(0.25, H(1), n)},
                 {fhyp::standard_loxodromic<H>(0.7, H(1), n)},
                 fhyp::standard_loxodromic<H>(0.25, H(1), n)};
  const auto axis = fhyp::ImaginaryDirection<double>::from_components(0, 1, 0);
  const H nu = fhyp::unit_rotation<double>(axis, 0.2);
  const GroupData<H> Gb = fhyp::bend_hnn<H>(G, nu);
  const FMat<H> U = fhyp::rotation_U<H>(nu, n);
  CHECK(fhyp::max_abs(FMat<H>(Gb.gamma2[0] - U * G.gamma2[0])) == 0.0);
  CHECK(fhyp::form_residual<H>(Gb.gamma2[0]) <= 1e-12);

  // a fixed word in the bent generators equals the word with the stable
  // letter substituted by U t, exactly
  const FMat<H> t = G.gamma2[0], tb = Gb.gamma2[0];
  const FMat<H> word_bent = Gb.gamma1[0] * tb * Gb.gamma1[0] * fhyp::form_inverse<H>(tb);
  const FMat<H> word_subst = G.gamma1[0] * (U * t) * G.gamma1[0] * fhyp::form_inverse<H>(FMat<H>(U * t));
  CHECK(fhyp::max_abs(FMat<H>(word_bent - word_subst)) == 0.0);

  // the twisted letter conjugates gamma_alpha the same way the original did
  const FMat<H> lhs = tb * G.gamma_alpha * fhyp::form_inverse<H>(tb);
  const FMat<H> rhs = t * G.gamma_alpha * fhyp::form_inverse<H>(t);
  CHECK(fhyp::max_abs(FMat<H>(lhs - rhs)) <= 1e-13);

  CHECK_THROWS_AS(fhyp::bend_amalgam<H>(G, nu), std::invalid_argument);
}

TEST_CASE("collar bound and the distance between axes") {
  const double delta = std::log(63.0);
  const auto cb = fhyp::collar_check(0.5, delta);
  CHECK(cb.product == doctest::Approx(std::sinh(0.125) * std::sinh(delta / 2)).epsilon(1e-15));
  CHECK(cb.product > 0.48);
  CHECK(cb.product < 0.5);
  CHECK(cb.ok);
  CHECK_FALSE(fhyp::collar_check(0.6, delta).ok);
  CHECK_THROWS_AS(fhyp::collar_check(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(fhyp::collar_check(1.0, -2.0), std::domain_error);

  // sinh(delta / 2) = 31 / sqrt(63): the collar product in closed form
  CHECK(std::sinh(delta / 2) == doctest::Approx(31.0 / std::sqrt(63.0)).epsilon(1e-15));

  // r0 = (32 + sqrt 63)/(32 - sqrt 63) puts the (1, r0) axis at distance
  // log 63 from the standard axis: cosh(delta / 2) = (r0 + 1)/(r0 - 1)
  CHECK((kR0 + 1.0) / (kR0 - 1.0) == doctest::Approx(std::cosh(delta / 2)).epsilon(1e-14));

  using D = double;
  const fhyp::FLine<D> std_line(axis_point<D>(2, -1.0), axis_point<D>(2, 1.0));
  const fhyp::Geodesic<D> other =
      fhyp::Geodesic<D>::from_endpoints(real_boundary<D>(1.0), real_boundary<D>(kR0));
  const auto gap = [&](double s) {
    const BallPoint<D> p = fhyp::geodesic_point<D>(other, s);
    return fhyp::distance<D>(p, fhyp::project_to_fline<D>(p, std_line));
  };
  const double dmin = golden_min(gap, -6.0, 6.0);
  CHECK(dmin == doctest::Approx(delta).epsilon(1e-9));
}

TEST_CASE("limit set samples are deterministic boundary points") {
  const auto cfg = fhyp::schottky_bend_config<H>();
  const auto s1 = fhyp::limit_set_sample<H>(cfg.group, 4, 48, 7);
  const auto s2 = fhyp::limit_set_sample<H>(cfg.group, 4, 48, 7);
  REQUIRE(s1.points.size() > 10);
  CHECK(int(s1.points.size()) + s1.skipped == 48);
  REQUIRE(s1.points.size() == s2.points.size());
  for (std::size_t i = 0; i < s1.points.size(); ++i) {
    CHECK(s1.points[i].kind() == fhyp::PointKind::boundary);
    CHECK(fhyp::max_abs(FRow<H>(s1.points[i].z - s2.points[i].z)) == 0.0);
    // a real group keeps its limit set on the real circle
    for (int c = 0; c < 2; ++c) CHECK(im_abs(s1.points[i].z(c)) == 0.0);
  }

  // the bent group leaves the real circle
  const auto axis = fhyp::ImaginaryDirection<double>::from_components(1, 0, 0);
  const GroupData<H> Gb = fhyp::bend_amalgam<H>(cfg.group, fhyp::unit_rotation<double>(axis, 0.3));
  const auto sb = fhyp::limit_set_sample<H>(Gb, 4, 48, 7);
  double off = 0.0;
  for (const auto& p : sb.points)
    for (int c = 0; c < 2; ++c) off = std::max(off, im_abs(p.z(c)));
  CHECK(off > 1e-3);

  // an elliptic generator only bumps the skip counter
  const H w = fhyp::unit_rotation<double>(fhyp::ImaginaryDirection<double>::from_components(0, 0, 1), 0.3);
  GroupData<H> with_elliptic = cfg.group;
  with_elliptic.gamma1.push_back(fhyp::rotation_U<H>(w, 2));
  const auto s3 = fhyp::limit_set_sample<H>(with_elliptic, 2, 64, 11);
  CHECK(s3.skipped > 0);
  for (const auto& p : s3.points) CHECK(p.kind() == fhyp::PointKind::boundary);

  const auto empty = fhyp::limit_set_sample<H>(GroupData<H>{GroupKind::amalgam, {}, {}, FMat<H>()}, 3, 10, 1);
  CHECK(empty.points.empty());
}

TEST_CASE("real bending blocks in the octonionic line") {
  fhyp::Rng rng(251);
  const FMat<double> J9 = fhyp::form_matrix<double>(9);

  for (int rep = 0; rep < 10; ++rep) {
    const FMat<double> M5 = fhyp::random_isometry<double>(rng, 4);
    const FMat<double> M9 = fhyp::embed_o41_in_o81(M5);
    CHECK(fhyp::form_residual<double>(M9) <= 1e-12);
    const FMat<double> N5 = fhyp::random_isometry<double>(rng, 4);
    const FMat<double> P = fhyp::embed_o41_in_o81(M5) * fhyp::embed_o41_in_o81(N5);
    CHECK(fhyp::max_abs(FMat<double>(P - fhyp::embed_o41_in_o81(FMat<double>(M5 * N5)))) <= 1e-12);
  }
  FMat<double> bad = FMat<double>::Identity(5, 5);
  bad(0, 0) = 2.0;
  CHECK_THROWS_AS(fhyp::embed_o41_in_o81(bad), std::invalid_argument);

  const Eigen::Vector4d d(1.0, 0.0, 0.0, 0.0);
  CHECK(fhyp::max_abs(FMat<double>(fhyp::real_bend_rotation(0.0, d) - FMat<double>::Identity(9, 9))) == 0.0);
  const FMat<double> R = fhyp::real_bend_rotation(0.3, Eigen::Vector4d(0.5, 0.5, 0.5, 0.5));
  CHECK(fhyp::max_abs(FMat<double>(R.transpose() * J9 * R - J9)) <= 1e-14);
  CHECK(fhyp::max_abs(FMat<double>(R * fhyp::real_bend_rotation(-0.3, Eigen::Vector4d(0.5, 0.5, 0.5, 0.5)) -
                                   FMat<double>::Identity(9, 9))) <= 1e-15);

  // the wall spanned by the first three coordinates stays pointwise fixed
  for (int i : {0, 1, 2, 8}) {
    FRow<double> e = FRow<double>::Zero(9);
    e(i) = 1.0;
    CHECK(fhyp::max_abs(FRow<double>(FRow<double>(e * R) - e)) == 0.0);
  }

  // a nonzero angle moves the fourth coordinate into the extra block
  FRow<double> z = FRow<double>::Zero(8);
  z(3) = 1.0;
  const BallPoint<double> p{z};
  const BallPoint<double> q = fhyp::apply<double>(fhyp::real_bend_rotation(0.3, d), p);
  double extra = 0.0;
  for (int i = 4; i < 8; ++i) extra = std::max(extra, std::fabs(q.z(i)));
  CHECK(extra > 1e-3);
  CHECK(q.kind() == fhyp::PointKind::boundary);

  CHECK_THROWS_AS(fhyp::real_bend_rotation(0.1, Eigen::Vector4d::Zero()), std::invalid_argument);
}
