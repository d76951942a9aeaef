#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <array>
#include <cmath>
#include <complex>
#include <random>

#include "fhyp/field.hpp"
#include "fhyp/linear.hpp"
#include "fhyp/random.hpp"
#include "fhyp/octonion.hpp"
#include "fhyp/quaternion.hpp"

using fhyp::Octoniond;
using fhyp::Quaterniond;

namespace {

std::mt19937_64 rng(20240917);

Quaterniond random_quat() {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  return {U(rng), U(rng), U(rng), U(rng)};
}

Quaterniond random_int_quat() {
  std::uniform_int_distribution<int> Z(-2, 2);
  return {double(Z(rng)), double(Z(rng)), double(Z(rng)), double(Z(rng))};
}

Octoniond random_oct() { return {random_quat(), random_quat()}; }

double qdist(const Quaterniond& a, const Quaterniond& b) { return fhyp::abs(a - b); }
double odist(const Octoniond& a, const Octoniond& b) { return fhyp::abs(a - b); }

}  // namespace

TEST_CASE("quaternion Hamilton relations") {
  const Quaterniond one{1, 0, 0, 0}, i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  CHECK(k * j == -i);
  CHECK(i * k == -j);
  CHECK((one + i) * (one + j) == Quaterniond{1, 1, 1, 1});
  CHECK((one + j) * (one + i) == Quaterniond{1, 1, 1, -1});
}

TEST_CASE("quaternion norm, conjugation, inverse") {
  for (int t = 0; t < 10000; ++t) {
    const Quaterniond p = random_quat(), q = random_quat();
    CHECK(std::fabs(fhyp::abs(p * q) - fhyp::abs(p) * fhyp::abs(q)) < 1e-12);
    CHECK(qdist(fhyp::conj(p * q), fhyp::conj(q) * fhyp::conj(p)) < 1e-13);
  }
  for (int t = 0; t < 100; ++t) {
    Quaterniond q = random_quat();
    if (fhyp::abs(q) < 1e-3) continue;
    CHECK(qdist(q * fhyp::inv(q), Quaterniond{1, 0, 0, 0}) < 1e-13);
    CHECK(qdist(fhyp::inv(q) * q, Quaterniond{1, 0, 0, 0}) < 1e-13);
  }
  CHECK_THROWS_AS((void)fhyp::inv(Quaterniond{}), std::domain_error);
  const Quaterniond q{0.3, -0.1, 0.7, 0.2};
  CHECK(fhyp::re(q) == 0.3);
  CHECK(qdist(fhyp::im(q), Quaterniond{0, -0.1, 0.7, 0.2}) == 0.0);
  CHECK(std::fabs(fhyp::im_abs(q) - std::sqrt(0.01 + 0.49 + 0.04)) < 1e-15);
}

TEST_CASE("line_angle values and invariances") {
  const double pi = std::acos(-1.0);
  CHECK(fhyp::line_angle(Quaterniond{-4, 0, 0, 0}) == 0.0);
  CHECK(fhyp::line_angle(Quaterniond{0, -4, 0, 0}) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(fhyp::line_angle(Quaterniond{-2, 2, 0, 0}) == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(fhyp::line_angle(-4.0) == 0.0);
  CHECK(fhyp::line_angle(std::complex<double>(0, -4)) == doctest::Approx(pi / 2));
  CHECK(fhyp::line_angle(std::complex<double>(-2, 2)) == doctest::Approx(pi / 4));
  CHECK_THROWS_AS((void)fhyp::line_angle(Quaterniond{}), std::domain_error);
  CHECK_THROWS_AS((void)fhyp::line_angle(0.0), std::domain_error);

  for (int t = 0; t < 200; ++t) {
    Quaterniond q = random_quat();
    if (fhyp::abs(q) < 1e-3) continue;
    const double a = fhyp::line_angle(q);
    CHECK(a >= 0.0);
    CHECK(a <= pi / 2 + 1e-15);
    CHECK(std::fabs(fhyp::line_angle(-q) - a) < 1e-13);
    CHECK(std::fabs(fhyp::line_angle(fhyp::conj(q)) - a) < 1e-13);
    CHECK(std::fabs(fhyp::line_angle(q * 2.75) - a) < 1e-13);
    Quaterniond u = random_quat();
    if (fhyp::abs(u) < 1e-3) continue;
    u = fhyp::normalized(u);
    CHECK(std::fabs(fhyp::line_angle(fhyp::conj(u) * q * u) - a) < 1e-12);
  }
}

TEST_CASE("unit_rotation against rotation-matrix oracle") {
  // conj(nu) v nu with nu = cos(eta) + sin(eta) u equals the rotation of the
  // imaginary 3-space by angle -2*eta about u in the (i,j,k) orientation.
  for (double eta : {0.1, 0.7, 1.3}) {
    for (int t = 0; t < 50; ++t) {
      Quaterniond raw = fhyp::im(random_quat());
      if (fhyp::abs(raw) < 1e-3) continue;
      const auto axis = fhyp::ImaginaryDirectiond::from_components(raw.x, raw.y, raw.z);
      const Quaterniond nu = fhyp::unit_rotation(axis, eta);
      CHECK(std::fabs(fhyp::abs(nu) - 1.0) < 1e-15);

      const Quaterniond v = random_quat();
      const Quaterniond w = fhyp::rotate_by(nu, v);
      CHECK(std::fabs(fhyp::re(w) - fhyp::re(v)) < 1e-13);
      CHECK(std::fabs(fhyp::abs(w) - fhyp::abs(v)) < 1e-13);

      const Eigen::Vector3d u3(axis.u.x, axis.u.y, axis.u.z);
      const Eigen::Vector3d v3(v.x, v.y, v.z);
      const Eigen::Vector3d w3 = Eigen::AngleAxisd(-2.0 * eta, u3) * v3;
      CHECK(std::fabs(w.x - w3.x()) < 1e-12);
      CHECK(std::fabs(w.y - w3.y()) < 1e-12);
      CHECK(std::fabs(w.z - w3.z()) < 1e-12);
    }
  }
  CHECK_THROWS_AS(fhyp::ImaginaryDirectiond::from_components(0, 0, 0), std::invalid_argument);
}

TEST_CASE("octonion multiplication table facts") {
  std::array<Octoniond, 8> e;
  for (int t = 0; t < 8; ++t) {
    std::array<double, 8> c{};
    c[t] = 1.0;
    e[t] = Octoniond::from_components(c);
  }
  CHECK(e[1] * e[4] == e[5]);
  CHECK(e[4] * e[1] == -e[5]);
  CHECK(e[4] * e[5] == e[1]);
  CHECK(e[4] * e[4] == Octoniond(-1.0));
  for (int t = 1; t < 8; ++t) CHECK(e[t] * e[t] == Octoniond(-1.0));

  const Octoniond assoc = fhyp::associator(e[1], e[4], e[2]);
  CHECK(assoc == -2.0 * e[7]);
  CHECK(fhyp::abs(assoc) == 2.0);
  CHECK(fhyp::abs(assoc) > 0.1);
}

TEST_CASE("octonion norm multiplicativity and alternative laws") {
  for (int t = 0; t < 1000; ++t) {
    const Octoniond x = random_oct(), y = random_oct();
    CHECK(std::fabs(fhyp::abs(x * y) - fhyp::abs(x) * fhyp::abs(y)) < 1e-12);
    CHECK(odist(fhyp::conj(x * y), fhyp::conj(y) * fhyp::conj(x)) < 1e-13);
    CHECK(odist((x * x) * y, x * (x * y)) < 1e-12);
    CHECK(odist((x * y) * y, x * (y * y)) < 1e-12);
    CHECK(odist((x * y) * x, x * (y * x)) < 1e-12);
  }
  for (int t = 0; t < 100; ++t) {
    const Octoniond x = random_oct();
    if (fhyp::abs(x) < 1e-3) continue;
    CHECK(odist(x * fhyp::inv(x), Octoniond(1.0)) < 1e-13);
    CHECK(odist(fhyp::inv(x) * x, Octoniond(1.0)) < 1e-13);
  }
  CHECK_THROWS_AS((void)fhyp::inv(Octoniond{}), std::domain_error);
}

TEST_CASE("field traits pack/unpack round trip") {
  {
    std::array<double, 1> buf{};
    fhyp::field_traits<double>::pack(3.5, buf);
    CHECK(fhyp::field_traits<double>::unpack(buf) == 3.5);
  }
  {
    std::array<double, 2> buf{};
    fhyp::field_traits<std::complex<double>>::pack({1.5, -2.5}, buf);
    CHECK(fhyp::field_traits<std::complex<double>>::unpack(buf) == std::complex<double>(1.5, -2.5));
  }
  {
    std::array<double, 4> buf{};
    fhyp::field_traits<Quaterniond>::pack({1, 2, 3, 4}, buf);
    CHECK(fhyp::field_traits<Quaterniond>::unpack(buf) == Quaterniond{1, 2, 3, 4});
  }
  CHECK(fhyp::field_traits<Quaterniond>::name == "H");
  CHECK(fhyp::field_traits<std::complex<double>>::name == "C");
  CHECK(fhyp::field_traits<double>::name == "R");
}

// Eigen matrices over the noncommutative quaternion scalar: the rest of the
// library depends on products keeping left/right factor order and on
// adjoint() conjugating entries.  Entries here have small integer components
// so every arithmetic result below is exact in double precision; any order
// swap or reassociation bug shows up as exact inequality.
//
// Products with a vector-shaped operand are excluded on purpose: Eigen's
// row-vector gemv kernel multiplies coefficients in reversed order, so the
// library routes every lift-times-matrix action through its own apply_row
// instead of writing v * M.  Square matrix products take either the lazy
// path (small sizes) or the blocked gebp kernel; both are covered below.
using QMat = Eigen::Matrix<Quaterniond, Eigen::Dynamic, Eigen::Dynamic>;

TEST_CASE("eigen quaternion matrices: product order is left-to-right") {
  for (int n : {3, 9}) {
    QMat A(n, n), B(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        A(r, c) = random_int_quat();
        B(r, c) = random_int_quat();
      }
    const QMat C = A * B;
    QMat M(n, n);
    int order_sensitive = 0;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Quaterniond s{}, srev{};
        for (int k = 0; k < n; ++k) {
          s += A(r, k) * B(k, c);
          srev += B(k, c) * A(r, k);
        }
        M(r, c) = s;
        if (s != srev) ++order_sensitive;
      }
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) CHECK(C(r, c) == M(r, c));
    CHECK(order_sensitive > 0);
  }
}

TEST_CASE("eigen quaternion matrices: adjoint, adjoint products, identity") {
  for (int n : {3, 9}) {
    QMat A(n, n), B(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        A(r, c) = random_int_quat();
        B(r, c) = random_int_quat();
      }

    const QMat Ad = A.adjoint();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) CHECK(Ad(r, c) == fhyp::conj(A(c, r)));

    const QMat AdB = A.adjoint() * B;
    const QMat ABd = A * B.adjoint();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        Quaterniond s1{}, s2{};
        for (int k = 0; k < n; ++k) {
          s1 += fhyp::conj(A(k, r)) * B(k, c);
          s2 += A(r, k) * fhyp::conj(B(c, k));
        }
        CHECK(AdB(r, c) == s1);
        CHECK(ABd(r, c) == s2);
      }

    QMat I(n, n);
    I.setIdentity();
    const QMat AI = A * I;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) CHECK(AI(r, c) == A(r, c));

    QMat Z(n, n);
    Z.setZero();
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) CHECK(Z(r, c) == Quaterniond{});
  }
}

TEST_CASE("eigen quaternion matrices: sided scalar multiples") {
  const int n = 4;
  QMat A(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) A(r, c) = random_int_quat();
  const Quaterniond s = random_int_quat();

  const QMat L = s * A;
  const QMat R = A * s;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      CHECK(L(r, c) == s * A(r, c));
      CHECK(R(r, c) == A(r, c) * s);
    }
}

TEST_CASE("apply_row matches explicit coefficient order") {
  for (int n : {3, 9, 24}) {
    QMat A(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) A(r, c) = random_int_quat();
    fhyp::FRow<Quaterniond> v(n);
    for (int c = 0; c < n; ++c) v(c) = random_int_quat();
    const auto w = fhyp::apply_row<Quaterniond>(v, A);
    int order_sensitive = 0;
    for (int c = 0; c < n; ++c) {
      Quaterniond s{}, srev{};
      for (int k = 0; k < n; ++k) {
        s += v(k) * A(k, c);
        srev += A(k, c) * v(k);
      }
      CHECK(w(c) == s);
      if (s != srev) ++order_sensitive;
    }
    CHECK(order_sensitive > 0);
  }
}

template <typename F>
F random_quat_as();
template <>
double random_quat_as<double>() {
  return random_quat().w;
}
template <>
std::complex<double> random_quat_as<std::complex<double>>() {
  const Quaterniond q = random_quat();
  return {q.w, q.x};
}
template <>
Quaterniond random_quat_as<Quaterniond>() {
  return random_quat();
}

template <typename F>
static void check_solvers(int n, int reps, double tol) {
  for (int t = 0; t < reps; ++t) {
    fhyp::FMat<F> A(n, n), B(n, 2);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) A(r, c) = random_quat_as<F>();
      for (int c = 0; c < 2; ++c) B(r, c) = random_quat_as<F>();
    }
    const fhyp::FMat<F> X = fhyp::solve_left<F>(A, B);
    CHECK(fhyp::max_abs(A * X - B) < tol);
    const fhyp::FMat<F> Y = fhyp::solve_right<F>(A, B.adjoint());
    CHECK(fhyp::max_abs(Y * A - fhyp::FMat<F>(B.adjoint())) < tol);
    const fhyp::FMat<F> Ai = fhyp::inverse_left<F>(A);
    CHECK(fhyp::max_abs(A * Ai - fhyp::FMat<F>::Identity(n, n)) < tol);
    CHECK(fhyp::max_abs(Ai * A - fhyp::FMat<F>::Identity(n, n)) < tol);
  }
}

TEST_CASE("sided gaussian solvers over R, C, H") {
  check_solvers<double>(5, 50, 1e-9);
  check_solvers<std::complex<double>>(5, 50, 1e-9);
  check_solvers<Quaterniond>(5, 50, 1e-9);
  fhyp::FMat<Quaterniond> S = fhyp::FMat<Quaterniond>::Zero(3, 3);
  S(0, 1) = Quaterniond{0, 1, 0, 0};
  CHECK_THROWS_AS(fhyp::solve_left<Quaterniond>(S, fhyp::FMat<Quaterniond>::Identity(3, 3)),
                  std::domain_error);
}

TEST_CASE("random isometries preserve the form; form_inverse inverts") {
  std::mt19937_64 seeded(99);
  auto run = [&]<typename F>(int n) {
    for (int t = 0; t < 25; ++t) {
      const fhyp::FMat<F> U = fhyp::random_unitary<F>(seeded, n);
      CHECK(fhyp::max_abs(fhyp::FMat<F>(U * U.adjoint()) - fhyp::FMat<F>::Identity(n, n)) <
            1e-12);
      const fhyp::FMat<F> M = fhyp::random_isometry<F>(seeded, n);
      CHECK(fhyp::form_residual<F>(M) < 1e-12);
      const fhyp::FMat<F> Mi = fhyp::form_inverse<F>(M);
      CHECK(fhyp::max_abs(M * Mi - fhyp::FMat<F>::Identity(n + 1, n + 1)) < 1e-12);
    }
  };
  run.template operator()<double>(3);
  run.template operator()<std::complex<double>>(2);
  run.template operator()<Quaterniond>(2);
  run.template operator()<Quaterniond>(3);
}
