#pragma once

#include <array>
#include <cmath>
#include <random>

#include "fhyp/linear.hpp"

namespace fhyp {

// Deterministic generators used by tests and the verify suites.  Everything
// is driven by a caller-owned engine so a seed reproduces a whole run.
using Rng = std::mt19937_64;

template <typename F>
F random_scalar(Rng& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::array<double, field_traits<F>::components> c{};
  for (auto& x : c) x = U(rng);
  return field_traits<F>::unpack(c);
}

template <typename F>
F random_unit_scalar(Rng& rng) {
  for (;;) {
    const F s = random_scalar<F>(rng);
    const double a = abs(s);
    if (a > 1e-3) return s * F(1.0 / a);
  }
}

template <typename F>
FRow<F> random_row(Rng& rng, int n) {
  FRow<F> v(n);
  for (int i = 0; i < n; ++i) v(i) = random_scalar<F>(rng);
  return v;
}

template <typename F>
double row_norm2(const FRow<F>& v) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += abs2(v(i));
  return s;
}

// Interior point of the unit ball in F^n, kept away from both the center
// and the boundary so distance formulas stay well conditioned.
template <typename F>
FRow<F> random_ball_point(Rng& rng, int n, double rmin = 0.05, double rmax = 0.9) {
  std::uniform_real_distribution<double> R(rmin, rmax);
  for (;;) {
    FRow<F> v = random_row<F>(rng, n);
    const double norm = std::sqrt(row_norm2(v));
    if (norm < 1e-3) continue;
    return v * F(R(rng) / norm);
  }
}

template <typename F>
FRow<F> random_boundary_point(Rng& rng, int n) {
  for (;;) {
    FRow<F> v = random_row<F>(rng, n);
    const double norm = std::sqrt(row_norm2(v));
    if (norm < 1e-3) continue;
    return v * F(1.0 / norm);
  }
}

// Rows orthonormalized under herm(), so U U^† = I.
template <typename F>
FMat<F> random_unitary(Rng& rng, int n) {
  for (;;) {
    FMat<F> M(n, n);
    for (int r = 0; r < n; ++r) M.row(r) = random_row<F>(rng, n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      FRow<F> v = M.row(i);
      for (int j = 0; j < i; ++j) {
        const FRow<F> u = M.row(j);
        const F c = herm<F>(v, u);
        v -= c * u;
      }
      const double a = std::sqrt(double(re(herm<F>(v, v))));
      if (a < 1e-6) {
        ok = false;
        break;
      }
      M.row(i) = v * F(1.0 / a);
    }
    if (ok) return M;
  }
}

// Random element of the isometry group of diag(1,..,1,-1) on F^{n,1},
// assembled as (unitary block) * (standard boost) * (unitary block).
template <typename F>
FMat<F> random_isometry(Rng& rng, int n) {
  const int m = n + 1;
  auto block_diag = [&](const FMat<F>& U, const F& nu) {
    FMat<F> G = FMat<F>::Zero(m, m);
    G.topLeftCorner(n, n) = U;
    G(n, n) = nu;
    return G;
  };
  std::uniform_real_distribution<double> R(0.1, 1.5);
  const double r = R(rng);
  FMat<F> T = FMat<F>::Identity(m, m);
  T(n - 1, n - 1) = F(std::cosh(r));
  T(n - 1, n) = F(std::sinh(r));
  T(n, n - 1) = F(std::sinh(r));
  T(n, n) = F(std::cosh(r));
  const FMat<F> A = block_diag(random_unitary<F>(rng, n), random_unit_scalar<F>(rng));
  const FMat<F> B = block_diag(random_unitary<F>(rng, n), random_unit_scalar<F>(rng));
  return A * T * B;
}

}  // namespace fhyp
