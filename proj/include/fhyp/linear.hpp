#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <utility>

#include "fhyp/field.hpp"

namespace fhyp {

// Row-based linear algebra over F in {double, complex, quaternion}.  Vectors
// are rows, scalars act on them from the left, matrices act from the right.
// Every product with a vector-shaped operand is written out explicitly:
// Eigen's gemv kernels reverse coefficient order over noncommutative scalars
// (see the frozen probe in the algebra tests), while its square
// matrix-matrix products are order-exact and remain in use.

template <typename F>
using FMat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <typename F>
using FRow = Eigen::Matrix<F, 1, Eigen::Dynamic>;

template <typename F>
FMat<F> form_matrix(Eigen::Index m) {
  FMat<F> J = FMat<F>::Zero(m, m);
  for (Eigen::Index i = 0; i + 1 < m; ++i) J(i, i) = F(1);
  J(m - 1, m - 1) = F(-1);
  return J;
}

// Evaluates the expression into a plain matrix first; nested products then
// go through the verified assignment path rather than per-coefficient
// evaluation.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& expr) {
  const typename Derived::PlainObject M = expr.derived();
  double m = 0.0;
  for (Eigen::Index r = 0; r < M.rows(); ++r)
    for (Eigen::Index c = 0; c < M.cols(); ++c) m = std::max(m, double(abs(M(r, c))));
  return m;
}

template <typename F>
FRow<F> apply_row(const FRow<F>& v, const FMat<F>& M) {
  if (v.size() != M.rows()) throw std::invalid_argument("apply_row: size mismatch");
  FRow<F> w = FRow<F>::Zero(M.cols());
  for (Eigen::Index c = 0; c < M.cols(); ++c) {
    F s{};
    for (Eigen::Index k = 0; k < M.rows(); ++k) s += v(k) * M(k, c);
    w(c) = s;
  }
  return w;
}

// Hermitian pairing of rows, sum u_k conj(v_k); left-linear in u.
template <typename F>
F herm(const FRow<F>& u, const FRow<F>& v) {
  F s{};
  for (Eigen::Index k = 0; k < u.size(); ++k) s += u(k) * conj(v(k));
  return s;
}

// Solves A X = B by Gaussian elimination with partial pivoting on abs.
// Row operations multiply from the left, so the method is valid over a
// noncommutative F.
template <typename F>
FMat<F> solve_left(FMat<F> A, FMat<F> B) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || B.rows() != n) throw std::invalid_argument("solve_left: shape mismatch");
  for (Eigen::Index p = 0; p < n; ++p) {
    Eigen::Index best = p;
    double bestabs = abs(A(p, p));
    for (Eigen::Index r = p + 1; r < n; ++r) {
      const double a = abs(A(r, p));
      if (a > bestabs) {
        bestabs = a;
        best = r;
      }
    }
    if (!(bestabs > 0.0)) throw std::domain_error("solve_left: singular matrix");
    if (best != p) {
      A.row(p).swap(A.row(best));
      B.row(p).swap(B.row(best));
    }
    const F piv_inv = inv(A(p, p));
    for (Eigen::Index r = p + 1; r < n; ++r) {
      const F m = A(r, p) * piv_inv;
      if (m == F{}) continue;
      for (Eigen::Index c = p; c < n; ++c) A(r, c) -= m * A(p, c);
      for (Eigen::Index c = 0; c < B.cols(); ++c) B(r, c) -= m * B(p, c);
    }
  }
  FMat<F> X = FMat<F>::Zero(n, B.cols());
  for (Eigen::Index r = n; r-- > 0;) {
    const F piv_inv = inv(A(r, r));
    for (Eigen::Index c = 0; c < B.cols(); ++c) {
      F s = B(r, c);
      for (Eigen::Index k = r + 1; k < n; ++k) s -= A(r, k) * X(k, c);
      X(r, c) = piv_inv * s;
    }
  }
  return X;
}

// Solves X A = B through (XA)^† = A^† X^†.
template <typename F>
FMat<F> solve_right(const FMat<F>& A, const FMat<F>& B) {
  const FMat<F> Xa = solve_left<F>(A.adjoint(), B.adjoint());
  return Xa.adjoint();
}

template <typename F>
FMat<F> inverse_left(const FMat<F>& A) {
  return solve_left<F>(A, FMat<F>::Identity(A.rows(), A.rows()));
}

// Inverse of a form-preserving M: from M^† J M = J and J^2 = I,
// M^{-1} = J M^† J.
template <typename F>
FMat<F> form_inverse(const FMat<F>& M) {
  const FMat<F> J = form_matrix<F>(M.rows());
  return J * M.adjoint() * J;
}

template <typename F>
double form_residual(const FMat<F>& M) {
  const FMat<F> J = form_matrix<F>(M.rows());
  const FMat<F> G = M.adjoint() * J * M;
  return max_abs(G - J);
}

}  // namespace fhyp
