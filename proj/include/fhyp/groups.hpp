#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fhyp/geometry.hpp"
#include "fhyp/hermitian.hpp"
#include "fhyp/invariants.hpp"
#include "fhyp/linear.hpp"
#include "fhyp/models.hpp"
#include "fhyp/random.hpp"

namespace fhyp {

namespace detail {

inline void require_unit(double a) {
  if (std::fabs(a - 1.0) > 1e-12) throw std::invalid_argument("scalar must be unit");
}

}  // namespace detail

// diag(1, .., 1, nu, nu): rotates the last ball coordinate by conjugation
// and the others by left multiplication with inv(nu).
template <typename F>
FMat<F> rotation_U(const F& nu, int n) {
  detail::require_unit(abs(nu));
  FMat<F> U = FMat<F>::Zero(n + 1, n + 1);
  for (int i = 0; i + 2 < n + 1; ++i) U(i, i) = F(1);
  U(n - 1, n - 1) = nu;
  U(n, n) = nu;
  return U;
}

// Loxodromic with axis ((0,..,-1), (0,..,1)), translation length 2r and
// rotation part nu; r > 0 attracts toward (0,..,1).
template <typename F>
FMat<F> standard_loxodromic(double r, const F& nu, int n) {
  detail::require_unit(abs(nu));
  FMat<F> T = FMat<F>::Zero(n + 1, n + 1);
  for (int i = 0; i + 2 < n + 1; ++i) T(i, i) = F(1);
  T(n - 1, n - 1) = nu * std::cosh(r);
  T(n - 1, n) = nu * std::sinh(r);
  T(n, n - 1) = nu * std::sinh(r);
  T(n, n) = nu * std::cosh(r);
  return T;
}

// Lift of a real hyperbolic-plane isometry (a 3x3 matrix preserving
// diag(1,1,-1)) into the rank one group over F, acting on the real ball.
template <typename F>
FMat<F> embed_fuchsian(const FMat<double>& R) {
  if (R.rows() != 3 || R.cols() != 3)
    throw std::invalid_argument("embed_fuchsian expects a 3x3 matrix");
  if (form_residual<double>(R) > tol::form_preservation)
    throw std::invalid_argument("matrix does not preserve the real form");
  FMat<F> M(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = F(R(i, j));
  return M;
}

// Loxodromic real-plane isometry with prescribed boundary fixed points and
// translation length.
template <typename F>
FMat<F> loxodromic_with_axis(const BallPoint<F>& rep, const BallPoint<F>& att, double length) {
  if (!(length > 0)) throw std::invalid_argument("translation length must be positive");
  const int n = rep.n();
  const FMat<F> g = move_to_standard<F>(rep, att);
  const FMat<F> T = standard_loxodromic<F>(length / 2, F(1), n);
  return g * T * form_inverse<F>(g);
}

enum class GroupKind { amalgam, hnn };

// Generators of a geometrically finite group split along the cyclic group
// of gamma_alpha, whose axis must be in standard position.
template <typename F>
struct GroupData {
  GroupKind kind;
  std::vector<FMat<F>> gamma1;  // kept pointwise fixed by bending
  std::vector<FMat<F>> gamma2;  // second factor (amalgam) or stable letters (hnn)
  FMat<F> gamma_alpha;
};

namespace detail {

template <typename F>
void require_standard_axis(const FMat<F>& g) {
  const int n = int(g.rows()) - 1;
  FRow<F> s1 = FRow<F>::Zero(n), s2 = FRow<F>::Zero(n);
  s1(n - 1) = F(-1);
  s2(n - 1) = F(1);
  const BallPoint<F> p1{s1}, p2{s2};
  if (chordal<F>(apply<F>(g, p1), p1) > tol::geometric ||
      chordal<F>(apply<F>(g, p2), p2) > tol::geometric)
    throw std::invalid_argument("gamma_alpha axis is not in standard position");
}

}  // namespace detail

// Bend an amalgamated group: conjugate the second factor by rotation_U(nu)
// and keep the first factor bitwise unchanged.
template <typename F>
GroupData<F> bend_amalgam(const GroupData<F>& G, const F& nu) {
  if (G.kind != GroupKind::amalgam) throw std::invalid_argument("expected an amalgam");
  detail::require_standard_axis<F>(G.gamma_alpha);
  const int n = int(G.gamma_alpha.rows()) - 1;
  const FMat<F> U = rotation_U<F>(nu, n);
  const FMat<F> Ui = rotation_U<F>(conj(nu), n);
  GroupData<F> out{GroupKind::amalgam, G.gamma1, {}, G.gamma_alpha};
  out.gamma2.reserve(G.gamma2.size());
  for (const FMat<F>& g : G.gamma2) out.gamma2.push_back(U * g * Ui);
  return out;
}

// Bend an HNN extension: premultiply each stable letter by rotation_U(nu).
template <typename F>
GroupData<F> bend_hnn(const GroupData<F>& G, const F& nu) {
  if (G.kind != GroupKind::hnn) throw std::invalid_argument("expected an HNN splitting");
  detail::require_standard_axis<F>(G.gamma_alpha);
  const int n = int(G.gamma_alpha.rows()) - 1;
  const FMat<F> U = rotation_U<F>(nu, n);
  GroupData<F> out{GroupKind::hnn, G.gamma1, {}, G.gamma_alpha};
  out.gamma2.reserve(G.gamma2.size());
  for (const FMat<F>& g : G.gamma2) out.gamma2.push_back(U * g);
  return out;
}

template <typename F>
struct FixedPoints {
  BallPoint<F> attracting, repelling;
  double growth;  // spectral radius estimate, e^(length/2)
};

namespace detail {

// Power iteration by repeated squaring; returns the dominant row and the
// spectral radius estimate.
template <typename F>
std::pair<FRow<F>, double> dominant_row(const FMat<F>& M) {
  double m0 = max_abs(M);
  if (m0 == 0.0) throw std::domain_error("zero matrix");
  FMat<F> S = M * F(1.0 / m0);
  double acc = std::log(m0), w = 1.0;
  for (int k = 0; k < 40; ++k) {
    const FMat<F> P = S * S;
    const double m = max_abs(P);
    if (!(m > 0.0)) throw std::domain_error("power iteration collapsed");
    S = P * F(1.0 / m);
    w *= 0.5;
    acc += w * std::log(m);
  }
  Eigen::Index best = 0;
  double best_norm = -1.0;
  for (Eigen::Index i = 0; i < S.rows(); ++i) {
    const double r = max_abs(FRow<F>(S.row(i)));
    if (r > best_norm) {
      best_norm = r;
      best = i;
    }
  }
  return {FRow<F>(S.row(best)), std::exp(acc)};
}

}  // namespace detail

// Boundary fixed points of a loxodromic isometry.  Elliptic and parabolic
// inputs have no spectral growth and are rejected.
template <typename F>
FixedPoints<F> fixed_points(const FMat<F>& M) {
  const auto [arow, growth] = detail::dominant_row<F>(M);
  if (growth < 1.0 + tol::loxodromy_growth)
    throw std::domain_error("isometry is not loxodromic");
  const auto [rrow, rgrowth] = detail::dominant_row<F>(form_inverse<F>(M));
  (void)rgrowth;
  return {from_lift<F>(arow), from_lift<F>(rrow), growth};
}

struct TranslationLength {
  double spectral;     // 2 log growth
  double min_sampled;  // min d(x, g x) over sampled axis points
  double at_midpoint;  // d(x, g x) at the axis midpoint
};

// Screw motions translate every axis point the same distance; the sampled
// minimum and the midpoint value are reported separately as a check.
template <typename F>
TranslationLength translation_length(const FMat<F>& M) {
  const FixedPoints<F> fp = fixed_points<F>(M);
  const Geodesic<F> axis = Geodesic<F>::from_endpoints(fp.repelling, fp.attracting);
  double best = std::numeric_limits<double>::infinity(), mid = 0.0;
  for (int k = -4; k <= 4; ++k) {
    const BallPoint<F> x = geodesic_point<F>(axis, 0.5 * k);
    const double d = distance<F>(x, apply<F>(M, x));
    best = std::min(best, d);
    if (k == 0) mid = d;
  }
  return {2.0 * std::log(fp.growth), best, mid};
}

struct CollarBound {
  double product;  // sinh(ell / 4) sinh(delta / 2)
  bool ok;         // product <= 1/2
};

inline CollarBound collar_check(double ell, double delta) {
  if (!(ell > 0.0) || !(delta > 0.0))
    throw std::domain_error("collar_check needs positive length and distance");
  const double p = std::sinh(ell / 4.0) * std::sinh(delta / 2.0);
  return {p, p <= 0.5};
}

template <typename F>
struct LimitSample {
  std::vector<BallPoint<F>> points;
  int skipped = 0;  // sampled words without spectral growth
};

// Attracting fixed points of seeded random reduced words in the group's
// generators; count words are attempted, elliptic ones are skipped.
template <typename F>
LimitSample<F> limit_set_sample(const GroupData<F>& G, int word_length, int count,
                                std::uint64_t seed) {
  LimitSample<F> out;
  std::vector<FMat<F>> alphabet;
  for (const FMat<F>& g : G.gamma1) alphabet.push_back(g);
  for (const FMat<F>& g : G.gamma2) alphabet.push_back(g);
  const int a = static_cast<int>(alphabet.size());
  for (int i = 0; i < a; ++i) alphabet.push_back(form_inverse<F>(alphabet[i]));
  if (a == 0 || word_length <= 0 || count <= 0) return out;
  auto inverse_index = [a](int i) { return i < a ? i + a : i - a; };

  Rng rng(seed);
  std::uniform_int_distribution<int> pick_len(1, word_length);
  std::uniform_int_distribution<int> pick_letter(0, 2 * a - 1);
  for (int attempt = 0; attempt < count; ++attempt) {
    const int len = pick_len(rng);
    int last = -1;
    FMat<F> w;
    for (int j = 0; j < len; ++j) {
      int i = pick_letter(rng);
      while (last >= 0 && i == inverse_index(last)) i = pick_letter(rng);
      w = (j == 0) ? alphabet[i] : FMat<F>(w * alphabet[i]);
      last = i;
    }
    try {
      out.points.push_back(fixed_points<F>(w).attracting);
    } catch (const std::domain_error&) {
      ++out.skipped;
    }
  }
  return out;
}

// Angular invariant of the triple (x1, [0,0], attracting point of the
// identified gamma2 generator): zero for the unbent group, nonzero and
// injective in the bending parameter for small twists.
template <typename F>
double marker_invariant(const GroupData<F>& G, const BallPoint<F>& x1) {
  if (G.gamma2.empty()) throw std::invalid_argument("group has no bent generator");
  if (x1.kind() != PointKind::boundary)
    throw std::invalid_argument("marker point must be on the boundary");
  const int n = x1.n();
  FRow<F> o = FRow<F>::Zero(n);
  o(n - 1) = F(1);
  const BallPoint<F> att = fixed_points<F>(G.gamma2.front()).attracting;
  return cartan_angular<F>(x1, BallPoint<F>{o}, att);
}

template <typename F>
struct BendConfig {
  GroupData<F> group;
  BallPoint<F> marker_point;  // attractor of the mirror generator, on the negative ray
  double length;              // translation length of gamma_alpha
  double separation;          // distance from either flanking axis to the standard one
};

// Fuchsian bending seed: a standard axis generator of translation length
// 1/2 flanked by two real loxodromics whose axes lie at distance log 63,
// the mirror symmetry putting the marker invariant exactly at eta / 2.
template <typename F>
BendConfig<F> schottky_bend_config() {
  const double r0 = (32.0 + std::sqrt(63.0)) / (32.0 - std::sqrt(63.0));
  auto real_pt = [](double a) {
    FRow<F> xi(1);
    xi(0) = F(a);
    return boundary_to_ball<F>(NPoint<F>(std::move(xi), F(0)));
  };
  const FMat<F> ga = standard_loxodromic<F>(0.25, F(1), 2);
  const FMat<F> g1 = loxodromic_with_axis<F>(real_pt(-1.0), real_pt(-r0), 0.5);
  const FMat<F> g2 = loxodromic_with_axis<F>(real_pt(1.0), real_pt(r0), 0.5);
  return {GroupData<F>{GroupKind::amalgam, {ga, g1}, {g2}, ga}, real_pt(-r0), 0.5,
          std::log(63.0)};
}

// Real hyperbolic 4-space sits inside the octonionic-line model as the
// coordinate block (1..4, lift): embed O(4,1) into O(8,1) fixing the four
// extra coordinates.
inline FMat<double> embed_o41_in_o81(const FMat<double>& M5) {
  if (M5.rows() != 5 || M5.cols() != 5)
    throw std::invalid_argument("embed_o41_in_o81 expects a 5x5 matrix");
  if (form_residual<double>(M5) > tol::form_preservation)
    throw std::invalid_argument("matrix does not preserve the (4,1) form");
  FMat<double> M = FMat<double>::Identity(9, 9);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) M(i, j) = M5(i, j);
  for (int i = 0; i < 4; ++i) {
    M(i, 8) = M5(i, 4);
    M(8, i) = M5(4, i);
  }
  M(8, 8) = M5(4, 4);
  for (int i = 4; i < 8; ++i) M(i, 8) = M(8, i) = 0.0;
  return M;
}

// O(8,1) generators that restrict to O(4,1) on the embedded real
// hyperbolic 4-space, split for bending along the wall of coordinates 1..3.
struct RealBendData {
  std::vector<FMat<double>> gamma1;  // axis side, kept fixed
  std::vector<FMat<double>> gamma2;  // conjugated by the bending rotation
};

// Rotation by theta in the plane spanned by the fourth coordinate axis and
// a unit direction d among the four extra coordinates; fixes the wall
// spanned by coordinates 1..3 pointwise.
inline FMat<double> real_bend_rotation(double theta, const Eigen::Vector4d& d) {
  const double nd = d.norm();
  if (nd < 1e-12) throw std::invalid_argument("bend direction must be nonzero");
  Eigen::VectorXd e3 = Eigen::VectorXd::Zero(9), dd = Eigen::VectorXd::Zero(9);
  e3(3) = 1.0;
  for (int i = 0; i < 4; ++i) dd(4 + i) = d(i) / nd;
  FMat<double> R = FMat<double>::Identity(9, 9);
  const double c = std::cos(theta), s = std::sin(theta);
  R += (c - 1.0) * (e3 * e3.transpose() + dd * dd.transpose());
  R += s * (dd * e3.transpose() - e3 * dd.transpose());
  return R;
}

namespace detail {

// A 9x9 generator preserving the embedded real 4-space acts as the
// identity on the four extra coordinates.
inline double h4_preservation_residual(const FMat<double>& M) {
  if (M.rows() != 9 || M.cols() != 9) throw std::invalid_argument("expected a 9x9 matrix");
  double r = 0.0;
  for (int i = 4; i < 8; ++i)
    for (int j = 0; j < 9; ++j) {
      r = std::max(r, std::fabs(M(i, j) - (i == j ? 1.0 : 0.0)));
      r = std::max(r, std::fabs(M(j, i) - (i == j ? 1.0 : 0.0)));
    }
  return r;
}

}  // namespace detail

// Conjugate the second factor by the bending rotation; the wall side is
// returned untouched.
inline RealBendData real_bend_octonion_line(const RealBendData& D, double theta,
                                            const Eigen::Vector4d& dir) {
  for (const auto* side : {&D.gamma1, &D.gamma2})
    for (const FMat<double>& g : *side) {
      if (detail::h4_preservation_residual(g) > tol::form_preservation)
        throw std::invalid_argument("generator does not preserve the real 4-space");
      if (form_residual<double>(g) > tol::form_preservation)
        throw std::invalid_argument("generator does not preserve the (8,1) form");
    }
  const FMat<double> U = real_bend_rotation(theta, dir);
  RealBendData out{D.gamma1, {}};
  out.gamma2.reserve(D.gamma2.size());
  for (const FMat<double>& g : D.gamma2) out.gamma2.push_back(U * g * U.transpose());
  return out;
}

}  // namespace fhyp
