#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>

#include "fhyp/quaternion.hpp"

namespace fhyp {

// Uniform free functions over the coefficient fields F = double (R),
// std::complex<double> (C) and Quaternion<double> (H), so the Hermitian,
// model and geometry layers can be written once, templated on F.

inline double conj(double x) { return x; }
inline double re(double x) { return x; }
inline double im(double) { return 0.0; }
inline double abs2(double x) { return x * x; }
inline double abs(double x) { return std::fabs(x); }
inline double im_abs(double) { return 0.0; }
inline double inv(double x) {
  if (x == 0.0) throw std::domain_error("division by zero");
  return 1.0 / x;
}
inline double line_angle(double x) {
  if (x == 0.0) throw std::domain_error("line_angle of zero");
  return 0.0;
}
inline double normalized(double x) {
  if (x == 0.0) throw std::domain_error("normalized zero");
  return x > 0.0 ? 1.0 : -1.0;
}

// Non-template overloads beat the std:: templates found through ADL, so
// unqualified calls inside the library resolve without ambiguity.
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
inline double re(const std::complex<double>& z) { return z.real(); }
inline std::complex<double> im(const std::complex<double>& z) { return {0.0, z.imag()}; }
inline double abs2(const std::complex<double>& z) { return std::norm(z); }
inline double abs(const std::complex<double>& z) { return std::abs(z); }
inline double im_abs(const std::complex<double>& z) { return std::fabs(z.imag()); }
inline std::complex<double> inv(const std::complex<double>& z) {
  const double n = std::norm(z);
  if (n == 0.0) throw std::domain_error("division by zero");
  return std::conj(z) / n;
}
inline double line_angle(const std::complex<double>& z) {
  if (z == std::complex<double>()) throw std::domain_error("line_angle of zero");
  return std::atan2(std::fabs(z.imag()), std::fabs(z.real()));
}
inline std::complex<double> normalized(const std::complex<double>& z) {
  const double n = std::abs(z);
  if (n == 0.0) throw std::domain_error("normalized zero");
  return z / n;
}

template <typename F>
struct field_traits;

template <>
struct field_traits<double> {
  static constexpr std::size_t components = 1;
  static constexpr std::string_view name = "R";
  static constexpr std::size_t im_components = 0;
  static void pack(double x, std::span<double> out) { out[0] = x; }
  static double unpack(std::span<const double> in) { return in[0]; }
};

template <>
struct field_traits<std::complex<double>> {
  static constexpr std::size_t components = 2;
  static constexpr std::string_view name = "C";
  static constexpr std::size_t im_components = 1;
  static void pack(const std::complex<double>& z, std::span<double> out) {
    out[0] = z.real();
    out[1] = z.imag();
  }
  static std::complex<double> unpack(std::span<const double> in) {
    return {in[0], in[1]};
  }
};

template <>
struct field_traits<Quaternion<double>> {
  static constexpr std::size_t components = 4;
  static constexpr std::string_view name = "H";
  static constexpr std::size_t im_components = 3;
  static void pack(const Quaternion<double>& q, std::span<double> out) {
    out[0] = q.w;
    out[1] = q.x;
    out[2] = q.y;
    out[3] = q.z;
  }
  static Quaternion<double> unpack(std::span<const double> in) {
    return {in[0], in[1], in[2], in[3]};
  }
};

}  // namespace fhyp
