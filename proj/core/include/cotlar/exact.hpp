#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cotlar {

using Rational = boost::multiprecision::cpp_rational;

/// Complex number with rational real and imaginary parts.
struct ExactComplex {
  Rational re;
  Rational im;

  ExactComplex() = default;
  ExactComplex(Rational real, Rational imag = 0) : re(std::move(real)), im(std::move(imag)) {}
  ExactComplex(long long real) : re(real), im(0) {}

  bool is_zero() const { return re == 0 && im == 0; }
  ExactComplex conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm() const { return re * re + im * im; }
  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ExactComplex& operator*=(const ExactComplex& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// "3", "-1/2", "1+2i", "-i", "1/3-2/5i".
std::string to_string(const Rational& q);
std::string to_string(const ExactComplex& z);

/// Parses the format produced by to_string. Throws Error(InvalidDescriptor).
ExactComplex parse_exact_complex(std::string_view text);

/// Arithmetic hooks used by the group-algebra templates.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactComplex> {
  static constexpr bool exact = true;
  static ExactComplex from_exact(const ExactComplex& z) { return z; }
  static bool is_zero(const ExactComplex& z) { return z.is_zero(); }
  static ExactComplex conj(const ExactComplex& z) { return z.conj(); }
  static double magnitude(const ExactComplex& z) { return std::abs(z.to_complex()); }
  static std::complex<double> to_complex(const ExactComplex& z) { return z.to_complex(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  static constexpr bool exact = false;
  static std::complex<double> from_exact(const ExactComplex& z) { return z.to_complex(); }
  static bool is_zero(const std::complex<double>& z) { return z == std::complex<double>{}; }
  static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
  static double magnitude(const std::complex<double>& z) { return std::abs(z); }
  static std::complex<double> to_complex(const std::complex<double>& z) { return z; }
};

}  // namespace cotlar
