#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace theta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact number with rational real and imaginary parts. Everything in the
// library is computed with these; no floating point anywhere.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(int v) : re(v) {}
  Scalar(long v) : re(v) {}
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar half(long numerator) { return Scalar(Rational(numerator, 2)); }
  static Scalar imaginary(long numerator) { return Scalar(Rational(0), Rational(numerator)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_integer() const;
  bool is_half_integer() const;  // lies in Z + 1/2 (real)
  long to_long() const;          // requires a real integer in range

  Scalar operator-() const { return {-re, -im}; }
  Scalar operator+(const Scalar& o) const { return {re + o.re, im + o.im}; }
  Scalar operator-(const Scalar& o) const { return {re - o.re, im - o.im}; }
  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // lexicographic on (re, im); used for canonical sorting, not for math
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  // canonical representative of {z, -z}: Re > 0, or Re = 0 and Im >= 0
  Scalar sign_normalized() const;
  bool flips_under_normalization() const;

  std::string str() const;                      // "3", "-3/2", "1+1/2i", "2i"
  static Scalar parse(std::string_view text);   // inverse of str(); throws ShapeError
};

Scalar half_scalar(long numerator);

std::string rational_str(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace theta
