#include "theta/scalar.hpp"

#include <cctype>
#include <limits>

#include "theta/error.hpp"

namespace theta {

namespace mp = boost::multiprecision;

bool Scalar::is_integer() const { return is_real() && mp::denominator(re) == 1; }

bool Scalar::is_half_integer() const { return is_real() && mp::denominator(re) == 2; }

long Scalar::to_long() const {
  require(is_integer(), "ShapeError", "expected an integer scalar, got " + str());
  Integer n = mp::numerator(re);
  require(n >= std::numeric_limits<long>::min() && n <= std::numeric_limits<long>::max(),
          "ShapeError", "integer out of range: " + str());
  return static_cast<long>(n);
}

Scalar Scalar::sign_normalized() const { return flips_under_normalization() ? -*this : *this; }

bool Scalar::flips_under_normalization() const {
  if (re != 0) return re < 0;
  return im < 0;
}

std::string rational_str(const Rational& r) {
  std::string s = mp::numerator(r).str();
  if (mp::denominator(r) != 1) s += "/" + mp::denominator(r).str();
  return s;
}

std::string Scalar::str() const {
  if (im == 0) return rational_str(re);
  std::string imag = rational_str(im) + "i";
  if (re == 0) return imag;
  if (im > 0) return rational_str(re) + "+" + imag;
  return rational_str(re) + imag;  // sign carried by the numerator
}

namespace {

// -?digits(/digits)? starting at pos; advances pos past the match
Rational parse_rational_at(std::string_view s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  require(pos > digits_begin, "ShapeError", "bad rational: '" + std::string(s) + "'");
  Integer num(std::string(s.substr(start, pos - start)));
  Integer den = 1;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t den_begin = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    require(pos > den_begin, "ShapeError", "bad rational: '" + std::string(s) + "'");
    den = Integer(std::string(s.substr(den_begin, pos - den_begin)));
    require(den != 0, "ShapeError", "zero denominator in '" + std::string(s) + "'");
  }
  return Rational(num, den);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  size_t pos = 0;
  Rational r = parse_rational_at(text, pos);
  require(pos == text.size(), "ShapeError", "trailing input in rational '" + std::string(text) + "'");
  return r;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "ShapeError", "empty scalar");

  size_t pos = 0;
  Rational first = parse_rational_at(s, pos);
  if (pos == s.size()) return Scalar(first);
  if (s[pos] == 'i') {
    require(pos + 1 == s.size(), "ShapeError", "trailing input in scalar '" + s + "'");
    return Scalar(Rational(0), first);
  }
  require(s[pos] == '+' || s[pos] == '-', "ShapeError", "bad scalar '" + s + "'");
  Rational second = parse_rational_at(s, pos);
  require(pos < s.size() && s[pos] == 'i' && pos + 1 == s.size(), "ShapeError",
          "bad scalar '" + s + "'");
  return Scalar(first, second);
}

Scalar half_scalar(long numerator) { return Scalar::half(numerator); }

}  // namespace theta
