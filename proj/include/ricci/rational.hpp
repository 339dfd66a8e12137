#ifndef RICCI_RATIONAL_HPP
#define RICCI_RATIONAL_HPP

#include <charconv>
#include <cstdint>
#include <ostream>
#include <string>

#include "ricci/error.hpp"

namespace ricci {

// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
// Denominators stay tiny here (products of small degrees and idleness
// denominators), but nothing may wrap: intermediates run in 128 bits and
// a result that does not normalize back into 64 bits raises Errc::overflow.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // value/1
  Rational(long long num, long long den) { *this = make(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(Errc::bad_parameter, "division by zero rational");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  // Normalized representation makes field-wise equality exact equality.
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Always "num/den", including "0/1"; no float formatting anywhere.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "a/b" or a bare integer "a".
  static Rational parse(const std::string& text) {
    auto parse_ll = [&](const char* first, const char* last) -> long long {
      long long value = 0;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last)
        fail(Errc::bad_parameter, "cannot parse rational '" + text + "'");
      return value;
    };
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (begin == end) fail(Errc::bad_parameter, "empty rational");
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_ll(begin, end));
    return Rational(parse_ll(begin, begin + slash), parse_ll(begin + slash + 1, end));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  using i128 = __int128;

  static Rational make(i128 num, i128 den) {
    if (den == 0) fail(Errc::bad_parameter, "zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    i128 g = gcd128(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
    if (num < lo || num > hi || den > hi)
      fail(Errc::overflow, "rational does not fit in 64 bits");
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace ricci

#endif
