#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace puv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// t^k for signed k; negative exponents invert (t must be nonzero).
inline Rational pow_rational(const Rational& t, long k) {
  if (k < 0) {
    if (t == 0) throw std::domain_error("pow_rational: 0 cannot be raised to a negative power");
    return Rational(1) / pow_rational(t, -k);
  }
  Rational acc(1);
  Rational base(t);
  auto e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline BigInt pow_bigint(const BigInt& b, unsigned long k) {
  BigInt acc(1);
  BigInt base(b);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt acc(1);
  for (int i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;  // exact: product of j consecutive integers is divisible by j!
  }
  return acc;
}

// Accepts "a/b", plain integers, and decimal strings ("2.5" -> 5/2).
inline Rational parse_rational(const std::string& s) {
  auto fail = [&] { throw std::invalid_argument("cannot parse \"" + s + "\" as a rational number"); };
  if (s.empty()) fail();
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty()) fail();
    try {
      BigInt d(den);
      if (d == 0) fail();
      return Rational(BigInt(num), d);
    } catch (const std::runtime_error&) {
      fail();
    }
  }
  std::string digits = s;
  bool neg = false;
  if (digits[0] == '+' || digits[0] == '-') {
    neg = digits[0] == '-';
    digits.erase(0, 1);
  }
  auto dot = digits.find('.');
  std::string whole = dot == std::string::npos ? digits : digits.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : digits.substr(dot + 1);
  if (whole.empty() && frac.empty()) fail();
  if (whole.find_first_not_of("0123456789") != std::string::npos) fail();
  if (frac.find_first_not_of("0123456789") != std::string::npos) fail();
  BigInt scale = pow_bigint(10, static_cast<unsigned long>(frac.size()));
  BigInt num = (whole.empty() ? BigInt(0) : BigInt(whole)) * scale +
               (frac.empty() ? BigInt(0) : BigInt(frac));
  if (neg) num = -num;
  return Rational(num, scale);
}

inline std::string format_rational(const Rational& r) { return r.str(); }

// 15 significant digits; used everywhere a double crosses the JSON boundary
// so that identical inputs give byte-identical output.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::string(buf);
}

}  // namespace puv
