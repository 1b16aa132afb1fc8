#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace concordia {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// error taxonomy shared by the whole tool; the CLI maps these to exit codes
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int sign_of(const Int& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }
inline int sign_of(const Rat& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

inline Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// smallest integer k with k > q
inline Int strict_floor_plus_one(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int fl = n / d;
  if (n % d != 0 && n < 0) fl -= 1;
  return fl + 1;
}

// ceil(q) for rational q
inline Int rat_ceil(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int fl = n / d;
  if (n % d != 0 && n < 0) fl -= 1;
  return (n % d == 0) ? fl : fl + 1;
}

inline std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

inline Rat parse_rat(const std::string& s) {
  auto pos = s.find('/');
  try {
    if (pos == std::string::npos) {
      if (auto dot = s.find('.'); dot != std::string::npos) {
        // decimal literals are convenient on the command line
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        Int den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Int num = Int(ip) * den;
        Int frac = fp.empty() ? Int(0) : Int(fp);
        num += (s[0] == '-') ? -frac : frac;
        return Rat(num, den);
      }
      return Rat(Int(s));
    }
    Int n(s.substr(0, pos)), d(s.substr(pos + 1));
    if (d == 0) throw ParseError("zero denominator: " + s);
    return Rat(n, d);
  } catch (const std::exception&) {
    throw ParseError("bad rational literal: " + s);
  }
}

}  // namespace concordia
