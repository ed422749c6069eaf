// rational.hpp -- exact rational scalar type and small helpers.
//
// All exact linear algebra in the library runs over Rat. cpp_rational keeps
// values canonical (coprime numerator/denominator) after every operation, so
// equality tests are exact and no tolerance is ever involved on this path.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "galedesign/errors.hpp"

namespace gd {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

// "p" for integers, "p/q" otherwise.
inline std::string rat_to_string(const Rat& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Accepts "p", "p/q", or a plain decimal such as "-0.25".
Rat parse_rational(const std::string& s);

// Scales a rational vector by a positive constant so that entries become
// coprime integers. The zero vector is returned unchanged.
inline void make_primitive(std::vector<Rat>& v) {
  BigInt den_lcm = 1;
  for (const Rat& x : v) den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(x));
  BigInt num_gcd = 0;
  for (Rat& x : v) {
    x *= den_lcm;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(x));
  }
  if (num_gcd > 1) {
    for (Rat& x : v) x /= num_gcd;
  }
}

// Numeric trait bundle: lets matrix/LP templates run identically over exact
// rationals (eps ignored) and doubles (|x| <= eps treated as zero).
template <class T>
struct NumTraits;

template <>
struct NumTraits<Rat> {
  static constexpr bool exact = true;
  static bool is_zero(const Rat& x, double) { return x == 0; }
  static double abs_estimate(const Rat& x) {
    double d = to_double(x);
    return d < 0 ? -d : d;
  }
};

template <>
struct NumTraits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x, double eps) { return (x < 0 ? -x : x) <= eps; }
  static double abs_estimate(double x) { return x < 0 ? -x : x; }
};

}  // namespace gd
