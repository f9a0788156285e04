#pragma once

// Scalar types for the two arithmetic modes: exact arbitrary-precision
// rationals (GMP-backed) and IEEE doubles.  Expression templates are turned
// off so the numbers behave as plain value types inside Eigen expressions.

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cmath>
#include <stdexcept>
#include <string>

namespace scgd {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline BigInt numerator(const Rational& q) {
  return BigInt(boost::multiprecision::numerator(q));
}

inline BigInt denominator(const Rational& q) {
  return BigInt(boost::multiprecision::denominator(q));
}

// "num/den" with "/den" omitted when the denominator is 1.
inline std::string format_rational(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

// Exact value of the double (every finite double is a dyadic rational).
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  return Rational(x);
}

inline BigInt pow_bigint(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.backend().data(), base.backend().data(), exp);
  return r;
}

}  // namespace scgd

namespace Eigen {

template <>
struct NumTraits<scgd::Rational> : GenericNumTraits<scgd::Rational> {
  using Real = scgd::Rational;
  using NonInteger = scgd::Rational;
  using Nested = scgd::Rational;
  using Literal = scgd::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<scgd::BigInt> : GenericNumTraits<scgd::BigInt> {
  using Real = scgd::BigInt;
  using NonInteger = scgd::Rational;
  using Nested = scgd::BigInt;
  using Literal = scgd::BigInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 20,
    MulCost = 30
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
