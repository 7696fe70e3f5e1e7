#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gkit {

// Exact rational scalars over arbitrary-precision integers. cpp_rational keeps
// values canonical: lowest terms, denominator > 0, equality exact.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Signals that a law the construction itself is supposed to guarantee failed:
// an implementation bug, never expected on valid inputs.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Integer rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// Exact n/d with sign normalization (cpp_rational's two-argument constructor
// rejects negative denominators).
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw argument_error("rational with zero denominator");
  Rational q(num);
  q /= Rational(den);
  return q;
}

// Parses "n", "-n" or "n/d". Used by the JSON loaders.
inline Rational rational_from_string(const std::string& s) {
  try {
    Rational q(s);
    return q;
  } catch (const std::exception&) {
    throw structural_error("not a rational literal: '" + s + "'");
  }
}

inline std::string rational_to_string(const Rational& q) {
  if (rat_den(q) == 1) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

}  // namespace gkit
