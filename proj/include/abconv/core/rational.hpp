#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace abconv {

/// Exact rational scalar. Expression templates are disabled so the type
/// behaves as a plain value inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Thrown for malformed numeric literals and other input defects.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation is applied outside its mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A theorem hypothesis fails on the given input; `certificate` names the
/// offending data.
class HypothesisViolation : public DomainError {
 public:
  HypothesisViolation(const std::string& what, std::string certificate)
      : DomainError(what), certificate_(std::move(certificate)) {}

  const std::string& certificate() const { return certificate_; }

 private:
  std::string certificate_;
};

/// Thrown when operand shapes disagree.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a generator-enumeration cap is exceeded.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// n/d with sign normalization; d must be nonzero.
Rational make_rational(std::int64_t num, std::int64_t den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" (integers of any length). Floating literals are
/// rejected.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string to_string(const Rational& value);

/// Decimal rendering with `digits` places after the point (rounded half away
/// from zero).
std::string to_decimal(const Rational& value, int digits = 12);

inline int sign(const Rational& value) { return value.sign(); }

inline Rational abs_value(const Rational& value) { return value.sign() < 0 ? Rational(-value) : value; }

}  // namespace abconv
