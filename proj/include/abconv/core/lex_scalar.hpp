#pragma once

#include <compare>
#include <string>

#include "abconv/core/rational.hpp"

namespace abconv {

/// Two-level scalar std + inf * d, where d is one formal positive
/// infinitesimal. Ordered lexicographically; arithmetic is componentwise.
///
/// The monad of the positive standard rationals is {(0, b) : b >= 0}; two
/// values are infinitely close iff their standard parts agree.
class LexScalar {
 public:
  LexScalar() = default;
  LexScalar(Rational standard, Rational infinitesimal = Rational(0))  // NOLINT(implicit)
      : std_(std::move(standard)), inf_(std::move(infinitesimal)) {}

  const Rational& standard() const { return std_; }
  const Rational& infinitesimal() const { return inf_; }

  friend bool operator==(const LexScalar& a, const LexScalar& b) = default;
  friend std::strong_ordering operator<=>(const LexScalar& a, const LexScalar& b) {
    if (a.std_ != b.std_) return a.std_ < b.std_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.inf_ != b.inf_) return a.inf_ < b.inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend LexScalar operator+(const LexScalar& a, const LexScalar& b) {
    return {Rational(a.std_ + b.std_), Rational(a.inf_ + b.inf_)};
  }
  friend LexScalar operator-(const LexScalar& a, const LexScalar& b) {
    return {Rational(a.std_ - b.std_), Rational(a.inf_ - b.inf_)};
  }
  friend LexScalar operator-(const LexScalar& a) { return {Rational(-a.std_), Rational(-a.inf_)}; }
  friend LexScalar operator*(const Rational& k, const LexScalar& a) {
    return {Rational(k * a.std_), Rational(k * a.inf_)};
  }
  LexScalar& operator+=(const LexScalar& other) { return *this = *this + other; }

 private:
  Rational std_{0};
  Rational inf_{0};
};

/// Membership in the monad: a positive infinitesimal or zero.
inline bool in_monad(const LexScalar& e) { return e.standard() == 0 && e.infinitesimal() >= 0; }

/// Infinite proximity: e1 - e2 and e2 - e1 both lie in the monad, up to sign,
/// which collapses to equality of standard parts.
inline bool infinitely_close(const LexScalar& a, const LexScalar& b) {
  const LexScalar d = a - b;
  return in_monad(d) || in_monad(-d);
}

std::string to_string(const LexScalar& value);

}  // namespace abconv
