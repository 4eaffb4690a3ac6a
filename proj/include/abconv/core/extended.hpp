#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>

#include "abconv/core/rational.hpp"

namespace abconv {

/// A scalar of the extended line: a finite value, TOP (+inf) or BOTTOM (-inf).
///
/// BOTTOM < every finite value < TOP. Sums are defined except TOP + BOTTOM,
/// which raises DomainError.
template <typename Scalar>
class Extended {
 public:
  enum class Kind : unsigned char { Bottom, Finite, Top };

  Extended() : kind_(Kind::Finite), value_(Scalar(0)) {}
  Extended(Scalar value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT(implicit)

  static Extended top() { return Extended(Kind::Top); }
  static Extended bottom() { return Extended(Kind::Bottom); }

  Kind kind() const { return kind_; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_finite() const { return kind_ == Kind::Finite; }

  /// The finite value; throws DomainError on TOP/BOTTOM.
  const Scalar& value() const {
    if (!is_finite()) throw DomainError("finite value requested from an infinite extended scalar");
    return value_;
  }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const Extended& a, const Extended& b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (!a.is_finite()) return std::strong_ordering::equal;
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if ((a.is_top() && b.is_bottom()) || (a.is_bottom() && b.is_top())) {
      throw DomainError("TOP + BOTTOM is undefined");
    }
    if (a.is_top() || b.is_top()) return top();
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return Extended(Scalar(a.value_ + b.value_));
  }

  friend Extended operator-(const Extended& a) {
    if (a.is_top()) return bottom();
    if (a.is_bottom()) return top();
    return Extended(Scalar(-a.value_));
  }

  friend Extended operator-(const Extended& a, const Extended& b) { return a + (-b); }

 private:
  explicit Extended(Kind kind) : kind_(kind), value_(Scalar(0)) {}

  Kind kind_;
  Scalar value_;
};

using ExtScalar = Extended<Rational>;

/// Supremum of a finite family; BOTTOM for the empty family.
template <typename Scalar>
Extended<Scalar> sup(std::span<const Extended<Scalar>> values) {
  Extended<Scalar> best = Extended<Scalar>::bottom();
  for (const auto& v : values) {
    if (best < v) best = v;
  }
  return best;
}

/// Infimum of a finite family; TOP for the empty family.
template <typename Scalar>
Extended<Scalar> inf(std::span<const Extended<Scalar>> values) {
  Extended<Scalar> best = Extended<Scalar>::top();
  for (const auto& v : values) {
    if (v < best) best = v;
  }
  return best;
}

std::string to_string(const ExtScalar& value);

/// Accepts a rational literal, "top"/"+inf" or "bottom"/"-inf".
ExtScalar parse_ext_scalar(std::string_view text);

}  // namespace abconv
