#pragma once

#include <optional>

#include "abconv/generation/functions.hpp"

namespace abconv {

/// Exactly one of `functional` (a linear t with -Q <= t <= P) and `violation`
/// (a point x with P(x) + Q(x) < 0) is present.
struct SandwichWitness {
  std::optional<Vec> functional;
  std::optional<Vec> violation;
  /// P(x) + Q(x) at the violation point.
  std::optional<Rational> violation_value;

  bool separated() const { return functional.has_value(); }
};

/// Looks for t in dP ∩ (-dQ), lexicographically smallest. When none exists
/// the Farkas certificate of the weight LP yields x with P(x) + Q(x) < 0,
/// rescaled to max-norm 1. Throws DomainError for non-sublinear input.
SandwichWitness sandwich(const PolyFunc& p, const PolyFunc& q);

}  // namespace abconv
