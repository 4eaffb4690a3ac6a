#pragma once

#include <vector>

#include "abconv/core/cone.hpp"
#include "abconv/core/polytope.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

/// A sublinear operator R^n -> R^m given coordinatewise.
using VectorSublinear = std::vector<PolyFunc>;

/// Both computations of the support set of p2 ∘ p1.
struct CompositionReport {
  /// Support set of the expanded composition x -> p2(p1(x)).
  Polytope direct;
  /// {sum_j mu_j s_j : mu in dp2, s_j in d(p1)_j}, from the vertices of the
  /// component support sets.
  Polytope formula;
  bool agree = false;
};

/// Throws HypothesisViolation when p2 has a piece with a negative slope
/// entry, DomainError for non-sublinear input, DimensionError for shape
/// mismatches and CapExceeded when n exceeds limits.max_dim (n <= 3 by
/// default).
CompositionReport composition_subdifferential(const VectorSublinear& p1, const PolyFunc& p2,
                                              EnumerationLimits limits = {3});

/// t in d(p2 ∘ p1) through the operator form: nonnegative weights nu over
/// (piece of (p1)_j, j) and convex weights omega over the pieces of p2 with
/// sum_a nu_{a,j} = (omega mu)_j and t = sum nu_{a,j} s_{a,j}. Any n.
bool in_composition_formula(const Vec& t, const VectorSublinear& p1, const PolyFunc& p2);

/// t <= p2 ∘ p1 pointwise, through the expanded pieces and min_gap.
bool in_composition_direct(const Vec& t, const VectorSublinear& p1, const PolyFunc& p2);

/// The expanded composition as a polyhedral function.
PolyFunc compose(const VectorSublinear& p1, const PolyFunc& p2);

}  // namespace abconv
