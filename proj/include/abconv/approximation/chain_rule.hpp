#pragma once

#include "abconv/approximation/convolution.hpp"
#include "abconv/core/polytope.hpp"
#include "abconv/separation/cones.hpp"

namespace abconv {

/// The relation Df(u, v) of a polyhedral f of two real variables:
/// (t, s) belongs iff (t, -s) is a subgradient of f at (u, v).
Polytope subdiff_relation(const PolyFunc& f, const Rational& u, const Rational& v);

/// {(t, r) : (t, s) in first and (s, r) in second for some s}.
Polytope compose_relations(const Polytope& first, const Polytope& second);

struct ChainRuleReport {
  Rational value;
  Polytope lhs;
  Polytope rhs;
  bool equal = false;
  /// General position of the tangent cones of epi(f1, Z) and epi(X, f2)
  /// at the point, in (dx, dy, dz, dt).
  GeneralPositionReport general_position;
};

/// D(f2 △ f1)(x, z) versus Df2(y, z) ∘ Df1(x, y) for f1, f2 on R x R.
/// Throws HypothesisViolation when the convolution is not exact at
/// (x, y, z) and DimensionError unless both functions have two variables.
ChainRuleReport chain_rule_check(const PolyFunc& f1, const PolyFunc& f2, const Rational& x, const Rational& y,
                                 const Rational& z);

}  // namespace abconv
