#pragma once

#include <optional>
#include <vector>

#include "abconv/core/cone.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

/// A pair of cones in the same space.
class ConePair {
 public:
  ConePair(PolyCone k1, PolyCone k2);

  Index dim() const { return k1_.dim(); }
  const PolyCone& first() const { return k1_; }
  const PolyCone& second() const { return k2_; }

 private:
  PolyCone k1_;
  PolyCone k2_;
};

/// A representation x = k1 - k2 with k1 in K1 and k2 in K2.
struct Decomposition {
  Vec k1;
  Vec k2;
};

/// The conic correspondence x -> {(k1, k2) : x = k1 - k2}. Returns the
/// lexicographically smallest (k1, k2) (coordinates of k1 first), or nothing
/// when x is not in K1 - K2.
std::optional<Decomposition> conic_correspondence(const ConePair& pair, const Vec& x);

/// Finite-dimensional nonoblateness: K1 - K2 = K2 - K1 = span(K1 ∪ K2).
///
/// When it holds, `radius` is a rational r > 0 such that every x in the span
/// with max-norm <= r lies in (V∩K1 - V∩K2) ∩ (V∩K2 - V∩K1) for the unit box
/// V. The span basis is in reduced row echelon form, so the coordinates of x
/// in it are its pivot entries.
struct NonoblateReport {
  bool nonoblate = false;
  bool first_minus_second_is_span = false;
  bool second_minus_first_is_span = false;
  std::vector<Vec> span_basis;
  std::optional<Rational> radius;
};

NonoblateReport nonoblate_check(const ConePair& pair);

/// Least max-norm representation cost: min over x = k1 - k2 (k_i in K_i) of
/// max(|k1|_inf, |k2|_inf); nothing when x is not in K1 - K2.
std::optional<Rational> representation_norm(const ConePair& pair, const Vec& x);

/// Both sides of the equivalence between nonoblateness of (K1, K2) in X and
/// of (K1 x K2, diagonal of X^2) in X^2, computed independently.
struct DiagonalEquivalence {
  bool direct = false;
  bool diagonal = false;

  bool agree() const { return direct == diagonal; }
};

/// Throws CapExceeded when dim > limits.max_dim.
DiagonalEquivalence nonoblate_diagonal_equivalence(const ConePair& pair, EnumerationLimits limits = {});

/// Conditions of general position. In finite dimensions every subspace is
/// complemented, so condition (2) is recorded as automatic.
struct GeneralPositionReport {
  std::size_t count = 0;
  /// Dimension of the space where the check ran (n * dim when n > 2).
  Index working_dim = 0;
  bool span_condition = false;
  bool complemented = true;
  bool complemented_automatic = true;
  bool nonoblate = false;
  std::optional<Rational> radius;

  bool holds() const { return span_condition && complemented && nonoblate; }
};

/// Cap on the working dimension of general-position checks.
struct GeneralPositionLimits {
  Index max_working_dim = 8;
};

/// Two cones are checked directly; n > 2 cones through the pair
/// (K1 x ... x Kn, diagonal of X^n) in X^n.
GeneralPositionReport general_position_check(const std::vector<PolyCone>& cones, GeneralPositionLimits limits = {});

/// A sublinear operator into R that may take the value TOP: p(x) for x in
/// the domain cone {x : <d, x> <= 0 for every row d}, TOP outside.
struct SublinearOperator {
  PolyFunc p;
  std::vector<Vec> domain_rows;
};

/// The cone epi(P) = {(x, t) : P(x) <= t} in X x R.
PolyCone epigraph_cone(const SublinearOperator& op, EnumerationLimits limits = {});

/// The coordinate rearrangement ((x1,t1),...,(xn,tn)) -> ((x1..xn),(t1..tn)).
Vec rearrange_coordinates(const Vec& stacked, Index dim, Index copies);

/// General position of P1..Pn: the cones diagonal(X^n) x R^n and
/// rearranged epi(P1) x ... x epi(Pn). Throws DomainError for non-sublinear
/// input and CapExceeded when n * (dim + 1) exceeds the working cap.
GeneralPositionReport sublinear_general_position(const std::vector<SublinearOperator>& ops,
                                                 GeneralPositionLimits limits = {});

/// {t : <t, k> <= 0 for every k in K}. Enumerates generators (dim cap).
PolyCone polar(const PolyCone& k, EnumerationLimits limits = {});

/// Membership in the polar cone; no dimension cap.
bool in_polar(const Vec& t, const PolyCone& k);

/// Intersection of cones through their inequality descriptions.
PolyCone intersect_cones(const std::vector<PolyCone>& cones, EnumerationLimits limits = {});

/// Polar of the intersection versus the sum of the polars.
struct PolarDecompositionReport {
  PolyCone lhs;
  PolyCone rhs;
  bool equal = false;
  bool hypothesis_holds = false;
};

PolarDecompositionReport polar_decomposition_check(const std::vector<PolyCone>& cones, EnumerationLimits limits = {});

}  // namespace abconv
