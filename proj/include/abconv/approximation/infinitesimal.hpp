#pragma once

#include <vector>

#include "abconv/core/lex_scalar.hpp"
#include "abconv/core/polytope.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

/// x -> <slope + d * slope_inf, x> + offset, with d the formal infinitesimal.
struct LexAffine {
  Vec slope;
  Vec slope_inf;
  LexScalar offset;

  Index dim() const { return slope.size(); }
  LexScalar operator()(const Vec& x) const;
};

/// Max of finitely many LexAffine pieces, evaluated at standard points.
class LexPolyFunc {
 public:
  LexPolyFunc(Index dim, std::vector<LexAffine> pieces);

  Index dim() const { return dim_; }
  const std::vector<LexAffine>& pieces() const { return pieces_; }

  LexScalar operator()(const Vec& x) const;

  /// The function of standard parts.
  PolyFunc standard_part() const;

  /// Pieces whose value at x is infinitely close to f(x).
  std::vector<std::size_t> near_active_pieces(const Vec& x) const;

 private:
  Index dim_;
  std::vector<LexAffine> pieces_;
};

/// Df(x̄): the union of ε-subdifferentials over infinitesimal ε, computed as
/// the hull of the standard slopes of the near-active pieces.
Polytope infinitesimal_subdifferential(const LexPolyFunc& f, const Vec& xbar);

/// y in Df(x̄) iff the standard part of sup_x (<y, x> - f(x)) - (<y, x̄> -
/// f(x̄)) is <= 0 (conjugate route).
bool in_infinitesimal_subdifferential(const LexPolyFunc& f, const Vec& xbar, const Vec& y);

/// 0 in Df(x̄).
bool is_infinitesimal_minimum(const LexPolyFunc& f, const Vec& xbar);

}  // namespace abconv
