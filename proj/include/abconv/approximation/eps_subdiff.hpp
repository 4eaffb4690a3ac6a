#pragma once

#include <optional>
#include <vector>

#include "abconv/core/polytope.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

/// The ε-subdifferential {y : f(x̄) + f*(y) <= <y, x̄> + ε} of a polyhedral
/// f, with its vertex description.
struct EpsSubdiff {
  Vec point;
  Rational eps;
  Polytope description;

  bool contains(const Vec& y) const { return in_hull(y, description); }
};

/// With gaps g_i = f(x̄) - h_i(x̄) the set is {sum l_i a_i : l in the simplex,
/// sum l_i g_i <= ε}; its vertices are among the slopes with g_i <= ε and
/// the points where an edge (a_i, a_k), g_i < ε < g_k, meets the level ε.
/// Throws DomainError for negative ε.
EpsSubdiff eps_subdifferential(const PolyFunc& f, const Vec& xbar, const Rational& eps);

/// Membership through the conjugate: f*(y) <= <y, x̄> - f(x̄) + ε.
bool in_eps_subdifferential_conjugate(const PolyFunc& f, const Vec& xbar, const Rational& eps, const Vec& y);

/// Membership through the defining inequality: for all x,
/// <y, x> - f(x) <= <y, x̄> - f(x̄) + ε, decided by an LP.
bool in_eps_subdifferential_primal(const PolyFunc& f, const Vec& xbar, const Rational& eps, const Vec& y);

/// The exact subdifferential: hull of the slopes of the active pieces.
Polytope subdifferential(const PolyFunc& f, const Vec& xbar);

/// ε-subdifferentials along ε = 1, 1/2, ..., 2^-steps. The vertex structure
/// (which slopes and which edges produce vertices) is recorded per step;
/// once it stops changing the vertices are affine in ε, and `limit` is their
/// value at ε = 0, i.e. the intersection over all ε > 0.
struct EpsLimit {
  std::vector<Rational> schedule;
  std::vector<Polytope> chain;
  /// First step from which the vertex structure no longer changes.
  std::optional<std::size_t> stable_from;
  Polytope limit;
};

EpsLimit eps_limit(const PolyFunc& f, const Vec& xbar, int steps = 10);

}  // namespace abconv
