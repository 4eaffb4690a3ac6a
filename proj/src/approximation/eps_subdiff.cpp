#include "abconv/approximation/eps_subdiff.hpp"

#include <limits>
#include <utility>

#include "abconv/generation/conjugate.hpp"

namespace abconv {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<Rational> gaps(const PolyFunc& f, const Vec& xbar) {
  if (xbar.size() != f.dim()) throw DimensionError("eps_subdifferential: dimension mismatch");
  const Rational top = f(xbar);
  std::vector<Rational> out;
  for (const auto& piece : f.pieces()) out.push_back(top - piece(xbar));
  return out;
}

/// (i, kNone) for a slope kept whole, (i, k) for an edge cut at level ε.
std::vector<std::pair<std::size_t, std::size_t>> structure(const std::vector<Rational>& g, const Rational& eps) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] <= eps) out.emplace_back(i, kNone);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[i] < eps && eps < g[k]) out.emplace_back(i, k);
    }
  }
  return out;
}

Polytope realize(const PolyFunc& f, const std::vector<Rational>& g,
                 const std::vector<std::pair<std::size_t, std::size_t>>& parts, const Rational& eps) {
  std::vector<Vec> points;
  for (const auto& [i, k] : parts) {
    const Vec& a = f.pieces()[i].slope;
    if (k == kNone) {
      points.push_back(a);
      continue;
    }
    const Rational theta = (g[k] - eps) / (g[k] - g[i]);
    points.push_back(Vec(theta * a + Rational(1 - theta) * f.pieces()[k].slope));
  }
  return Polytope(f.dim(), points).reduced();
}

}  // namespace

EpsSubdiff eps_subdifferential(const PolyFunc& f, const Vec& xbar, const Rational& eps) {
  if (eps < 0) throw DomainError("eps_subdifferential: negative epsilon");
  const std::vector<Rational> g = gaps(f, xbar);
  return {xbar, eps, realize(f, g, structure(g, eps), eps)};
}

bool in_eps_subdifferential_conjugate(const PolyFunc& f, const Vec& xbar, const Rational& eps, const Vec& y) {
  if (eps < 0) throw DomainError("eps_subdifferential: negative epsilon");
  if (xbar.size() != f.dim() || y.size() != f.dim()) throw DimensionError("eps_subdifferential: dimension mismatch");
  const ExtScalar conj = PolyConjugate(f)(y);
  return conj <= ExtScalar(Rational(pairing(y, xbar) - f(xbar) + eps));
}

bool in_eps_subdifferential_primal(const PolyFunc& f, const Vec& xbar, const Rational& eps, const Vec& y) {
  if (eps < 0) throw DomainError("eps_subdifferential: negative epsilon");
  if (xbar.size() != f.dim() || y.size() != f.dim()) throw DimensionError("eps_subdifferential: dimension mismatch");
  const AffineFunctional h{y, Rational(f(xbar) - pairing(y, xbar) - eps)};
  return min_gap(f, h) >= ExtScalar(Rational(0));
}

Polytope subdifferential(const PolyFunc& f, const Vec& xbar) {
  if (xbar.size() != f.dim()) throw DimensionError("subdifferential: dimension mismatch");
  std::vector<Vec> slopes;
  for (std::size_t i : f.active_pieces(xbar)) slopes.push_back(f.pieces()[i].slope);
  return Polytope(f.dim(), slopes).reduced();
}

EpsLimit eps_limit(const PolyFunc& f, const Vec& xbar, int steps) {
  if (steps < 0) throw DomainError("eps_limit: negative step count");
  const std::vector<Rational> g = gaps(f, xbar);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> shapes;
  EpsLimit out{{}, {}, std::nullopt, Polytope::empty(f.dim())};
  Rational eps = 1;
  for (int j = 0; j <= steps; ++j) {
    out.schedule.push_back(eps);
    shapes.push_back(structure(g, eps));
    out.chain.push_back(realize(f, g, shapes.back(), eps));
    eps /= 2;
  }
  std::size_t first = shapes.size() - 1;
  while (first > 0 && shapes[first - 1] == shapes.back()) --first;
  if (first + 1 < shapes.size()) out.stable_from = first;
  out.limit = realize(f, g, shapes.back(), Rational(0));
  return out;
}

}  // namespace abconv
