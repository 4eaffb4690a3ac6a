#pragma once

#include <algorithm>
#include <type_traits>
#include <vector>

#include "abconv/core/polytope.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

/// Young-Fenchel transform of a sampled function on `dual_grid`:
/// f*(y) = max over finite grid points x of <y, x> - f(x). Points where f is
/// TOP do not contribute. Throws DomainError when f has empty domain.
template <typename Scalar>
BasicSampledFunc<Scalar> fenchel_conjugate(const BasicSampledFunc<Scalar>& f,
                                           const std::vector<Vector<Scalar>>& dual_grid) {
  const std::vector<std::size_t> dom = f.domain();
  if (dom.empty()) throw DomainError("fenchel_conjugate: empty effective domain");
  std::vector<Extended<Scalar>> values;
  values.reserve(dual_grid.size());
  for (const auto& y : dual_grid) {
    if (y.size() != f.dim()) throw DimensionError("fenchel_conjugate: dual point of the wrong dimension");
    Scalar best = y.dot(f.grid()[dom.front()]) - f.values()[dom.front()].value();
    for (std::size_t i : dom) {
      const Scalar v = y.dot(f.grid()[i]) - f.values()[i].value();
      if (best < v) best = v;
    }
    values.emplace_back(best);
  }
  return BasicSampledFunc<Scalar>(dual_grid, std::move(values));
}

namespace detail {

/// Lower convex hull of finite 1-D samples, left to right (monotone chain).
/// Returns indices into f.grid().
template <typename Scalar>
std::vector<std::size_t> lower_hull_1d(const BasicSampledFunc<Scalar>& f, const Scalar& tol) {
  std::vector<std::size_t> order = f.domain();
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return f.grid()[a](0) < f.grid()[b](0); });
  std::vector<std::size_t> hull;
  const auto x = [&](std::size_t i) -> const Scalar& { return f.grid()[i](0); };
  const auto v = [&](std::size_t i) -> const Scalar& { return f.values()[i].value(); };
  for (std::size_t p : order) {
    while (hull.size() >= 2) {
      const std::size_t o = hull[hull.size() - 2];
      const std::size_t a = hull.back();
      const Scalar cross = (x(a) - x(o)) * (v(p) - v(o)) - (v(a) - v(o)) * (x(p) - x(o));
      if (cross > tol) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  return hull;
}

struct HullSlopes {
  std::vector<Vec> slopes;
  /// Per grid point: inside the convex hull of the effective domain.
  std::vector<bool> inside;
};

/// Supporting slopes of the convex envelope at every grid point, from the
/// duals of the envelope LP. Any dimension, exact only.
HullSlopes supporting_slopes(const SampledFunc& f);

}  // namespace detail

/// Dual grid for biconjugation: slopes of the facets of the lower convex hull
/// of the finite samples (sorted difference quotients in 1-D). {0} when the
/// domain is a single point.
template <typename Scalar>
std::vector<Vector<Scalar>> lower_hull_slopes(const BasicSampledFunc<Scalar>& f, const Scalar& tol = Scalar(0)) {
  if (f.domain().empty()) throw DomainError("lower_hull_slopes: empty effective domain");
  std::vector<Vector<Scalar>> slopes;
  if (f.dim() == 1) {
    const std::vector<std::size_t> hull = detail::lower_hull_1d(f, tol);
    for (std::size_t k = 1; k < hull.size(); ++k) {
      Vector<Scalar> s(1);
      s(0) = (f.values()[hull[k]].value() - f.values()[hull[k - 1]].value()) /
             (f.grid()[hull[k]](0) - f.grid()[hull[k - 1]](0));
      slopes.push_back(s);
    }
  } else if constexpr (std::is_same_v<Scalar, Rational>) {
    slopes = detail::supporting_slopes(f).slopes;
  } else {
    throw DomainError("lower_hull_slopes: floating mode supports one-dimensional grids only");
  }
  if (slopes.empty()) slopes.push_back(Vector<Scalar>::Zero(f.dim()));
  return slopes;
}

/// f** on the original grid, through the dual grid of lower-hull slopes.
/// Equals the convex envelope of the finite samples at grid points inside
/// their convex hull and TOP outside it.
template <typename Scalar>
BasicSampledFunc<Scalar> biconjugate(const BasicSampledFunc<Scalar>& f, const Scalar& tol = Scalar(0)) {
  const std::vector<std::size_t> dom = f.domain();
  if (dom.empty()) throw DomainError("biconjugate: empty effective domain");
  std::vector<bool> inside(f.size(), false);
  std::vector<Vector<Scalar>> dual;
  if (f.dim() == 1) {
    Scalar lo = f.grid()[dom.front()](0);
    Scalar hi = lo;
    for (std::size_t i : dom) {
      lo = std::min(lo, Scalar(f.grid()[i](0)));
      hi = std::max(hi, Scalar(f.grid()[i](0)));
    }
    for (std::size_t i = 0; i < f.size(); ++i) inside[i] = lo <= f.grid()[i](0) && f.grid()[i](0) <= hi;
    dual = lower_hull_slopes(f, tol);
  } else if constexpr (std::is_same_v<Scalar, Rational>) {
    detail::HullSlopes hs = detail::supporting_slopes(f);
    inside = std::move(hs.inside);
    dual = std::move(hs.slopes);
    if (dual.empty()) dual.push_back(Vec::Zero(f.dim()));
  } else {
    throw DomainError("biconjugate: floating mode supports one-dimensional grids only");
  }
  const BasicSampledFunc<Scalar> fstar = fenchel_conjugate(f, dual);
  const BasicSampledFunc<Scalar> fss = fenchel_conjugate(fstar, f.grid());
  std::vector<Extended<Scalar>> values = fss.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!inside[i]) values[i] = Extended<Scalar>::top();
  }
  return BasicSampledFunc<Scalar>(f.grid(), std::move(values));
}

/// Exact conjugate of a polyhedral function max_i (<a_i, x> + b_i):
/// f*(y) = min { sum_i l_i (-b_i) : sum_i l_i a_i = y, l in the simplex },
/// TOP outside conv{a_i}. Its epigraph is generated by the points (a_i, -b_i)
/// plus the upward ray.
class PolyConjugate {
 public:
  explicit PolyConjugate(const PolyFunc& f);

  Index dim() const { return f_.dim(); }
  /// Effective domain of f*: conv of the slopes.
  const Polytope& domain() const { return domain_; }
  /// The points (a_i, -b_i).
  const std::vector<Vec>& epigraph_points() const { return points_; }

  ExtScalar operator()(const Vec& y) const;

 private:
  PolyFunc f_;
  Polytope domain_;
  std::vector<Vec> points_;
};

PolyConjugate fenchel_conjugate_poly(const PolyFunc& f);

/// x -> max over vertices v of <v, x>. Throws DomainError for the empty
/// polytope.
PolyFunc support_function(const Polytope& u);

}  // namespace abconv
