#include "abconv/generation/conjugate.hpp"

#include "abconv/core/lp.hpp"

namespace abconv {

namespace detail {

HullSlopes supporting_slopes(const SampledFunc& f) {
  const std::vector<std::size_t> dom = f.domain();
  const Index n = f.dim();
  const auto k = static_cast<Index>(dom.size());
  HullSlopes out;
  out.inside.assign(f.size(), false);
  for (std::size_t g = 0; g < f.size(); ++g) {
    // min sum l_i f(x_i)  s.t.  sum l_i x_i = x, sum l_i = 1, l >= 0.
    // The duals (y, c) of the optimum give the affine minorant <y,.> + c that
    // touches the envelope at x.
    LinearProgram lp(k);
    lp.set_all_nonnegative(0, k);
    Vec cost(k);
    for (Index i = 0; i < k; ++i) cost(i) = f.values()[dom[static_cast<std::size_t>(i)]].value();
    lp.set_objective(cost, Sense::Minimize);
    for (Index c = 0; c < n; ++c) {
      Vec row(k);
      for (Index i = 0; i < k; ++i) row(i) = f.grid()[dom[static_cast<std::size_t>(i)]](c);
      lp.add_eq(row, f.grid()[g](c));
    }
    Vec ones(k);
    for (Index i = 0; i < k; ++i) ones(i) = 1;
    lp.add_eq(ones, 1);
    const LPResult r = lp_solve(lp, {false});
    if (!r.optimal()) continue;
    out.inside[g] = true;
    out.slopes.push_back(r.dual.head(n));
  }
  out.slopes = unique_points(std::move(out.slopes));
  return out;
}

}  // namespace detail

namespace {

std::vector<Vec> slopes_of(const PolyFunc& f) {
  std::vector<Vec> out;
  for (const auto& p : f.pieces()) out.push_back(p.slope);
  return out;
}

}  // namespace

PolyConjugate::PolyConjugate(const PolyFunc& f) : f_(f), domain_(f.dim(), slopes_of(f)) {
  for (const auto& p : f.pieces()) {
    Vec pt(f.dim() + 1);
    pt.head(f.dim()) = p.slope;
    pt(f.dim()) = -p.offset;
    points_.push_back(pt);
  }
}

ExtScalar PolyConjugate::operator()(const Vec& y) const {
  if (y.size() != dim()) throw DimensionError("conjugate evaluated at a point of the wrong dimension");
  const auto k = static_cast<Index>(f_.pieces().size());
  LinearProgram lp(k);
  lp.set_all_nonnegative(0, k);
  Vec cost(k);
  Vec ones(k);
  for (Index i = 0; i < k; ++i) {
    cost(i) = -f_.pieces()[static_cast<std::size_t>(i)].offset;
    ones(i) = 1;
  }
  lp.set_objective(cost, Sense::Minimize);
  lp.add_eq(ones, 1);
  for (Index c = 0; c < dim(); ++c) {
    Vec row(k);
    for (Index i = 0; i < k; ++i) row(i) = f_.pieces()[static_cast<std::size_t>(i)].slope(c);
    lp.add_eq(row, y(c));
  }
  const LPResult r = lp_solve(lp, {false});
  if (r.status == LPStatus::Infeasible) return ExtScalar::top();
  return ExtScalar(r.value);
}

PolyConjugate fenchel_conjugate_poly(const PolyFunc& f) { return PolyConjugate(f); }

PolyFunc support_function(const Polytope& u) {
  if (u.is_empty()) throw DomainError("support_function: empty polytope");
  std::vector<AffineFunctional> pieces;
  for (const Vec& v : u.vertices()) pieces.push_back({v, Rational(0)});
  return PolyFunc(u.dim(), std::move(pieces));
}

}  // namespace abconv
