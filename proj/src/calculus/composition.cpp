#include "abconv/calculus/composition.hpp"

#include <string>

#include "abconv/calculus/family.hpp"
#include "abconv/core/lp.hpp"

namespace abconv {

namespace {

Index check_shapes(const VectorSublinear& p1, const PolyFunc& p2) {
  if (p1.empty()) throw DomainError("composition: p1 has no coordinates");
  const Index n = p1.front().dim();
  for (const PolyFunc& f : p1) {
    if (f.dim() != n) throw DimensionError("composition: coordinates of p1 differ in dimension");
    if (!f.is_sublinear()) throw DomainError("composition: p1 is not sublinear");
  }
  if (p2.dim() != static_cast<Index>(p1.size())) throw DimensionError("composition: p2 does not match the target of p1");
  if (!p2.is_sublinear()) throw DomainError("composition: p2 is not sublinear");
  for (std::size_t l = 0; l < p2.pieces().size(); ++l) {
    const Vec& mu = p2.pieces()[l].slope;
    for (Index j = 0; j < mu.size(); ++j) {
      if (mu(j) < 0) {
        throw HypothesisViolation("composition: p2 is not increasing",
                                  "piece " + std::to_string(l) + " has slope " + to_string(mu));
      }
    }
  }
  return n;
}

/// All sums sum_j mu_j s_j with s_j drawn from choices[j].
void combine(const Vec& mu, const std::vector<std::vector<Vec>>& choices, std::size_t j, const Vec& acc,
             std::vector<Vec>& out) {
  if (j == choices.size()) {
    out.push_back(acc);
    return;
  }
  for (const Vec& s : choices[j]) {
    if (mu(static_cast<Index>(j)) == 0) {
      combine(mu, choices, j + 1, acc, out);
      return;
    }
    combine(mu, choices, j + 1, Vec(acc + mu(static_cast<Index>(j)) * s), out);
  }
}

std::vector<Vec> slopes_of(const PolyFunc& f) {
  std::vector<Vec> out;
  for (const auto& piece : f.pieces()) out.push_back(piece.slope);
  return out;
}

}  // namespace

PolyFunc compose(const VectorSublinear& p1, const PolyFunc& p2) {
  const Index n = check_shapes(p1, p2);
  std::vector<std::vector<Vec>> choices;
  for (const PolyFunc& f : p1) choices.push_back(slopes_of(f));
  std::vector<Vec> slopes;
  for (const auto& piece : p2.pieces()) combine(piece.slope, choices, 0, zeros(n), slopes);
  std::vector<AffineFunctional> pieces;
  for (const Vec& s : unique_points(slopes)) pieces.push_back({s, Rational(0)});
  return PolyFunc(n, pieces);
}

bool in_composition_direct(const Vec& t, const VectorSublinear& p1, const PolyFunc& p2) {
  const PolyFunc h = compose(p1, p2);
  if (t.size() != h.dim()) throw DimensionError("in_composition_direct: dimension mismatch");
  return min_gap(h, {t, Rational(0)}) >= ExtScalar(Rational(0));
}

bool in_composition_formula(const Vec& t, const VectorSublinear& p1, const PolyFunc& p2) {
  const Index n = check_shapes(p1, p2);
  if (t.size() != n) throw DimensionError("in_composition_formula: dimension mismatch");
  const auto m = static_cast<Index>(p1.size());
  std::vector<std::pair<Index, const Vec*>> nu;  // (coordinate j, slope)
  for (Index j = 0; j < m; ++j) {
    for (const auto& piece : p1[static_cast<std::size_t>(j)].pieces()) nu.emplace_back(j, &piece.slope);
  }
  const auto a = static_cast<Index>(nu.size());
  const auto l = static_cast<Index>(p2.pieces().size());
  LinearProgram lp(a + l);
  lp.set_all_nonnegative(0, a + l);
  Vec row = zeros(a + l);
  for (Index k = 0; k < l; ++k) row(a + k) = 1;
  lp.add_eq(row, 1);
  for (Index j = 0; j < m; ++j) {
    row = zeros(a + l);
    for (Index i = 0; i < a; ++i) {
      if (nu[static_cast<std::size_t>(i)].first == j) row(i) = 1;
    }
    for (Index k = 0; k < l; ++k) row(a + k) = -p2.pieces()[static_cast<std::size_t>(k)].slope(j);
    lp.add_eq(row, 0);
  }
  for (Index c = 0; c < n; ++c) {
    row = zeros(a + l);
    for (Index i = 0; i < a; ++i) row(i) = (*nu[static_cast<std::size_t>(i)].second)(c);
    lp.add_eq(row, t(c));
  }
  return lp_solve(lp, {false}).feasible();
}

CompositionReport composition_subdifferential(const VectorSublinear& p1, const PolyFunc& p2, EnumerationLimits limits) {
  const Index n = check_shapes(p1, p2);
  if (n > limits.max_dim) {
    throw CapExceeded("composition enumeration is capped at dimension " + std::to_string(limits.max_dim));
  }
  std::vector<std::vector<Vec>> choices;
  for (const PolyFunc& f : p1) choices.push_back(support_set(f).vertices());
  std::vector<Vec> candidates;
  const Polytope outer = support_set(p2);
  for (const Vec& mu : outer.vertices()) combine(mu, choices, 0, zeros(n), candidates);

  CompositionReport out{support_set(compose(p1, p2)), Polytope(n, candidates).reduced(), true};
  for (const Vec& v : out.direct.vertices()) out.agree = out.agree && in_composition_formula(v, p1, p2);
  for (const Vec& v : out.formula.vertices()) out.agree = out.agree && in_composition_direct(v, p1, p2);
  return out;
}

}  // namespace abconv
