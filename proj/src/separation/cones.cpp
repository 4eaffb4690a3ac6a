#include "abconv/separation/cones.hpp"

#include <string>

#include "abconv/core/lp.hpp"

namespace abconv {

ConePair::ConePair(PolyCone k1, PolyCone k2) : k1_(std::move(k1)), k2_(std::move(k2)) {
  if (k1_.dim() != k2_.dim()) throw DimensionError("cone pair: dimensions differ");
}

namespace {

/// Variables (k1, k2, l, m) with k1 = sum l_i r_i, k2 = sum m_j s_j,
/// k1 - k2 = x, l, m >= 0.
LinearProgram correspondence_lp(const ConePair& pair, const Vec& x) {
  const Index n = pair.dim();
  const auto& r1 = pair.first().rays();
  const auto& r2 = pair.second().rays();
  const auto a = static_cast<Index>(r1.size());
  const auto b = static_cast<Index>(r2.size());
  LinearProgram lp(2 * n + a + b);
  lp.set_all_nonnegative(2 * n, a + b);
  for (Index c = 0; c < n; ++c) {
    Vec row = zeros(lp.num_vars());
    row(c) = 1;
    for (Index i = 0; i < a; ++i) row(2 * n + i) = -r1[static_cast<std::size_t>(i)](c);
    lp.add_eq(row, 0);
    row = zeros(lp.num_vars());
    row(n + c) = 1;
    for (Index j = 0; j < b; ++j) row(2 * n + a + j) = -r2[static_cast<std::size_t>(j)](c);
    lp.add_eq(row, 0);
    row = zeros(lp.num_vars());
    row(c) = 1;
    row(n + c) = -1;
    lp.add_eq(row, x(c));
  }
  return lp;
}

std::vector<Vec> negated(const std::vector<Vec>& rays) {
  std::vector<Vec> out;
  for (const Vec& r : rays) out.push_back(-r);
  return out;
}

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool contains_span(const PolyCone& cone, const std::vector<Vec>& basis) {
  for (const Vec& b : basis) {
    if (!in_cone(b, cone) || !in_cone(Vec(-b), cone)) return false;
  }
  return true;
}

}  // namespace

std::optional<Decomposition> conic_correspondence(const ConePair& pair, const Vec& x) {
  if (x.size() != pair.dim()) throw DimensionError("conic_correspondence: dimension mismatch");
  const Index n = pair.dim();
  std::vector<Index> coords(static_cast<std::size_t>(2 * n));
  for (Index k = 0; k < 2 * n; ++k) coords[static_cast<std::size_t>(k)] = k;
  const LPResult r = lp_lexmin(correspondence_lp(pair, x), coords);
  if (!r.feasible()) return std::nullopt;
  return Decomposition{r.point.head(n), r.point.segment(n, n)};
}

std::optional<Rational> representation_norm(const ConePair& pair, const Vec& x) {
  if (x.size() != pair.dim()) throw DimensionError("representation_norm: dimension mismatch");
  const Index n = pair.dim();
  LinearProgram base = correspondence_lp(pair, x);
  LinearProgram lp(base.num_vars() + 1);
  const Index tau = base.num_vars();
  for (const auto& c : base.constraints()) {
    Vec row = zeros(lp.num_vars());
    row.head(base.num_vars()) = c.coeffs;
    lp.add_constraint(row, c.relation, c.rhs);
  }
  lp.set_all_nonnegative(2 * n, base.num_vars() - 2 * n + 1);
  for (Index c = 0; c < 2 * n; ++c) {
    for (int s : {1, -1}) {
      Vec row = zeros(lp.num_vars());
      row(c) = s;
      row(tau) = -1;
      lp.add_le(row, 0);
    }
  }
  lp.set_objective(unit(lp.num_vars(), tau), Sense::Minimize);
  const LPResult r = lp_solve(lp, {false});
  if (!r.optimal()) return std::nullopt;
  return r.value;
}

NonoblateReport nonoblate_check(const ConePair& pair) {
  const Index n = pair.dim();
  const auto& r1 = pair.first().rays();
  const auto& r2 = pair.second().rays();
  NonoblateReport out;
  out.span_basis = span_basis(concat(r1, r2), n).basis;
  const PolyCone first_minus_second(n, concat(r1, negated(r2)));
  const PolyCone second_minus_first(n, concat(r2, negated(r1)));
  out.first_minus_second_is_span = contains_span(first_minus_second, out.span_basis);
  out.second_minus_first_is_span = contains_span(second_minus_first, out.span_basis);
  out.nonoblate = out.first_minus_second_is_span && out.second_minus_first_is_span;
  if (!out.nonoblate) return out;
  if (out.span_basis.empty()) {
    out.radius = Rational(1);
    return out;
  }
  Rational worst = 0;
  for (const Vec& b : out.span_basis) {
    for (int s : {1, -1}) {
      const std::optional<Rational> cost = representation_norm(pair, Vec(s * b));
      if (!cost) throw std::logic_error("nonoblate_check: span direction without representation");
      if (worst < *cost) worst = *cost;
    }
  }
  out.radius = Rational(1 / (worst * static_cast<long>(out.span_basis.size())));
  return out;
}

DiagonalEquivalence nonoblate_diagonal_equivalence(const ConePair& pair, EnumerationLimits limits) {
  if (pair.dim() > limits.max_dim) {
    throw CapExceeded("diagonal equivalence is capped at dimension " + std::to_string(limits.max_dim));
  }
  DiagonalEquivalence out;
  out.direct = nonoblate_check(pair).nonoblate;
  const ConePair lifted(cone_product({pair.first(), pair.second()}), diagonal_cone(pair.dim(), 2));
  out.diagonal = nonoblate_check(lifted).nonoblate;
  return out;
}

GeneralPositionReport general_position_check(const std::vector<PolyCone>& cones, GeneralPositionLimits limits) {
  if (cones.size() < 2) throw DomainError("general position needs at least two cones");
  const Index dim = cones.front().dim();
  for (const PolyCone& k : cones) {
    if (k.dim() != dim) throw DimensionError("general_position_check: dimensions differ");
  }
  const auto n = static_cast<Index>(cones.size());
  GeneralPositionReport out;
  out.count = cones.size();
  out.working_dim = n == 2 ? dim : n * dim;
  if (out.working_dim > limits.max_working_dim) {
    throw CapExceeded("general position check is capped at working dimension " +
                      std::to_string(limits.max_working_dim) + " (requested " + std::to_string(out.working_dim) + ")");
  }
  const ConePair pair = n == 2 ? ConePair(cones[0], cones[1]) : ConePair(cone_product(cones), diagonal_cone(dim, n));
  const NonoblateReport r = nonoblate_check(pair);
  out.span_condition = r.first_minus_second_is_span && r.second_minus_first_is_span;
  out.nonoblate = r.nonoblate;
  out.radius = r.radius;
  return out;
}

PolyCone epigraph_cone(const SublinearOperator& op, EnumerationLimits limits) {
  if (!op.p.is_sublinear()) throw DomainError("epigraph_cone: operator is not sublinear");
  const Index d = op.p.dim();
  std::vector<Vec> rows;
  for (const auto& piece : op.p.pieces()) {
    Vec row(d + 1);
    row.head(d) = piece.slope;
    row(d) = -1;
    rows.push_back(row);
  }
  for (const Vec& dr : op.domain_rows) {
    if (dr.size() != d) throw DimensionError("epigraph_cone: domain row of the wrong dimension");
    Vec row = zeros(d + 1);
    row.head(d) = dr;
    rows.push_back(row);
  }
  return cone_rays_from_inequalities(rows, d + 1, limits);
}

Vec rearrange_coordinates(const Vec& stacked, Index dim, Index copies) {
  if (stacked.size() != copies * (dim + 1)) throw DimensionError("rearrange_coordinates: wrong length");
  Vec out(stacked.size());
  for (Index j = 0; j < copies; ++j) {
    out.segment(j * dim, dim) = stacked.segment(j * (dim + 1), dim);
    out(copies * dim + j) = stacked(j * (dim + 1) + dim);
  }
  return out;
}

GeneralPositionReport sublinear_general_position(const std::vector<SublinearOperator>& ops,
                                                 GeneralPositionLimits limits) {
  if (ops.empty()) throw DomainError("sublinear_general_position: no operators");
  const Index d = ops.front().p.dim();
  const auto n = static_cast<Index>(ops.size());
  for (const auto& op : ops) {
    if (op.p.dim() != d) throw DimensionError("sublinear_general_position: dimensions differ");
    if (!op.p.is_sublinear()) throw DomainError("sublinear_general_position: operator is not sublinear");
  }
  const Index total = n * (d + 1);
  if (total > limits.max_working_dim) {
    throw CapExceeded("sublinear general position is capped at working dimension " +
                      std::to_string(limits.max_working_dim) + " (requested " + std::to_string(total) + ")");
  }

  // diagonal(X^n) x E^n
  std::vector<Vec> first;
  for (Index i = 0; i < d; ++i) {
    Vec r = zeros(total);
    for (Index j = 0; j < n; ++j) r(j * d + i) = 1;
    first.push_back(r);
    first.push_back(-r);
  }
  for (Index j = 0; j < n; ++j) {
    first.push_back(unit(total, n * d + j));
    first.push_back(-unit(total, n * d + j));
  }

  // rearranged product of epigraphs
  std::vector<PolyCone> epis;
  for (const auto& op : ops) epis.push_back(epigraph_cone(op, {std::max<Index>(d + 1, 4)}));
  const PolyCone product = cone_product(epis);
  std::vector<Vec> second;
  for (const Vec& r : product.rays()) second.push_back(rearrange_coordinates(r, d, n));

  return general_position_check({PolyCone(total, first), PolyCone(total, second)}, limits);
}

PolyCone polar(const PolyCone& k, EnumerationLimits limits) {
  return cone_rays_from_inequalities(k.rays(), k.dim(), limits);
}

bool in_polar(const Vec& t, const PolyCone& k) {
  if (t.size() != k.dim()) throw DimensionError("in_polar: dimension mismatch");
  for (const Vec& r : k.rays()) {
    if (pairing(t, r) > 0) return false;
  }
  return true;
}

PolyCone intersect_cones(const std::vector<PolyCone>& cones, EnumerationLimits limits) {
  if (cones.empty()) throw DomainError("intersect_cones: no cones");
  const Index dim = cones.front().dim();
  std::vector<Vec> rows;
  for (const PolyCone& k : cones) {
    if (k.dim() != dim) throw DimensionError("intersect_cones: dimensions differ");
    const auto ineq = cone_inequalities(k, limits);
    rows.insert(rows.end(), ineq.begin(), ineq.end());
  }
  return cone_rays_from_inequalities(rows, dim, limits);
}

PolarDecompositionReport polar_decomposition_check(const std::vector<PolyCone>& cones, EnumerationLimits limits) {
  if (cones.empty()) throw DomainError("polar_decomposition_check: no cones");
  const Index dim = cones.front().dim();
  std::vector<Vec> sum_rays;
  for (const PolyCone& k : cones) {
    const PolyCone p = polar(k, limits);
    sum_rays.insert(sum_rays.end(), p.rays().begin(), p.rays().end());
  }
  PolarDecompositionReport out{reduce_rays(polar(intersect_cones(cones, limits), limits)),
                               reduce_rays(PolyCone(dim, sum_rays)), false, false};
  out.equal = same_cone(out.lhs, out.rhs);
  out.hypothesis_holds = cones.size() >= 2 && general_position_check(cones).holds();
  return out;
}

}  // namespace abconv
