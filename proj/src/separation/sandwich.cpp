#include "abconv/separation/sandwich.hpp"

#include "abconv/core/lp.hpp"

namespace abconv {

SandwichWitness sandwich(const PolyFunc& p, const PolyFunc& q) {
  if (!p.is_sublinear() || !q.is_sublinear()) throw DomainError("sandwich: operators must be sublinear");
  if (p.dim() != q.dim()) throw DimensionError("sandwich: dimensions differ");
  const Index n = p.dim();
  const auto a = static_cast<Index>(p.pieces().size());
  const auto b = static_cast<Index>(q.pieces().size());

  // variables (t, l, m): t = sum l_i a_i, -t = sum m_j b_j, l and m in simplices
  LinearProgram lp(n + a + b);
  lp.set_all_nonnegative(n, a + b);
  Vec row = zeros(lp.num_vars());
  for (Index i = 0; i < a; ++i) row(n + i) = 1;
  lp.add_eq(row, 1);
  row = zeros(lp.num_vars());
  for (Index j = 0; j < b; ++j) row(n + a + j) = 1;
  lp.add_eq(row, 1);
  for (Index c = 0; c < n; ++c) {
    row = zeros(lp.num_vars());
    row(c) = -1;
    for (Index i = 0; i < a; ++i) row(n + i) = p.pieces()[static_cast<std::size_t>(i)].slope(c);
    lp.add_eq(row, 0);
  }
  for (Index c = 0; c < n; ++c) {
    row = zeros(lp.num_vars());
    row(c) = 1;
    for (Index j = 0; j < b; ++j) row(n + a + j) = q.pieces()[static_cast<std::size_t>(j)].slope(c);
    lp.add_eq(row, 0);
  }

  std::vector<Index> coords(static_cast<std::size_t>(n));
  for (Index c = 0; c < n; ++c) coords[static_cast<std::size_t>(c)] = c;
  const LPResult r = lp_lexmin(lp, coords);

  SandwichWitness out;
  if (r.feasible()) {
    out.functional = r.point.head(n);
    return out;
  }
  // Certificate (alpha, beta, u, v): v = u, alpha + <u, a_i> >= 0,
  // beta + <u, b_j> >= 0, alpha + beta < 0. Hence x = -u has
  // P(x) <= alpha and Q(x) <= beta.
  Vec x = -r.farkas.segment(2, n);
  const Rational scale = max_abs(x);
  if (scale == 0) throw std::logic_error("sandwich: degenerate infeasibility certificate");
  for (Index c = 0; c < n; ++c) x(c) /= scale;
  const Rational value = p(x) + q(x);
  if (value >= 0) throw std::logic_error("sandwich: certificate does not produce a violation");
  out.violation = x;
  out.violation_value = value;
  return out;
}

}  // namespace abconv
