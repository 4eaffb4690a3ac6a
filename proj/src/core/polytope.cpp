#include "abconv/core/polytope.hpp"

#include <algorithm>

#include "abconv/core/lp.hpp"

namespace abconv {

Polytope::Polytope(Index dim, std::vector<Vec> vertices) : dim_(dim), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a polytope needs at least one vertex; use Polytope::empty");
  for (const Vec& v : vertices_) {
    if (v.size() != dim_) throw DimensionError("polytope vertex has the wrong dimension");
  }
}

Polytope Polytope::empty(Index dim) { return Polytope(dim); }

namespace {

/// Membership of `y` in conv(points) by LP; weights indexed like `points`.
HullMembership hull_lp(const Vec& y, const std::vector<Vec>& points, Index dim) {
  const auto k = static_cast<Index>(points.size());
  LinearProgram lp(k);
  lp.set_all_nonnegative(0, k);
  Vec ones(k);
  for (Index i = 0; i < k; ++i) ones(i) = 1;
  lp.add_eq(ones, 1);
  for (Index c = 0; c < dim; ++c) {
    Vec row(k);
    for (Index i = 0; i < k; ++i) row(i) = points[static_cast<std::size_t>(i)](c);
    lp.add_eq(row, y(c));
  }
  const LPResult r = lp_solve(lp, {false});
  HullMembership out;
  out.member = r.feasible();
  if (out.member) out.weights = r.point;
  return out;
}

}  // namespace

HullMembership hull_membership(const Vec& y, const Polytope& p) {
  if (y.size() != p.dim()) throw DimensionError("hull_membership: point and polytope dimensions differ");
  if (p.is_empty()) return {};
  return hull_lp(y, p.vertices(), p.dim());
}

Polytope Polytope::reduced() const {
  if (is_empty()) return *this;
  std::vector<Vec> kept = unique_points(vertices_);
  if (dim_ == 1) {
    if (kept.size() > 2) kept = {kept.front(), kept.back()};
    return Polytope(dim_, kept);
  }
  for (std::size_t i = 0; i < kept.size() && kept.size() > 1;) {
    std::vector<Vec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (hull_lp(kept[i], others, dim_).member) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return Polytope(dim_, kept);
}

bool same_polytope(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) return false;
  if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
  for (const Vec& v : a.vertices()) {
    if (!in_hull(v, b)) return false;
  }
  for (const Vec& v : b.vertices()) {
    if (!in_hull(v, a)) return false;
  }
  return true;
}

}  // namespace abconv
