#include "abconv/core/cone.hpp"

#include <algorithm>
#include <string>

#include "abconv/core/lp.hpp"

namespace abconv {

PolyCone::PolyCone(Index dim, std::vector<Vec> rays) : dim_(dim) {
  for (Vec& r : rays) {
    if (r.size() != dim) throw DimensionError("cone ray has the wrong dimension");
    if (!is_zero(r)) rays_.push_back(std::move(r));
  }
}

PolyCone PolyCone::whole_space(Index dim) {
  std::vector<Vec> rays;
  for (Index i = 0; i < dim; ++i) {
    rays.push_back(unit(dim, i));
    rays.push_back(-unit(dim, i));
  }
  return PolyCone(dim, std::move(rays));
}

namespace {

ConeMembership cone_lp(const Vec& x, const std::vector<Vec>& rays, Index dim) {
  ConeMembership out;
  if (rays.empty()) {
    out.member = is_zero(x);
    out.weights = Vec(0);
    return out;
  }
  const auto k = static_cast<Index>(rays.size());
  LinearProgram lp(k);
  lp.set_all_nonnegative(0, k);
  for (Index c = 0; c < dim; ++c) {
    Vec row(k);
    for (Index i = 0; i < k; ++i) row(i) = rays[static_cast<std::size_t>(i)](c);
    lp.add_eq(row, x(c));
  }
  const LPResult r = lp_solve(lp, {false});
  out.member = r.feasible();
  if (out.member) out.weights = r.point;
  return out;
}

/// Calls `visit` with every size-k subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConeMembership cone_membership(const Vec& x, const PolyCone& k) {
  if (x.size() != k.dim()) throw DimensionError("cone_membership: dimension mismatch");
  return cone_lp(x, k.rays(), k.dim());
}

bool same_cone(const PolyCone& a, const PolyCone& b) {
  if (a.dim() != b.dim()) return false;
  for (const Vec& r : a.rays()) {
    if (!in_cone(r, b)) return false;
  }
  for (const Vec& r : b.rays()) {
    if (!in_cone(r, a)) return false;
  }
  return true;
}

PolyCone cone_rays_from_inequalities(const std::vector<Vec>& rows, Index dim, EnumerationLimits limits) {
  if (dim > limits.max_dim) {
    throw CapExceeded("generator enumeration is capped at dimension " + std::to_string(limits.max_dim) +
                      " (requested " + std::to_string(dim) + ")");
  }
  std::vector<Vec> ineq;
  for (const Vec& r : rows) {
    if (r.size() != dim) throw DimensionError("inequality row has the wrong dimension");
    if (!is_zero(r)) ineq.push_back(normalize_direction(r));
  }
  ineq = unique_points(std::move(ineq));

  // Lineality space: {x : A x = 0}.
  const Mat a = ineq.empty() ? Mat(0, dim) : stack_rows(ineq, dim);
  const Mat lineality = ineq.empty() ? Mat::Identity(dim, dim) : nullspace(a);

  std::vector<Vec> rays;
  for (Index c = 0; c < lineality.cols(); ++c) {
    const Vec b = normalize_direction(lineality.col(c));
    rays.push_back(b);
    rays.push_back(-b);
  }

  // Extreme rays of the pointed part K ∩ L^perp: one-dimensional solution
  // sets of (d' - 1) tight rows together with L^perp.
  const Index pointed_dim = dim - lineality.cols();
  if (pointed_dim > 0) {
    std::vector<Vec> found;
    for_each_subset(ineq.size(), static_cast<std::size_t>(pointed_dim - 1), [&](const std::vector<std::size_t>& subset) {
      Mat m(static_cast<Index>(subset.size()) + lineality.cols(), dim);
      Index r = 0;
      for (std::size_t s : subset) m.row(r++) = ineq[s].transpose();
      for (Index c = 0; c < lineality.cols(); ++c) m.row(r++) = lineality.col(c).transpose();
      const Mat null = nullspace(m);
      if (null.cols() != 1) return;
      const Vec dir = normalize_direction(null.col(0));
      for (int sgn : {1, -1}) {
        const Vec cand = sgn * dir;
        bool ok = true;
        for (const Vec& row : ineq) {
          if (pairing(row, cand) > 0) {
            ok = false;
            break;
          }
        }
        if (ok) found.push_back(cand);
      }
    });
    found = unique_points(std::move(found));
    rays.insert(rays.end(), found.begin(), found.end());
  }
  return PolyCone(dim, std::move(rays));
}

PolyCone reduce_rays(const PolyCone& k) {
  std::vector<Vec> kept;
  for (const Vec& r : k.rays()) kept.push_back(normalize_direction(r));
  kept = unique_points(std::move(kept));
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (cone_lp(kept[i], others, k.dim()).member) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return PolyCone(k.dim(), std::move(kept));
}

std::vector<Vec> cone_inequalities(const PolyCone& k, EnumerationLimits limits) {
  // K = polar(polar(K)); the rays of polar(K) are the inequality rows of K.
  return cone_rays_from_inequalities(k.rays(), k.dim(), limits).rays();
}

PolyCone cone_product(const std::vector<PolyCone>& cones) {
  Index total = 0;
  for (const PolyCone& c : cones) total += c.dim();
  std::vector<Vec> rays;
  Index offset = 0;
  for (const PolyCone& c : cones) {
    for (const Vec& r : c.rays()) {
      Vec lifted = zeros(total);
      lifted.segment(offset, c.dim()) = r;
      rays.push_back(std::move(lifted));
    }
    offset += c.dim();
  }
  return PolyCone(total, std::move(rays));
}

PolyCone diagonal_cone(Index dim, Index copies) {
  std::vector<Vec> rays;
  for (Index i = 0; i < dim; ++i) {
    Vec d = zeros(dim * copies);
    for (Index c = 0; c < copies; ++c) d(c * dim + i) = 1;
    rays.push_back(d);
    rays.push_back(-d);
  }
  return PolyCone(dim * copies, std::move(rays));
}

}  // namespace abconv
