#pragma once

#include <vector>

#include "abconv/core/linalg.hpp"

namespace abconv {

/// Generator enumeration works only up to this ambient dimension; above it
/// every query is answered by LP membership.
struct EnumerationLimits {
  Index max_dim = 4;
};

/// Finitely generated cone {sum_i c_i r_i : c_i >= 0}. An empty ray list is
/// the zero cone {0}. Zero rays are discarded on construction.
class PolyCone {
 public:
  PolyCone(Index dim, std::vector<Vec> rays);

  static PolyCone zero(Index dim) { return PolyCone(dim, {}); }
  static PolyCone whole_space(Index dim);

  Index dim() const { return dim_; }
  const std::vector<Vec>& rays() const { return rays_; }

 private:
  Index dim_;
  std::vector<Vec> rays_;
};

struct ConeMembership {
  bool member = false;
  /// Nonnegative weights over K.rays() reproducing x exactly (when member).
  Vec weights;
};

ConeMembership cone_membership(const Vec& x, const PolyCone& k);
inline bool in_cone(const Vec& x, const PolyCone& k) { return cone_membership(x, k).member; }

/// Mutual membership of generators.
bool same_cone(const PolyCone& a, const PolyCone& b);

/// Generators of {x : <a_i, x> <= 0 for all i}: the lineality space as +-
/// basis vectors plus the extreme rays of the pointed part. Throws CapExceeded
/// when dim > limits.max_dim.
PolyCone cone_rays_from_inequalities(const std::vector<Vec>& rows, Index dim, EnumerationLimits limits = {});

/// Drops generators that are nonnegative combinations of the others and
/// normalizes the rest; the generated cone is unchanged.
PolyCone reduce_rays(const PolyCone& k);

/// Rows a_i with K = {x : <a_i, x> <= 0}; needs enumeration.
std::vector<Vec> cone_inequalities(const PolyCone& k, EnumerationLimits limits = {});

/// Cartesian product K_1 x ... x K_n in the product space.
PolyCone cone_product(const std::vector<PolyCone>& cones);

/// The diagonal {(x, ..., x)} of X^n as a cone.
PolyCone diagonal_cone(Index dim, Index copies);

}  // namespace abconv
