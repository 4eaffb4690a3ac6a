#pragma once

#include <vector>

#include "abconv/core/linalg.hpp"

namespace abconv {

/// Convex hull of finitely many rational points. The empty polytope is a
/// distinct value (`Polytope::empty`), never a polytope with no vertices.
class Polytope {
 public:
  /// Throws DomainError for an empty vertex list and DimensionError for
  /// vertices of the wrong length.
  Polytope(Index dim, std::vector<Vec> vertices);

  static Polytope empty(Index dim);

  Index dim() const { return dim_; }
  bool is_empty() const { return vertices_.empty(); }
  const std::vector<Vec>& vertices() const { return vertices_; }

  /// Deduplicated, lexicographically sorted, with every vertex that is a
  /// convex combination of the others removed.
  Polytope reduced() const;

 private:
  Polytope(Index dim) : dim_(dim) {}  // empty

  Index dim_;
  std::vector<Vec> vertices_;
};

struct HullMembership {
  bool member = false;
  /// Convex weights over P.vertices() reproducing y exactly (when member).
  Vec weights;
};

/// y in conv(P.vertices), decided by an exact LP over the convex weights.
HullMembership hull_membership(const Vec& y, const Polytope& p);

inline bool in_hull(const Vec& y, const Polytope& p) { return hull_membership(y, p).member; }

/// Equality of two polytopes by mutual membership of their vertex lists.
bool same_polytope(const Polytope& a, const Polytope& b);

}  // namespace abconv
