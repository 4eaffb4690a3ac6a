#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abconv/core/polytope.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

/// A finite nonempty family of m x n matrices (operators R^n -> R^m).
class OperatorFamily {
 public:
  explicit OperatorFamily(std::vector<Mat> members);

  Index rows() const { return members_.front().rows(); }
  Index cols() const { return members_.front().cols(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Mat>& members() const { return members_; }

 private:
  std::vector<Mat> members_;
};

/// A map from labels to vectors of R^m; labels are unique and kept in
/// insertion order.
class BoundedMap {
 public:
  BoundedMap(Index dim, std::vector<std::pair<std::string, Vec>> entries);

  Index dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<std::string, Vec>>& entries() const { return entries_; }
  const Vec& at(const std::string& label) const;

 private:
  Index dim_;
  std::vector<std::pair<std::string, Vec>> entries_;
};

/// A matrix with the componentwise order on domain and target.
struct MatrixOperator {
  Mat matrix;

  /// T(X+) ⊂ E+ for the componentwise cones: every entry is nonnegative.
  bool is_positive() const;
};

/// Componentwise supremum of the values. Throws DomainError when empty.
Vec canonical_sublinear(const BoundedMap& f);

/// alpha -> alpha x, labelled "0", "1", ... in family order.
BoundedMap family_embed(const OperatorFamily& family, const Vec& x);

/// Componentwise max of alpha x over the family. With `verify`, also
/// evaluates canonical_sublinear(family_embed(family, x)) and throws
/// std::logic_error if the two differ.
Vec p_family(const OperatorFamily& family, const Vec& x, bool verify = false);

/// The support set {t : <t, x> <= p(x) for all x} of a sublinear p, as the
/// reduced hull of its slopes. Throws DomainError for non-sublinear input.
Polytope support_set(const PolyFunc& p);

/// Row-wise description of the support hull cop(family): T belongs iff row j
/// of T lies in the hull of the j-th rows of the members.
class SupportHull {
 public:
  explicit SupportHull(const OperatorFamily& family);

  Index rows() const { return static_cast<Index>(row_hulls_.size()); }
  Index cols() const { return cols_; }
  const std::vector<Polytope>& row_hulls() const { return row_hulls_; }
  bool contains(const Mat& t) const;

 private:
  Index cols_;
  std::vector<Polytope> row_hulls_;
};

SupportHull support_hull(const OperatorFamily& family);

/// T is a convex combination of the members, as matrices.
bool in_family_hull(const Mat& t, const OperatorFamily& family);

/// Tx <= p_family(x) for every x, decided row by row through min_gap.
bool dominated_by_family(const Mat& t, const OperatorFamily& family);

}  // namespace abconv
