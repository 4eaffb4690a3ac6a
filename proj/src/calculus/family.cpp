#include "abconv/calculus/family.hpp"

namespace abconv {

OperatorFamily::OperatorFamily(std::vector<Mat> members) : members_(std::move(members)) {
  if (members_.empty()) throw DomainError("operator family: no members");
  for (const Mat& a : members_) {
    if (a.rows() != members_.front().rows() || a.cols() != members_.front().cols()) {
      throw DimensionError("operator family: members differ in shape");
    }
  }
}

BoundedMap::BoundedMap(Index dim, std::vector<std::pair<std::string, Vec>> entries)
    : dim_(dim), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second.size() != dim_) throw DimensionError("bounded map: value of the wrong dimension");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[j].first == entries_[i].first) throw DomainError("bounded map: repeated label " + entries_[i].first);
    }
  }
}

const Vec& BoundedMap::at(const std::string& label) const {
  for (const auto& [l, v] : entries_) {
    if (l == label) return v;
  }
  throw DomainError("bounded map: unknown label " + label);
}

bool MatrixOperator::is_positive() const {
  for (Index i = 0; i < matrix.rows(); ++i) {
    for (Index j = 0; j < matrix.cols(); ++j) {
      if (matrix(i, j) < 0) return false;
    }
  }
  return true;
}

Vec canonical_sublinear(const BoundedMap& f) {
  if (f.size() == 0) throw DomainError("canonical_sublinear: empty index set");
  Vec out = f.entries().front().second;
  for (const auto& [label, v] : f.entries()) {
    for (Index i = 0; i < out.size(); ++i) {
      if (out(i) < v(i)) out(i) = v(i);
    }
  }
  return out;
}

BoundedMap family_embed(const OperatorFamily& family, const Vec& x) {
  if (x.size() != family.cols()) throw DimensionError("family_embed: shape mismatch");
  std::vector<std::pair<std::string, Vec>> entries;
  for (std::size_t i = 0; i < family.size(); ++i) entries.emplace_back(std::to_string(i), family.members()[i] * x);
  return BoundedMap(family.rows(), std::move(entries));
}

Vec p_family(const OperatorFamily& family, const Vec& x, bool verify) {
  if (x.size() != family.cols()) throw DimensionError("p_family: shape mismatch");
  Vec out(family.rows());
  for (Index r = 0; r < family.rows(); ++r) {
    Rational best = pairing(Vec(family.members().front().row(r).transpose()), x);
    for (const Mat& a : family.members()) {
      const Rational v = pairing(Vec(a.row(r).transpose()), x);
      if (best < v) best = v;
    }
    out(r) = best;
  }
  if (verify && canonical_sublinear(family_embed(family, x)) != out) {
    throw std::logic_error("p_family: factorization through the canonical operator failed");
  }
  return out;
}

Polytope support_set(const PolyFunc& p) {
  if (!p.is_sublinear()) throw DomainError("support_set: function is not sublinear");
  std::vector<Vec> slopes;
  for (const auto& piece : p.pieces()) slopes.push_back(piece.slope);
  return Polytope(p.dim(), slopes).reduced();
}

SupportHull::SupportHull(const OperatorFamily& family) : cols_(family.cols()) {
  for (Index r = 0; r < family.rows(); ++r) {
    std::vector<Vec> rows;
    for (const Mat& a : family.members()) rows.push_back(a.row(r).transpose());
    row_hulls_.push_back(Polytope(cols_, rows).reduced());
  }
}

bool SupportHull::contains(const Mat& t) const {
  if (t.rows() != rows() || t.cols() != cols_) throw DimensionError("support hull: shape mismatch");
  for (Index r = 0; r < rows(); ++r) {
    if (!in_hull(t.row(r).transpose(), row_hulls_[static_cast<std::size_t>(r)])) return false;
  }
  return true;
}

SupportHull support_hull(const OperatorFamily& family) { return SupportHull(family); }

namespace {

Vec flatten(const Mat& a) {
  Vec out(a.rows() * a.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) out(i * a.cols() + j) = a(i, j);
  }
  return out;
}

}  // namespace

bool in_family_hull(const Mat& t, const OperatorFamily& family) {
  if (t.rows() != family.rows() || t.cols() != family.cols()) throw DimensionError("in_family_hull: shape mismatch");
  std::vector<Vec> points;
  for (const Mat& a : family.members()) points.push_back(flatten(a));
  return in_hull(flatten(t), Polytope(t.rows() * t.cols(), points));
}

bool dominated_by_family(const Mat& t, const OperatorFamily& family) {
  if (t.rows() != family.rows() || t.cols() != family.cols()) throw DimensionError("dominated_by_family: shape mismatch");
  for (Index r = 0; r < t.rows(); ++r) {
    std::vector<AffineFunctional> pieces;
    for (const Mat& a : family.members()) pieces.push_back({a.row(r).transpose(), Rational(0)});
    const ExtScalar gap = min_gap(PolyFunc(t.cols(), pieces), {t.row(r).transpose(), Rational(0)});
    if (gap < ExtScalar(Rational(0))) return false;
  }
  return true;
}

}  // namespace abconv
