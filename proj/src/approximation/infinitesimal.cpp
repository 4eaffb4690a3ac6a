#include "abconv/approximation/infinitesimal.hpp"

#include "abconv/generation/conjugate.hpp"

namespace abconv {

LexScalar LexAffine::operator()(const Vec& x) const {
  if (x.size() != dim()) throw DimensionError("LexAffine: dimension mismatch");
  return LexScalar(pairing(slope, x), pairing(slope_inf, x)) + offset;
}

LexPolyFunc::LexPolyFunc(Index dim, std::vector<LexAffine> pieces) : dim_(dim), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("LexPolyFunc: no pieces");
  for (const LexAffine& p : pieces_) {
    if (p.slope.size() != dim_ || p.slope_inf.size() != dim_) throw DimensionError("LexPolyFunc: piece of the wrong dimension");
  }
}

LexScalar LexPolyFunc::operator()(const Vec& x) const {
  LexScalar best = pieces_.front()(x);
  for (const LexAffine& p : pieces_) {
    const LexScalar v = p(x);
    if (best < v) best = v;
  }
  return best;
}

PolyFunc LexPolyFunc::standard_part() const {
  std::vector<AffineFunctional> pieces;
  for (const LexAffine& p : pieces_) pieces.push_back({p.slope, p.offset.standard()});
  return PolyFunc(dim_, pieces);
}

std::vector<std::size_t> LexPolyFunc::near_active_pieces(const Vec& x) const {
  const LexScalar top = (*this)(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (infinitely_close(pieces_[i](x), top)) out.push_back(i);
  }
  return out;
}

Polytope infinitesimal_subdifferential(const LexPolyFunc& f, const Vec& xbar) {
  if (xbar.size() != f.dim()) throw DimensionError("infinitesimal_subdifferential: dimension mismatch");
  std::vector<Vec> slopes;
  for (std::size_t i : f.near_active_pieces(xbar)) slopes.push_back(f.pieces()[i].slope);
  return Polytope(f.dim(), slopes).reduced();
}

bool in_infinitesimal_subdifferential(const LexPolyFunc& f, const Vec& xbar, const Vec& y) {
  if (xbar.size() != f.dim() || y.size() != f.dim()) throw DimensionError("infinitesimal_subdifferential: dimension mismatch");
  // standard part of the sup is the sup of the standard parts
  const ExtScalar conj = PolyConjugate(f.standard_part())(y);
  return conj <= ExtScalar(Rational(pairing(y, xbar) - f(xbar).standard()));
}

bool is_infinitesimal_minimum(const LexPolyFunc& f, const Vec& xbar) {
  return in_hull(zeros(f.dim()), infinitesimal_subdifferential(f, xbar));
}

}  // namespace abconv
