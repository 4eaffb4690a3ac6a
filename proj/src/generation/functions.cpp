#include "abconv/generation/functions.hpp"

#include "abconv/core/lp.hpp"

namespace abconv {

PolyFunc::PolyFunc(Index dim, std::vector<AffineFunctional> pieces) : dim_(dim), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("a polyhedral function needs at least one piece");
  for (const auto& p : pieces_) {
    if (p.dim() != dim_) throw DimensionError("polyhedral function piece has the wrong dimension");
  }
}

Rational PolyFunc::operator()(const Vec& x) const {
  if (x.size() != dim_) throw DimensionError("polyhedral function evaluated at a point of the wrong dimension");
  Rational best = pieces_.front()(x);
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const Rational v = pieces_[i](x);
    if (best < v) best = v;
  }
  return best;
}

bool PolyFunc::is_sublinear() const {
  for (const auto& p : pieces_) {
    if (!p.is_linear()) return false;
  }
  return true;
}

std::vector<std::size_t> PolyFunc::active_pieces(const Vec& x) const {
  const Rational v = (*this)(x);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i](x) == v) out.push_back(i);
  }
  return out;
}

ExtScalar min_gap(const PolyFunc& f, const AffineFunctional& h) {
  if (h.dim() != f.dim()) throw DimensionError("min_gap: dimension mismatch");
  const Index n = f.dim();
  // variables (x, t): minimize t - <h.slope, x> subject to t >= piece(x)
  LinearProgram lp(n + 1);
  Vec c(n + 1);
  c.head(n) = -h.slope;
  c(n) = 1;
  lp.set_objective(c, Sense::Minimize);
  for (const auto& piece : f.pieces()) {
    Vec row(n + 1);
    row.head(n) = piece.slope;
    row(n) = -1;
    lp.add_le(row, -piece.offset);
  }
  const LPResult r = lp_solve(lp, {false});
  if (r.status == LPStatus::Unbounded) return ExtScalar::bottom();
  return ExtScalar(Rational(r.value - h.offset));
}

bool dominates(const PolyFunc& f, const PolyFunc& g) {
  if (f.dim() != g.dim()) throw DimensionError("dominates: dimension mismatch");
  for (const auto& piece : g.pieces()) {
    if (min_gap(f, piece) < ExtScalar(Rational(0))) return false;
  }
  return true;
}

bool same_function(const PolyFunc& f, const PolyFunc& g) { return dominates(f, g) && dominates(g, f); }

GeneratorSet::GeneratorSet(Index dim, std::vector<AffineFunctional> members) : dim_(dim) {
  for (auto& h : members) {
    if (h.dim() != dim) throw DimensionError("generator has the wrong dimension");
    bool seen = false;
    for (const auto& kept : members_) seen = seen || kept == h;
    if (!seen) members_.push_back(std::move(h));
  }
  if (members_.empty()) throw DomainError("a generator set must be nonempty");
}

SampledFunc sample(const PolyFunc& f, const std::vector<Vec>& grid) {
  std::vector<ExtScalar> values;
  values.reserve(grid.size());
  for (const Vec& x : grid) values.emplace_back(f(x));
  return SampledFunc(grid, std::move(values));
}

std::vector<Vec> integer_grid(Index dim, std::int64_t lo, std::int64_t hi) {
  std::vector<Vec> out;
  if (dim == 0 || hi < lo) return out;
  Vec cur(dim);
  for (Index i = 0; i < dim; ++i) cur(i) = lo;
  for (;;) {
    out.push_back(cur);
    Index i = dim - 1;
    while (i >= 0 && cur(i) == hi) {
      cur(i) = lo;
      --i;
    }
    if (i < 0) return out;
    cur(i) += 1;
  }
}

}  // namespace abconv
