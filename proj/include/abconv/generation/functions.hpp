#pragma once

#include <vector>

#include "abconv/core/affine.hpp"
#include "abconv/core/extended.hpp"
#include "abconv/core/linalg.hpp"

namespace abconv {

/// Polyhedral convex function x -> max_i h_i(x), finite everywhere.
class PolyFunc {
 public:
  PolyFunc(Index dim, std::vector<AffineFunctional> pieces);

  Index dim() const { return dim_; }
  const std::vector<AffineFunctional>& pieces() const { return pieces_; }

  Rational operator()(const Vec& x) const;

  /// Every piece is linear (offset 0).
  bool is_sublinear() const;

  /// Indices of the pieces attaining the max at x.
  std::vector<std::size_t> active_pieces(const Vec& x) const;

 private:
  Index dim_;
  std::vector<AffineFunctional> pieces_;
};

/// inf_x (f(x) - h(x)), BOTTOM when unbounded below. Exact LP on the
/// epigraph of f.
ExtScalar min_gap(const PolyFunc& f, const AffineFunctional& h);

/// f >= g everywhere.
bool dominates(const PolyFunc& f, const PolyFunc& g);

/// f == g as functions on R^n (two-sided domination).
bool same_function(const PolyFunc& f, const PolyFunc& g);

/// A finite nonempty set H of affine minorant candidates; duplicates are
/// removed (first occurrence kept) so indices are stable.
class GeneratorSet {
 public:
  GeneratorSet(Index dim, std::vector<AffineFunctional> members);

  Index dim() const { return dim_; }
  const std::vector<AffineFunctional>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

 private:
  Index dim_;
  std::vector<AffineFunctional> members_;
};

/// An extended-valued function sampled on a finite grid. TOP marks points
/// outside the effective domain; BOTTOM is rejected.
template <typename Scalar>
class BasicSampledFunc {
 public:
  using Point = Vector<Scalar>;
  using Value = Extended<Scalar>;

  BasicSampledFunc(std::vector<Point> grid, std::vector<Value> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (grid_.size() != values_.size()) throw DimensionError("sampled function: grid and values differ in length");
    for (std::size_t i = 0; i < grid_.size(); ++i) {
      if (grid_[i].size() != grid_.front().size()) throw DimensionError("sampled function: mixed grid dimensions");
      if (values_[i].is_bottom()) throw DomainError("sampled function: BOTTOM values are not allowed");
      for (std::size_t j = 0; j < i; ++j) {
        if (grid_[j] == grid_[i]) throw DomainError("sampled function: repeated grid point");
      }
    }
  }

  Index dim() const { return grid_.empty() ? 0 : grid_.front().size(); }
  std::size_t size() const { return grid_.size(); }
  const std::vector<Point>& grid() const { return grid_; }
  const std::vector<Value>& values() const { return values_; }

  /// Indices of grid points with a finite value.
  std::vector<std::size_t> domain() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i].is_finite()) out.push_back(i);
    }
    return out;
  }

 private:
  std::vector<Point> grid_;
  std::vector<Value> values_;
};

using SampledFunc = BasicSampledFunc<Rational>;

/// Samples a polyhedral function on a grid.
SampledFunc sample(const PolyFunc& f, const std::vector<Vec>& grid);

/// Points of the integer box [lo, hi]^dim in lexicographic order.
std::vector<Vec> integer_grid(Index dim, std::int64_t lo, std::int64_t hi);

}  // namespace abconv
