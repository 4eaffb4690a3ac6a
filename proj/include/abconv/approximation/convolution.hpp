#pragma once

#include <optional>
#include <vector>

#include "abconv/core/extended.hpp"
#include "abconv/core/lex_scalar.hpp"
#include "abconv/generation/functions.hpp"

namespace abconv {

using LexExt = Extended<LexScalar>;

std::string to_string(const LexExt& value);

/// A function on a finite grid of pairs (u, v), values[i][j] = f(us[i], vs[j]);
/// TOP marks points outside the domain.
class GridFunction {
 public:
  GridFunction(std::vector<Vec> us, std::vector<Vec> vs, std::vector<std::vector<LexExt>> values);

  const std::vector<Vec>& us() const { return us_; }
  const std::vector<Vec>& vs() const { return vs_; }
  const LexExt& at(std::size_t i, std::size_t j) const { return values_[i][j]; }

 private:
  std::vector<Vec> us_;
  std::vector<Vec> vs_;
  std::vector<std::vector<LexExt>> values_;
};

enum class Exactness { Exact, InfinitesimallyExact, Inexact };

const char* to_string(Exactness e);

/// How value compares with f1(x, y) + f2(y, z): equal, equal up to an
/// infinitesimal, or neither.
Exactness classify_exactness(const LexExt& value, const LexExt& sum);

struct ConvolutionEntry {
  std::size_t x = 0;
  std::size_t z = 0;
  LexExt value;
  /// Smallest index y attaining the minimum; empty when every sum is TOP.
  std::optional<std::size_t> witness;
  Exactness exactness = Exactness::Inexact;
  /// Every y where the convolution is infinitesimally exact.
  std::vector<std::size_t> near_witnesses;
};

struct GridConvolution {
  std::vector<Vec> xs;
  std::vector<Vec> ys;
  std::vector<Vec> zs;
  /// Row-major over (x, z).
  std::vector<ConvolutionEntry> entries;

  const ConvolutionEntry& at(std::size_t x, std::size_t z) const { return entries[x * zs.size() + z]; }
};

/// (f2 △ f1)(x, z) = min over the common y grid of f1(x, y) + f2(y, z).
/// Throws DomainError for an empty y grid and DimensionError when the y
/// grids differ.
GridConvolution infimal_convolution(const GridFunction& f1, const GridFunction& f2);

/// Exact one-dimensional convolution of polyhedral f1(x, y) and f2(y, z)
/// at (x, z): value and smallest minimizing breakpoint, BOTTOM when
/// unbounded below.
struct PolyConvolutionValue {
  ExtScalar value;
  std::optional<Rational> witness;
};

PolyConvolutionValue infimal_convolution(const PolyFunc& f1, const PolyFunc& f2, const Rational& x, const Rational& z);

/// The convolution (x, z) -> inf_y f1(x, y) + f2(y, z) as a polyhedral
/// function, by Fourier-Motzkin elimination of y; empty when it is
/// identically BOTTOM.
std::optional<PolyFunc> convolution_function(const PolyFunc& f1, const PolyFunc& f2);

}  // namespace abconv
