#pragma once

#include <string>

#include "abconv/core/linalg.hpp"

namespace abconv {

/// x -> <slope, x> + offset. Offset 0 is a linear functional.
struct AffineFunctional {
  Vec slope;
  Rational offset{0};

  Index dim() const { return slope.size(); }
  bool is_linear() const { return offset == 0; }
  Rational operator()(const Vec& x) const;

  friend bool operator==(const AffineFunctional& a, const AffineFunctional& b) {
    return a.slope == b.slope && a.offset == b.offset;
  }
};

/// Lexicographic order on (slope, offset), used for deduplication.
bool affine_less(const AffineFunctional& a, const AffineFunctional& b);

std::string to_string(const AffineFunctional& h);

}  // namespace abconv
