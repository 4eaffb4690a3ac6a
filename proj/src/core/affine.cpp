#include "abconv/core/affine.hpp"

namespace abconv {

Rational AffineFunctional::operator()(const Vec& x) const { return pairing(slope, x) + offset; }

bool affine_less(const AffineFunctional& a, const AffineFunctional& b) {
  if (a.slope != b.slope) return lex_less(a.slope, b.slope);
  return a.offset < b.offset;
}

std::string to_string(const AffineFunctional& h) {
  return "<" + to_string(h.slope) + ", x> + " + to_string(h.offset);
}

}  // namespace abconv
