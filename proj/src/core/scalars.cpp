#include <algorithm>
#include <cctype>

#include "abconv/core/extended.hpp"
#include "abconv/core/lex_scalar.hpp"

namespace abconv {

std::string to_string(const ExtScalar& value) {
  if (value.is_top()) return "top";
  if (value.is_bottom()) return "bottom";
  return to_string(value.value());
}

ExtScalar parse_ext_scalar(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lowered == "top" || lowered == "+inf" || lowered == "inf") return ExtScalar::top();
  if (lowered == "bottom" || lowered == "-inf") return ExtScalar::bottom();
  return ExtScalar(parse_rational(text));
}

std::string to_string(const LexScalar& value) {
  if (value.infinitesimal() == 0) return to_string(value.standard());
  return "(" + to_string(value.standard()) + ", " + to_string(value.infinitesimal()) + ")";
}

}  // namespace abconv
