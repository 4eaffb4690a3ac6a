#include "abconv/generation/envelope.hpp"

namespace abconv {

SupportSet h_support_set(const PolyFunc& p, const GeneratorSet& h) {
  if (p.dim() != h.dim()) throw DimensionError("h_support_set: dimension mismatch");
  SupportSet out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (min_gap(p, h.members()[i]) >= ExtScalar(Rational(0))) out.indices.push_back(i);
  }
  return out;
}

SupportSet h_support_set(const SampledFunc& p, const GeneratorSet& h) {
  if (p.size() > 0 && p.dim() != h.dim()) throw DimensionError("h_support_set: dimension mismatch");
  SupportSet out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    bool below = true;
    for (std::size_t g = 0; g < p.size() && below; ++g) {
      below = ExtScalar(h.members()[i](p.grid()[g])) <= p.values()[g];
    }
    if (below) out.indices.push_back(i);
  }
  return out;
}

Envelope<PolyFunc> h_convex_envelope(const PolyFunc& p, const GeneratorSet& h) {
  Envelope<PolyFunc> out;
  out.support = h_support_set(p, h);
  if (out.support.empty()) return out;
  std::vector<AffineFunctional> pieces;
  for (std::size_t i : out.support.indices) pieces.push_back(h.members()[i]);
  out.function.emplace(p.dim(), std::move(pieces));
  return out;
}

Envelope<SampledFunc> h_convex_envelope(const SampledFunc& p, const GeneratorSet& h) {
  Envelope<SampledFunc> out;
  out.support = h_support_set(p, h);
  if (out.support.empty()) return out;
  std::vector<ExtScalar> values;
  for (const Vec& x : p.grid()) {
    Rational best = h.members()[out.support.indices.front()](x);
    for (std::size_t i : out.support.indices) {
      const Rational v = h.members()[i](x);
      if (best < v) best = v;
    }
    values.emplace_back(best);
  }
  out.function.emplace(p.grid(), std::move(values));
  return out;
}

bool is_h_convex(const PolyFunc& p, const GeneratorSet& h) {
  const Envelope<PolyFunc> env = h_convex_envelope(p, h);
  return !env.degenerate() && same_function(*env.function, p);
}

bool is_h_convex(const SampledFunc& p, const GeneratorSet& h) {
  const Envelope<SampledFunc> env = h_convex_envelope(p, h);
  return !env.degenerate() && env.function->values() == p.values();
}

}  // namespace abconv
