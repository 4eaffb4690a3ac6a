#pragma once

#include <optional>
#include <vector>

#include "abconv/generation/functions.hpp"

namespace abconv {

/// Indices into a GeneratorSet: the members h with h <= p.
struct SupportSet {
  std::vector<std::size_t> indices;

  bool empty() const { return indices.empty(); }
};

/// Supremum of an H-support set. `function` is absent when the support set
/// is empty (sup of the empty set), which is reported rather than turned into
/// a BOTTOM-valued function.
template <typename F>
struct Envelope {
  SupportSet support;
  std::optional<F> function;

  bool degenerate() const { return !function.has_value(); }
};

/// {h in H : h <= p on R^n}, decided per member by an exact LP.
SupportSet h_support_set(const PolyFunc& p, const GeneratorSet& h);

/// {h in H : h(x) <= p(x) at every grid point}.
SupportSet h_support_set(const SampledFunc& p, const GeneratorSet& h);

Envelope<PolyFunc> h_convex_envelope(const PolyFunc& p, const GeneratorSet& h);
Envelope<SampledFunc> h_convex_envelope(const SampledFunc& p, const GeneratorSet& h);

/// p equals the supremum of its H-support set (as functions on R^n for
/// PolyFunc, at every grid point for SampledFunc).
bool is_h_convex(const PolyFunc& p, const GeneratorSet& h);
bool is_h_convex(const SampledFunc& p, const GeneratorSet& h);

}  // namespace abconv
