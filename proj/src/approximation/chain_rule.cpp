#include "abconv/approximation/chain_rule.hpp"

#include <algorithm>

namespace abconv {

namespace {

struct Interval {
  Rational lo;
  Rational hi;
};

/// {other : (.., s, ..) in conv(points)} with s at index `at`; nothing when
/// s is outside.
std::optional<Interval> fibre(const std::vector<Vec>& points, Index at, const Rational& s) {
  const Index other = 1 - at;
  std::optional<Interval> out;
  auto add = [&](const Rational& v) {
    if (!out) {
      out = Interval{v, v};
    } else {
      if (v < out->lo) out->lo = v;
      if (out->hi < v) out->hi = v;
    }
  };
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Vec& p = points[i];
    if (p(at) == s) add(p(other));
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Vec& q = points[j];
      const bool between = (p(at) < s && s < q(at)) || (q(at) < s && s < p(at));
      if (!between) continue;
      const Rational w = (s - p(at)) / (q(at) - p(at));
      add(Rational(p(other) + w * (q(other) - p(other))));
    }
  }
  return out;
}

PolyCone tangent_cone(const PolyFunc& f, const Vec& at, Index first) {
  std::vector<Vec> rows;
  for (std::size_t i : f.active_pieces(at)) {
    Vec row = zeros(4);
    row(first) = f.pieces()[i].slope(0);
    row(first + 1) = f.pieces()[i].slope(1);
    row(3) = -1;
    rows.push_back(row);
  }
  return cone_rays_from_inequalities(rows, 4);
}

}  // namespace

Polytope subdiff_relation(const PolyFunc& f, const Rational& u, const Rational& v) {
  if (f.dim() != 2) throw DimensionError("subdiff_relation: function of two real variables expected");
  std::vector<Vec> points;
  for (std::size_t i : f.active_pieces(vec({u, v}))) {
    const Vec& a = f.pieces()[i].slope;
    points.push_back(vec({a(0), Rational(-a(1))}));
  }
  return Polytope(2, points).reduced();
}

Polytope compose_relations(const Polytope& first, const Polytope& second) {
  if (first.dim() != 2 || second.dim() != 2) throw DimensionError("compose_relations: planar relations expected");
  if (first.is_empty() || second.is_empty()) return Polytope::empty(2);
  std::vector<Rational> ss;
  for (const Vec& p : first.vertices()) ss.push_back(p(1));
  for (const Vec& p : second.vertices()) ss.push_back(p(0));
  std::sort(ss.begin(), ss.end());
  ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
  std::vector<Vec> corners;
  for (const Rational& s : ss) {
    const auto t = fibre(first.vertices(), 1, s);
    const auto r = fibre(second.vertices(), 0, s);
    if (!t || !r) continue;
    for (const Rational& tv : {t->lo, t->hi}) {
      for (const Rational& rv : {r->lo, r->hi}) corners.push_back(vec({tv, rv}));
    }
  }
  if (corners.empty()) return Polytope::empty(2);
  return Polytope(2, corners).reduced();
}

ChainRuleReport chain_rule_check(const PolyFunc& f1, const PolyFunc& f2, const Rational& x, const Rational& y,
                                 const Rational& z) {
  if (f1.dim() != 2 || f2.dim() != 2) throw DimensionError("chain_rule_check: functions of two real variables expected");
  const PolyConvolutionValue conv = infimal_convolution(f1, f2, x, z);
  const Rational at_y = f1(vec({x, y})) + f2(vec({y, z}));
  if (!conv.value.is_finite() || conv.value.value() != at_y) {
    throw HypothesisViolation("chain_rule_check: the convolution is not exact at the given point",
                              "convolution value " + to_string(conv.value) + ", f1(x,y) + f2(y,z) = " + to_string(at_y));
  }
  const std::optional<PolyFunc> h = convolution_function(f1, f2);
  if (!h) throw std::logic_error("chain_rule_check: finite convolution without pieces");

  std::vector<Vec> lhs_points;
  for (std::size_t i : h->active_pieces(vec({x, z}))) {
    const Vec& a = h->pieces()[i].slope;
    lhs_points.push_back(vec({a(0), Rational(-a(1))}));
  }
  ChainRuleReport out{at_y,
                      Polytope(2, lhs_points).reduced(),
                      compose_relations(subdiff_relation(f1, x, y), subdiff_relation(f2, y, z)),
                      false,
                      general_position_check({tangent_cone(f1, vec({x, y}), 0), tangent_cone(f2, vec({y, z}), 1)})};
  out.equal = same_polytope(out.lhs, out.rhs);
  return out;
}

}  // namespace abconv
