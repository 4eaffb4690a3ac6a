#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "abconv/approximation.hpp"
#include "abconv/calculus.hpp"
#include "abconv/generation.hpp"
#include "abconv/separation.hpp"

namespace abconv::suites {

namespace {

using Rng = std::mt19937_64;

class Recorder {
 public:
  Recorder(const char* name, int criterion) {
    out_.name = name;
    out_.criterion = criterion;
  }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++out_.checks;
    if (ok) return;
    ++out_.failed;
    if (out_.failures.size() < 10) out_.failures.push_back("instance " + std::to_string(out_.instances) + ": " + describe());
  }

  void instance() { ++out_.instances; }
  void note(const std::string& key, std::size_t value) { out_.notes.emplace_back(key, value); }
  SuiteOutcome done() { return std::move(out_); }

 private:
  SuiteOutcome out_;
};

Rational rq(Rng& rng, int lo, int hi, int den = 1) {
  std::uniform_int_distribution<int> d(lo, hi);
  return make_rational(d(rng), den);
}

int ri(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Vec rvec(Rng& rng, Index dim, int lo, int hi, int den = 1) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rq(rng, lo, hi, den);
  return v;
}

PolyFunc rsublinear(Rng& rng, Index dim, int pieces, int lo = -3, int hi = 3) {
  std::vector<AffineFunctional> out;
  for (int i = 0; i < pieces; ++i) out.push_back({rvec(rng, dim, lo, hi), Rational(0)});
  return PolyFunc(dim, out);
}

PolyFunc rpoly(Rng& rng, Index dim, int pieces) {
  std::vector<AffineFunctional> out;
  for (int i = 0; i < pieces; ++i) out.push_back({rvec(rng, dim, -3, 3), rq(rng, -4, 4)});
  return PolyFunc(dim, out);
}

PolyCone rcone(Rng& rng, Index dim, int max_rays = 4) {
  std::vector<Vec> rays;
  const int n = ri(rng, 1, max_rays);
  for (int i = 0; i < n; ++i) rays.push_back(rvec(rng, dim, -3, 3));
  return PolyCone(dim, rays);
}

std::string str(const Vec& v) { return to_string(v); }

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

// ---- independent oracles --------------------------------------------------

/// max over finite samples of <y, x> - f(x), by direct enumeration
ExtScalar definitional_sup(const SampledFunc& f, const Vec& y) {
  bool any = false;
  Rational best;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.values()[i].is_finite()) continue;
    const Rational v = dot(y, f.grid()[i]) - f.values()[i].value();
    if (!any || best < v) best = v;
    any = true;
  }
  return any ? ExtScalar(best) : ExtScalar::bottom();
}

/// Lower convex envelope of 1-D samples at each finite sample, from the
/// lower hull vertices found by sorting and a monotone stack.
std::vector<ExtScalar> lower_envelope_1d(const SampledFunc& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.values()[i].is_finite()) pts.emplace_back(f.grid()[i](0), f.values()[i].value());
  }
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<Rational, Rational>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull.back();
      // drop a unless it lies strictly below the segment o-p
      if ((a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first) > 0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }
  std::vector<ExtScalar> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!f.values()[i].is_finite()) {
      out.push_back(ExtScalar::top());
      continue;
    }
    const Rational x = f.grid()[i](0);
    ExtScalar v = ExtScalar::top();
    for (std::size_t k = 0; k < hull.size(); ++k) {
      if (hull[k].first == x) v = hull[k].second;
      if (k + 1 < hull.size() && hull[k].first < x && x < hull[k + 1].first) {
        const Rational w = (x - hull[k].first) / (hull[k + 1].first - hull[k].first);
        v = ExtScalar(Rational(hull[k].second + w * (hull[k + 1].second - hull[k].second)));
      }
    }
    out.push_back(v);
  }
  return out;
}

/// Convex envelope of 2-D samples at each finite sample: the least value
/// interpolated over segments and triangles of finite samples containing it.
std::vector<ExtScalar> lower_envelope_2d(const SampledFunc& f) {
  std::vector<std::size_t> dom = f.domain();
  const auto& g = f.grid();
  auto val = [&](std::size_t i) -> const Rational& { return f.values()[i].value(); };
  std::vector<ExtScalar> out;
  for (std::size_t p = 0; p < f.size(); ++p) {
    if (!f.values()[p].is_finite()) {
      out.push_back(ExtScalar::top());
      continue;
    }
    Rational best = val(p);
    const Rational px = g[p](0), py = g[p](1);
    for (std::size_t ia = 0; ia < dom.size(); ++ia) {
      const std::size_t a = dom[ia];
      for (std::size_t ib = ia + 1; ib < dom.size(); ++ib) {
        const std::size_t b = dom[ib];
        // segment a-b
        const Rational dx = g[b](0) - g[a](0), dy = g[b](1) - g[a](1);
        const Rational cross = dx * (py - g[a](1)) - dy * (px - g[a](0));
        if (cross == 0) {
          const Rational len = dx * dx + dy * dy;
          const Rational w = (dx * (px - g[a](0)) + dy * (py - g[a](1))) / len;
          if (w >= 0 && w <= 1) best = std::min(best, Rational(val(a) + w * (val(b) - val(a))));
        }
        for (std::size_t ic = ib + 1; ic < dom.size(); ++ic) {
          const std::size_t c = dom[ic];
          const Rational det = (g[b](0) - g[a](0)) * (g[c](1) - g[a](1)) - (g[c](0) - g[a](0)) * (g[b](1) - g[a](1));
          if (det == 0) continue;
          const Rational l1 = ((px - g[a](0)) * (g[c](1) - g[a](1)) - (g[c](0) - g[a](0)) * (py - g[a](1))) / det;
          const Rational l2 = ((g[b](0) - g[a](0)) * (py - g[a](1)) - (px - g[a](0)) * (g[b](1) - g[a](1))) / det;
          const Rational l0 = 1 - l1 - l2;
          if (l0 < 0 || l1 < 0 || l2 < 0) continue;
          best = std::min(best, Rational(l0 * val(a) + l1 * val(b) + l2 * val(c)));
        }
      }
    }
    out.push_back(best);
  }
  return out;
}

SampledFunc random_sampled(Rng& rng, Index dim) {
  std::vector<Vec> grid;
  if (dim == 1) {
    const int n = ri(rng, 2, 64);
    const int den = ri(rng, 1, 3);
    std::vector<int> pos;
    while (static_cast<int>(pos.size()) < n) {
      const int p = ri(rng, -80, 80);
      if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
    }
    for (int p : pos) grid.push_back(vec({make_rational(p, den)}));
  } else {
    const int a = ri(rng, 2, 5), b = ri(rng, 2, 5);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) grid.push_back(vec({make_rational(i - 2), make_rational(j - 2)}));
    }
  }
  std::vector<ExtScalar> values;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values.push_back(ri(rng, 0, 7) == 0 && i > 0 ? ExtScalar::top() : ExtScalar(rq(rng, -20, 20, ri(rng, 1, 4))));
  }
  return SampledFunc(grid, values);
}

}  // namespace

SuiteOutcome fenchel_suite(std::uint64_t seed) {
  Recorder rec("fenchel", 1);
  Rng rng(seed ^ 0x1001);
  for (int trial = 0; trial < 200; ++trial) {
    rec.instance();
    const Index dim = trial < 100 ? 1 : 2;
    const SampledFunc f = random_sampled(rng, dim);
    std::vector<Vec> dual;
    const int nd = ri(rng, 1, 24);
    for (int k = 0; k < nd; ++k) dual.push_back(rvec(rng, dim, -12, 12, 2));
    dual = unique_points(dual);
    const SampledFunc fs = fenchel_conjugate(f, dual);
    for (std::size_t k = 0; k < dual.size(); ++k) {
      const ExtScalar expect = definitional_sup(f, dual[k]);
      rec.check(fs.values()[k] == expect, [&] { return "conjugate at " + str(dual[k]) + " differs from the definitional sup"; });
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f.values()[i].is_finite()) continue;
        rec.check(f.values()[i] + fs.values()[k] >= ExtScalar(dot(f.grid()[i], dual[k])),
                  [&] { return "Fenchel-Young fails at " + str(f.grid()[i]) + ", " + str(dual[k]); });
      }
    }
    const SampledFunc fss = biconjugate(f);
    const std::vector<ExtScalar> env = dim == 1 ? lower_envelope_1d(f) : lower_envelope_2d(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
      rec.check(fss.values()[i] <= f.values()[i], [&] { return "f** > f at " + str(f.grid()[i]); });
      if (!f.values()[i].is_finite()) continue;
      const bool on_hull = env[i] == f.values()[i];
      rec.check((fss.values()[i] == f.values()[i]) == on_hull,
                [&] { return "f** = f disagrees with the lower hull at " + str(f.grid()[i]); });
      rec.check(fss.values()[i] == env[i], [&] { return "f** differs from the convex envelope at " + str(f.grid()[i]); });
    }
  }
  return rec.done();
}

SuiteOutcome minkowski_suite(std::uint64_t seed) {
  Recorder rec("minkowski", 2);
  Rng rng(seed ^ 0x2002);
  for (int trial = 0; trial < 100; ++trial) {
    rec.instance();
    std::vector<Vec> pts;
    const int n = ri(rng, 1, 6);
    for (int k = 0; k < n; ++k) pts.push_back(rvec(rng, 2, -6, 6, ri(rng, 1, 2)));
    const Polytope u(2, pts);
    const Polytope back = support_set(support_function(u));
    rec.check(same_polytope(back, u), [&] { return "support set of the support function differs from U"; });
  }
  for (int trial = 0; trial < 100; ++trial) {
    rec.instance();
    const Index dim = 1 + trial % 2;
    const PolyFunc p = rpoly(rng, dim, ri(rng, 1, 4));
    std::vector<AffineFunctional> members;
    for (const auto& piece : p.pieces()) members.push_back({piece.slope, Rational(piece.offset - ri(rng, 0, 2))});
    for (int k = 0; k < 6; ++k) members.push_back({rvec(rng, dim, -3, 3), rq(rng, -6, 2)});
    const GeneratorSet h(dim, members);
    const Envelope<PolyFunc> env = h_convex_envelope(p, h);
    rec.check(!env.degenerate(), [] { return "envelope is degenerate"; });
    if (!env.degenerate()) rec.check(is_h_convex(*env.function, h), [] { return "envelope is not H-convex"; });
  }
  return rec.done();
}

SuiteOutcome separation_suite(std::uint64_t seed) {
  Recorder rec("separation", 3);
  Rng rng(seed ^ 0x3003);
  std::vector<ConePair> corpus;
  const PolyCone pos(1, {vec({Rational(1)})});
  const PolyCone neg(1, {vec({Rational(-1)})});
  corpus.emplace_back(pos, neg);
  corpus.emplace_back(pos, pos);
  corpus.emplace_back(PolyCone(2, {vec({Rational(1), Rational(0)})}), PolyCone(2, {vec({Rational(0), Rational(1)})}));
  corpus.emplace_back(PolyCone::zero(2), PolyCone::zero(2));
  for (int k = 0; k < 100; ++k) {
    const Index dim = 1 + k % 2;
    corpus.emplace_back(ri(rng, 0, 9) == 0 ? PolyCone::zero(dim) : rcone(rng, dim, 3), rcone(rng, dim, 3));
  }
  for (const ConePair& pair : corpus) {
    rec.instance();
    const DiagonalEquivalence e = nonoblate_diagonal_equivalence(pair);
    rec.check(e.agree(), [] { return "nonoblate check and its diagonal form disagree"; });
  }
  for (int k = 0; k < 100; ++k) {
    rec.instance();
    const PolyCone c = rcone(rng, 2 + k % 2);
    rec.check(same_cone(polar(polar(c)), c), [] { return "polar is not involutive"; });
  }
  std::size_t gp2 = 0, gp3 = 0;
  for (int attempt = 0; attempt < 20000 && (gp2 < 100 || gp3 < 50); ++attempt) {
    const Index dim = gp2 < 100 ? 2 : 3;
    const PolyCone k1 = rcone(rng, dim);
    const PolyCone k2 = rcone(rng, dim);
    if (!general_position_check({k1, k2}).holds()) continue;
    (dim == 2 ? gp2 : gp3)++;
    rec.instance();
    const PolarDecompositionReport r = polar_decomposition_check({k1, k2});
    rec.check(r.hypothesis_holds && r.equal, [] { return "polar decomposition fails on a general-position pair"; });
  }
  rec.check(gp2 == 100 && gp3 == 50, [] { return "not enough general-position pairs generated"; });
  rec.note("general_position_pairs_r2", gp2);
  rec.note("general_position_pairs_r3", gp3);
  return rec.done();
}

SuiteOutcome sandwich_suite(std::uint64_t seed) {
  Recorder rec("sandwich", 4);
  Rng rng(seed ^ 0x4004);
  std::size_t witnesses = 0, violations = 0;
  for (int trial = 0; trial < 150; ++trial) {
    rec.instance();
    const bool feasible = trial < 100;
    const Index dim = 1 + trial % 3;
    const PolyFunc p = rsublinear(rng, dim, ri(rng, 1, 4));
    std::vector<AffineFunctional> qp;
    if (feasible) {
      // Q = support function of -S with S inside dP
      const int ns = ri(rng, 1, 3);
      for (int s = 0; s < ns; ++s) {
        Vec point = zeros(dim);
        Rational total = 0;
        std::vector<Rational> w;
        for (std::size_t j = 0; j < p.pieces().size(); ++j) {
          w.push_back(rq(rng, 0, 4));
          total += w.back();
        }
        if (total == 0) {
          w[0] = 1;
          total = 1;
        }
        for (std::size_t j = 0; j < p.pieces().size(); ++j) point += Rational(w[j] / total) * p.pieces()[j].slope;
        qp.push_back({Vec(-point), Rational(0)});
      }
    } else {
      // Q(x0) = -P(x0) - 1 at a chosen x0, so P + Q < 0 there
      Vec x0 = rvec(rng, dim, -3, 3);
      if (is_zero(x0)) x0(0) = 1;
      const Vec q = Rational(-(p(x0) + 1) / dot(x0, x0)) * x0;
      qp.push_back({q, Rational(0)});
      qp.push_back({Vec(q - rq(rng, 0, 3) * x0), Rational(0)});
    }
    const PolyFunc q(dim, qp);
    const SandwichWitness w = sandwich(p, q);
    rec.check(w.functional.has_value() != w.violation.has_value(), [] { return "sandwich returned both or neither"; });
    if (feasible) {
      rec.check(w.separated(), [] { return "constructed-feasible instance yielded no witness"; });
    } else {
      rec.check(!w.separated(), [] { return "constructed-infeasible instance yielded a witness"; });
    }
    if (w.functional) {
      ++witnesses;
      const Vec& t = *w.functional;
      std::vector<Vec> points;
      for (Index i = 0; i < dim; ++i) {
        points.push_back(unit(dim, i));
        points.push_back(-unit(dim, i));
      }
      for (const auto& piece : p.pieces()) points.push_back(piece.slope);
      for (const auto& piece : q.pieces()) points.push_back(piece.slope);
      for (int s = 0; s < 100; ++s) points.push_back(rvec(rng, dim, -30, 30, 7));
      for (const Vec& x : points) {
        rec.check(-q(x) <= dot(t, x) && dot(t, x) <= p(x), [&] { return "witness fails at " + str(x); });
      }
    }
    if (w.violation) {
      ++violations;
      rec.check(p(*w.violation) + q(*w.violation) < 0, [] { return "violation point has P + Q >= 0"; });
    }
  }
  rec.note("witnesses", witnesses);
  rec.note("violations", violations);
  return rec.done();
}

SuiteOutcome calculus_suite(std::uint64_t seed) {
  Recorder rec("calculus", 5);
  Rng rng(seed ^ 0x5005);
  auto rmat = [&](Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) m(i, j) = rq(rng, -4, 4);
    }
    return m;
  };
  for (int trial = 0; trial < 200; ++trial) {
    rec.instance();
    const Index m = ri(rng, 1, 3), n = ri(rng, 1, 3);
    std::vector<Mat> members;
    const int k = ri(rng, 1, 4);
    for (int i = 0; i < k; ++i) members.push_back(rmat(m, n));
    const OperatorFamily fam(members);
    const Vec x = rvec(rng, n, -10, 10, 3);
    // componentwise sup written out directly
    Vec expect(m);
    for (Index r = 0; r < m; ++r) {
      Rational best;
      for (std::size_t i = 0; i < members.size(); ++i) {
        Rational v = 0;
        for (Index c = 0; c < n; ++c) v += members[i](r, c) * x(c);
        if (i == 0 || best < v) best = v;
      }
      expect(r) = best;
    }
    const Vec via = canonical_sublinear(family_embed(fam, x));
    rec.check(via == expect && p_family(fam, x) == expect, [] { return "factorization through the canonical operator fails"; });
  }

  std::size_t strict = 0;
  {
    rec.instance();
    Mat one = Mat::Identity(2, 2);
    const OperatorFamily diag({one, Mat(Mat::Zero(2, 2))});
    Mat corner = Mat::Zero(2, 2);
    corner(0, 0) = 1;
    const bool member = support_hull(diag).contains(corner);
    rec.check(member && dominated_by_family(corner, diag) && !in_family_hull(corner, diag),
              [] { return "diagonal example is not a strict support-hull member"; });
    if (member && !in_family_hull(corner, diag)) ++strict;
  }
  for (int trial = 0; trial < 100; ++trial) {
    rec.instance();
    const Index m = 1 + trial % 2, n = 1 + (trial / 2) % 2;
    std::vector<Mat> members;
    for (int i = 0; i < 3; ++i) members.push_back(rmat(m, n));
    const OperatorFamily fam(members);
    Mat t(m, n);
    if (trial % 2 == 0) {
      for (Index r = 0; r < m; ++r) {
        std::vector<Rational> w{rq(rng, 0, 4), rq(rng, 0, 4), rq(rng, 1, 4)};
        const Rational total = w[0] + w[1] + w[2];
        for (Index c = 0; c < n; ++c) {
          Rational v = 0;
          for (int i = 0; i < 3; ++i) v += w[static_cast<std::size_t>(i)] / total * members[static_cast<std::size_t>(i)](r, c);
          t(r, c) = v;
        }
      }
    } else {
      t = rmat(m, n);
    }
    const bool member = support_hull(fam).contains(t);
    rec.check(member == dominated_by_family(t, fam), [] { return "row-wise hull disagrees with Tx <= p(x)"; });
    if (trial % 2 == 0) rec.check(member, [] { return "row-wise convex combination rejected"; });
    if (in_family_hull(t, fam)) rec.check(member, [] { return "member of conv rejected by cop"; });
    if (member && !in_family_hull(t, fam)) ++strict;
  }
  rec.check(strict >= 1, [] { return "no certified member of cop \\ conv"; });
  rec.note("strict_support_hull_members", strict);

  for (int trial = 0; trial < 50; ++trial) {
    rec.instance();
    const Index n = ri(rng, 1, 2), m = ri(rng, 1, 2);
    VectorSublinear p1;
    for (Index j = 0; j < m; ++j) p1.push_back(rsublinear(rng, n, ri(rng, 1, 3)));
    const PolyFunc p2 = rsublinear(rng, m, ri(rng, 1, 3), 0, 3);
    const CompositionReport r = composition_subdifferential(p1, p2);
    rec.check(r.agree && same_polytope(r.direct, r.formula), [] { return "DIRECT and FORMULA differ"; });
    for (int s = 0; s < 20; ++s) {
      const Vec x = rvec(rng, n, -12, 12, 5);
      Vec e(m);
      for (Index j = 0; j < m; ++j) e(j) = p1[static_cast<std::size_t>(j)](x);
      for (const Vec& t : r.direct.vertices()) rec.check(dot(t, x) <= p2(e), [&] { return "unsound member at " + str(x); });
    }
  }
  return rec.done();
}

SuiteOutcome approximation_suite(std::uint64_t seed) {
  Recorder rec("approximation", 6);
  Rng rng(seed ^ 0x6006);
  for (int trial = 0; trial < 100; ++trial) {
    rec.instance();
    const Index dim = 1 + trial % 2;
    const PolyFunc f = rpoly(rng, dim, ri(rng, 1, 4));
    const Vec xbar = rvec(rng, dim, -4, 4, 2);
    const Rational e1 = rq(rng, 0, 8, 4);
    const Rational e2 = e1 + rq(rng, 0, 8, 4);
    const EpsSubdiff small = eps_subdifferential(f, xbar, e1);
    const EpsSubdiff large = eps_subdifferential(f, xbar, e2);
    for (const Vec& v : small.description.vertices()) {
      rec.check(large.contains(v), [] { return "eps-subdifferential is not monotone"; });
      rec.check(in_eps_subdifferential_conjugate(f, xbar, e1, v) && in_eps_subdifferential_primal(f, xbar, e1, v),
                [] { return "vertex fails the membership tests"; });
    }
    for (int s = 0; s < 5; ++s) {
      const Vec y = rvec(rng, dim, -12, 12, 4);
      const bool a = in_eps_subdifferential_conjugate(f, xbar, e1, y);
      rec.check(a == in_eps_subdifferential_primal(f, xbar, e1, y) && a == small.contains(y),
                [] { return "conjugate and universal-inequality routes disagree"; });
    }
    const EpsLimit lim = eps_limit(f, xbar);
    rec.check(lim.stable_from.has_value(), [] { return "eps chain did not stabilize"; });
    rec.check(same_polytope(lim.limit, subdifferential(f, xbar)), [] { return "eps limit differs from the subdifferential"; });
    for (std::size_t j = 0; j + 1 < lim.chain.size(); ++j) {
      for (const Vec& v : lim.chain[j + 1].vertices()) rec.check(in_hull(v, lim.chain[j]), [] { return "eps chain not nested"; });
    }
  }
  for (int trial = 0; trial < 50; ++trial) {
    rec.instance();
    const Index dim = 1 + trial % 2;
    std::vector<LexAffine> pieces;
    const int k = ri(rng, 2, 4);
    for (int i = 0; i < k; ++i) {
      pieces.push_back({rvec(rng, dim, -3, 3), rvec(rng, dim, -2, 2), LexScalar(rq(rng, -2, 2), rq(rng, -3, 3))});
    }
    const LexPolyFunc f(dim, pieces);
    const Vec xbar = rvec(rng, dim, -2, 2);
    const Polytope d = infinitesimal_subdifferential(f, xbar);
    rec.check(same_polytope(d, eps_subdifferential(f.standard_part(), xbar, Rational(0)).description),
              [] { return "infinitesimal subdifferential differs from the standard-part subdifferential"; });
  }
  std::size_t chains = 0, general = 0;
  for (int attempt = 0; attempt < 4000 && chains < 30; ++attempt) {
    const PolyFunc f1 = rpoly(rng, 2, ri(rng, 2, 3));
    const PolyFunc f2 = rpoly(rng, 2, ri(rng, 2, 3));
    const Rational x = rq(rng, -3, 3), z = rq(rng, -3, 3);
    const PolyConvolutionValue c = infimal_convolution(f1, f2, x, z);
    if (!c.value.is_finite()) continue;
    ++chains;
    rec.instance();
    const ChainRuleReport r = chain_rule_check(f1, f2, x, *c.witness, z);
    if (r.general_position.holds()) ++general;
    rec.check(r.general_position.holds(), [] { return "general position not recorded true"; });
    if (r.general_position.holds()) rec.check(r.equal, [] { return "chain rule sides differ"; });
  }
  rec.check(chains == 30, [] { return "not enough exact chain-rule instances"; });
  rec.note("chain_rule_instances", chains);
  rec.note("chain_rule_general_position", general);
  return rec.done();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fenchel", "minkowski", "separation", "sandwich", "calculus", "approximation"};
  return names;
}

SuiteOutcome run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "fenchel") return fenchel_suite(seed);
  if (name == "minkowski") return minkowski_suite(seed);
  if (name == "separation") return separation_suite(seed);
  if (name == "sandwich") return sandwich_suite(seed);
  if (name == "calculus") return calculus_suite(seed);
  if (name == "approximation") return approximation_suite(seed);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace abconv::suites
