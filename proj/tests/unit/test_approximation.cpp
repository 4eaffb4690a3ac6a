#include "printing.hpp"

#include <random>

#include "abconv/approximation.hpp"
#include "abconv/core/lp.hpp"

using namespace abconv;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }
Vec v1(Rational a) { return vec({std::move(a)}); }
AffineFunctional aff(Vec slope, Rational offset) { return {std::move(slope), std::move(offset)}; }
PolyFunc abs1() { return PolyFunc(1, {aff(v1(q(1)), q(0)), aff(v1(q(-1)), q(0))}); }

/// |u - v| as a function of two variables
PolyFunc abs_diff(std::int64_t scale = 1) {
  return PolyFunc(2, {aff(vec({q(scale), q(-scale)}), q(0)), aff(vec({q(-scale), q(scale)}), q(0))});
}

Rational random_q(std::mt19937_64& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> d(lo, hi);
  return make_rational(d(rng), den);
}

Vec random_vec(std::mt19937_64& rng, Index dim, int lo, int hi, int den = 1) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = random_q(rng, lo, hi, den);
  return v;
}

PolyFunc random_poly(std::mt19937_64& rng, Index dim, int pieces) {
  std::vector<AffineFunctional> out;
  for (int i = 0; i < pieces; ++i) out.push_back(aff(random_vec(rng, dim, -3, 3), random_q(rng, -4, 4, 1)));
  return PolyFunc(dim, out);
}

std::vector<Vec> interval(const Polytope& p) { return p.vertices(); }

/// min_y f1(x, y) + f2(y, z) by an LP in (y, t), independent of the
/// breakpoint enumeration
ExtScalar convolution_oracle(const PolyFunc& f1, const PolyFunc& f2, const Rational& x, const Rational& z) {
  LinearProgram lp(2);
  for (const auto& p : f1.pieces()) {
    for (const auto& r : f2.pieces()) {
      // t >= (p_y + r_y) y + const
      lp.add_le(vec({Rational(p.slope(1) + r.slope(0)), q(-1)}),
                Rational(-(p.slope(0) * x + p.offset + r.slope(1) * z + r.offset)));
    }
  }
  lp.set_objective(vec({q(0), q(1)}), Sense::Minimize);
  const LPResult res = lp_solve(lp, {false});
  if (res.status == LPStatus::Unbounded) return ExtScalar::bottom();
  return ExtScalar(res.value);
}

LexExt lex(std::int64_t s, std::int64_t i = 0) { return LexExt(LexScalar(q(s), q(i))); }

}  // namespace

TEST_CASE("eps_subdifferential") {
  SUBCASE("absolute value at 1 with eps 1/2") {
    const EpsSubdiff e = eps_subdifferential(abs1(), v1(q(1)), q(1, 2));
    CHECK(interval(e.description) == std::vector<Vec>{v1(q(1, 2)), v1(q(1))});
  }
  SUBCASE("absolute value at 1 with eps 0") {
    CHECK(interval(eps_subdifferential(abs1(), v1(q(1)), q(0)).description) == std::vector<Vec>{v1(q(1))});
  }
  SUBCASE("the kink absorbs eps") {
    for (const Rational eps : {q(0), q(1, 3), q(5)}) {
      CHECK(interval(eps_subdifferential(abs1(), v1(q(0)), eps).description) == std::vector<Vec>{v1(q(-1)), v1(q(1))});
    }
  }
  SUBCASE("negative eps") {
    CHECK_THROWS_AS(eps_subdifferential(abs1(), v1(q(0)), q(-1, 2)), DomainError);
    CHECK_THROWS_AS(in_eps_subdifferential_conjugate(abs1(), v1(q(0)), q(-1), v1(q(0))), DomainError);
  }
  SUBCASE("monotone in eps and two membership routes agree") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
      const Index n = 1 + trial % 2;
      const PolyFunc f = random_poly(rng, n, 1 + trial % 4);
      const Vec xbar = random_vec(rng, n, -6, 6, 2);
      const Rational e1 = random_q(rng, 0, 8, 4);
      const Rational e2 = e1 + random_q(rng, 0, 8, 4);
      const EpsSubdiff small = eps_subdifferential(f, xbar, e1);
      const EpsSubdiff large = eps_subdifferential(f, xbar, e2);
      for (const Vec& v : small.description.vertices()) CHECK(large.contains(v));
      for (int k = 0; k < 6; ++k) {
        const Vec y = random_vec(rng, n, -12, 12, 4);
        const bool a = in_eps_subdifferential_conjugate(f, xbar, e1, y);
        const bool b = in_eps_subdifferential_primal(f, xbar, e1, y);
        CHECK(a == b);
        CHECK(a == small.contains(y));
        if (a) CHECK(in_eps_subdifferential_primal(f, xbar, e2, y));
      }
      for (const Vec& v : small.description.vertices()) {
        CHECK(in_eps_subdifferential_conjugate(f, xbar, e1, v));
        CHECK(in_eps_subdifferential_primal(f, xbar, e1, v));
      }
    }
  }
  SUBCASE("intersection over eps stabilizes at the subdifferential") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
      const Index n = 1 + trial % 2;
      const PolyFunc f = random_poly(rng, n, 2 + trial % 3);
      const Vec xbar = random_vec(rng, n, -4, 4, 2);
      const EpsLimit lim = eps_limit(f, xbar);
      REQUIRE(lim.stable_from);
      CHECK(same_polytope(lim.limit, subdifferential(f, xbar)));
      CHECK(same_polytope(lim.limit, eps_subdifferential(f, xbar, q(0)).description));
      for (std::size_t j = 0; j + 1 < lim.chain.size(); ++j) {
        for (const Vec& v : lim.chain[j + 1].vertices()) CHECK(in_hull(v, lim.chain[j]));
      }
      for (const Vec& v : lim.limit.vertices()) CHECK(in_hull(v, lim.chain.back()));
    }
  }
}

TEST_CASE("infinitesimal_subdifferential") {
  const LexAffine plus{v1(q(1)), v1(q(0)), LexScalar(q(0), q(1))};
  const LexAffine minus{v1(q(-1)), v1(q(0)), LexScalar(q(0), q(1))};
  SUBCASE("lifted absolute value") {
    const LexPolyFunc f(1, {plus, minus});
    CHECK(interval(infinitesimal_subdifferential(f, v1(q(0)))) == std::vector<Vec>{v1(q(-1)), v1(q(1))});
  }
  SUBCASE("linear standard part") {
    const LexPolyFunc f(1, {{v1(q(3, 2)), v1(q(2)), LexScalar(q(1), q(-1))}});
    for (const Rational x : {q(-3), q(0), q(7, 2)}) {
      CHECK(interval(infinitesimal_subdifferential(f, v1(x))) == std::vector<Vec>{v1(q(3, 2))});
    }
  }
  SUBCASE("infinitesimal minimum") {
    const LexPolyFunc f(1, {{v1(q(1)), v1(q(1)), LexScalar(q(0))}, {v1(q(-1)), v1(q(1)), LexScalar(q(0))}});
    CHECK(is_infinitesimal_minimum(f, v1(q(0))));
    CHECK(in_infinitesimal_subdifferential(f, v1(q(0)), v1(q(0))));
    CHECK_FALSE(is_infinitesimal_minimum(f, v1(q(1))));
  }
  SUBCASE("near-active pieces differ from active ones") {
    // pieces differ only infinitesimally at 0: both belong
    const LexPolyFunc f(1, {{v1(q(1)), v1(q(0)), LexScalar(q(0), q(1))}, {v1(q(-1)), v1(q(0)), LexScalar(q(0), q(2))}});
    CHECK(f.near_active_pieces(v1(q(0))).size() == 2);
    CHECK(interval(infinitesimal_subdifferential(f, v1(q(0)))) == std::vector<Vec>{v1(q(-1)), v1(q(1))});
  }
  SUBCASE("equals the standard-part subdifferential") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = 1 + trial % 2;
      std::vector<LexAffine> pieces;
      const int k = 2 + trial % 3;
      for (int i = 0; i < k; ++i) {
        pieces.push_back({random_vec(rng, n, -3, 3), random_vec(rng, n, -2, 2),
                          LexScalar(random_q(rng, -2, 2, 1), random_q(rng, -3, 3, 1))});
      }
      const LexPolyFunc f(n, pieces);
      const Vec xbar = random_vec(rng, n, -2, 2, 1);
      const Polytope d = infinitesimal_subdifferential(f, xbar);
      CHECK(same_polytope(d, eps_subdifferential(f.standard_part(), xbar, q(0)).description));
      for (int s = 0; s < 5; ++s) {
        const Vec y = random_vec(rng, n, -8, 8, 2);
        CHECK(in_infinitesimal_subdifferential(f, xbar, y) == in_hull(y, d));
      }
    }
  }
}

TEST_CASE("grid infimal_convolution") {
  const std::vector<Vec> grid = integer_grid(1, -2, 2);
  auto abs_grid = [&](const std::vector<Vec>& us, const std::vector<Vec>& vs) {
    std::vector<std::vector<LexExt>> values;
    for (const Vec& u : us) {
      values.emplace_back();
      for (const Vec& v : vs) values.back().push_back(LexExt(LexScalar(abs_value(u(0) - v(0)))));
    }
    return GridFunction(us, vs, values);
  };
  SUBCASE("triangle equality") {
    const GridConvolution c = infimal_convolution(abs_grid(grid, grid), abs_grid(grid, grid));
    const ConvolutionEntry& zero = c.at(2, 2);
    CHECK(zero.value == lex(0));
    CHECK(zero.witness == std::optional<std::size_t>(2));
    CHECK(zero.exactness == Exactness::Exact);
    const ConvolutionEntry& wide = c.at(1, 3);
    CHECK(wide.value == lex(2));
    CHECK(wide.witness == std::optional<std::size_t>(1));
    CHECK(wide.near_witnesses == std::vector<std::size_t>{1, 2, 3});
  }
  SUBCASE("zero second function") {
    std::vector<std::vector<LexExt>> zero(grid.size(), std::vector<LexExt>(grid.size(), lex(0)));
    const GridConvolution c = infimal_convolution(abs_grid(grid, grid), GridFunction(grid, grid, zero));
    for (const ConvolutionEntry& e : c.entries) CHECK(e.value == lex(0));
  }
  SUBCASE("infinitesimal exactness") {
    const std::vector<Vec> one = integer_grid(1, 0, 0);
    const std::vector<Vec> ys = integer_grid(1, 0, 1);
    const GridFunction f1(one, ys, {{lex(1, 1), lex(1, 0)}});
    const GridFunction f2(ys, one, {{lex(0)}, {lex(0)}});
    const GridConvolution c = infimal_convolution(f1, f2);
    const ConvolutionEntry& e = c.at(0, 0);
    CHECK(e.witness == std::optional<std::size_t>(1));
    CHECK(e.near_witnesses == std::vector<std::size_t>{0, 1});
    CHECK(classify_exactness(e.value, lex(1, 1)) == Exactness::InfinitesimallyExact);
    CHECK(classify_exactness(e.value, lex(2)) == Exactness::Inexact);
  }
  SUBCASE("all TOP") {
    const std::vector<Vec> one = integer_grid(1, 0, 0);
    const GridFunction f1(one, one, {{LexExt::top()}});
    const GridConvolution c = infimal_convolution(f1, f1);
    const ConvolutionEntry& e = c.at(0, 0);
    CHECK(e.value.is_top());
    CHECK_FALSE(e.witness);
    CHECK(e.exactness == Exactness::Inexact);
  }
  SUBCASE("errors") {
    const std::vector<Vec> none;
    const std::vector<Vec> one = integer_grid(1, 0, 0);
    CHECK_THROWS_AS(infimal_convolution(GridFunction(one, none, {{}}), GridFunction(none, one, {})), DomainError);
    CHECK_THROWS_AS(infimal_convolution(abs_grid(grid, grid), abs_grid(one, grid)), DimensionError);
    CHECK_THROWS_AS(GridFunction(one, one, {{LexExt::bottom()}}), DomainError);
  }
  SUBCASE("lower bound and flags on random grids") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      const std::vector<Vec> xs = integer_grid(1, 0, 2);
      const std::vector<Vec> ys = integer_grid(1, -2, 2);
      auto random_grid = [&](const std::vector<Vec>& us, const std::vector<Vec>& vs) {
        std::vector<std::vector<LexExt>> values;
        for (std::size_t i = 0; i < us.size(); ++i) {
          values.emplace_back();
          for (std::size_t j = 0; j < vs.size(); ++j) {
            values.back().push_back(random_q(rng, 0, 9, 1) == 0 ? LexExt::top()
                                                                : LexExt(LexScalar(random_q(rng, -2, 2, 1), random_q(rng, -2, 2, 1))));
          }
        }
        return GridFunction(us, vs, values);
      };
      const GridFunction f1 = random_grid(xs, ys);
      const GridFunction f2 = random_grid(ys, xs);
      const GridConvolution c = infimal_convolution(f1, f2);
      for (const ConvolutionEntry& e : c.entries) {
        for (std::size_t y = 0; y < ys.size(); ++y) {
          const LexExt sum = f1.at(e.x, y) + f2.at(y, e.z);
          CHECK(e.value <= sum);
          if (e.witness && y < *e.witness) CHECK(e.value < sum);
          const bool near = std::find(e.near_witnesses.begin(), e.near_witnesses.end(), y) != e.near_witnesses.end();
          CHECK(near == (sum.is_finite() && e.value.is_finite() && sum.value().standard() == e.value.value().standard()));
        }
        if (e.witness) CHECK(e.exactness == Exactness::Exact);
      }
    }
  }
}

TEST_CASE("polyhedral infimal_convolution") {
  SUBCASE("absolute differences") {
    const PolyConvolutionValue a = infimal_convolution(abs_diff(), abs_diff(), q(0), q(0));
    CHECK(a.value == ExtScalar(q(0)));
    CHECK(a.witness == std::optional<Rational>(q(0)));
    const PolyConvolutionValue b = infimal_convolution(abs_diff(), abs_diff(), q(-1), q(1));
    CHECK(b.value == ExtScalar(q(2)));
    CHECK(b.witness == std::optional<Rational>(q(-1)));
  }
  SUBCASE("unbounded") {
    // f1(x, y) = -y, f2 = 0: no minimum
    const PolyFunc down(2, {aff(vec({q(0), q(-1)}), q(0))});
    const PolyFunc flat(2, {aff(vec({q(0), q(0)}), q(0))});
    const PolyConvolutionValue r = infimal_convolution(down, flat, q(0), q(0));
    CHECK(r.value.is_bottom());
    CHECK_FALSE(r.witness);
    CHECK_FALSE(convolution_function(down, flat));
  }
  SUBCASE("zero second function projects") {
    const PolyFunc flat(2, {aff(vec({q(0), q(0)}), q(0))});
    CHECK(infimal_convolution(abs_diff(), flat, q(3), q(-5)).value == ExtScalar(q(0)));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(infimal_convolution(abs1(), abs_diff(), q(0), q(0)), DimensionError);
  }
  SUBCASE("breakpoints, LP oracle and eliminated function agree") {
    std::mt19937_64 rng(67);
    int finite = 0;
    for (int trial = 0; trial < 150; ++trial) {
      const PolyFunc f1 = random_poly(rng, 2, 1 + trial % 3);
      const PolyFunc f2 = random_poly(rng, 2, 1 + (trial / 3) % 3);
      const std::optional<PolyFunc> h = convolution_function(f1, f2);
      for (int s = 0; s < 4; ++s) {
        const Rational x = random_q(rng, -6, 6, 2);
        const Rational z = random_q(rng, -6, 6, 3);
        const PolyConvolutionValue r = infimal_convolution(f1, f2, x, z);
        CHECK(r.value == convolution_oracle(f1, f2, x, z));
        if (!r.value.is_finite()) {
          CHECK_FALSE(h);
          continue;
        }
        ++finite;
        REQUIRE(h);
        CHECK((*h)(vec({x, z})) == r.value.value());
        REQUIRE(r.witness);
        CHECK(f1(vec({x, *r.witness})) + f2(vec({*r.witness, z})) == r.value.value());
        for (int k = -40; k <= 40; ++k) {
          const Rational y = make_rational(k, 4);
          const Rational v = f1(vec({x, y})) + f2(vec({y, z}));
          CHECK(r.value.value() <= v);
        }
      }
    }
    CHECK(finite > 100);
  }
}

TEST_CASE("chain_rule_check") {
  auto diagonal = [](std::int64_t lo, std::int64_t hi) { return Polytope(2, {vec({q(lo), q(lo)}), vec({q(hi), q(hi)})}); };
  SUBCASE("absolute differences") {
    CHECK(same_polytope(subdiff_relation(abs_diff(), q(0), q(0)), diagonal(-1, 1)));
    const ChainRuleReport r = chain_rule_check(abs_diff(), abs_diff(), q(0), q(0), q(0));
    CHECK(r.equal);
    CHECK(r.general_position.holds());
    CHECK(same_polytope(r.lhs, diagonal(-1, 1)));
    CHECK(same_polytope(r.rhs, diagonal(-1, 1)));
  }
  SUBCASE("steeper first function") {
    const ChainRuleReport r = chain_rule_check(abs_diff(2), abs_diff(), q(0), q(0), q(0));
    CHECK(r.equal);
    CHECK(same_polytope(r.lhs, diagonal(-1, 1)));
  }
  SUBCASE("zero second function") {
    const PolyFunc flat(2, {aff(vec({q(0), q(0)}), q(0))});
    const ChainRuleReport r = chain_rule_check(abs_diff(), flat, q(0), q(0), q(0));
    CHECK(r.equal);
    CHECK(r.lhs.vertices() == std::vector<Vec>{vec({q(0), q(0)})});
  }
  SUBCASE("inexact point is reported") {
    CHECK_THROWS_AS(chain_rule_check(abs_diff(), abs_diff(), q(0), q(1), q(0)), HypothesisViolation);
  }
  SUBCASE("relation composition") {
    const Polytope a(2, {vec({q(0), q(0)}), vec({q(1), q(2)})});
    const Polytope b(2, {vec({q(1), q(5)}), vec({q(3), q(5)})});
    // s in [1, 2] forces t in [1/2, 1], r = 5
    CHECK(same_polytope(compose_relations(a, b), Polytope(2, {vec({q(1, 2), q(5)}), vec({q(1), q(5)})})));
    const Polytope far(2, {vec({q(7), q(0)})});
    CHECK(compose_relations(a, far).is_empty());
  }
  SUBCASE("constructed exact instances") {
    std::mt19937_64 rng(71);
    int done = 0;
    for (int trial = 0; trial < 2000 && done < 30; ++trial) {
      const PolyFunc f1 = random_poly(rng, 2, 2 + trial % 2);
      const PolyFunc f2 = random_poly(rng, 2, 2 + (trial / 2) % 2);
      const Rational x = random_q(rng, -3, 3, 1);
      const Rational z = random_q(rng, -3, 3, 1);
      const PolyConvolutionValue c = infimal_convolution(f1, f2, x, z);
      if (!c.value.is_finite()) continue;
      ++done;
      const ChainRuleReport r = chain_rule_check(f1, f2, x, *c.witness, z);
      CHECK(r.general_position.holds());
      CHECK(r.equal);
      // brute-force lhs membership: the vertices are subgradient pairs of h
      const std::optional<PolyFunc> h = convolution_function(f1, f2);
      REQUIRE(h);
      for (const Vec& v : r.rhs.vertices()) {
        const Vec g = vec({v(0), Rational(-v(1))});
        for (int k = -6; k <= 6; ++k) {
          for (int l = -6; l <= 6; ++l) {
            const Vec p = vec({make_rational(k, 2), make_rational(l, 2)});
            CHECK((*h)(p) - c.value.value() >= pairing(g, Vec(p - vec({x, z}))));
          }
        }
      }
    }
    CHECK(done == 30);
  }
}
