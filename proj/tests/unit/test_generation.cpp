#include "printing.hpp"

#include <random>

#include "abconv/generation.hpp"

using namespace abconv;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }
Vec v1(Rational a) { return vec({a}); }
AffineFunctional aff1(Rational slope, Rational offset) { return {v1(slope), offset}; }
PolyFunc abs1() { return PolyFunc(1, {aff1(1, 0), aff1(-1, 0)}); }

std::vector<Vec> grid1(std::int64_t lo, std::int64_t hi) { return integer_grid(1, lo, hi); }

SampledFunc sampled1(const std::vector<Vec>& grid, const std::vector<ExtScalar>& values) { return SampledFunc(grid, values); }

}  // namespace

TEST_CASE("h_support_set") {
  std::vector<AffineFunctional> members;
  for (int k = -2; k <= 2; ++k) {
    for (int c = 0; c <= 1; ++c) members.push_back(aff1(q(k), q(-c)));
  }
  const GeneratorSet h(1, members);

  SUBCASE("absolute value keeps |k| <= 1") {
    const SupportSet s = h_support_set(abs1(), h);
    CHECK(s.indices.size() == 6);
    for (std::size_t i : s.indices) CHECK(abs_value(h.members()[i].slope(0)) <= 1);
  }
  SUBCASE("TOP dominates everything") {
    const auto grid = grid1(-2, 2);
    const SampledFunc top(grid, std::vector<ExtScalar>(grid.size(), ExtScalar::top()));
    CHECK(h_support_set(top, h).indices.size() == h.size());
  }
  SUBCASE("zero function") {
    const GeneratorSet lines(1, {aff1(1, 0), aff1(-1, 0), aff1(0, 0)});
    const SupportSet s = h_support_set(PolyFunc(1, {aff1(0, 0)}), lines);
    REQUIRE(s.indices.size() == 1);
    CHECK(s.indices[0] == 2);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(h_support_set(PolyFunc(2, {{vec({q(0), q(0)}), q(0)}}), h), DimensionError);
  }
  SUBCASE("duplicates removed") {
    const GeneratorSet dup(1, {aff1(1, 0), aff1(1, 0), aff1(0, 1)});
    CHECK(dup.size() == 2);
  }
}

TEST_CASE("h_convex_envelope and is_h_convex") {
  std::vector<AffineFunctional> members;
  for (int k = -2; k <= 2; ++k) {
    for (int c = 0; c <= 1; ++c) members.push_back(aff1(q(k), q(-c)));
  }
  const GeneratorSet h(1, members);

  SUBCASE("|x| is H-convex") {
    const auto env = h_convex_envelope(abs1(), h);
    REQUIRE_FALSE(env.degenerate());
    for (int num = -12; num <= 12; ++num) {
      const Vec x = v1(q(num, 5));
      CHECK((*env.function)(x) == abs1()(x));
    }
    CHECK(is_h_convex(abs1(), h));
  }
  SUBCASE("sampled x^2 against tangent lines") {
    const auto grid = grid1(-2, 2);
    std::vector<ExtScalar> sq;
    for (const Vec& x : grid) sq.emplace_back(Rational(x(0) * x(0)));
    const SampledFunc p(grid, sq);
    std::vector<AffineFunctional> lines;
    for (int a = -2; a <= 2; ++a) lines.push_back(aff1(q(2 * a), q(-a * a)));
    lines.push_back(aff1(1, 0));
    lines.push_back(aff1(3, -5));
    lines.push_back(aff1(1, 1));  // above x^2 at 0: excluded
    const GeneratorSet tangents(1, lines);
    const auto env = h_convex_envelope(p, tangents);
    REQUIRE_FALSE(env.degenerate());
    CHECK(env.support.indices.size() == 7);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      CHECK(env.function->values()[g] <= p.values()[g]);
      bool tight = false;
      for (std::size_t i : env.support.indices) tight = tight || ExtScalar(tangents.members()[i](grid[g])) == p.values()[g];
      CHECK((env.function->values()[g] == p.values()[g]) == tight);
    }
    CHECK(is_h_convex(p, tangents));

    const GeneratorSet flat(1, {aff1(-1, 0), aff1(0, 0), aff1(1, 0)});
    CHECK_FALSE(is_h_convex(p, flat));
  }
  SUBCASE("single minorant") {
    const GeneratorSet zero(1, {aff1(0, 0)});
    const auto env = h_convex_envelope(abs1(), zero);
    REQUIRE_FALSE(env.degenerate());
    CHECK(same_function(*env.function, PolyFunc(1, {aff1(0, 0)})));
  }
  SUBCASE("empty support set is degenerate, not H-convex") {
    const GeneratorSet zero(1, {aff1(0, 0)});
    const PolyFunc negative(1, {aff1(0, -5)});
    CHECK(h_convex_envelope(negative, zero).degenerate());
    CHECK_FALSE(is_h_convex(negative, zero));
  }
}

TEST_CASE("fenchel_conjugate on sampled functions") {
  SUBCASE("half square") {
    const auto grid = grid1(-2, 2);
    std::vector<ExtScalar> vals;
    for (const Vec& x : grid) vals.emplace_back(Rational(x(0) * x(0) / 2));
    const SampledFunc f(grid, vals);
    const SampledFunc fs = fenchel_conjugate(f, {v1(1)});
    CHECK(fs.values()[0] == ExtScalar(q(1, 2)));
  }
  SUBCASE("zero function on a symmetric grid") {
    const SampledFunc f(grid1(-1, 1), std::vector<ExtScalar>(3, ExtScalar(q(0))));
    CHECK(fenchel_conjugate(f, {v1(3)}).values()[0] == ExtScalar(q(3)));
  }
  SUBCASE("affine function") {
    const std::int64_t m = 3;
    const auto grid = grid1(-m, m);
    std::vector<ExtScalar> vals;
    for (const Vec& x : grid) vals.emplace_back(Rational(2 * x(0)));
    const SampledFunc f(grid, vals);
    for (int y = -2; y <= 5; ++y) {
      const ExtScalar got = fenchel_conjugate(f, {v1(q(y))}).values()[0];
      CHECK(got == ExtScalar(Rational(m * abs_value(q(y - 2)))));
    }
  }
  SUBCASE("TOP points are skipped; empty domain is an error") {
    const SampledFunc f(grid1(-1, 1), {ExtScalar::top(), ExtScalar(q(0)), ExtScalar::top()});
    CHECK(fenchel_conjugate(f, {v1(5)}).values()[0] == ExtScalar(q(0)));
    const SampledFunc none(grid1(0, 1), {ExtScalar::top(), ExtScalar::top()});
    CHECK_THROWS_AS(fenchel_conjugate(none, {v1(0)}), DomainError);
  }
  SUBCASE("construction rejects BOTTOM and repeated points") {
    CHECK_THROWS_AS(SampledFunc(grid1(0, 0), {ExtScalar::bottom()}), DomainError);
    CHECK_THROWS_AS(SampledFunc({v1(0), v1(0)}, {ExtScalar(q(0)), ExtScalar(q(1))}), DomainError);
  }
  SUBCASE("floating mode") {
    using DF = BasicSampledFunc<double>;
    std::vector<Vector<double>> grid;
    std::vector<Extended<double>> vals;
    for (int i = -2; i <= 2; ++i) {
      Vector<double> x(1);
      x(0) = i;
      grid.push_back(x);
      vals.emplace_back(0.5 * i * i);
    }
    Vector<double> y(1);
    y(0) = 1.0;
    const DF fs = fenchel_conjugate(DF(grid, vals), {y});
    CHECK(fs.values()[0].value() == doctest::Approx(0.5));
    const DF fss = biconjugate(DF(grid, vals), 1e-9);
    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(fss.values()[i].value() == doctest::Approx(vals[i].value()));
  }
}

TEST_CASE("fenchel_conjugate_poly") {
  SUBCASE("|x| is the indicator of [-1, 1]") {
    const PolyConjugate c = fenchel_conjugate_poly(abs1());
    CHECK(c(v1(-1)) == ExtScalar(q(0)));
    CHECK(c(v1(q(1, 2))) == ExtScalar(q(0)));
    CHECK(c(v1(1)) == ExtScalar(q(0)));
    CHECK(c(v1(q(3, 2))).is_top());
    CHECK(c(v1(-2)).is_top());
  }
  SUBCASE("single affine piece") {
    const PolyFunc f(2, {{vec({q(1), q(-2)}), q(5)}});
    const PolyConjugate c = fenchel_conjugate_poly(f);
    CHECK(c(vec({q(1), q(-2)})) == ExtScalar(q(-5)));
    CHECK(c(vec({q(1), q(0)})).is_top());
  }
  SUBCASE("max(x, 2x - 1)") {
    const PolyConjugate c = fenchel_conjugate_poly(PolyFunc(1, {aff1(1, 0), aff1(2, -1)}));
    CHECK(c(v1(1)) == ExtScalar(q(0)));
    CHECK(c(v1(q(3, 2))) == ExtScalar(q(1, 2)));
    CHECK(c(v1(2)) == ExtScalar(q(1)));
    CHECK(c(v1(0)).is_top());
    CHECK(c(v1(3)).is_top());
    CHECK(c.epigraph_points().size() == 2);
    CHECK(c.epigraph_points()[1] == vec({q(2), q(1)}));
  }
}

TEST_CASE("biconjugate") {
  SUBCASE("convex piecewise-linear samples are reproduced") {
    const SampledFunc f = sample(abs1(), grid1(-3, 3));
    CHECK(biconjugate(f).values() == f.values());
  }
  SUBCASE("spike below and above the hull of its neighbours") {
    const SampledFunc below(grid1(-1, 1), {ExtScalar(q(0)), ExtScalar(q(-1)), ExtScalar(q(0))});
    CHECK(biconjugate(below).values()[1] == ExtScalar(q(-1)));
    const SampledFunc above(grid1(-1, 1), {ExtScalar(q(0)), ExtScalar(q(1)), ExtScalar(q(0))});
    CHECK(biconjugate(above).values()[1] == ExtScalar(q(0)));
  }
  SUBCASE("single-point domain") {
    const SampledFunc f(grid1(-1, 1), {ExtScalar::top(), ExtScalar(q(7)), ExtScalar::top()});
    CHECK(biconjugate(f).values() == f.values());
  }
  SUBCASE("interior TOP points are filled by interpolation") {
    const SampledFunc f(grid1(0, 2), {ExtScalar(q(0)), ExtScalar::top(), ExtScalar(q(4))});
    CHECK(biconjugate(f).values()[1] == ExtScalar(q(2)));
  }
  SUBCASE("two-dimensional grid") {
    const auto grid = integer_grid(2, -1, 1);
    std::vector<ExtScalar> vals;
    for (const Vec& x : grid) vals.emplace_back(Rational(x(0) * x(0) + x(1) * x(1)));
    vals[4] = ExtScalar(q(3));  // center lifted above the hull
    const SampledFunc f(grid, vals);
    const SampledFunc fss = biconjugate(f);
    CHECK(fss.values()[4] == ExtScalar(q(1)));
    CHECK(fss.values()[0] == ExtScalar(q(2)));
    CHECK(fss.values()[1] == ExtScalar(q(1)));
  }
}

TEST_CASE("support_function") {
  CHECK(same_function(support_function(Polytope(1, {v1(-1), v1(1)})), abs1()));
  const PolyFunc m = support_function(Polytope(2, {vec({q(1), q(0)}), vec({q(0), q(1)})}));
  CHECK(m(vec({q(3), q(-2)})) == 3);
  CHECK(m(vec({q(-3), q(-2)})) == -2);
  CHECK(m.is_sublinear());
  const PolyFunc lin = support_function(Polytope(2, {vec({q(2), q(-1)})}));
  CHECK(lin(vec({q(1), q(1)})) == 1);
  CHECK(lin(vec({q(-1), q(-1)})) == -1);
  CHECK_THROWS_AS(support_function(Polytope::empty(2)), DomainError);
}

namespace {

SampledFunc random_sampled(std::mt19937_64& rng, Index dim) {
  const auto grid = dim == 1 ? grid1(-4, 4) : integer_grid(2, -2, 2);
  std::uniform_int_distribution<int> val(-6, 6);
  std::vector<ExtScalar> vals;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int v = val(rng);
    vals.emplace_back(v == 6 && i % 3 != 0 ? ExtScalar::top() : ExtScalar(q(v, 1 + static_cast<int>(rng() % 3))));
  }
  return SampledFunc(grid, vals);
}

std::vector<Vec> random_dual_grid(std::mt19937_64& rng, Index dim) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::vector<Vec> out;
  for (int i = 0; i < 7; ++i) {
    Vec y(dim);
    for (Index c = 0; c < dim; ++c) y(c) = q(num(rng), 2);
    out.push_back(y);
  }
  return unique_points(out);
}

}  // namespace

TEST_CASE("conjugation properties") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const Index dim = 1 + trial % 2;
    const SampledFunc f = random_sampled(rng, dim);
    const auto dual = random_dual_grid(rng, dim);
    const SampledFunc fs = fenchel_conjugate(f, dual);

    // Fenchel-Young inequality
    for (std::size_t g = 0; g < f.size(); ++g) {
      for (std::size_t d = 0; d < dual.size(); ++d) {
        CHECK(f.values()[g] + fs.values()[d] >= ExtScalar(pairing(dual[d], f.grid()[g])));
      }
    }

    // Order reversal: g = f + nonnegative bump, so g >= f and g* <= f*.
    std::vector<ExtScalar> bumped = f.values();
    for (auto& v : bumped) {
      if (v.is_finite() && rng() % 2 == 0) v = v + ExtScalar(q(1));
    }
    const SampledFunc g(f.grid(), bumped);
    const SampledFunc gs = fenchel_conjugate(g, dual);
    for (std::size_t d = 0; d < dual.size(); ++d) CHECK(gs.values()[d] <= fs.values()[d]);

    // Biconjugate domination and idempotence.
    const SampledFunc fss = biconjugate(f);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(fss.values()[i] <= f.values()[i]);
    CHECK(biconjugate(fss).values() == fss.values());
  }
}

TEST_CASE("exact polyhedral conjugate agrees with the sampled one on breakpoint grids") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<AffineFunctional> pieces;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) pieces.push_back(aff1(q(num(rng)), q(num(rng))));
    const PolyFunc f(1, pieces);
    std::vector<Vec> grid{v1(0)};
    for (const auto& a : pieces) {
      for (const auto& b : pieces) {
        if (a.slope(0) != b.slope(0)) grid.push_back(v1(Rational((b.offset - a.offset) / (a.slope(0) - b.slope(0)))));
      }
    }
    grid = unique_points(grid);
    const SampledFunc s = sample(f, grid);
    const PolyConjugate exact = fenchel_conjugate_poly(f);
    const Polytope dom = exact.domain().reduced();
    const Rational lo = dom.vertices().front()(0);
    const Rational hi = dom.vertices().back()(0);
    for (int step = 0; step <= 4; ++step) {
      const Vec y = v1(Rational(lo + (hi - lo) * step / 4));
      CHECK(fenchel_conjugate(s, {y}).values()[0] == exact(y));
    }
  }
}

TEST_CASE("H-convex envelope is H-convex and idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const Index dim = 1 + trial % 2;
    std::vector<AffineFunctional> pieces;
    for (int i = 0; i < 3; ++i) {
      Vec s(dim);
      for (Index c = 0; c < dim; ++c) s(c) = num(rng);
      pieces.push_back({s, q(num(rng))});
    }
    const PolyFunc p(dim, pieces);
    std::vector<AffineFunctional> members;
    for (int i = 0; i < 8; ++i) {
      Vec s(dim);
      for (Index c = 0; c < dim; ++c) s(c) = num(rng);
      members.push_back({s, q(num(rng) - 4)});
    }
    members.push_back(pieces.front());
    const GeneratorSet h(dim, members);
    const auto env = h_convex_envelope(p, h);
    REQUIRE_FALSE(env.degenerate());
    CHECK(dominates(p, *env.function));
    CHECK(is_h_convex(*env.function, h));
    const auto again = h_convex_envelope(*env.function, h);
    CHECK(same_function(*again.function, *env.function));
  }
}
