#include "printing.hpp"

#include <random>

#include "abconv/calculus.hpp"

using namespace abconv;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Mat mat(Index rows, Index cols, std::initializer_list<std::int64_t> entries) {
  Mat m(rows, cols);
  auto it = entries.begin();
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = q(*it++);
  }
  return m;
}

AffineFunctional lin(Vec slope) { return {std::move(slope), q(0)}; }
PolyFunc abs1(std::int64_t scale = 1) { return PolyFunc(1, {lin(vec({q(scale)})), lin(vec({q(-scale)}))}); }

Rational random_q(std::mt19937_64& rng, int lo, int hi, int den) {
  std::uniform_int_distribution<int> d(lo, hi);
  return make_rational(d(rng), den);
}

Vec random_vec(std::mt19937_64& rng, Index dim, int lo, int hi, int den = 1) {
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = random_q(rng, lo, hi, den);
  return v;
}

Mat random_mat(std::mt19937_64& rng, Index rows, Index cols, int lo, int hi) {
  Mat m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = random_q(rng, lo, hi, 1);
  }
  return m;
}

PolyFunc random_sublinear(std::mt19937_64& rng, Index dim, int lo, int hi) {
  std::uniform_int_distribution<int> count(1, 3);
  std::vector<AffineFunctional> pieces;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) pieces.push_back(lin(random_vec(rng, dim, lo, hi)));
  return PolyFunc(dim, pieces);
}

Rational evaluate_composition(const VectorSublinear& p1, const PolyFunc& p2, const Vec& x) {
  Vec e(static_cast<Index>(p1.size()));
  for (std::size_t j = 0; j < p1.size(); ++j) e(static_cast<Index>(j)) = p1[j](x);
  return p2(e);
}

bool leq(const Vec& a, const Vec& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (b(i) < a(i)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical_sublinear") {
  SUBCASE("componentwise max") {
    const BoundedMap f(2, {{"a", vec({q(1), q(0)})}, {"b", vec({q(0), q(1)})}});
    CHECK(canonical_sublinear(f) == vec({q(1), q(1)}));
  }
  SUBCASE("singleton") {
    const BoundedMap f(2, {{"a", vec({q(3, 2), q(-4)})}});
    CHECK(canonical_sublinear(f) == vec({q(3, 2), q(-4)}));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(canonical_sublinear(BoundedMap(2, {})), DomainError);
    CHECK_THROWS_AS(BoundedMap(1, {{"a", vec({q(1)})}, {"a", vec({q(2)})}}), DomainError);
    CHECK_THROWS_AS(BoundedMap(1, {{"a", vec({q(1), q(2)})}}), DimensionError);
  }
  SUBCASE("increasing, subadditive, positively homogeneous") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::pair<std::string, Vec>> fe, ge, sum, scaled, bigger;
      const Rational lambda = random_q(rng, 0, 12, 4);
      for (const char* label : {"a", "b", "c"}) {
        const Vec f = random_vec(rng, 2, -9, 9, 3);
        const Vec g = random_vec(rng, 2, -9, 9, 2);
        fe.emplace_back(label, f);
        ge.emplace_back(label, g);
        sum.emplace_back(label, f + g);
        scaled.emplace_back(label, lambda * f);
        bigger.emplace_back(label, f + random_vec(rng, 2, 0, 5, 2));
      }
      const Vec ef = canonical_sublinear(BoundedMap(2, fe));
      const Vec eg = canonical_sublinear(BoundedMap(2, ge));
      CHECK(leq(canonical_sublinear(BoundedMap(2, sum)), Vec(ef + eg)));
      CHECK(canonical_sublinear(BoundedMap(2, scaled)) == Vec(lambda * ef));
      CHECK(leq(ef, canonical_sublinear(BoundedMap(2, bigger))));
    }
  }
}

TEST_CASE("family_embed and p_family") {
  SUBCASE("plus and minus identity") {
    const OperatorFamily fam({mat(1, 1, {1}), mat(1, 1, {-1})});
    const BoundedMap e = family_embed(fam, vec({q(3)}));
    REQUIRE(e.size() == 2);
    CHECK(e.entries()[0].second == vec({q(3)}));
    CHECK(e.entries()[1].second == vec({q(-3)}));
    CHECK(p_family(fam, vec({q(3)}), true) == vec({q(3)}));
  }
  SUBCASE("zero maps to zero") {
    const OperatorFamily fam({mat(2, 2, {1, 2, 3, 4}), mat(2, 2, {-1, 0, 5, 1})});
    const BoundedMap e = family_embed(fam, zeros(2));
    for (const auto& [label, v] : e.entries()) CHECK(is_zero(v));
    CHECK(is_zero(p_family(fam, zeros(2))));
  }
  SUBCASE("first columns") {
    const OperatorFamily fam({mat(2, 2, {1, 2, 3, 4}), mat(2, 2, {-1, 0, 5, 1})});
    const BoundedMap e = family_embed(fam, unit(2, 0));
    CHECK(e.at("0") == vec({q(1), q(3)}));
    CHECK(e.at("1") == vec({q(-1), q(5)}));
  }
  SUBCASE("max of coordinates") {
    const OperatorFamily fam({mat(1, 2, {1, 0}), mat(1, 2, {0, 1})});
    CHECK(p_family(fam, vec({q(2), q(5)})) == vec({q(5)}));
  }
  SUBCASE("A and -A give |Ax|") {
    const Mat a = mat(2, 2, {1, -2, 3, 1});
    const OperatorFamily fam({a, Mat(-a)});
    const Vec x = vec({q(1, 2), q(2)});
    const Vec ax = a * x;
    CHECK(p_family(fam, x, true) == vec({abs_value(ax(0)), abs_value(ax(1))}));
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(OperatorFamily({mat(1, 1, {1}), mat(1, 2, {1, 1})}), DimensionError);
    CHECK_THROWS_AS(OperatorFamily(std::vector<Mat>{}), DomainError);
    CHECK_THROWS_AS(p_family(OperatorFamily({mat(1, 1, {1})}), zeros(2)), DimensionError);
  }
  SUBCASE("factorization and linearity of the embedding") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
      std::uniform_int_distribution<int> dims(1, 3);
      const Index m = dims(rng);
      const Index n = dims(rng);
      std::vector<Mat> members;
      const int k = dims(rng) + 1;
      for (int i = 0; i < k; ++i) members.push_back(random_mat(rng, m, n, -4, 4));
      const OperatorFamily fam(members);
      const Vec x = random_vec(rng, n, -10, 10, 3);
      const Vec y = random_vec(rng, n, -10, 10, 2);
      CHECK(p_family(fam, x) == canonical_sublinear(family_embed(fam, x)));
      const BoundedMap ex = family_embed(fam, x);
      const BoundedMap ey = family_embed(fam, y);
      const BoundedMap exy = family_embed(fam, Vec(q(2) * x - y));
      for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(exy.entries()[i].second == Vec(q(2) * ex.entries()[i].second - ey.entries()[i].second));
      }
    }
  }
}

TEST_CASE("MatrixOperator positivity") {
  CHECK(MatrixOperator{mat(2, 2, {0, 1, 2, 0})}.is_positive());
  CHECK_FALSE(MatrixOperator{mat(1, 2, {1, -1})}.is_positive());
}

TEST_CASE("support_set") {
  SUBCASE("absolute value") {
    CHECK(support_set(abs1()).vertices() == std::vector<Vec>{vec({q(-1)}), vec({q(1)})});
  }
  SUBCASE("max of coordinates and zero") {
    const PolyFunc p(2, {lin(vec({q(1), q(0)})), lin(vec({q(0), q(1)})), lin(vec({q(0), q(0)}))});
    CHECK(support_set(p).vertices().size() == 3);
  }
  SUBCASE("interior slope is dropped") {
    const PolyFunc p(1, {lin(vec({q(1)})), lin(vec({q(2)})), lin(vec({q(3, 2)}))});
    CHECK(support_set(p).vertices() == std::vector<Vec>{vec({q(1)}), vec({q(2)})});
  }
  SUBCASE("non-sublinear") {
    CHECK_THROWS_AS(support_set(PolyFunc(1, {{vec({q(1)}), q(1)}})), DomainError);
  }
  SUBCASE("membership agrees with the universal inequality") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
      const Index n = 1 + trial % 2;
      const PolyFunc p = random_sublinear(rng, n, -3, 3);
      const Polytope s = support_set(p);
      for (int k = 0; k < 5; ++k) {
        const Vec t = random_vec(rng, n, -8, 8, 2);
        CHECK(in_hull(t, s) == (min_gap(p, {t, q(0)}) >= ExtScalar(q(0))));
      }
    }
  }
}

TEST_CASE("support_hull") {
  SUBCASE("diagonal family is strictly larger than its hull") {
    const OperatorFamily fam({mat(2, 2, {1, 0, 0, 1}), mat(2, 2, {0, 0, 0, 0})});
    const SupportHull cop = support_hull(fam);
    const Mat half = mat(2, 2, {1, 0, 0, 1}) * q(1, 2);
    CHECK(cop.contains(half));
    CHECK(in_family_hull(half, fam));
    const Mat corner = mat(2, 2, {1, 0, 0, 0});
    CHECK(cop.contains(corner));
    CHECK(dominated_by_family(corner, fam));
    CHECK_FALSE(in_family_hull(corner, fam));
    CHECK_FALSE(cop.contains(mat(2, 2, {0, 1, 0, 0})));
  }
  SUBCASE("singleton") {
    const Mat a = mat(2, 2, {1, 2, 3, 4});
    const SupportHull cop = support_hull(OperatorFamily({a}));
    CHECK(cop.contains(a));
    CHECK_FALSE(cop.contains(mat(2, 2, {1, 2, 3, 5})));
  }
  SUBCASE("one row collapses to the convex hull") {
    const OperatorFamily fam({mat(1, 2, {1, 0}), mat(1, 2, {0, 1}), mat(1, 2, {1, 1}), mat(1, 2, {1, 2, })});
    std::vector<Vec> points;
    for (const Mat& a : fam.members()) points.push_back(a.row(0).transpose());
    CHECK(same_polytope(support_hull(fam).row_hulls()[0], Polytope(2, points)));
  }
  SUBCASE("shape mismatch") {
    CHECK_THROWS_AS(support_hull(OperatorFamily({mat(1, 1, {1})})).contains(mat(1, 2, {0, 0})), DimensionError);
  }
  SUBCASE("row factorization in both directions") {
    std::mt19937_64 rng(41);
    int inside = 0;
    int outside = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const Index m = 1 + trial % 2;
      const Index n = 1 + (trial / 2) % 2;
      std::vector<Mat> members;
      for (int i = 0; i < 3; ++i) members.push_back(random_mat(rng, m, n, -3, 3));
      const OperatorFamily fam(members);
      const SupportHull cop(fam);
      Mat t(m, n);
      if (trial % 2 == 0) {
        // independent convex weights per row
        for (Index r = 0; r < m; ++r) {
          std::vector<Rational> w{random_q(rng, 0, 4, 1), random_q(rng, 0, 4, 1), random_q(rng, 1, 4, 1)};
          const Rational total = w[0] + w[1] + w[2];
          Vec row = zeros(n);
          for (int i = 0; i < 3; ++i) row += Rational(w[static_cast<std::size_t>(i)] / total) * Vec(members[static_cast<std::size_t>(i)].row(r).transpose());
          t.row(r) = row.transpose();
        }
        CHECK(cop.contains(t));
      } else {
        t = random_mat(rng, m, n, -4, 4);
      }
      const bool member = cop.contains(t);
      CHECK(member == dominated_by_family(t, fam));
      if (in_family_hull(t, fam)) CHECK(member);
      (member ? inside : outside)++;
    }
    CHECK(inside > 0);
    CHECK(outside > 0);
  }
}

TEST_CASE("composition_subdifferential") {
  SUBCASE("max of |x| and 2|x|") {
    const PolyFunc p2(2, {lin(vec({q(1), q(0)})), lin(vec({q(0), q(1)}))});
    const CompositionReport r = composition_subdifferential({abs1(), abs1(2)}, p2);
    CHECK(r.agree);
    CHECK(r.direct.vertices() == std::vector<Vec>{vec({q(-2)}), vec({q(2)})});
    CHECK(same_polytope(r.direct, r.formula));
  }
  SUBCASE("projection") {
    const PolyFunc p1a(2, {lin(vec({q(1), q(0)})), lin(vec({q(0), q(1)})), lin(vec({q(-1), q(-1)}))});
    const PolyFunc p1b = PolyFunc(2, {lin(vec({q(3), q(3)}))});
    const PolyFunc p2(2, {lin(vec({q(1), q(0)}))});
    const CompositionReport r = composition_subdifferential({p1a, p1b}, p2);
    CHECK(r.agree);
    CHECK(same_polytope(r.direct, support_set(p1a)));
  }
  SUBCASE("linear inner map") {
    // p1(x) = Ax coordinatewise, dp2 = conv{(1,0),(1,2)}
    const Mat a = mat(2, 2, {1, 2, -1, 1});
    const VectorSublinear p1{PolyFunc(2, {lin(vec({q(1), q(2)}))}), PolyFunc(2, {lin(vec({q(-1), q(1)}))})};
    const PolyFunc p2(2, {lin(vec({q(1), q(0)})), lin(vec({q(1), q(2)}))});
    const CompositionReport r = composition_subdifferential(p1, p2);
    CHECK(r.agree);
    const Polytope pullback(2, {Vec(a.transpose() * vec({q(1), q(0)})), Vec(a.transpose() * vec({q(1), q(2)}))});
    CHECK(same_polytope(r.direct, pullback));
  }
  SUBCASE("errors") {
    const PolyFunc dec(1, {lin(vec({q(-1)}))});
    CHECK_THROWS_AS(composition_subdifferential({abs1()}, dec), HypothesisViolation);
    try {
      composition_subdifferential({abs1()}, dec);
    } catch (const HypothesisViolation& e) {
      CHECK(e.certificate().find("piece 0") != std::string::npos);
    }
    CHECK_THROWS_AS(composition_subdifferential({abs1()}, PolyFunc(2, {lin(vec({q(1), q(0)}))})), DimensionError);
    CHECK_THROWS_AS(composition_subdifferential({PolyFunc(1, {{vec({q(1)}), q(1)}})}, abs1()), DomainError);
    const PolyFunc big(4, {lin(zeros(4))});
    CHECK_THROWS_AS(composition_subdifferential({big}, PolyFunc(1, {lin(vec({q(1)}))})), CapExceeded);
    CHECK(in_composition_formula(zeros(4), {big}, PolyFunc(1, {lin(vec({q(1)}))})));
  }
  SUBCASE("random corpus agrees and is sound") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
      const Index n = 1 + trial % 2;
      const Index m = 1 + (trial / 2) % 2;
      VectorSublinear p1;
      for (Index j = 0; j < m; ++j) p1.push_back(random_sublinear(rng, n, -3, 3));
      const PolyFunc p2 = random_sublinear(rng, m, 0, 3);
      const CompositionReport r = composition_subdifferential(p1, p2);
      CHECK(r.agree);
      CHECK(same_polytope(r.direct, r.formula));
      for (int k = 0; k < 100; ++k) {
        const Vec x = random_vec(rng, n, -12, 12, 5);
        const Rational value = evaluate_composition(p1, p2, x);
        for (const Vec& t : r.direct.vertices()) CHECK(pairing(t, x) <= value);
      }
    }
  }
}
