#include "printing.hpp"

#include "abconv/io/problem.hpp"
#include "abconv/io/report.hpp"

using namespace abconv;
using namespace abconv::io;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

ProblemFile reparse(const ProblemFile& p) { return parse_problem(dump_problem(p)); }

std::string error_of(const std::string& text, NumberMode mode = NumberMode::Exact) {
  try {
    parse_problem(text, "in.json", mode);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string function_text(const std::string& pieces, const std::string& extra = "") {
  return R"({"schema_version": "1", "kind": "function", "payload": {"representation": "polyhedral", "dim": 2, "pieces": )" +
         pieces + "}" + extra + "}";
}

}  // namespace

TEST_CASE("problem files round-trip through their canonical text") {
  SUBCASE("polyhedral function") {
    const PolyFunc f(2, {{vec({q(1), q(-2, 3)}), q(5, 7)}, {vec({q(0), q(4)}), q(-1)}});
    const ProblemFile p = make_problem(f);
    CHECK(reparse(p) == p);
    const PolyFunc back = read_poly_func(reparse(p));
    REQUIRE(back.pieces().size() == 2);
    CHECK(back.pieces()[0].slope == f.pieces()[0].slope);
    CHECK(back.pieces()[1].offset == q(-1));
  }
  SUBCASE("sampled function with TOP") {
    const SampledFunc f({vec({q(-1)}), vec({q(0)}), vec({q(1, 2)})}, {ExtScalar(q(1)), ExtScalar::top(), ExtScalar(q(-3, 4))});
    const ProblemFile p = make_problem(f);
    CHECK(reparse(p) == p);
    CHECK(is_sampled_function(p));
    const SampledFunc back = read_sampled_func(reparse(p));
    CHECK(back.grid() == f.grid());
    CHECK(back.values() == f.values());
  }
  SUBCASE("infinitesimal function") {
    const LexPolyFunc f(1, {{vec({q(1)}), vec({q(1, 2)}), LexScalar(q(0), q(-1))}, {vec({q(-1)}), vec({q(0)}), LexScalar(q(2))}});
    const ProblemFile p = make_problem(f);
    CHECK(reparse(p) == p);
    CHECK(has_infinitesimal_parts(p));
    CHECK_THROWS_AS(read_poly_func(p), ParseError);
    const LexPolyFunc back = read_lex_poly_func(reparse(p));
    CHECK(back(vec({q(3)})) == f(vec({q(3)})));
  }
  SUBCASE("generator set, cone, polytope, family") {
    const GeneratorSet h(1, {{vec({q(1)}), q(0)}, {vec({q(-1)}), q(-1, 3)}});
    CHECK(reparse(make_problem(h)) == make_problem(h));
    CHECK(read_generator_set(make_problem(h)).members().size() == 2);
    const PolyCone k(2, {vec({q(1), q(0)}), vec({q(1), q(1)})});
    CHECK(reparse(make_problem(k)) == make_problem(k));
    CHECK(same_cone(read_cone(make_problem(k)), k));
    const Polytope u(2, {vec({q(0), q(0)}), vec({q(1), q(0)}), vec({q(0), q(1, 2)})});
    CHECK(reparse(make_problem(u)) == make_problem(u));
    CHECK(same_polytope(read_polytope(make_problem(u)), u));
    CHECK(read_polytope(make_problem(Polytope::empty(2))).is_empty());
    Mat a = Mat::Identity(2, 2);
    const OperatorFamily fam({a, Mat(-a)});
    CHECK(reparse(make_problem(fam)) == make_problem(fam));
    CHECK(read_operator_family(make_problem(fam)).members()[1] == Mat(-a));
  }
  SUBCASE("sandwich, composition, convolution") {
    const PolyFunc abs(1, {{vec({q(1)}), q(0)}, {vec({q(-1)}), q(0)}});
    const SandwichProblem s{abs, abs};
    CHECK(reparse(make_problem(s)) == make_problem(s));
    const CompositionProblem c{{abs, abs}, PolyFunc(2, {{vec({q(1), q(1)}), q(0)}})};
    CHECK(reparse(make_problem(c)) == make_problem(c));
    CHECK(read_composition(make_problem(c)).p1.size() == 2);
    const std::vector<Vec> g = {vec({q(0)}), vec({q(1)})};
    const GridFunction f1(g, g, {{LexExt(LexScalar(q(0))), LexExt::top()}, {LexExt(LexScalar(q(1), q(1))), LexExt(LexScalar(q(2)))}});
    const GridConvolutionProblem cv{f1, f1};
    CHECK(reparse(make_problem(cv)) == make_problem(cv));
    CHECK(read_convolution(make_problem(cv)).f1.at(1, 0) == f1.at(1, 0));
  }
  SUBCASE("metadata survives") {
    ProblemFile p = make_problem(PolyCone::zero(1));
    p.metadata = {{"label", "origin"}};
    CHECK(reparse(p) == p);
  }
}

TEST_CASE("rational literals") {
  const std::string pieces = R"([{"slope": ["1/2", 3], "offset": [-4, 6]}])";
  const PolyFunc f = read_poly_func(parse_problem(function_text(pieces)));
  CHECK(f.pieces()[0].slope == vec({q(1, 2), q(3)}));
  CHECK(f.pieces()[0].offset == q(-2, 3));
}

TEST_CASE("parse diagnostics") {
  SUBCASE("malformed JSON names the line") {
    const std::string e = error_of("{\n  \"kind\": \"cone\",\n  oops\n}");
    CHECK(e.find("in.json:3") != std::string::npos);
  }
  SUBCASE("field path of a bad entry") {
    const std::string e = error_of(function_text(R"([{"slope": [1, "x"], "offset": 0}])"));
    CHECK(e.find("payload.pieces[0].slope[1]") != std::string::npos);
  }
  SUBCASE("floating literals in exact mode") {
    const std::string text = function_text(R"([{"slope": [0.5, 1], "offset": 0}])");
    CHECK(error_of(text).find("floating literal") != std::string::npos);
    CHECK(error_of(text, NumberMode::Float).empty());
    CHECK(read_poly_func(parse_problem(text, "in", NumberMode::Float), NumberMode::Float).pieces()[0].slope(0) == q(1, 2));
  }
  SUBCASE("unknown fields") {
    CHECK(error_of(function_text(R"([{"slope": [1, 1], "offset": 0, "weight": 2}])")).find("unknown field") != std::string::npos);
    CHECK(error_of(function_text(R"([{"slope": [1, 1], "offset": 0}])", R"(, "extra": 1)")).find("unknown field") !=
          std::string::npos);
  }
  SUBCASE("kind and version") {
    CHECK(error_of(R"({"schema_version": "1", "kind": "blob", "payload": {}})").find("unknown kind") != std::string::npos);
    CHECK(error_of(R"({"schema_version": "9", "kind": "cone", "payload": {}})").find("unsupported version") != std::string::npos);
  }
  SUBCASE("dimension mismatch") {
    CHECK(error_of(function_text(R"([{"slope": [1], "offset": 0}])")).find("expected 2 entries") != std::string::npos);
  }
  SUBCASE("missing file") { CHECK_THROWS_AS(load_problem("/nonexistent/problem.json"), ParseError); }
}

TEST_CASE("reports and plot data") {
  SUBCASE("digest is stable and input-sensitive") {
    CHECK(input_digest({"a", "b"}) == input_digest({"a", "b"}));
    CHECK(input_digest({"a", "b"}) != input_digest({"ab"}));
    CHECK(input_digest({}).rfind("fnv1a64:", 0) == 0);
  }
  SUBCASE("report keys are sorted") {
    Report r;
    r.operation = "polar";
    r.result = {{"z", 1}, {"a", 2}};
    const std::string text = dump_report(r);
    CHECK(text.find("\"certificate\"") < text.find("\"input_digest\""));
    CHECK(text.find("\"a\"") < text.find("\"z\""));
    CHECK(text == dump_report(r));
  }
  SUBCASE("empty grid gives a header-only file") {
    const std::string csv = emit_plot_data(1, {}, {{"f", {}}});
    CHECK(csv == "x,x_decimal,f,f_decimal\n");
  }
  SUBCASE("exact and decimal cells") {
    const std::string csv = emit_plot_data(2, {vec({q(1, 3), q(0)})}, {{"f", {ExtScalar(q(-1, 8))}}, {"g", {ExtScalar::top()}}});
    CHECK(csv == "x1,x1_decimal,x2,x2_decimal,f,f_decimal,g,g_decimal\n"
                 "1/3,0.333333333333,0,0.000000000000,-1/8,-0.125000000000,top,inf\n");
  }
  SUBCASE("column length must match the grid") {
    CHECK_THROWS_AS(emit_plot_data(1, {vec({q(0)})}, {{"f", {}}}), DimensionError);
  }
}
