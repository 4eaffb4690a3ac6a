#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "abconv/approximation/convolution.hpp"
#include "abconv/approximation/infinitesimal.hpp"
#include "abconv/calculus/composition.hpp"
#include "abconv/calculus/family.hpp"
#include "abconv/core/cone.hpp"
#include "abconv/core/polytope.hpp"
#include "abconv/generation/functions.hpp"
#include "abconv/separation/cones.hpp"

namespace abconv::io {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// One object per file: {schema_version, kind, payload, metadata}.
struct ProblemFile {
  std::string schema_version = kSchemaVersion;
  std::string kind;
  Json payload;
  Json metadata = Json::object();

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Exact mode rejects floating literals; float mode converts them exactly.
enum class NumberMode { Exact, Float };

const std::vector<std::string>& problem_kinds();

/// Parses and validates a problem file. Errors are ParseError with the
/// source, the line for syntax errors, and the field path for data errors.
ProblemFile parse_problem(std::string_view text, const std::string& source = "<input>",
                          NumberMode mode = NumberMode::Exact);
ProblemFile load_problem(const std::string& path, NumberMode mode = NumberMode::Exact);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_problem(const ProblemFile& p);

Json rational_json(const Rational& v);
Json vec_json(const Vec& v);
Json ext_json(const ExtScalar& v);
Json lex_json(const LexScalar& v);
Json lex_ext_json(const LexExt& v);
Json polytope_json(const Polytope& p);
Json cone_json(const PolyCone& k);
Json poly_func_json(const PolyFunc& f);

/// Payload decoders; `p.kind` must match.
bool is_sampled_function(const ProblemFile& p);
bool has_infinitesimal_parts(const ProblemFile& p);
PolyFunc read_poly_func(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
SampledFunc read_sampled_func(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
LexPolyFunc read_lex_poly_func(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
SublinearOperator read_sublinear_operator(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
GeneratorSet read_generator_set(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
PolyCone read_cone(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
Polytope read_polytope(const ProblemFile& p, NumberMode mode = NumberMode::Exact);
OperatorFamily read_operator_family(const ProblemFile& p, NumberMode mode = NumberMode::Exact);

struct SandwichProblem {
  PolyFunc p;
  PolyFunc q;
};
SandwichProblem read_sandwich(const ProblemFile& p, NumberMode mode = NumberMode::Exact);

struct CompositionProblem {
  VectorSublinear p1;
  PolyFunc p2;
};
CompositionProblem read_composition(const ProblemFile& p, NumberMode mode = NumberMode::Exact);

struct GridConvolutionProblem {
  GridFunction f1;
  GridFunction f2;
};
GridConvolutionProblem read_convolution(const ProblemFile& p, NumberMode mode = NumberMode::Exact);

/// Encoders; parse_problem(dump_problem(make_problem(x))) decodes to x.
ProblemFile make_problem(const PolyFunc& f, const std::vector<Vec>& domain_rows = {});
ProblemFile make_problem(const SampledFunc& f);
ProblemFile make_problem(const LexPolyFunc& f);
ProblemFile make_problem(const GeneratorSet& h);
ProblemFile make_problem(const PolyCone& k);
ProblemFile make_problem(const Polytope& u);
ProblemFile make_problem(const OperatorFamily& family);
ProblemFile make_problem(const SandwichProblem& s);
ProblemFile make_problem(const CompositionProblem& c);
ProblemFile make_problem(const GridConvolutionProblem& c);

}  // namespace abconv::io
