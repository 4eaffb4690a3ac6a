#include "commands.hpp"

#include <chrono>
#include <sstream>

#include "abconv/approximation.hpp"
#include "abconv/calculus.hpp"
#include "abconv/generation.hpp"
#include "abconv/separation.hpp"
#include "suites.hpp"

namespace abconv::cli {

namespace {

using io::Json;
using io::NumberMode;
using io::ProblemFile;

struct Inputs {
  std::vector<ProblemFile> problems;
  std::vector<std::string> canonical;
};

NumberMode number_mode(const Options& o) { return o.mode == "float" ? NumberMode::Float : NumberMode::Exact; }

Inputs load(const Options& o, std::size_t min_count, std::size_t max_count) {
  if (o.inputs.size() < min_count || o.inputs.size() > max_count) {
    throw UsageError("expected " + (min_count == max_count ? std::to_string(min_count)
                                                           : std::to_string(min_count) + " to " + std::to_string(max_count)) +
                     " input file(s), got " + std::to_string(o.inputs.size()));
  }
  Inputs in;
  for (const std::string& path : o.inputs) {
    in.problems.push_back(io::load_problem(path, number_mode(o)));
    in.canonical.push_back(io::dump_problem(in.problems.back()));
  }
  return in;
}

void require_exact(const Options& o, const std::string& command) {
  if (o.mode != "exact") throw UsageError(command + ": --mode float is supported by 'conjugate' on 1-D sampled input only");
}

Vec parse_point(const std::string& text, Index dim, const std::string& flag) {
  std::vector<Rational> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  if (static_cast<Index>(parts.size()) != dim) {
    throw DimensionError(flag + ": expected " + std::to_string(dim) + " coordinate(s), got " + std::to_string(parts.size()));
  }
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = parts[static_cast<std::size_t>(i)];
  return v;
}

std::vector<Vec> parse_grid(const std::string& text, Index dim) {
  const std::string range = text.empty() ? "-2:2" : text;
  const auto colon = range.find(':');
  if (colon == std::string::npos) throw UsageError("--grid: expected LO:HI, got '" + range + "'");
  try {
    return integer_grid(dim, std::stoll(range.substr(0, colon)), std::stoll(range.substr(colon + 1)));
  } catch (const std::logic_error&) {
    throw UsageError("--grid: expected integer bounds LO:HI, got '" + range + "'");
  }
}

Mat parse_matrix(const std::string& text, Index rows, Index cols) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line, ';')) lines.push_back(line);
  if (static_cast<Index>(lines.size()) != rows) throw DimensionError("--matrix: expected " + std::to_string(rows) + " row(s)");
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) m.row(r) = parse_point(lines[static_cast<std::size_t>(r)], cols, "--matrix").transpose();
  return m;
}

Json vecs_json(const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const Vec& v : vs) a.push_back(io::vec_json(v));
  return a;
}

Json exts_json(const std::vector<ExtScalar>& vs) {
  Json a = Json::array();
  for (const ExtScalar& v : vs) a.push_back(io::ext_json(v));
  return a;
}

std::string show(const Polytope& p) {
  if (p.is_empty()) return "empty";
  std::string out = "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) out += (i ? ", " : "") + to_string(p.vertices()[i]);
  return out + "}";
}

std::string show(const PolyCone& k) {
  if (k.rays().empty()) return "{0}";
  std::string out = "cone{";
  for (std::size_t i = 0; i < k.rays().size(); ++i) out += (i ? ", " : "") + to_string(k.rays()[i]);
  return out + "}";
}

std::string show(const PolyFunc& f) {
  std::string out = "max{";
  for (std::size_t i = 0; i < f.pieces().size(); ++i) out += (i ? ", " : "") + to_string(f.pieces()[i]);
  return out + "}";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

Json general_position_json(const GeneralPositionReport& r) {
  Json j = {{"count", r.count},
            {"working_dim", r.working_dim},
            {"span_condition", r.span_condition},
            {"complemented", r.complemented},
            {"complemented_automatic", r.complemented_automatic},
            {"nonoblate", r.nonoblate},
            {"holds", r.holds()}};
  j["radius"] = r.radius ? io::rational_json(*r.radius) : Json(nullptr);
  return j;
}

EnumerationLimits limits(const Options& o) { return EnumerationLimits{static_cast<Index>(o.max_dim)}; }

GeneralPositionLimits gp_limits(const Options& o) { return GeneralPositionLimits{static_cast<Index>(2 * o.max_dim)}; }

Outcome start(const std::string& op, const Inputs& in) {
  Outcome out;
  out.report.operation = op;
  out.report.input_digest = io::input_digest(in.canonical);
  return out;
}

std::vector<ExtScalar> on_grid(const PolyFunc& f, const std::vector<Vec>& grid) {
  std::vector<ExtScalar> out;
  for (const Vec& x : grid) out.emplace_back(f(x));
  return out;
}

// ---- generation -----------------------------------------------------------

Outcome conjugate_float(const Options& o, const Inputs& in) {
  const ProblemFile& p = in.problems[0];
  if (!io::is_sampled_function(p)) throw UsageError("conjugate: --mode float needs a sampled function");
  const SampledFunc exact = io::read_sampled_func(p, NumberMode::Float);
  if (exact.dim() != 1) throw UsageError("conjugate: --mode float supports one-dimensional grids only");
  const auto to_d = [](const Vec& v) { return Vector<double>(v.unaryExpr([](const Rational& r) { return r.convert_to<double>(); })); };
  const auto to_q = [](const Extended<double>& v) { return v.is_finite() ? ExtScalar(Rational(v.value())) : ExtScalar::top(); };
  std::vector<Vector<double>> grid;
  std::vector<Extended<double>> values;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    grid.push_back(to_d(exact.grid()[i]));
    values.push_back(exact.values()[i].is_finite() ? Extended<double>(exact.values()[i].value().convert_to<double>())
                                                   : Extended<double>::top());
  }
  const BasicSampledFunc<double> f(grid, values);
  const std::vector<Vec> dual_q = o.grid.empty() ? exact.grid() : parse_grid(o.grid, 1);
  std::vector<Vector<double>> dual;
  for (const Vec& y : dual_q) dual.push_back(to_d(y));
  const double tol = o.tol.empty() ? 1e-9 : parse_rational(o.tol).convert_to<double>();

  Outcome out = start("conjugate", in);
  const BasicSampledFunc<double> fs = fenchel_conjugate(f, dual);
  Json vals = Json::array();
  std::vector<ExtScalar> fs_q;
  for (const auto& v : fs.values()) {
    vals.push_back(v.is_finite() ? Json(v.value()) : Json("top"));
    fs_q.push_back(to_q(v));
  }
  out.report.result = {{"mode", "float"}, {"tolerance", tol}, {"grid", vecs_json(dual_q)}, {"conjugate", vals}};
  out.table.emplace_back("mode", "float (tolerance " + std::to_string(tol) + ")");
  out.table.emplace_back("dual points", std::to_string(dual.size()));
  std::vector<io::CsvColumn> cols;
  const bool same_grid = dual_q == exact.grid();
  if (same_grid) cols.push_back({"f", exact.values()});
  cols.push_back({"f_star", fs_q});
  if (o.biconjugate) {
    const BasicSampledFunc<double> fss = biconjugate(f, tol);
    Json b = Json::array();
    std::vector<ExtScalar> fss_q;
    for (const auto& v : fss.values()) {
      b.push_back(v.is_finite() ? Json(v.value()) : Json("top"));
      fss_q.push_back(to_q(v));
    }
    out.report.result["biconjugate"] = b;
    if (same_grid) cols.push_back({"f_star_star", fss_q});
  }
  out.csv = io::emit_plot_data(1, dual_q, cols);
  return out;
}

Outcome cmd_conjugate(const Options& o) {
  const Inputs in = load(o, 1, 1);
  if (o.mode == "float") return conjugate_float(o, in);
  if (!o.tol.empty()) throw UsageError("--tol applies to --mode float only");
  const ProblemFile& p = in.problems[0];
  Outcome out = start("conjugate", in);
  if (io::is_sampled_function(p)) {
    const SampledFunc f = io::read_sampled_func(p);
    const std::vector<Vec> dual = o.grid.empty() ? f.grid() : parse_grid(o.grid, f.dim());
    const SampledFunc fs = fenchel_conjugate(f, dual);
    out.report.result = {{"representation", "sampled"}, {"grid", vecs_json(dual)}, {"conjugate", exts_json(fs.values())}};
    out.table.emplace_back("representation", "sampled");
    out.table.emplace_back("grid points", std::to_string(f.size()));
    out.table.emplace_back("dual points", std::to_string(dual.size()));
    std::vector<io::CsvColumn> cols;
    const bool same_grid = dual == f.grid();
    if (same_grid) cols.push_back({"f", f.values()});
    cols.push_back({"f_star", fs.values()});
    if (o.biconjugate) {
      const SampledFunc fss = biconjugate(f);
      out.report.result["biconjugate"] = exts_json(fss.values());
      std::size_t equal = 0;
      for (std::size_t i = 0; i < f.size(); ++i) equal += fss.values()[i] == f.values()[i] && f.values()[i].is_finite();
      out.table.emplace_back("f** = f at", std::to_string(equal) + " of " + std::to_string(f.domain().size()) + " finite points");
      if (same_grid) cols.push_back({"f_star_star", fss.values()});
    }
    out.csv = io::emit_plot_data(f.dim(), dual, cols);
    return out;
  }
  const PolyFunc f = io::read_poly_func(p);
  const PolyConjugate fs = fenchel_conjugate_poly(f);
  const std::vector<Vec> grid = parse_grid(o.grid, f.dim());
  std::vector<ExtScalar> vals;
  for (const Vec& y : grid) vals.push_back(fs(y));
  out.report.result = {{"representation", "polyhedral"},
                       {"domain", io::polytope_json(fs.domain())},
                       {"epigraph_points", vecs_json(fs.epigraph_points())},
                       {"grid", vecs_json(grid)},
                       {"conjugate", exts_json(vals)}};
  out.table.emplace_back("representation", "polyhedral");
  out.table.emplace_back("dom f*", show(fs.domain()));
  out.csv = io::emit_plot_data(f.dim(), grid, {{"f", on_grid(f, grid)}, {"f_star", vals}});
  return out;
}

Json indices_json(const SupportSet& s) {
  Json a = Json::array();
  for (std::size_t i : s.indices) a.push_back(i);
  return a;
}

std::string show(const SupportSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.indices.size(); ++i) out += (i ? ", " : "") + std::to_string(s.indices[i]);
  return out + "}";
}

Outcome cmd_envelope(const Options& o, bool support_only) {
  require_exact(o, support_only ? "hsupport" : "envelope");
  const Inputs in = load(o, 2, 2);
  const GeneratorSet h = io::read_generator_set(in.problems[1]);
  Outcome out = start(support_only ? "hsupport" : "envelope", in);
  const ProblemFile& p = in.problems[0];
  Json members = Json::array();
  if (io::is_sampled_function(p)) {
    const SampledFunc f = io::read_sampled_func(p);
    const Envelope<SampledFunc> env = h_convex_envelope(f, h);
    for (std::size_t i : env.support.indices) members.push_back(io::poly_func_json(PolyFunc(h.dim(), {h.members()[i]})));
    out.report.result = {{"support_set", indices_json(env.support)}, {"members", members}};
    out.table.emplace_back("H-support set", show(env.support));
    if (!support_only) {
      out.report.result["degenerate"] = env.degenerate();
      out.report.result["envelope"] = env.function ? exts_json(env.function->values()) : Json(nullptr);
      out.report.result["h_convex"] = is_h_convex(f, h);
      out.table.emplace_back("p is H-convex", yes_no(is_h_convex(f, h)));
      std::vector<io::CsvColumn> cols{{"f", f.values()}};
      cols.push_back({"envelope", env.function ? env.function->values() : std::vector<ExtScalar>(f.size(), ExtScalar::bottom())});
      out.csv = io::emit_plot_data(f.dim(), f.grid(), cols);
    }
    return out;
  }
  const PolyFunc f = io::read_poly_func(p);
  const Envelope<PolyFunc> env = h_convex_envelope(f, h);
  for (std::size_t i : env.support.indices) members.push_back(io::poly_func_json(PolyFunc(h.dim(), {h.members()[i]})));
  out.report.result = {{"support_set", indices_json(env.support)}, {"members", members}};
  out.table.emplace_back("H-support set", show(env.support));
  if (!support_only) {
    out.report.result["degenerate"] = env.degenerate();
    out.report.result["envelope"] = env.function ? io::poly_func_json(*env.function) : Json(nullptr);
    out.report.result["h_convex"] = is_h_convex(f, h);
    out.table.emplace_back("envelope", env.function ? show(*env.function) : "degenerate (empty support set)");
    out.table.emplace_back("p is H-convex", yes_no(is_h_convex(f, h)));
    const std::vector<Vec> grid = parse_grid(o.grid, f.dim());
    const std::vector<ExtScalar> e = env.function ? on_grid(*env.function, grid) : std::vector<ExtScalar>(grid.size(), ExtScalar::bottom());
    out.csv = io::emit_plot_data(f.dim(), grid, {{"f", on_grid(f, grid)}, {"envelope", e}});
  }
  return out;
}

Outcome cmd_support_fn(const Options& o) {
  require_exact(o, "support-fn");
  const Inputs in = load(o, 1, 1);
  const Polytope u = io::read_polytope(in.problems[0]);
  const PolyFunc h = support_function(u);
  Outcome out = start("support-fn", in);
  out.report.result = {{"support_function", io::poly_func_json(h)}};
  out.table.emplace_back("support function", show(h));
  const std::vector<Vec> grid = parse_grid(o.grid, u.dim());
  out.csv = io::emit_plot_data(u.dim(), grid, {{"support_function", on_grid(h, grid)}});
  return out;
}

// ---- separation -----------------------------------------------------------

Outcome cmd_polar(const Options& o) {
  require_exact(o, "polar");
  const Inputs in = load(o, 1, 1);
  const PolyCone k = io::read_cone(in.problems[0]);
  const PolyCone pk = polar(k, limits(o));
  Outcome out = start("polar", in);
  out.report.result = {{"polar", io::cone_json(pk)}};
  out.table.emplace_back("K", show(k));
  out.table.emplace_back("polar", show(pk));
  return out;
}

Json nonoblate_json(const NonoblateReport& r) {
  Json j = {{"nonoblate", r.nonoblate},
            {"first_minus_second_is_span", r.first_minus_second_is_span},
            {"second_minus_first_is_span", r.second_minus_first_is_span},
            {"span_basis", vecs_json(r.span_basis)}};
  j["radius"] = r.radius ? io::rational_json(*r.radius) : Json(nullptr);
  return j;
}

Outcome cmd_nonoblate(const Options& o) {
  require_exact(o, "nonoblate");
  const Inputs in = load(o, 2, 2);
  const ConePair pair(io::read_cone(in.problems[0]), io::read_cone(in.problems[1]));
  const NonoblateReport r = nonoblate_check(pair);
  const DiagonalEquivalence e = nonoblate_diagonal_equivalence(pair, limits(o));
  Outcome out = start("nonoblate", in);
  out.report.result = nonoblate_json(r);
  out.report.result["diagonal"] = e.diagonal;
  out.report.result["agree"] = e.agree();
  out.table.emplace_back("nonoblate", yes_no(r.nonoblate));
  out.table.emplace_back("K1 - K2 = span", yes_no(r.first_minus_second_is_span));
  out.table.emplace_back("K2 - K1 = span", yes_no(r.second_minus_first_is_span));
  out.table.emplace_back("radius", r.radius ? to_string(*r.radius) : "-");
  out.table.emplace_back("diagonal form", yes_no(e.diagonal));
  return out;
}

Outcome cmd_genpos(const Options& o) {
  require_exact(o, "genpos");
  const Inputs in = load(o, 2, 8);
  GeneralPositionReport r;
  if (in.problems[0].kind == "cone") {
    std::vector<PolyCone> cones;
    for (const ProblemFile& p : in.problems) cones.push_back(io::read_cone(p));
    r = general_position_check(cones, gp_limits(o));
  } else {
    std::vector<SublinearOperator> ops;
    for (const ProblemFile& p : in.problems) ops.push_back(io::read_sublinear_operator(p));
    r = sublinear_general_position(ops, gp_limits(o));
  }
  Outcome out = start("genpos", in);
  out.report.result = general_position_json(r);
  out.table.emplace_back("general position", yes_no(r.holds()));
  out.table.emplace_back("working dimension", std::to_string(r.working_dim));
  out.table.emplace_back("span condition", yes_no(r.span_condition));
  out.table.emplace_back("complemented", yes_no(r.complemented));
  out.table.emplace_back("nonoblate", yes_no(r.nonoblate));
  return out;
}

Outcome cmd_decompose(const Options& o) {
  require_exact(o, "decompose");
  const Inputs in = load(o, 2, 2);
  const PolyCone k1 = io::read_cone(in.problems[0]);
  const PolyCone k2 = io::read_cone(in.problems[1]);
  Outcome out = start("decompose", in);
  if (!o.point.empty()) {
    const Vec x = parse_point(o.point, k1.dim(), "--point");
    const std::optional<Decomposition> d = conic_correspondence(ConePair(k1, k2), x);
    out.report.result = {{"point", io::vec_json(x)}, {"member", d.has_value()}};
    if (d) {
      out.report.result["k1"] = io::vec_json(d->k1);
      out.report.result["k2"] = io::vec_json(d->k2);
      out.table.emplace_back("x = k1 - k2", to_string(d->k1) + " - " + to_string(d->k2));
    } else {
      out.table.emplace_back("x = k1 - k2", "no decomposition (x not in K1 - K2)");
    }
    return out;
  }
  const PolarDecompositionReport r = polar_decomposition_check({k1, k2}, limits(o));
  out.report.result = {{"lhs", io::cone_json(r.lhs)}, {"rhs", io::cone_json(r.rhs)}, {"equal", r.equal}, {"hypothesis_holds", r.hypothesis_holds}};
  out.table.emplace_back("polar(K1 cap K2)", show(r.lhs));
  out.table.emplace_back("polar K1 + polar K2", show(r.rhs));
  out.table.emplace_back("equal", yes_no(r.equal));
  out.table.emplace_back("general position", yes_no(r.hypothesis_holds));
  if (!r.hypothesis_holds) {
    out.report.status = "hypothesis_violation";
    out.report.certificate = general_position_json(general_position_check({k1, k2}, gp_limits(o)));
    out.exit_code = kViolation;
  }
  return out;
}

Outcome cmd_sandwich(const Options& o) {
  require_exact(o, "sandwich");
  const Inputs in = load(o, 1, 2);
  const io::SandwichProblem sp = in.problems.size() == 1
                                     ? io::read_sandwich(in.problems[0])
                                     : io::SandwichProblem{io::read_poly_func(in.problems[0]), io::read_poly_func(in.problems[1])};
  const SandwichWitness w = sandwich(sp.p, sp.q);
  Outcome out = start("sandwich", in);
  if (w.functional) {
    out.report.result = {{"separated", true}, {"functional", io::vec_json(*w.functional)}};
    out.table.emplace_back("witness t", to_string(*w.functional));
    out.table.emplace_back("check", "-Q <= t <= P");
  } else {
    out.report.status = "violation";
    out.report.result = {{"separated", false}};
    out.report.certificate = {{"x", io::vec_json(*w.violation)}, {"p_plus_q", io::rational_json(*w.violation_value)}};
    out.table.emplace_back("violation x", to_string(*w.violation));
    out.table.emplace_back("P(x) + Q(x)", to_string(*w.violation_value));
    out.exit_code = kViolation;
  }
  return out;
}

// ---- calculus -------------------------------------------------------------

Outcome cmd_subdiff(const Options& o) {
  require_exact(o, "subdiff");
  const Inputs in = load(o, 1, 1);
  const PolyFunc f = io::read_poly_func(in.problems[0]);
  Outcome out = start("subdiff", in);
  const Vec x = o.point.empty() ? Vec(Vec::Zero(f.dim())) : parse_point(o.point, f.dim(), "--point");
  const Polytope d = subdifferential(f, x);
  out.report.result = {{"point", io::vec_json(x)}, {"subdifferential", io::polytope_json(d)}};
  if (f.is_sublinear()) out.report.result["support_set"] = io::polytope_json(support_set(f));
  out.table.emplace_back("point", to_string(x));
  out.table.emplace_back("subdifferential", show(d));
  return out;
}

Outcome cmd_cop(const Options& o) {
  require_exact(o, "cop");
  const Inputs in = load(o, 1, 1);
  const OperatorFamily fam = io::read_operator_family(in.problems[0]);
  const SupportHull hull = support_hull(fam);
  Outcome out = start("cop", in);
  Json rows = Json::array();
  for (std::size_t r = 0; r < hull.row_hulls().size(); ++r) {
    rows.push_back(io::polytope_json(hull.row_hulls()[r]));
    out.table.emplace_back("row " + std::to_string(r), show(hull.row_hulls()[r]));
  }
  out.report.result = {{"row_hulls", rows}};
  if (!o.matrix.empty()) {
    const Mat t = parse_matrix(o.matrix, fam.rows(), fam.cols());
    const bool in_cop = hull.contains(t);
    const bool in_conv = in_family_hull(t, fam);
    out.report.result["member"] = in_cop;
    out.report.result["in_convex_hull"] = in_conv;
    out.report.result["dominated"] = dominated_by_family(t, fam);
    out.table.emplace_back("T in cop", yes_no(in_cop));
    out.table.emplace_back("T in conv", yes_no(in_conv));
  }
  return out;
}

Outcome cmd_compose(const Options& o) {
  require_exact(o, "compose");
  const Inputs in = load(o, 1, 1);
  const io::CompositionProblem c = io::read_composition(in.problems[0]);
  const CompositionReport r = composition_subdifferential(c.p1, c.p2, limits(o));
  Outcome out = start("compose", in);
  out.report.result = {{"direct", io::polytope_json(r.direct)}, {"formula", io::polytope_json(r.formula)}, {"agree", r.agree}};
  out.table.emplace_back("DIRECT", show(r.direct));
  out.table.emplace_back("FORMULA", show(r.formula));
  out.table.emplace_back("agree", yes_no(r.agree));
  return out;
}

// ---- approximation --------------------------------------------------------

Outcome cmd_epsdiff(const Options& o) {
  require_exact(o, "epsdiff");
  if (o.eps.empty()) throw UsageError("epsdiff: --eps is required");
  const Inputs in = load(o, 1, 1);
  const PolyFunc f = io::read_poly_func(in.problems[0]);
  const Vec x = o.point.empty() ? Vec(Vec::Zero(f.dim())) : parse_point(o.point, f.dim(), "--point");
  const EpsSubdiff d = eps_subdifferential(f, x, parse_rational(o.eps));
  Outcome out = start("epsdiff", in);
  out.report.result = {{"point", io::vec_json(x)}, {"eps", io::rational_json(d.eps)}, {"eps_subdifferential", io::polytope_json(d.description)}};
  out.table.emplace_back("point", to_string(x));
  out.table.emplace_back("eps", to_string(d.eps));
  out.table.emplace_back("eps-subdifferential", show(d.description));
  return out;
}

Outcome cmd_dsubdiff(const Options& o) {
  require_exact(o, "dsubdiff");
  const Inputs in = load(o, 1, 1);
  const LexPolyFunc f = io::read_lex_poly_func(in.problems[0]);
  const Vec x = o.point.empty() ? Vec(Vec::Zero(f.dim())) : parse_point(o.point, f.dim(), "--point");
  const Polytope d = infinitesimal_subdifferential(f, x);
  Outcome out = start("dsubdiff", in);
  out.report.result = {{"point", io::vec_json(x)},
                       {"infinitesimal_subdifferential", io::polytope_json(d)},
                       {"value", io::lex_json(f(x))},
                       {"infinitesimal_minimum", is_infinitesimal_minimum(f, x)}};
  out.table.emplace_back("point", to_string(x));
  out.table.emplace_back("f(x)", to_string(f(x)));
  out.table.emplace_back("Df(x)", show(d));
  out.table.emplace_back("infinitesimal minimum", yes_no(is_infinitesimal_minimum(f, x)));
  return out;
}

Outcome cmd_convolve(const Options& o) {
  require_exact(o, "convolve");
  const Inputs in = load(o, 1, 2);
  Outcome out = start("convolve", in);
  if (in.problems.size() == 1) {
    const io::GridConvolutionProblem g = io::read_convolution(in.problems[0]);
    const GridConvolution c = infimal_convolution(g.f1, g.f2);
    Json entries = Json::array();
    for (const ConvolutionEntry& e : c.entries) {
      Json near = Json::array();
      for (std::size_t y : e.near_witnesses) near.push_back(io::vec_json(c.ys[y]));
      entries.push_back({{"x", io::vec_json(c.xs[e.x])},
                         {"z", io::vec_json(c.zs[e.z])},
                         {"value", io::lex_ext_json(e.value)},
                         {"witness", e.witness ? io::vec_json(c.ys[*e.witness]) : Json(nullptr)},
                         {"exactness", to_string(e.exactness)},
                         {"near_witnesses", near}});
      out.table.emplace_back("(" + to_string(c.xs[e.x]) + ", " + to_string(c.zs[e.z]) + ")",
                             to_string(e.value) + "  y = " + (e.witness ? to_string(c.ys[*e.witness]) : "-") + "  " + to_string(e.exactness));
    }
    out.report.result = {{"representation", "grid"}, {"entries", entries}};
    return out;
  }
  const PolyFunc f1 = io::read_poly_func(in.problems[0]);
  const PolyFunc f2 = io::read_poly_func(in.problems[1]);
  if (o.point.empty()) throw UsageError("convolve: --point x,z is required for polyhedral input");
  const Vec xz = parse_point(o.point, 2, "--point");
  const PolyConvolutionValue v = infimal_convolution(f1, f2, xz(0), xz(1));
  out.report.result = {{"representation", "polyhedral"},
                       {"point", io::vec_json(xz)},
                       {"value", io::ext_json(v.value)},
                       {"witness", v.witness ? io::rational_json(*v.witness) : Json(nullptr)}};
  out.table.emplace_back("(x, z)", to_string(xz));
  out.table.emplace_back("value", to_string(v.value));
  out.table.emplace_back("witness y", v.witness ? to_string(*v.witness) : "-");
  return out;
}

Outcome cmd_chainrule(const Options& o) {
  require_exact(o, "chainrule");
  const Inputs in = load(o, 2, 2);
  const PolyFunc f1 = io::read_poly_func(in.problems[0]);
  const PolyFunc f2 = io::read_poly_func(in.problems[1]);
  if (o.point.empty()) throw UsageError("chainrule: --point x,y,z is required");
  const Vec p = parse_point(o.point, 3, "--point");
  const ChainRuleReport r = chain_rule_check(f1, f2, p(0), p(1), p(2));
  Outcome out = start("chainrule", in);
  out.report.result = {{"point", io::vec_json(p)},
                       {"value", io::rational_json(r.value)},
                       {"lhs", io::polytope_json(r.lhs)},
                       {"rhs", io::polytope_json(r.rhs)},
                       {"equal", r.equal},
                       {"general_position", general_position_json(r.general_position)}};
  out.table.emplace_back("convolution value", to_string(r.value));
  out.table.emplace_back("lhs D(f2 box f1)", show(r.lhs));
  out.table.emplace_back("rhs Df2 o Df1", show(r.rhs));
  out.table.emplace_back("equal", yes_no(r.equal));
  out.table.emplace_back("general position", yes_no(r.general_position.holds()));
  return out;
}

// ---- check ----------------------------------------------------------------

Outcome cmd_check(const Options& o) {
  require_exact(o, "check");
  if (!o.inputs.empty()) throw UsageError("check takes no input files");
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = suites::suite_names();
  } else {
    names.push_back(o.suite);
  }
  Outcome out;
  out.report.operation = "check";
  out.report.input_digest = io::input_digest({"check", o.suite, std::to_string(o.seed)});
  Json results = Json::array();
  bool all = true;
  for (const std::string& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const suites::SuiteOutcome s = suites::run_suite(name, o.seed);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    Json notes = Json::object();
    for (const auto& [k, v] : s.notes) notes[k] = v;
    results.push_back({{"name", s.name},
                       {"criterion", s.criterion},
                       {"passed", s.passed()},
                       {"instances", s.instances},
                       {"checks", s.checks},
                       {"failed", s.failed},
                       {"failures", s.failures},
                       {"notes", notes}});
    all = all && s.passed();
    std::ostringstream row;
    row << (s.passed() ? "PASS" : "FAIL") << "  " << s.instances << " instances, " << s.checks << " checks, " << s.failed
        << " failed, " << ms << " ms";
    out.table.emplace_back(std::to_string(s.criterion) + " " + s.name, row.str());
    for (const std::string& f : s.failures) out.table.emplace_back("", "  " + f);
  }
  out.report.result = {{"seed", o.seed}, {"suites", results}, {"passed", all}};
  if (!all) {
    out.report.status = "failed";
    out.exit_code = kCheckFailed;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"conjugate", "envelope", "hsupport", "support-fn", "polar",   "nonoblate",
                                                 "genpos",    "decompose", "sandwich", "subdiff",    "cop",     "compose",
                                                 "epsdiff",   "dsubdiff",  "convolve", "chainrule",  "check"};
  return names;
}

Outcome run_command(const std::string& name, const Options& o) {
  if (o.mode != "exact" && o.mode != "float") throw UsageError("--mode must be 'exact' or 'float'");
  if (o.max_dim < 1) throw UsageError("--max-dim must be positive");
  if (name == "conjugate") return cmd_conjugate(o);
  if (!o.tol.empty()) throw UsageError("--tol applies to --mode float only");
  if (name == "envelope") return cmd_envelope(o, false);
  if (name == "hsupport") return cmd_envelope(o, true);
  if (name == "support-fn") return cmd_support_fn(o);
  if (name == "polar") return cmd_polar(o);
  if (name == "nonoblate") return cmd_nonoblate(o);
  if (name == "genpos") return cmd_genpos(o);
  if (name == "decompose") return cmd_decompose(o);
  if (name == "sandwich") return cmd_sandwich(o);
  if (name == "subdiff") return cmd_subdiff(o);
  if (name == "cop") return cmd_cop(o);
  if (name == "compose") return cmd_compose(o);
  if (name == "epsdiff") return cmd_epsdiff(o);
  if (name == "dsubdiff") return cmd_dsubdiff(o);
  if (name == "convolve") return cmd_convolve(o);
  if (name == "chainrule") return cmd_chainrule(o);
  if (name == "check") return cmd_check(o);
  throw UsageError("unknown command '" + name + "'");
}

}  // namespace abconv::cli
