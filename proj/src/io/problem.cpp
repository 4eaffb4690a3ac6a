#include "abconv/io/problem.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace abconv::io {

namespace {

const std::vector<std::string> kKinds = {"function", "generator_set", "cone",   "polytope",
                                         "operator_family", "convolution", "sandwich", "composition"};

[[noreturn]] void fail(const std::string& path, const std::string& message) { throw ParseError(path + ": " + message); }

/// A JSON value with its field path, for diagnostics.
class Node {
 public:
  Node(const Json& j, std::string path, NumberMode mode) : j_(j), path_(std::move(path)), mode_(mode) {}

  const std::string& path() const { return path_; }
  const Json& json() const { return j_; }

  void expect_object(std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) const {
    if (!j_.is_object()) fail(path_, "expected an object");
    for (const char* k : required) {
      if (!j_.contains(k)) fail(path_, std::string("missing field '") + k + "'");
    }
    for (const auto& [k, v] : j_.items()) {
      const auto known = [&](std::initializer_list<const char*> l) {
        return std::any_of(l.begin(), l.end(), [&](const char* s) { return k == s; });
      };
      if (!known(required) && !known(optional)) fail(path_ + "." + k, "unknown field");
    }
  }

  bool has(const char* key) const { return j_.contains(key); }
  Node operator[](const char* key) const { return Node(j_.at(key), path_ + "." + key, mode_); }

  std::vector<Node> array() const {
    if (!j_.is_array()) fail(path_, "expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], path_ + "[" + std::to_string(i) + "]", mode_);
    return out;
  }

  std::string string() const {
    if (!j_.is_string()) fail(path_, "expected a string");
    return j_.get<std::string>();
  }

  Index count() const {
    if (!j_.is_number_unsigned() && !(j_.is_number_integer() && j_.get<std::int64_t>() >= 0)) {
      fail(path_, "expected a nonnegative integer");
    }
    return static_cast<Index>(j_.get<std::uint64_t>());
  }

  Rational rational() const {
    if (j_.is_number_float()) {
      if (mode_ == NumberMode::Exact) fail(path_, "floating literal rejected in exact mode; write \"p/q\"");
      return Rational(j_.get<double>());
    }
    if (j_.is_number_unsigned()) return Rational(Integer(j_.get<std::uint64_t>()));
    if (j_.is_number_integer()) return make_rational(j_.get<std::int64_t>());
    if (j_.is_string()) {
      try {
        return parse_rational(j_.get<std::string>());
      } catch (const ParseError& e) {
        fail(path_, e.what());
      }
    }
    if (j_.is_array() && j_.size() == 2 && j_[0].is_number_integer() && j_[1].is_number_integer()) {
      if (j_[1].get<std::int64_t>() == 0) fail(path_, "zero denominator");
      return make_rational(j_[0].get<std::int64_t>(), j_[1].get<std::int64_t>());
    }
    fail(path_, "expected a rational (\"p/q\" string, integer or [p, q] pair)");
  }

  ExtScalar ext() const {
    if (j_.is_string()) {
      const std::string s = j_.get<std::string>();
      if (s == "top" || s == "+inf" || s == "inf") return ExtScalar::top();
      if (s == "bottom" || s == "-inf") fail(path_, "BOTTOM values are not allowed here");
    }
    return rational();
  }

  LexScalar lex() const {
    if (j_.is_object()) {
      expect_object({"std"}, {"inf"});
      return LexScalar((*this)["std"].rational(), has("inf") ? (*this)["inf"].rational() : Rational(0));
    }
    return LexScalar(rational());
  }

  LexExt lex_ext() const {
    if (j_.is_string() && (j_.get<std::string>() == "top" || j_.get<std::string>() == "+inf" || j_.get<std::string>() == "inf")) {
      return LexExt::top();
    }
    return LexExt(lex());
  }

  Vec vec(Index dim) const {
    const std::vector<Node> items = array();
    if (static_cast<Index>(items.size()) != dim) {
      fail(path_, "expected " + std::to_string(dim) + " entries, found " + std::to_string(items.size()));
    }
    Vec out(dim);
    for (Index i = 0; i < dim; ++i) out(i) = items[static_cast<std::size_t>(i)].rational();
    return out;
  }

  std::vector<Vec> points(Index dim) const {
    std::vector<Vec> out;
    for (const Node& n : array()) out.push_back(n.vec(dim));
    return out;
  }

  /// Points whose dimension is taken from the first one.
  std::vector<Vec> points() const {
    const std::vector<Node> items = array();
    if (items.empty()) return {};
    const Index dim = static_cast<Index>(items.front().array().size());
    return points(dim);
  }

 private:
  const Json& j_;
  std::string path_;
  NumberMode mode_;
};

template <typename F>
auto guarded(const std::string& path, F&& body) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

void expect_kind(const ProblemFile& p, const char* kind) {
  if (p.kind != kind) throw ParseError("expected a problem of kind '" + std::string(kind) + "', found '" + p.kind + "'");
}

Node payload_node(const ProblemFile& p, NumberMode mode) { return Node(p.payload, "payload", mode); }

void validate_function(const Node& n) {
  n.expect_object({"representation", "dim"}, {"pieces", "domain_rows", "grid", "values"});
  const std::string rep = n["representation"].string();
  if (rep == "polyhedral") {
    if (!n.has("pieces")) fail(n.path(), "missing field 'pieces'");
    if (n.has("grid") || n.has("values")) fail(n.path(), "grid data in a polyhedral function");
    for (const Node& piece : n["pieces"].array()) piece.expect_object({"slope", "offset"}, {"slope_inf", "offset_inf"});
  } else if (rep == "sampled") {
    if (!n.has("grid") || !n.has("values")) fail(n.path(), "sampled functions need 'grid' and 'values'");
    if (n.has("pieces") || n.has("domain_rows")) fail(n.path(), "piece data in a sampled function");
  } else {
    fail(n.path() + ".representation", "expected 'polyhedral' or 'sampled'");
  }
}

LexPolyFunc lex_function_from(const Node& n) {
  validate_function(n);
  if (n["representation"].string() != "polyhedral") fail(n.path(), "a polyhedral function is required");
  const Index dim = n["dim"].count();
  std::vector<LexAffine> pieces;
  for (const Node& piece : n["pieces"].array()) {
    LexAffine a{piece["slope"].vec(dim), zeros(dim), LexScalar(piece["offset"].rational())};
    if (piece.has("slope_inf")) a.slope_inf = piece["slope_inf"].vec(dim);
    if (piece.has("offset_inf")) a.offset = LexScalar(a.offset.standard(), piece["offset_inf"].rational());
    pieces.push_back(std::move(a));
  }
  return guarded(n.path(), [&] { return LexPolyFunc(dim, pieces); });
}

bool lex_parts_present(const Node& n) {
  if (!n.has("pieces")) return false;
  for (const Node& piece : n["pieces"].array()) {
    if (piece.has("slope_inf") || piece.has("offset_inf")) return true;
  }
  return false;
}

PolyFunc function_from(const Node& n) {
  const LexPolyFunc lf = lex_function_from(n);
  for (std::size_t i = 0; i < lf.pieces().size(); ++i) {
    const LexAffine& a = lf.pieces()[i];
    if (!is_zero(a.slope_inf) || a.offset.infinitesimal() != 0) {
      fail(n.path() + ".pieces[" + std::to_string(i) + "]", "infinitesimal parts are only accepted by dsubdiff");
    }
  }
  return lf.standard_part();
}

std::vector<Vec> domain_rows_from(const Node& n) {
  if (!n.has("domain_rows")) return {};
  return n["domain_rows"].points(n["dim"].count());
}

GridFunction grid_function_from(const Node& values, const std::vector<Vec>& us, const std::vector<Vec>& vs) {
  const std::vector<Node> rows = values.array();
  if (rows.size() != us.size()) fail(values.path(), "expected " + std::to_string(us.size()) + " rows");
  std::vector<std::vector<LexExt>> table;
  for (const Node& row : rows) {
    const std::vector<Node> cells = row.array();
    if (cells.size() != vs.size()) fail(row.path(), "expected " + std::to_string(vs.size()) + " entries");
    table.emplace_back();
    for (const Node& c : cells) table.back().push_back(c.lex_ext());
  }
  return guarded(values.path(), [&] { return GridFunction(us, vs, table); });
}

Json pieces_json(const PolyFunc& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces()) pieces.push_back({{"slope", vec_json(piece.slope)}, {"offset", rational_json(piece.offset)}});
  return pieces;
}

Json function_payload(const PolyFunc& f) {
  return {{"representation", "polyhedral"}, {"dim", f.dim()}, {"pieces", pieces_json(f)}};
}

Json grid_json(const std::vector<Vec>& points) {
  Json out = Json::array();
  for (const Vec& p : points) out.push_back(vec_json(p));
  return out;
}

Json table_json(const GridFunction& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.us().size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < f.vs().size(); ++j) row.push_back(lex_ext_json(f.at(i, j)));
    out.push_back(row);
  }
  return out;
}

ProblemFile problem(const char* kind, Json payload) {
  ProblemFile p;
  p.kind = kind;
  p.payload = std::move(payload);
  return p;
}

void validate_payload(const ProblemFile& p, NumberMode mode) {
  const Node n = payload_node(p, mode);
  if (p.kind == "function") {
    if (n.has("representation") && n["representation"].json() == "sampled") {
      read_sampled_func(p, mode);
    } else {
      lex_function_from(n);
      domain_rows_from(n);
    }
  } else if (p.kind == "generator_set") {
    read_generator_set(p, mode);
  } else if (p.kind == "cone") {
    read_cone(p, mode);
  } else if (p.kind == "polytope") {
    read_polytope(p, mode);
  } else if (p.kind == "operator_family") {
    read_operator_family(p, mode);
  } else if (p.kind == "convolution") {
    read_convolution(p, mode);
  } else if (p.kind == "sandwich") {
    read_sandwich(p, mode);
  } else if (p.kind == "composition") {
    n.expect_object({"p1", "p2"});
    for (const Node& c : n["p1"].array()) function_from(c);
    function_from(n["p2"]);
  }
}

}  // namespace

const std::vector<std::string>& problem_kinds() { return kKinds; }

Json rational_json(const Rational& v) { return to_string(v); }

Json vec_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v(i)));
  return out;
}

Json ext_json(const ExtScalar& v) {
  if (v.is_top()) return "top";
  if (v.is_bottom()) return "bottom";
  return rational_json(v.value());
}

Json lex_json(const LexScalar& v) {
  if (v.infinitesimal() == 0) return rational_json(v.standard());
  return {{"std", rational_json(v.standard())}, {"inf", rational_json(v.infinitesimal())}};
}

Json lex_ext_json(const LexExt& v) {
  if (v.is_top()) return "top";
  if (v.is_bottom()) return "bottom";
  return lex_json(v.value());
}

Json polytope_json(const Polytope& p) { return {{"dim", p.dim()}, {"vertices", grid_json(p.vertices())}}; }

Json cone_json(const PolyCone& k) { return {{"dim", k.dim()}, {"rays", grid_json(k.rays())}}; }

Json poly_func_json(const PolyFunc& f) { return function_payload(f); }

ProblemFile parse_problem(std::string_view text, const std::string& source, NumberMode mode) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ParseError(source + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  try {
    const Node root(j, "", mode);
    root.expect_object({"schema_version", "kind", "payload"}, {"metadata"});
    ProblemFile p;
    p.schema_version = root["schema_version"].string();
    if (p.schema_version != kSchemaVersion) fail(".schema_version", "unsupported version '" + p.schema_version + "'");
    p.kind = root["kind"].string();
    if (std::find(kKinds.begin(), kKinds.end(), p.kind) == kKinds.end()) fail(".kind", "unknown kind '" + p.kind + "'");
    p.payload = j.at("payload");
    if (j.contains("metadata")) {
      if (!j.at("metadata").is_object()) fail(".metadata", "expected an object");
      p.metadata = j.at("metadata");
    }
    validate_payload(p, mode);
    return p;
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

ProblemFile load_problem(const std::string& path, NumberMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str(), path, mode);
}

std::string dump_problem(const ProblemFile& p) {
  const Json j = {{"schema_version", p.schema_version}, {"kind", p.kind}, {"payload", p.payload}, {"metadata", p.metadata}};
  return j.dump(2) + "\n";
}

bool is_sampled_function(const ProblemFile& p) {
  return p.kind == "function" && p.payload.contains("representation") && p.payload.at("representation") == "sampled";
}

bool has_infinitesimal_parts(const ProblemFile& p) {
  return p.kind == "function" && !is_sampled_function(p) && lex_parts_present(payload_node(p, NumberMode::Exact));
}

PolyFunc read_poly_func(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "function");
  return function_from(payload_node(p, mode));
}

LexPolyFunc read_lex_poly_func(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "function");
  return lex_function_from(payload_node(p, mode));
}

SublinearOperator read_sublinear_operator(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "function");
  const Node n = payload_node(p, mode);
  return {function_from(n), domain_rows_from(n)};
}

SampledFunc read_sampled_func(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "function");
  const Node n = payload_node(p, mode);
  validate_function(n);
  if (n["representation"].string() != "sampled") fail(n.path(), "a sampled function is required");
  const Index dim = n["dim"].count();
  const std::vector<Vec> grid = n["grid"].points(dim);
  std::vector<ExtScalar> values;
  for (const Node& v : n["values"].array()) values.push_back(v.ext());
  return guarded(n.path(), [&] { return SampledFunc(grid, values); });
}

GeneratorSet read_generator_set(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "generator_set");
  const Node n = payload_node(p, mode);
  n.expect_object({"dim", "members"});
  const Index dim = n["dim"].count();
  std::vector<AffineFunctional> members;
  for (const Node& m : n["members"].array()) {
    m.expect_object({"slope", "offset"});
    members.push_back({m["slope"].vec(dim), m["offset"].rational()});
  }
  return guarded(n.path(), [&] { return GeneratorSet(dim, members); });
}

PolyCone read_cone(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "cone");
  const Node n = payload_node(p, mode);
  n.expect_object({"dim", "rays"});
  const Index dim = n["dim"].count();
  return PolyCone(dim, n["rays"].points(dim));
}

Polytope read_polytope(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "polytope");
  const Node n = payload_node(p, mode);
  n.expect_object({"dim", "vertices"});
  const Index dim = n["dim"].count();
  const std::vector<Vec> vertices = n["vertices"].points(dim);
  if (vertices.empty()) return Polytope::empty(dim);
  return Polytope(dim, vertices);
}

OperatorFamily read_operator_family(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "operator_family");
  const Node n = payload_node(p, mode);
  n.expect_object({"rows", "cols", "members"});
  const Index rows = n["rows"].count();
  const Index cols = n["cols"].count();
  std::vector<Mat> members;
  for (const Node& m : n["members"].array()) {
    const std::vector<Vec> r = m.points(cols);
    if (static_cast<Index>(r.size()) != rows) fail(m.path(), "expected " + std::to_string(rows) + " rows");
    members.push_back(stack_rows(r, cols));
  }
  return guarded(n.path(), [&] { return OperatorFamily(members); });
}

SandwichProblem read_sandwich(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "sandwich");
  const Node n = payload_node(p, mode);
  n.expect_object({"p", "q"});
  return {function_from(n["p"]), function_from(n["q"])};
}

CompositionProblem read_composition(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "composition");
  const Node n = payload_node(p, mode);
  n.expect_object({"p1", "p2"});
  CompositionProblem out{{}, function_from(n["p2"])};
  for (const Node& c : n["p1"].array()) out.p1.push_back(function_from(c));
  if (out.p1.empty()) fail(n.path() + ".p1", "at least one coordinate is required");
  return out;
}

GridConvolutionProblem read_convolution(const ProblemFile& p, NumberMode mode) {
  expect_kind(p, "convolution");
  const Node n = payload_node(p, mode);
  n.expect_object({"representation", "xs", "ys", "zs", "f1", "f2"});
  if (n["representation"].string() != "grid") {
    fail(n.path() + ".representation", "only 'grid' is stored in a file; polyhedral convolution takes two function files");
  }
  const std::vector<Vec> xs = n["xs"].points();
  const std::vector<Vec> ys = n["ys"].points();
  const std::vector<Vec> zs = n["zs"].points();
  return {grid_function_from(n["f1"], xs, ys), grid_function_from(n["f2"], ys, zs)};
}

ProblemFile make_problem(const PolyFunc& f, const std::vector<Vec>& domain_rows) {
  Json payload = function_payload(f);
  if (!domain_rows.empty()) payload["domain_rows"] = grid_json(domain_rows);
  return problem("function", payload);
}

ProblemFile make_problem(const SampledFunc& f) {
  Json values = Json::array();
  for (const ExtScalar& v : f.values()) values.push_back(ext_json(v));
  return problem("function", {{"representation", "sampled"}, {"dim", f.dim()}, {"grid", grid_json(f.grid())}, {"values", values}});
}

ProblemFile make_problem(const LexPolyFunc& f) {
  Json pieces = Json::array();
  for (const LexAffine& a : f.pieces()) {
    Json piece = {{"slope", vec_json(a.slope)}, {"offset", rational_json(a.offset.standard())}};
    if (!is_zero(a.slope_inf)) piece["slope_inf"] = vec_json(a.slope_inf);
    if (a.offset.infinitesimal() != 0) piece["offset_inf"] = rational_json(a.offset.infinitesimal());
    pieces.push_back(piece);
  }
  return problem("function", {{"representation", "polyhedral"}, {"dim", f.dim()}, {"pieces", pieces}});
}

ProblemFile make_problem(const GeneratorSet& h) {
  Json members = Json::array();
  for (const auto& m : h.members()) members.push_back({{"slope", vec_json(m.slope)}, {"offset", rational_json(m.offset)}});
  return problem("generator_set", {{"dim", h.dim()}, {"members", members}});
}

ProblemFile make_problem(const PolyCone& k) { return problem("cone", cone_json(k)); }

ProblemFile make_problem(const Polytope& u) { return problem("polytope", polytope_json(u)); }

ProblemFile make_problem(const OperatorFamily& family) {
  Json members = Json::array();
  for (const Mat& a : family.members()) {
    Json rows = Json::array();
    for (Index r = 0; r < a.rows(); ++r) rows.push_back(vec_json(a.row(r).transpose()));
    members.push_back(rows);
  }
  return problem("operator_family", {{"rows", family.rows()}, {"cols", family.cols()}, {"members", members}});
}

ProblemFile make_problem(const SandwichProblem& s) {
  return problem("sandwich", {{"p", function_payload(s.p)}, {"q", function_payload(s.q)}});
}

ProblemFile make_problem(const CompositionProblem& c) {
  Json p1 = Json::array();
  for (const PolyFunc& f : c.p1) p1.push_back(function_payload(f));
  return problem("composition", {{"p1", p1}, {"p2", function_payload(c.p2)}});
}

ProblemFile make_problem(const GridConvolutionProblem& c) {
  return problem("convolution", {{"representation", "grid"},
                                 {"xs", grid_json(c.f1.us())},
                                 {"ys", grid_json(c.f1.vs())},
                                 {"zs", grid_json(c.f2.vs())},
                                 {"f1", table_json(c.f1)},
                                 {"f2", table_json(c.f2)}});
}

}  // namespace abconv::io
