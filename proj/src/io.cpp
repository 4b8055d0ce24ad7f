#include "opineq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace opineq {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

double number(const json& j, const char* field) {
  if (!j.is_number()) parse_fail(std::string("field '") + field + "' must be a number");
  return j.get<double>();
}

const json& required(const json& j, const char* field) {
  if (!j.is_object()) parse_fail(std::string("expected an object holding '") + field + "'");
  auto it = j.find(field);
  if (it == j.end()) parse_fail(std::string("missing field '") + field + "'");
  return *it;
}

std::vector<double> number_list(const json& j, const char* field) {
  if (!j.is_array()) parse_fail(std::string("field '") + field + "' must be a list of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, field));
  return out;
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_fail("complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

Matrix row_major_matrix(const json& j, Eigen::Index dim, const char* field) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim * dim)
    parse_fail(std::string("field '") + field + "' must hold dim*dim [re, im] entries");
  Matrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = complex_from_json(j[static_cast<std::size_t>(r * dim + c)]);
  return m;
}

}  // namespace

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

SpectralInterval interval_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) parse_fail("interval must be [gamma, Gamma]");
  return {number(j[0], "interval"), number(j[1], "interval")};
}

json to_json(const SpectralInterval& iv) { return json::array({iv.lower(), iv.upper()}); }

ScalarFunction function_from_json(const json& j) {
  if (!j.is_object()) parse_fail("function literal must be an object with a 'kind'");
  const json& kind_j = required(j, "kind");
  if (!kind_j.is_string()) parse_fail("function 'kind' must be a string");
  const std::string kind = kind_j.get<std::string>();
  auto binary = [&](const char* field, bool product) {
    const json& parts = required(j, field);
    if (!parts.is_array() || parts.size() < 2) parse_fail(std::string("'") + field + "' needs >= 2 functions");
    ScalarFunction acc = function_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = product ? acc * function_from_json(parts[i]) : acc + function_from_json(parts[i]);
    return acc;
  };

  ScalarFunction f = ScalarFunction::identity();
  if (kind == "constant")
    f = ScalarFunction::constant(number(required(j, "c"), "c"));
  else if (kind == "identity")
    f = ScalarFunction::identity();
  else if (kind == "power")
    f = ScalarFunction::power(number(required(j, "p"), "p"));
  else if (kind == "log")
    f = ScalarFunction::log();
  else if (kind == "exp")
    f = ScalarFunction::exp();
  else if (kind == "affine")
    f = ScalarFunction::affine(number(required(j, "a"), "a"), number(required(j, "b"), "b"));
  else if (kind == "neg_parabola")
    f = ScalarFunction::neg_parabola();
  else if (kind == "tabulated")
    f = ScalarFunction::tabulated(number_list(required(j, "knots"), "knots"),
                                  number_list(required(j, "values"), "values"));
  else if (kind == "product")
    f = binary("factors", true);
  else if (kind == "sum")
    f = binary("terms", false);
  else
    parse_fail("unknown function kind '" + kind + "'");

  if (auto it = j.find("domain"); it != j.end()) f = f.restricted_to(interval_from_json(*it));
  return f;
}

json to_json(const ScalarFunction& f) {
  const auto& n = node_of(f);
  json j;
  using Kind = ScalarFunction::Kind;
  switch (n.kind) {
    case Kind::constant: j = {{"kind", "constant"}, {"c", n.a}}; break;
    case Kind::identity: j = {{"kind", "identity"}}; break;
    case Kind::power: j = {{"kind", "power"}, {"p", n.a}}; break;
    case Kind::log: j = {{"kind", "log"}}; break;
    case Kind::exp: j = {{"kind", "exp"}}; break;
    case Kind::affine: j = {{"kind", "affine"}, {"a", n.a}, {"b", n.b}}; break;
    case Kind::neg_parabola: j = {{"kind", "neg_parabola"}}; break;
    case Kind::tabulated: j = {{"kind", "tabulated"}, {"knots", n.knots}, {"values", n.values}}; break;
    case Kind::product: j = {{"kind", "product"}, {"factors", {to_json(n.children[0]), to_json(n.children[1])}}}; break;
    case Kind::sum: j = {{"kind", "sum"}, {"terms", {to_json(n.children[0]), to_json(n.children[1])}}}; break;
  }
  if (n.restriction) j["domain"] = to_json(*n.restriction);
  return j;
}

HermitianOperator operator_from_json(const json& j) {
  const SpectralInterval interval = interval_from_json(required(j, "interval"));
  const json& dim_j = required(j, "dim");
  if (!dim_j.is_number_integer() || dim_j.get<long long>() < 1) parse_fail("'dim' must be a positive integer");
  const auto dim = static_cast<Eigen::Index>(dim_j.get<long long>());
  if (j.contains("matrix")) return HermitianOperator::from_dense(row_major_matrix(j["matrix"], dim, "matrix"), interval);
  std::vector<double> eigenvalues = number_list(required(j, "eigenvalues"), "eigenvalues");
  if (static_cast<Eigen::Index>(eigenvalues.size()) != dim) parse_fail("'eigenvalues' must have dim entries");
  if (j.contains("eigenvectors")) {
    const Matrix u = row_major_matrix(j["eigenvectors"], dim, "eigenvectors");
    return HermitianOperator::from_spectrum(std::move(eigenvalues), interval, &u);
  }
  return HermitianOperator::from_spectrum(std::move(eigenvalues), interval);
}

json to_json(const HermitianOperator& a) {
  json vecs = json::array();
  for (Eigen::Index r = 0; r < a.dim(); ++r)
    for (Eigen::Index c = 0; c < a.dim(); ++c) vecs.push_back(complex_to_json(a.eigenvectors()(r, c)));
  return {{"dim", a.dim()},
          {"eigenvalues", std::vector<double>(a.eigenvalues().begin(), a.eigenvalues().end())},
          {"eigenvectors", vecs},
          {"interval", to_json(a.interval())}};
}

StateVector state_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("state must be a non-empty list of [re, im] pairs");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return StateVector(std::move(v));
}

json to_json(const StateVector& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.dim(); ++i) out.push_back(complex_to_json(x.components()(i)));
  return out;
}

Normalization normalization_from_json(const json& j) {
  if (j == "sum_of_squares") return Normalization::sum_of_squares;
  if (j == "per_vector") return Normalization::per_vector;
  parse_fail("normalization must be \"sum_of_squares\" or \"per_vector\"");
}

OperatorEnsemble ensemble_from_json(const json& j) {
  const json& ops_j = required(j, "operators");
  const json& states_j = required(j, "states");
  if (!ops_j.is_array() || !states_j.is_array()) parse_fail("'operators' and 'states' must be lists");
  std::vector<HermitianOperator> ops;
  std::vector<StateVector> states;
  for (const auto& o : ops_j) ops.push_back(operator_from_json(o));
  for (const auto& s : states_j) states.push_back(state_from_json(s));
  const Normalization mode =
      j.contains("normalization") ? normalization_from_json(j["normalization"]) : Normalization::sum_of_squares;
  return OperatorEnsemble(std::move(ops), std::move(states), mode);
}

json to_json(const OperatorEnsemble& e) {
  json ops = json::array();
  json states = json::array();
  for (const auto& o : e.operators()) ops.push_back(to_json(o));
  for (const auto& s : e.states()) states.push_back(to_json(s));
  return {{"operators", ops}, {"states", states}, {"normalization", std::string(to_string(e.mode()))}};
}

Direction direction_from_json(const json& j) {
  if (j == ">=" || j == "geq") return Direction::geq;
  if (j == "<=" || j == "leq") return Direction::leq;
  parse_fail("direction must be \">=\" or \"<=\"");
}

namespace {

json pair_json(const std::optional<PointPair>& p) {
  if (!p) return nullptr;
  return json::array({p->x, p->y});
}

}  // namespace

json to_json(const SynchronyVerdict& v) {
  return {{"classification", std::string(to_string(v.classification))},
          {"min_product", v.min_product},
          {"max_product", v.max_product},
          {"tolerance", v.tolerance},
          {"weight_nonnegative", v.weight_nonnegative},
          {"witness_pos", pair_json(v.witness_pos)},
          {"witness_neg", pair_json(v.witness_neg)},
          {"grid_size", v.grid_size}};
}

json to_json(const MonotonicityVerdict& v) {
  return {{"classification", std::string(to_string(v.classification))},
          {"min_defect", v.min_defect},
          {"max_defect", v.max_defect},
          {"tolerance", v.tolerance},
          {"witness_pos", pair_json(v.witness_pos)},
          {"witness_neg", pair_json(v.witness_neg)},
          {"grid_size", v.grid_size}};
}

json to_json(const InequalityReport& r) {
  json j = {{"theorem_id", r.theorem_id},
            {"direction", std::string(to_string(r.direction))},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"gap", r.gap},
            {"tolerance", r.tolerance},
            {"verdict", std::string(to_string(r.verdict))},
            {"synchrony", r.hypothesis_evidence ? to_json(*r.hypothesis_evidence) : json(nullptr)},
            {"inputs_digest", r.inputs_digest},
            {"notes", r.notes}};
  return j;
}

std::string format17(double v) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "Infinity" : "-Infinity";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // keep floats recognisable as floats
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

namespace {

void dump_into(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_into(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format17(v) : "null";
      break;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump17(const json& j) {
  std::string out;
  dump_into(j, out);
  return out;
}

}  // namespace opineq
