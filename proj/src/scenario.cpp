#include "msk/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "msk/canonical_models.hpp"
#include "msk/errors.hpp"
#include "msk/hamiltonian.hpp"
#include "msk/invariance.hpp"
#include "msk/multi_index.hpp"
#include "msk/poly_parser.hpp"

namespace msk {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Deterministic sampling. The engine is fully specified by the standard;
// range reduction uses plain modulo so that byte-identical reports do not
// depend on distribution implementations.

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  Rational rational() {
    long num = static_cast<long>(engine_() % 19) - 9;
    long den = static_cast<long>(engine_() % 4) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  QVector point(int dim) {
    QVector p(static_cast<std::size_t>(dim));
    for (auto& c : p) c = rational();
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// JSON (de)serialization of library values. All renderings are canonical:
// components in lexicographic multi-index order, polynomials via the
// grammar's canonical text, rationals via to_string.

json index_to_json(const MultiIndex& I) {
  json a = json::array();
  for (int i : I.indices()) a.push_back(i);
  return a;
}

MultiIndex index_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("multi-index must be an array");
  std::vector<int> idx;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw parse_error("multi-index entries must be integers");
    idx.push_back(v.get<int>());
  }
  std::vector<int> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != idx)
    throw parse_error("component index " + j.dump() +
                      " is not strictly increasing; normalize it to increasing order, "
                      "adjusting the coefficient sign by the permutation parity");
  return MultiIndex(std::move(idx));
}

template <class T>
json components_to_json(const T& obj) {
  json comps = json::array();
  for (const auto& [I, f] : obj.components()) {
    json entry;
    entry["index"] = index_to_json(I);
    entry["coeff"] = f.to_string(obj.chart().coords());
    comps.push_back(std::move(entry));
  }
  return comps;
}

json form_to_json(const DifferentialForm& w) {
  json j;
  j["degree"] = w.degree();
  j["components"] = components_to_json(w);
  return j;
}

json field_to_json(const MultiVectorField& x) {
  json j;
  j["degree"] = x.degree();
  j["components"] = components_to_json(x);
  return j;
}

json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (const QVector& r : s.basis().row_vectors()) {
    json row = json::array();
    for (const Rational& c : r) row.push_back(to_string(c));
    rows.push_back(std::move(row));
  }
  json j;
  j["rows"] = rows;
  return j;
}

json qvector_to_json(const QVector& v) {
  json a = json::array();
  for (const Rational& c : v) a.push_back(to_string(c));
  return a;
}

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = rows;
  return j;
}

QVector qvector_from_json(const json& j, int dim, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw parse_error(what + " must be an array of " + std::to_string(dim) + " rationals");
  QVector v;
  for (const auto& e : j) {
    if (!e.is_string()) throw parse_error(what + " entries must be rational strings");
    v.push_back(parse_rational(e.get<std::string>()));
  }
  return v;
}

struct ComponentEntry {
  MultiIndex index;
  Polynomial coeff;
};

std::vector<ComponentEntry> components_from_json(const json& j, const Chart& chart,
                                                 int degree, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + ": components must be an array");
  std::vector<ComponentEntry> out;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("index") || !entry.contains("coeff"))
      throw parse_error(what + ": each component needs index and coeff");
    MultiIndex I = index_from_json(entry["index"]);
    if (I.degree() != degree)
      throw parse_error(what + ": component index " + entry["index"].dump() +
                        " does not have degree " + std::to_string(degree));
    if (I.max_index() > chart.dimension())
      throw parse_error(what + ": component index " + entry["index"].dump() +
                        " exceeds the chart dimension");
    if (!entry["coeff"].is_string())
      throw parse_error(what + ": coeff must be a polynomial string");
    Polynomial p = parse_polynomial(entry["coeff"].get<std::string>(), chart.coords());
    out.push_back({std::move(I), std::move(p)});
  }
  return out;
}

DifferentialForm form_from_json(const json& j, const Chart& chart, const std::string& what) {
  if (!j.is_object() || !j.contains("degree"))
    throw parse_error(what + ": form needs a degree");
  int degree = j["degree"].get<int>();
  if (degree < 0 || degree > chart.dimension())
    throw parse_error(what + ": form degree out of range for the chart");
  DifferentialForm w(chart, degree);
  if (j.contains("components"))
    for (auto& [I, p] : components_from_json(j["components"], chart, degree, what))
      w.add_term(I, p);
  return w;
}

MultiVectorField field_from_json(const json& j, const Chart& chart, const std::string& what) {
  if (!j.is_object() || !j.contains("degree"))
    throw parse_error(what + ": field needs a degree");
  int degree = j["degree"].get<int>();
  if (degree < 0 || degree > chart.dimension())
    throw parse_error(what + ": field degree out of range for the chart");
  MultiVectorField x(chart, degree);
  if (j.contains("components"))
    for (auto& [I, p] : components_from_json(j["components"], chart, degree, what))
      x.add_term(I, p);
  return x;
}

json homogeneity_to_json(const HomogeneityReport& r, const Chart& chart) {
  json j;
  j["success"] = r.success;
  if (r.success) j["factor"] = r.factor.to_string(chart.coords());
  return j;
}

json type_report_to_json(const TypeConditionsReport& r) {
  json j;
  j["r"] = r.r;
  j["w_one_isotropic"] = r.w_one_isotropic;
  j["w_involutive"] = r.w_involutive;
  j["contraction_vanishes"] = r.contraction_vanishes;
  j["dimension_equality"] = r.dimension_equality;
  j["dimension_inequality"] = r.dimension_inequality;
  j["count_lift_dependent"] = r.count_lift_dependent;
  j["w_dim"] = r.w_dim;
  j["quotient_dim"] = r.quotient_dim;
  j["epsilon_dim"] = r.epsilon_dim;
  j["horizontal_form_count"] = r.horizontal_form_count;
  j["overall"] = r.overall();
  return j;
}

json certificate_to_json(const HamiltonianCertificate& cert) {
  json j;
  j["verdict"] = to_string(cert.verdict);
  j["locally_hamiltonian"] = cert.locally_hamiltonian;
  j["contraction"] = form_to_json(cert.contraction);
  if (cert.hamiltonian_form) j["hamiltonian_form"] = form_to_json(*cert.hamiltonian_form);
  return j;
}

// ---------------------------------------------------------------------------
// Task execution context.

struct Context {
  const Scenario& scenario;
  std::uint64_t seed;

  const DifferentialForm& form(const json& args, const std::string& key) const {
    std::string name = ref(args, key);
    auto it = scenario.forms.find(name);
    if (it == scenario.forms.end()) throw parse_error("undefined form '" + name + "'");
    return it->second;
  }
  const MultiVectorField& field(const json& args, const std::string& key) const {
    std::string name = ref(args, key);
    auto it = scenario.fields.find(name);
    if (it == scenario.fields.end()) throw parse_error("undefined field '" + name + "'");
    return it->second;
  }
  const Subspace& subspace(const json& args, const std::string& key) const {
    std::string name = ref(args, key);
    auto it = scenario.subspaces.find(name);
    if (it == scenario.subspaces.end())
      throw parse_error("undefined subspace '" + name + "'");
    return it->second;
  }
  const PolyMap& poly_map(const json& args, const std::string& key) const {
    std::string name = ref(args, key);
    auto it = scenario.maps.find(name);
    if (it == scenario.maps.end()) throw parse_error("undefined map '" + name + "'");
    return it->second;
  }
  QVector point(const json& args, const std::string& key) const {
    if (!args.contains(key)) return scenario.chart.origin();
    const json& j = args.at(key);
    if (j.is_string()) {
      auto it = scenario.points.find(j.get<std::string>());
      if (it == scenario.points.end())
        throw parse_error("undefined point '" + j.get<std::string>() + "'");
      return it->second;
    }
    return qvector_from_json(j, scenario.chart.dimension(), key);
  }
  std::vector<MultiVectorField> field_list(const json& args, const std::string& key) const {
    if (!args.contains(key) || !args.at(key).is_array())
      throw parse_error("task argument '" + key + "' must be an array of field names");
    std::vector<MultiVectorField> out;
    for (const auto& e : args.at(key)) {
      json wrapper;
      wrapper[key] = e;
      out.push_back(field(wrapper, key));
    }
    return out;
  }

 private:
  static std::string ref(const json& args, const std::string& key) {
    if (!args.contains(key) || !args.at(key).is_string())
      throw parse_error("task argument '" + key + "' must name an object");
    return args.at(key).get<std::string>();
  }
};

int require_int(const json& args, const std::string& key) {
  if (!args.contains(key) || !args.at(key).is_number_integer())
    throw parse_error("task argument '" + key + "' must be an integer");
  return args.at(key).get<int>();
}

int optional_int(const json& args, const std::string& key, int fallback) {
  if (!args.contains(key)) return fallback;
  if (!args.at(key).is_number_integer())
    throw parse_error("task argument '" + key + "' must be an integer");
  return args.at(key).get<int>();
}

std::vector<std::string> string_list(const json& args, const std::string& key) {
  std::vector<std::string> out;
  if (!args.contains(key)) return out;
  if (!args.at(key).is_array())
    throw parse_error("task argument '" + key + "' must be an array of strings");
  for (const auto& e : args.at(key)) out.push_back(e.get<std::string>());
  return out;
}

DarbouxModel model_from_args(const json& args) {
  int k = require_int(args, "k");
  if (args.contains("fiber") && !args.at("fiber").empty()) {
    return build_darboux_horizontal(string_list(args, "base"), string_list(args, "fiber"),
                                    k, require_int(args, "r"));
  }
  return build_darboux(require_int(args, "n"), k);
}

json model_summary(const DarbouxModel& model) {
  json momenta = json::array();
  for (const MultiIndex& I : model.momenta) momenta.push_back(index_to_json(I));
  json j;
  j["chart"] = model.chart.coords();
  j["base_dim"] = model.base_dim;
  j["form_degree"] = model.form_degree;
  j["horizontal_r"] = model.horizontal_r;
  j["momenta"] = momenta;
  j["momentum_count"] = model.momenta.size();
  j["one_nondegenerate"] = model.one_nondegenerate;
  return j;
}

json execute_op(const Context& ctx, const std::string& op, const json& args,
                std::uint64_t task_seed) {
  const Chart& chart = ctx.scenario.chart;
  json payload;

  if (op == "wedge") {
    payload = form_to_json(wedge(ctx.form(args, "a"), ctx.form(args, "b")));
  } else if (op == "interior") {
    payload = form_to_json(interior(ctx.field(args, "field"), ctx.form(args, "form")));
  } else if (op == "exterior_derivative") {
    payload = form_to_json(exterior_derivative(ctx.form(args, "form")));
  } else if (op == "lie_bracket") {
    payload = field_to_json(lie_bracket(ctx.field(args, "a"), ctx.field(args, "b")));
  } else if (op == "lie_derivative") {
    payload = form_to_json(lie_derivative(ctx.field(args, "field"), ctx.form(args, "form")));
  } else if (op == "pullback") {
    payload = form_to_json(pullback(ctx.poly_map(args, "map"), ctx.form(args, "form")));
  } else if (op == "homotopy_inverse_d") {
    payload = form_to_json(homotopy_inverse_d(ctx.form(args, "form")));
  } else if (op == "is_j_nondegenerate") {
    payload["result"] = is_j_nondegenerate(ctx.form(args, "form").at(ctx.point(args, "point")),
                                           require_int(args, "j"));
  } else if (op == "is_decomposable") {
    payload["result"] = is_decomposable(ctx.field(args, "field").at(ctx.point(args, "point")));
  } else if (op == "flat_matrix") {
    payload = matrix_to_json(flat_matrix(ctx.form(args, "form").at(ctx.point(args, "point")),
                                         require_int(args, "m")));
  } else if (op == "orth_complement") {
    Subspace c = orth_complement(ctx.subspace(args, "subspace"),
                                 ctx.form(args, "form").at(ctx.point(args, "point")),
                                 require_int(args, "r"));
    payload = subspace_to_json(c);
  } else if (op == "classify") {
    ClassificationReport rep = classify(ctx.subspace(args, "subspace"),
                                        ctx.form(args, "form").at(ctx.point(args, "point")),
                                        require_int(args, "r"));
    payload["r"] = rep.r;
    payload["isotropic"] = rep.isotropic;
    payload["coisotropic"] = rep.coisotropic;
    payload["lagrangian"] = rep.lagrangian;
    if (rep.multisymplectic_evaluated) payload["multisymplectic"] = rep.multisymplectic;
    payload["complement"] = subspace_to_json(rep.complement);
  } else if (op == "is_maximal_isotropic") {
    payload["result"] = is_maximal_isotropic(ctx.subspace(args, "subspace"),
                                             ctx.form(args, "form").at(ctx.point(args, "point")),
                                             require_int(args, "r"));
  } else if (op == "certify") {
    payload = certificate_to_json(certify(ctx.field(args, "field"), ctx.form(args, "form")));
  } else if (op == "solve_hamiltonian_field") {
    auto sol = solve_hamiltonian_field(ctx.form(args, "zeta"), ctx.form(args, "form"),
                                       require_int(args, "m"), require_int(args, "degree_bound"));
    payload["solvable"] = sol.solvable;
    if (!sol.failure.empty()) payload["failure"] = sol.failure;
    if (sol.particular) payload["particular"] = field_to_json(*sol.particular);
    payload["homogeneous_count"] = sol.homogeneous_basis.size();
    json hom = json::array();
    for (const MultiVectorField& h : sol.homogeneous_basis) hom.push_back(field_to_json(h));
    payload["homogeneous_basis"] = hom;
  } else if (op == "check_local_homogeneity") {
    payload = homogeneity_to_json(
        check_local_homogeneity(ctx.form(args, "form"), ctx.field(args, "field")), chart);
  } else if (op == "hamiltonian_span_rank") {
    auto rep = hamiltonian_span_rank(ctx.form(args, "form"),
                                     ctx.field_list(args, "fields"), ctx.point(args, "point"));
    payload["rank"] = rep.rank;
    payload["full"] = rep.full;
    payload["locally_hamiltonian"] = rep.locally_hamiltonian;
  } else if (op == "invariance_probe") {
    const DifferentialForm& omega = ctx.form(args, "form");
    int p = require_int(args, "p");
    int d = require_int(args, "degree_bound");
    InvarianceProbeResult result;
    if (!args.contains("generators") ||
        (args.at("generators").is_string() && args.at("generators") == "default")) {
      GeneratorFamily family =
          default_generators(omega, optional_int(args, "max_monomial_degree", 2));
      result = invariance_probe(omega, p, d, family.vector_fields, family.multi_fields);
    } else {
      const json& g = args.at("generators");
      json vf;
      vf["vector_fields"] = g.contains("vector_fields") ? g["vector_fields"] : json::array();
      json mf;
      mf["multi_fields"] = g.contains("multi_fields") ? g["multi_fields"] : json::array();
      result = invariance_probe(omega, p, d, ctx.field_list(vf, "vector_fields"),
                                ctx.field_list(mf, "multi_fields"));
    }
    payload["verdict"] = to_string(result.verdict);
    payload["solution_dim"] = result.solution_dim;
    if (result.target_degree == omega.degree())
      payload["omega_in_solution_space"] = result.omega_in_solution_space;
    json basis = json::array();
    for (const DifferentialForm& b : result.solution_basis) basis.push_back(form_to_json(b));
    payload["solution_basis"] = basis;
  } else if (op == "check_type_conditions") {
    std::vector<QVector> extra;
    if (args.contains("samples"))
      for (const auto& s : args.at("samples"))
        extra.push_back(qvector_from_json(s, chart.dimension(), "samples"));
    auto rep = check_type_conditions(ctx.form(args, "form"), ctx.field_list(args, "fields"),
                                     ctx.subspace(args, "epsilon"), require_int(args, "r"),
                                     ctx.point(args, "point"), extra);
    payload = type_report_to_json(rep);
  } else if (op == "build_darboux" || op == "build_darboux_horizontal") {
    DarbouxModel model = model_from_args(args);
    payload = model_summary(model);
    payload["omega"] = form_to_json(model.omega);
    payload["theta"] = form_to_json(model.theta);
  } else if (op == "tautological_eval") {
    DarbouxModel model = model_from_args(args);
    int dim = model.chart.dimension();
    QVector point = qvector_from_json(args.at("point"), dim, "point");
    std::vector<QVector> vectors;
    if (!args.contains("vectors") || !args.at("vectors").is_array())
      throw parse_error("tautological_eval: vectors array required");
    for (const auto& v : args.at("vectors"))
      vectors.push_back(qvector_from_json(v, dim, "vectors"));
    payload["value"] = to_string(tautological_eval(model, point, vectors));
  } else if (op == "tautological_check") {
    DarbouxModel model = model_from_args(args);
    int count = optional_int(args, "count", 100);
    Sampler sampler(task_seed);
    int dim = model.chart.dimension();
    bool equal = true;
    for (int t = 0; t < count && equal; ++t) {
      QVector point = sampler.point(dim);
      std::vector<QVector> vectors;
      for (int v = 0; v < model.form_degree; ++v) vectors.push_back(sampler.point(dim));
      Rational intrinsic = tautological_eval(model, point, vectors);
      Rational coordinate = evaluate(model.theta.at(point), vectors);
      equal = intrinsic == coordinate;
    }
    payload["checked"] = count;
    payload["equal"] = equal;
  } else if (op == "model_check") {
    DarbouxModel model = model_from_args(args);
    int count = optional_int(args, "points", 20);
    Sampler sampler(task_seed);
    payload = model_summary(model);
    payload["omega_equals_dtheta"] = exterior_derivative(model.theta) == model.omega;
    payload["closed"] = is_closed(model.omega);
    bool nondeg_samples = true;
    for (int t = 0; t < count; ++t) {
      QVector p = sampler.point(model.chart.dimension());
      nondeg_samples = nondeg_samples && is_j_nondegenerate(model.omega.at(p), 1);
    }
    payload["nondegenerate_at_samples"] = model.one_nondegenerate ? nondeg_samples : false;
    // Vertical distribution and the lift of the fiber directions.
    std::vector<MultiVectorField> w_fields;
    int dim = model.chart.dimension();
    for (int m = 0; m < static_cast<int>(model.momenta.size()); ++m) {
      MultiVectorField f(model.chart, 1);
      f.add_term(MultiIndex::single(model.base_dim + m + 1), Polynomial::constant(dim, 1));
      w_fields.push_back(std::move(f));
    }
    std::vector<QVector> eps_rows;
    for (int i = model.base_chart.base_count(); i < model.base_dim; ++i) {
      QVector row(static_cast<std::size_t>(dim), Rational(0));
      row[static_cast<std::size_t>(i)] = 1;
      eps_rows.push_back(std::move(row));
    }
    auto rep = check_type_conditions(model.omega, w_fields, Subspace::from_rows(dim, eps_rows),
                                     model.horizontal_r, sampler.point(dim));
    payload["type_conditions"] = type_report_to_json(rep);
  } else {
    throw parse_error("unknown operation '" + op + "'");
  }
  return payload;
}

// Expectation check: every key present in `expect` must compare equal to the
// same key of the payload.
bool expectation_met(const json& expect, const json& payload, json* mismatch) {
  for (const auto& [key, value] : expect.items()) {
    if (!payload.contains(key) || payload.at(key) != value) {
      (*mismatch)["key"] = key;
      (*mismatch)["expected"] = value;
      (*mismatch)["actual"] = payload.contains(key) ? payload.at(key) : json();
      return false;
    }
  }
  return true;
}

// Op argument keys that must reference defined objects, for parse-time
// validation.
void validate_task_references(const Scenario& scenario, const Task& task) {
  json args = task.args();
  auto has = [&](const std::string& key) {
    return args.contains(key) && args.at(key).is_string();
  };
  auto check = [&](const std::string& key, const auto& collection, const char* kind) {
    if (!has(key)) return;
    std::string name = args.at(key).get<std::string>();
    if (collection.find(name) == collection.end())
      throw parse_error("task '" + task.id + "' references undefined " + kind + " '" +
                        name + "'");
  };
  check("form", scenario.forms, "form");
  check("zeta", scenario.forms, "form");
  check("field", scenario.fields, "field");
  check("subspace", scenario.subspaces, "subspace");
  check("epsilon", scenario.subspaces, "subspace");
  check("map", scenario.maps, "map");
  check("point", scenario.points, "point");
  if (task.op == "wedge") {
    check("a", scenario.forms, "form");
    check("b", scenario.forms, "form");
  } else if (task.op == "lie_bracket") {
    check("a", scenario.fields, "field");
    check("b", scenario.fields, "field");
  }
  auto check_list = [&](const std::string& key) {
    if (!args.contains(key) || !args.at(key).is_array()) return;
    for (const auto& e : args.at(key)) {
      if (!e.is_string()) continue;
      if (scenario.fields.find(e.get<std::string>()) == scenario.fields.end())
        throw parse_error("task '" + task.id + "' references undefined field '" +
                          e.get<std::string>() + "'");
    }
  };
  check_list("fields");
  if (args.contains("generators") && args.at("generators").is_object()) {
    json g = args.at("generators");
    json probe_args;
    probe_args["fields"] = g.contains("vector_fields") ? g["vector_fields"] : json::array();
    json probe_args2;
    probe_args2["fields"] = g.contains("multi_fields") ? g["multi_fields"] : json::array();
    Task t1{task.id, task.op, probe_args.dump(), ""};
    Task t2{task.id, task.op, probe_args2.dump(), ""};
    validate_task_references(scenario, t1);
    validate_task_references(scenario, t2);
  }
}

const std::set<std::string>& known_ops() {
  static const std::set<std::string> ops = {
      "wedge", "interior", "exterior_derivative", "lie_bracket", "lie_derivative",
      "pullback", "homotopy_inverse_d", "is_j_nondegenerate", "is_decomposable",
      "flat_matrix", "orth_complement", "classify", "is_maximal_isotropic", "certify",
      "solve_hamiltonian_field", "check_local_homogeneity", "hamiltonian_span_rank",
      "invariance_probe", "check_type_conditions", "build_darboux",
      "build_darboux_horizontal", "tautological_eval", "tautological_check", "model_check"};
  return ops;
}

}  // namespace

json Task::args() const { return args_text.empty() ? json::object() : json::parse(args_text); }

std::string to_string(TaskStatus s) {
  switch (s) {
    case TaskStatus::pass: return "pass";
    case TaskStatus::fail: return "fail";
    case TaskStatus::error: return "error";
    case TaskStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

int Report::count(TaskStatus s) const {
  int n = 0;
  for (const TaskResult& t : tasks)
    if (t.status == s) ++n;
  return n;
}

bool Report::clean() const {
  return count(TaskStatus::fail) == 0 && count(TaskStatus::error) == 0;
}

std::string Report::to_json_text(bool with_timings) const {
  json j;
  j["schema"] = kReportSchema;
  j["scenario"] = scenario_name;
  j["seed"] = seed;
  json task_list = json::array();
  for (const TaskResult& t : tasks) {
    json e;
    e["id"] = t.id;
    e["op"] = t.op;
    e["status"] = to_string(t.status);
    e["payload"] = t.payload_text.empty() ? json::object() : json::parse(t.payload_text);
    if (with_timings) e["millis"] = t.millis;
    task_list.push_back(std::move(e));
  }
  j["tasks"] = task_list;
  json summary;
  summary["pass"] = count(TaskStatus::pass);
  summary["fail"] = count(TaskStatus::fail);
  summary["error"] = count(TaskStatus::error);
  summary["inconclusive"] = count(TaskStatus::inconclusive);
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

std::string Report::to_text(bool with_timings) const {
  std::ostringstream out;
  out << "scenario " << scenario_name << " (seed " << seed << ")\n";
  for (const TaskResult& t : tasks) {
    out << "  [" << to_string(t.status) << "] " << t.id << " (" << t.op << ")";
    if (with_timings) out << " " << t.millis << " ms";
    if (t.status != TaskStatus::pass && !t.payload_text.empty()) {
      json payload = json::parse(t.payload_text);
      if (payload.contains("error")) out << ": " << payload["error"].get<std::string>();
      if (payload.contains("mismatch")) out << ": mismatch " << payload["mismatch"].dump();
    }
    out << "\n";
  }
  out << "summary: " << count(TaskStatus::pass) << " pass, " << count(TaskStatus::fail)
      << " fail, " << count(TaskStatus::error) << " error, "
      << count(TaskStatus::inconclusive) << " inconclusive\n";
  return out.str();
}

Scenario parse_scenario(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("scenario syntax error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("schema") || j["schema"] != kScenarioSchema)
    throw parse_error(std::string("scenario must declare schema '") + kScenarioSchema + "'");
  if (!j.contains("chart") || !j["chart"].is_object())
    throw parse_error("scenario needs a chart");

  Scenario s;
  s.name = j.value("name", "scenario");
  const json& chart_json = j["chart"];
  if (chart_json.contains("base") || chart_json.contains("fiber")) {
    std::vector<std::string> base, fiber;
    if (chart_json.contains("base"))
      for (const auto& c : chart_json["base"]) base.push_back(c.get<std::string>());
    if (chart_json.contains("fiber"))
      for (const auto& c : chart_json["fiber"]) fiber.push_back(c.get<std::string>());
    s.chart = Chart(base, fiber);
  } else if (chart_json.contains("coords")) {
    std::vector<std::string> coords;
    for (const auto& c : chart_json["coords"]) coords.push_back(c.get<std::string>());
    s.chart = Chart(coords);
  } else {
    throw parse_error("chart needs coords or base/fiber");
  }

  if (j.contains("forms"))
    for (const auto& [name, def] : j["forms"].items())
      s.forms.emplace(name, form_from_json(def, s.chart, "form '" + name + "'"));
  if (j.contains("fields"))
    for (const auto& [name, def] : j["fields"].items())
      s.fields.emplace(name, field_from_json(def, s.chart, "field '" + name + "'"));
  if (j.contains("subspaces"))
    for (const auto& [name, def] : j["subspaces"].items()) {
      const json& rows_json = def.is_object() && def.contains("rows") ? def["rows"] : def;
      if (!rows_json.is_array())
        throw parse_error("subspace '" + name + "' must be an array of rows");
      std::vector<QVector> rows;
      for (const auto& r : rows_json)
        rows.push_back(qvector_from_json(r, s.chart.dimension(), "subspace '" + name + "'"));
      s.subspaces.emplace(name, Subspace::from_rows(s.chart.dimension(), rows));
    }
  if (j.contains("maps"))
    for (const auto& [name, def] : j["maps"].items()) {
      if (!def.is_array())
        throw parse_error("map '" + name + "' must be an array of polynomial strings");
      std::vector<Polynomial> comps;
      for (const auto& c : def)
        comps.push_back(parse_polynomial(c.get<std::string>(), s.chart.coords()));
      s.maps.emplace(name, PolyMap(s.chart, s.chart, std::move(comps)));
    }
  if (j.contains("points"))
    for (const auto& [name, def] : j["points"].items())
      s.points.emplace(name,
                       qvector_from_json(def, s.chart.dimension(), "point '" + name + "'"));

  std::set<std::string> ids;
  if (j.contains("tasks")) {
    if (!j["tasks"].is_array()) throw parse_error("tasks must be an array");
    for (const auto& tj : j["tasks"]) {
      if (!tj.is_object() || !tj.contains("id") || !tj.contains("op"))
        throw parse_error("each task needs an id and an op");
      Task task;
      task.id = tj["id"].get<std::string>();
      task.op = tj["op"].get<std::string>();
      if (!ids.insert(task.id).second)
        throw parse_error("duplicate task id '" + task.id + "'");
      if (known_ops().find(task.op) == known_ops().end())
        throw parse_error("task '" + task.id + "' uses unknown operation '" + task.op + "'");
      json args = json::object();
      for (const auto& [key, value] : tj.items())
        if (key != "id" && key != "op" && key != "expect") args[key] = value;
      task.args_text = args.dump();
      if (tj.contains("expect")) task.expect_text = tj["expect"].dump();
      validate_task_references(s, task);
      s.tasks.push_back(std::move(task));
    }
  }
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string scenario_to_json_text(const Scenario& scenario) {
  json j;
  j["schema"] = kScenarioSchema;
  j["name"] = scenario.name;
  json chart;
  if (scenario.chart.has_split()) {
    std::vector<std::string> base(scenario.chart.coords().begin(),
                                  scenario.chart.coords().begin() + scenario.chart.base_count());
    std::vector<std::string> fiber(scenario.chart.coords().begin() + scenario.chart.base_count(),
                                   scenario.chart.coords().end());
    chart["base"] = base;
    chart["fiber"] = fiber;
  } else {
    chart["coords"] = scenario.chart.coords();
  }
  j["chart"] = chart;
  if (!scenario.forms.empty()) {
    json forms;
    for (const auto& [name, w] : scenario.forms) forms[name] = form_to_json(w);
    j["forms"] = forms;
  }
  if (!scenario.fields.empty()) {
    json fields;
    for (const auto& [name, x] : scenario.fields) fields[name] = field_to_json(x);
    j["fields"] = fields;
  }
  if (!scenario.subspaces.empty()) {
    json subspaces;
    for (const auto& [name, sub] : scenario.subspaces) subspaces[name] = subspace_to_json(sub);
    j["subspaces"] = subspaces;
  }
  if (!scenario.maps.empty()) {
    json maps;
    for (const auto& [name, m] : scenario.maps) {
      json comps = json::array();
      for (const Polynomial& p : m.components())
        comps.push_back(p.to_string(scenario.chart.coords()));
      maps[name] = comps;
    }
    j["maps"] = maps;
  }
  if (!scenario.points.empty()) {
    json points;
    for (const auto& [name, p] : scenario.points) points[name] = qvector_to_json(p);
    j["points"] = points;
  }
  json tasks = json::array();
  for (const Task& t : scenario.tasks) {
    json tj = t.args();
    tj["id"] = t.id;
    tj["op"] = t.op;
    if (!t.expect_text.empty()) tj["expect"] = json::parse(t.expect_text);
    tasks.push_back(std::move(tj));
  }
  j["tasks"] = tasks;
  return j.dump(2) + "\n";
}

Report run(const Scenario& scenario, const RunOptions& options) {
  Report report;
  report.scenario_name = scenario.name;
  report.seed = options.seed;
  Context ctx{scenario, options.seed};
  for (const Task& task : scenario.tasks) {
    if (options.only_task && task.id != *options.only_task) continue;
    TaskResult result;
    result.id = task.id;
    result.op = task.op;
    auto start = std::chrono::steady_clock::now();
    json payload;
    try {
      json args = task.args();
      std::uint64_t task_seed = options.seed ^ fnv1a(task.id);
      if (args.contains("seed")) task_seed = args["seed"].get<std::uint64_t>();
      payload = execute_op(ctx, task.op, args, task_seed);
      result.status = TaskStatus::pass;
      if (payload.contains("verdict") && payload["verdict"] == "inconclusive")
        result.status = TaskStatus::inconclusive;
      if (!task.expect_text.empty()) {
        json mismatch;
        if (!expectation_met(json::parse(task.expect_text), payload, &mismatch)) {
          result.status = TaskStatus::fail;
          payload["mismatch"] = mismatch;
        }
      }
    } catch (const std::exception& e) {
      result.status = TaskStatus::error;
      payload = json::object();
      payload["error"] = e.what();
    }
    result.millis = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    result.payload_text = payload.dump();
    report.tasks.push_back(std::move(result));
  }
  return report;
}

std::string emit_darboux_scenario(int n, int k, const std::vector<std::string>& fiber_coords,
                                  int horizontal_r) {
  DarbouxModel model;
  json model_args;
  if (fiber_coords.empty()) {
    model = build_darboux(n, k);
    model_args["n"] = n;
    model_args["k"] = k;
  } else {
    std::vector<std::string> base;
    for (int i = 1; i <= n - static_cast<int>(fiber_coords.size()); ++i)
      base.push_back("x" + std::to_string(i));
    model = build_darboux_horizontal(base, fiber_coords, k, horizontal_r);
    model_args["base"] = base;
    model_args["fiber"] = fiber_coords;
    model_args["k"] = k;
    model_args["r"] = horizontal_r;
  }

  Scenario s;
  s.name = "darboux-n" + std::to_string(model.base_dim) + "-k" + std::to_string(k) +
           (fiber_coords.empty() ? "" : "-r" + std::to_string(horizontal_r));
  s.chart = model.chart;
  s.forms.emplace("Theta", model.theta);
  s.forms.emplace("Omega", model.omega);
  s.fields.emplace("Euler", euler_field(model.chart));
  std::vector<std::string> coord_field_names;
  auto coord_fields = coordinate_fields(model.chart);
  for (std::size_t i = 0; i < coord_fields.size(); ++i) {
    std::string name = "D_" + model.chart.coord(static_cast<int>(i));
    coord_field_names.push_back(name);
    s.fields.emplace(name, coord_fields[i]);
  }

  auto add_task = [&](const std::string& id, const std::string& op, json args,
                      json expect) {
    Task t;
    t.id = id;
    t.op = op;
    t.args_text = args.dump();
    t.expect_text = expect.is_null() ? "" : expect.dump();
    s.tasks.push_back(std::move(t));
  };

  json dtheta_expect;
  dtheta_expect["components"] = components_to_json(model.omega);
  json args;
  args["form"] = "Theta";
  add_task("omega-is-dtheta", "exterior_derivative", args, dtheta_expect);

  json closed_expect;
  closed_expect["components"] = json::array();
  args = json::object();
  args["form"] = "Omega";
  add_task("omega-closed", "exterior_derivative", args, closed_expect);

  args = model_args;
  args["points"] = 20;
  json expect;
  expect["one_nondegenerate"] = model.one_nondegenerate;
  expect["nondegenerate_at_samples"] = model.one_nondegenerate;
  expect["omega_equals_dtheta"] = true;
  expect["closed"] = true;
  add_task("model", "model_check", args, expect);

  args = model_args;
  args["count"] = 100;
  expect = json::object();
  expect["equal"] = true;
  add_task("tautological", "tautological_check", args, expect);

  args = json::object();
  args["form"] = "Omega";
  args["field"] = "Euler";
  expect = json::object();
  expect["success"] = true;
  expect["factor"] = std::to_string(k + 1);
  add_task("euler-homogeneity", "check_local_homogeneity", args, expect);

  args = json::object();
  args["form"] = "Omega";
  args["fields"] = coord_field_names;
  expect = json::object();
  expect["full"] = true;
  expect["rank"] = model.chart.dimension();
  add_task("coordinate-span", "hamiltonian_span_rank", args, expect);

  return scenario_to_json_text(s);
}

}  // namespace msk
