#pragma once

// JSON documents in and out of the `hh` tool. Reports are nlohmann::json
// objects (keys sorted), so dumping the same report twice gives the same bytes.

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hh/algebra.hpp"
#include "hh/envelope.hpp"
#include "hh/error.hpp"
#include "hh/families.hpp"
#include "hh/geometry.hpp"
#include "hh/hochschild.hpp"
#include "hh/reps.hpp"

namespace hh::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kParseError = 2, kPrecondition = 3 };

inline int exit_code(ErrorKind k) { return k == ErrorKind::ParseError ? kParseError : kPrecondition; }

enum class Method { Auto, Complex, Oracle };

inline Method parse_method(const std::string& s) {
  if (s == "auto") return Method::Auto;
  if (s == "complex") return Method::Complex;
  if (s == "oracle") return Method::Oracle;
  throw Error(ErrorKind::ParseError, "unknown method '" + s + "'");
}

namespace detail {

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

inline const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
  return obj.at(key);
}

inline std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline std::int64_t integer(const json& v, const char* what) {
  if (!v.is_number_integer()) fail(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

inline Rational rational(const json& v) {
  if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  fail("rational literals must be integers or \"p/q\" strings");
}

inline std::vector<std::int64_t> integers(const json& v, const char* what) {
  if (!v.is_array()) fail(std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(integer(x, what));
  return out;
}

inline std::vector<Rational> rationals(const json& v) {
  if (!v.is_array()) fail("points must be an array");
  std::vector<Rational> out;
  for (const auto& x : v) out.push_back(rational(x));
  return out;
}

inline std::size_t count(const json& obj, const char* key) {
  const auto v = integer(field(obj, key), key);
  if (v < 0) fail(std::string(key) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

/// {vertices: [names], arrows: [{id, from, to}], relations: [[{coeff, path}]]}
inline BoundQuiverAlgebra parse_algebra_object(const json& doc) {
  using namespace detail;
  Quiver q;
  const json& vertices = field(doc, "vertices");
  if (!vertices.is_array()) fail("vertices must be an array");
  for (const auto& v : vertices) {
    if (!v.is_string()) fail("vertex ids must be strings");
    if (q.find_vertex(v.get<std::string>())) fail("duplicate vertex id '" + v.get<std::string>() + "'");
    q.add_vertex(v.get<std::string>());
  }
  const json& arrows = field(doc, "arrows");
  if (!arrows.is_array()) fail("arrows must be an array");
  for (const auto& a : arrows) {
    const std::string id = string_field(a, "id");
    const auto from = q.find_vertex(string_field(a, "from"));
    const auto to = q.find_vertex(string_field(a, "to"));
    if (!from || !to) fail("arrow '" + id + "' references an unknown vertex");
    if (q.find_arrow(id)) fail("duplicate arrow id '" + id + "'");
    q.add_arrow(id, *from, *to);
  }
  std::vector<Relation> relations;
  if (doc.contains("relations")) {
    const json& rels = doc.at("relations");
    if (!rels.is_array()) fail("relations must be an array");
    for (const auto& r : rels) {
      if (!r.is_array()) fail("each relation must be an array of terms");
      PathVector body;
      for (const auto& term : r) {
        const Rational c = rational(field(term, "coeff"));
        const json& ids = field(term, "path");
        if (!ids.is_array() || ids.empty()) fail("relation paths must be nonempty arrays of arrow ids");
        std::optional<Path> p;
        for (const auto& id : ids) {
          if (!id.is_string()) fail("arrow ids must be strings");
          const auto arrow = q.find_arrow(id.get<std::string>());
          if (!arrow) fail("relation references unknown arrow '" + id.get<std::string>() + "'");
          const Path step = Path::of_arrow(q, *arrow);
          if (p && !composable(*p, step)) fail("relation path is not composable at arrow '" + id.get<std::string>() + "'");
          p = p ? compose(*p, step) : step;
        }
        body.add(*p, c);
      }
      if (body.empty()) fail("relation is zero");
      relations.push_back(make_relation(std::move(body)));
    }
  }
  return build_algebra(std::move(q), std::move(relations));
}

/// {kind: canonical|squid, weights, points?} | {kind: beilinson, n} |
/// {kind: linear, n, zero_relations?}
inline BoundQuiverAlgebra parse_family_object(const json& doc) {
  using namespace detail;
  const std::string kind = string_field(doc, "kind");
  if (kind == "canonical" || kind == "squid") {
    CanonicalSpec spec;
    spec.weights = integers(field(doc, "weights"), "weights");
    spec.points = doc.contains("points") ? rationals(doc.at("points")) : default_points(spec.weights.size());
    return kind == "canonical" ? canonical_algebra(spec) : squid_algebra(spec);
  }
  if (kind == "beilinson") return beilinson_algebra(count(doc, "n"));
  if (kind == "linear") {
    std::vector<std::size_t> zeros;
    if (doc.contains("zero_relations")) {
      for (auto k : integers(doc.at("zero_relations"), "zero_relations")) {
        if (k < 0) fail("zero_relations entries must be nonnegative");
        zeros.push_back(static_cast<std::size_t>(k));
      }
    }
    return linear_quiver_algebra(count(doc, "n"), zeros);
  }
  fail("unknown family kind '" + kind + "'");
}

inline WeightedCurveSpec parse_curve_object(const json& doc) {
  using namespace detail;
  WeightedCurveSpec spec;
  spec.genus = integer(field(doc, "genus"), "genus");
  if (doc.contains("weights")) spec.weights = integers(doc.at("weights"), "weights");
  if (doc.contains("points")) spec.points = rationals(doc.at("points"));
  return spec;
}

/// The canonical algebra of a genus-0 curve: weights padded with 1s to two
/// arms, default points when none are given.
inline BoundQuiverAlgebra curve_algebra(const WeightedCurveSpec& curve) {
  validate(curve);
  if (curve.genus != 0) throw Error(ErrorKind::InvalidWeights, "only genus-0 curves have a canonical algebra");
  CanonicalSpec spec{curve.weights, curve.points};
  while (spec.weights.size() < 2) spec.weights.insert(spec.weights.begin(), 1);
  if (spec.points.empty()) spec.points = default_points(spec.weights.size());
  return canonical_algebra(spec);
}

inline BoundQuiverAlgebra parse_algebra_document(const json& doc) {
  if (doc.is_object()) {
    if (doc.contains("algebra")) return parse_algebra_object(doc.at("algebra"));
    if (doc.contains("family")) return parse_family_object(doc.at("family"));
    if (doc.contains("curve")) return curve_algebra(parse_curve_object(doc.at("curve")));
  }
  detail::fail("document needs an 'algebra', 'family' or 'curve' object");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

namespace detail {

template <class Map>
json degree_map(const Map& m) {
  json out = json::object();
  for (const auto& [deg, dim] : m) out[std::to_string(deg)] = dim;
  return out;
}

inline json rationals_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

inline json integers_json(const std::vector<Integer>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(z.get_str());
  return out;
}

}  // namespace detail

/// HH report for an algebra. `auto` takes the complex when gl.dim ≤ 2 and the
/// oracle otherwise; the oracle runs to one degree past the global dimension.
inline json algebra_report(const BoundQuiverAlgebra& a, Method method, const json& input) {
  const std::size_t gldim = global_dimension(a);
  if (method == Method::Auto) method = gldim <= 2 ? Method::Complex : Method::Oracle;
  const HochschildReport r =
      method == Method::Complex ? hh_cohomology(a) : hh_envelope_oracle(a, std::max<std::size_t>(gldim, 2) + 1);
  json out;
  out["input"] = input;
  out["method"] = std::string(to_string(r.method));
  out["hh0"] = r.hh0;
  out["hh1"] = r.hh1;
  out["hh2"] = r.hh2;
  out["higher_vanish"] = r.higher_vanish;
  out["cohomology"] = detail::degree_map(r.cohomology);
  out["homology"] = detail::degree_map(r.homology);
  out["global_dim"] = gldim;
  out["total_dim"] = a.total_dim();
  out["vertices"] = a.vertex_count();
  out["connected_components"] = connected_components(a.quiver());
  return out;
}

inline json curve_report(const WeightedCurveSpec& spec) {
  const CurveHHDims d = curve_hh_dims(spec);
  json out;
  out["input"] = {{"genus", spec.genus}, {"weights", spec.weights}};
  out["method"] = std::string(to_string(HHMethod::CurveFormula));
  out["hh0"] = d.hh0;
  out["hh1"] = d.hh1;
  out["hh2"] = d.hh2;
  out["homology"] = detail::degree_map(d.homology);
  out["constants"] = {{"e", d.e}, {"a", d.a}, {"r", d.r}, {"d", d.d}};
  out["realizable_as_quotient"] = realizable_as_quotient(spec);
  return out;
}

inline json classify_report(const std::vector<std::int64_t>& weights) {
  const EulerClassification c = euler_classify(weights);
  json out;
  out["input"] = {{"weights", weights}};
  out["method"] = "euler-classification";
  out["normalized_weights"] = c.normalized;
  out["chi"] = to_string(c.chi);
  out["class"] = std::string(to_string(c.euler_class));
  out["weight_condition"] = weight_condition(weights);
  if (c.realization) {
    json r = {{"curve", c.realization->curve}, {"group", c.realization->group}};
    r["j_invariant"] = c.realization->j_invariant ? json(*c.realization->j_invariant) : json(nullptr);
    out["realization"] = r;
  } else {
    out["realization"] = nullptr;
  }
  if (weights.size() >= 2) {
    json comp;
    const Integer lcm = hh::detail::lcm_of(weights);
    comp["lcm"] = lcm.get_str();
    try {
      const CompanionInvariants inv = companion_invariants(weights);
      comp["omega"] = inv.omega.get_str();
      comp["group_order"] = inv.group_order.get_str();
      comp["genus"] = inv.genus.get_str();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonIntegerGenus) throw;
      Integer product = 1, sum_delta = 0;
      for (auto w : weights) {
        product *= static_cast<long>(w);
        sum_delta += lcm / static_cast<long>(w);
      }
      comp["omega"] = Integer(Integer(static_cast<long>(weights.size()) - 2) * lcm - sum_delta).get_str();
      comp["group_order"] = Integer(product / lcm).get_str();
      comp["genus"] = nullptr;
    }
    out["companion"] = comp;
  } else {
    out["companion"] = nullptr;
  }
  return out;
}

inline json companion_report(const std::vector<std::int64_t>& weights) {
  const CompanionInvariants c = companion_invariants(weights);
  json out;
  out["input"] = {{"weights", weights}};
  out["method"] = "companion-formulas";
  out["lcm"] = c.lcm.get_str();
  out["degrees"] = detail::integers_json(c.degrees);
  out["omega"] = c.omega.get_str();
  out["group_order"] = c.group_order.get_str();
  out["genus"] = c.genus.get_str();
  out["euler"] = to_string(c.euler);
  out["euler_class"] = std::string(to_string(c.euler_class));
  out["fiber_sizes"] = detail::rationals_json(c.fiber_sizes);
  out["weight_condition"] = c.weight_condition;
  out["hurwitz"] = hurwitz_check(weights);
  return out;
}

struct CrosscheckOptions {
  std::size_t max_arms = 4;
  std::int64_t max_weight = 3;
  bool with_oracle = false;
  bool corrupt_fixture = false;
};

/// All canonical weight tuples in range, nondecreasing: n = 2 with weights
/// 1..A, and 3 ≤ n ≤ N with weights 2..A.
inline std::vector<std::vector<std::int64_t>> crosscheck_weights(std::size_t max_arms, std::int64_t max_weight) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, std::size_t n, std::int64_t lo) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t w = lo; w <= max_weight; ++w) {
      cur.push_back(w);
      self(self, n, w);
      cur.pop_back();
    }
  };
  for (std::size_t n = 2; n <= max_arms; ++n) rec(rec, n, n == 2 ? 1 : 2);
  return out;
}

/// Drops the X_2 term from the last relation: a deliberately wrong algebra.
inline BoundQuiverAlgebra corrupt_canonical(const BoundQuiverAlgebra& a) {
  std::vector<Relation> rels = a.generators();
  if (rels.empty()) return a;
  const auto x2 = a.quiver().find_arrow("X2_1");
  PathVector body;
  for (const auto& [p, c] : rels.back().body.terms())
    if (!(x2 && !p.arrows.empty() && p.arrows.front() == *x2)) body.add(p, c);
  rels.back() = make_relation(std::move(body));
  return build_algebra(a.quiver(), std::move(rels));
}

/// Formula vs. complex (vs. squid, vs. oracle) on every spec in range.
inline json crosscheck_report(const CrosscheckOptions& opt, bool& all_pass) {
  json cases = json::array();
  std::size_t passed = 0, failed = 0, oracle_runs = 0;
  const std::size_t cap = oracle_cap();
  for (const auto& w : crosscheck_weights(opt.max_arms, opt.max_weight)) {
    CanonicalSpec spec{w, default_points(w.size())};
    BoundQuiverAlgebra a = canonical_algebra(spec);
    if (opt.corrupt_fixture) a = corrupt_canonical(a);
    WeightedCurveSpec curve;
    for (auto x : w)
      if (x > 1) curve.weights.push_back(x);
    const CurveHHDims formula = curve_hh_dims(curve);
    json c;
    c["weights"] = w;
    c["points"] = detail::rationals_json(spec.points);
    std::vector<std::string> mismatches;
    try {
      const HochschildReport complex = hh_cohomology(a);
      const auto hh_0 = static_cast<std::int64_t>(complex.homology.at(0));
      c["complex"] = {{"hh0", complex.hh0}, {"hh1", complex.hh1}, {"hh2", complex.hh2}, {"HH_0", hh_0}};
      c["formula"] = {{"hh0", formula.hh0}, {"hh1", formula.hh1}, {"hh2", formula.hh2}, {"HH_0", formula.homology.at(0)}};
      if (c["complex"] != c["formula"]) mismatches.emplace_back("complex-vs-formula");
      const HochschildReport squid = hh_cohomology(squid_algebra(spec));
      if (squid.hh0 != complex.hh0 || squid.hh1 != complex.hh1 || squid.hh2 != complex.hh2 ||
          squid.homology != complex.homology)
        mismatches.emplace_back("squid-vs-canonical");
      if (opt.with_oracle && a.total_dim() <= cap) {
        ++oracle_runs;
        const HochschildReport oracle = hh_envelope_oracle(a, 4, cap);
        c["oracle"] = {{"hh0", oracle.hh0}, {"hh1", oracle.hh1}, {"hh2", oracle.hh2},
                       {"higher_vanish", oracle.higher_vanish}, {"homology", detail::degree_map(oracle.homology)}};
        std::map<int, std::size_t> expected_homology;
        for (int d = 0; d <= 4; ++d) expected_homology[d] = d == 0 ? a.vertex_count() : 0;
        if (oracle.hh0 != complex.hh0 || oracle.hh1 != complex.hh1 || oracle.hh2 != complex.hh2 ||
            !oracle.higher_vanish || oracle.homology != expected_homology)
          mismatches.emplace_back("oracle-vs-complex");
      }
    } catch (const Error& e) {
      mismatches.emplace_back(std::string("error: ") + e.what());
    }
    c["pass"] = mismatches.empty();
    c["mismatches"] = mismatches;
    (mismatches.empty() ? passed : failed) += 1;
    cases.push_back(std::move(c));
  }
  all_pass = failed == 0;
  json out;
  out["input"] = {{"max_arms", opt.max_arms},
                  {"max_weight", opt.max_weight},
                  {"with_oracle", opt.with_oracle},
                  {"corrupt_fixture", opt.corrupt_fixture},
                  {"oracle_cap", cap}};
  out["method"] = "crosscheck";
  out["cases"] = std::move(cases);
  out["summary"] = {{"total", passed + failed}, {"passed", passed}, {"failed", failed}, {"oracle_runs", oracle_runs}};
  return out;
}

/// Flat "key: value" rendering of a report, one leaf per line.
inline std::string render_table(const json& report) {
  std::ostringstream os;
  auto rec = [&](auto&& self, const json& v, const std::string& prefix) -> void {
    if (v.is_object() && !v.empty()) {
      for (auto it = v.begin(); it != v.end(); ++it) self(self, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    } else {
      os << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  };
  rec(rec, report, "");
  return os.str();
}

}  // namespace hh::cli
