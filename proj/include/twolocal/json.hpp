#pragma once

// JSON literals and reports. Key order is fixed (ordered_json) and rationals
// are written as "p/q" strings so output is byte-stable.

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "twolocal/classify.hpp"
#include "twolocal/decompose.hpp"
#include "twolocal/derivation_space.hpp"
#include "twolocal/derivations.hpp"
#include "twolocal/text.hpp"
#include "twolocal/two_local.hpp"

namespace twolocal::json {

using Json = nlohmann::ordered_json;

inline Rational rational_from(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

inline std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from(x));
  return out;
}

inline Json to_json(const W22Derivation& d) {
  return Json{{"kind", "w22"}, {"inner", d.inner.str()}, {"outer", d.outer_coeff.str()}};
}

inline Json to_json(const ThinDerivation& d) {
  return Json{{"kind", "thin"}, {"alpha", rationals(d.alpha)}, {"beta", rationals(d.beta)}};
}

inline Json to_json(const Derivation& d) {
  return std::visit([](const auto& v) { return to_json(v); }, d);
}

inline ThinDerivation thin_derivation_from(const Json& j) {
  if (j.contains("kind") && j.at("kind") != "thin") throw std::invalid_argument("expected a thin derivation literal");
  ThinDerivation d;
  if (j.contains("alpha")) d.alpha = rationals_from(j.at("alpha"));
  if (j.contains("beta")) d.beta = rationals_from(j.at("beta"));
  return d;
}

/// {"kind":"w22","inner":"<element>","outer":"<rational>"} or
/// {"kind":"thin","alpha":[...],"beta":[...]}.
inline Derivation derivation_from(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("derivation literal needs a \"kind\" field");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "w22") {
    W22Derivation d;
    if (j.contains("inner")) d.inner = parse_element(j.at("inner").get<std::string>(), AlgebraId::W22);
    if (j.contains("outer")) d.outer_coeff = rational_from(j.at("outer"));
    return d;
  }
  if (kind == "thin") return thin_derivation_from(j);
  throw std::invalid_argument("unknown derivation kind '" + kind + "'");
}

inline Json to_json(const OmegaParams& p) {
  return Json{{"theta", rationals(p.theta)}, {"lambda", p.lambda.str()}, {"q", p.q}};
}

inline Json to_json(const ThinTwoLocalMap& m) {
  return Json{{"delta", to_json(m.delta)}, {"omega", to_json(m.omega)}};
}

/// {"delta": <thin derivation>, "omega": {"theta": [...], "lambda": "<r>", "q": <int>}};
/// either part may be omitted and then is zero.
inline ThinTwoLocalMap two_local_map_from(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("two-local map literal must be a JSON object");
  ThinTwoLocalMap m;
  if (j.contains("delta")) m.delta = thin_derivation_from(j.at("delta"));
  if (j.contains("omega")) {
    const auto& o = j.at("omega");
    if (o.contains("theta")) m.omega.theta = rationals_from(o.at("theta"));
    if (o.contains("lambda")) m.omega.lambda = rational_from(o.at("lambda"));
    if (o.contains("q")) m.omega.q = o.at("q").get<std::int64_t>();
  }
  m.omega.validate();
  return m;
}

inline Json elements(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

inline Json to_json(const Counterexample& c) {
  Json input = Json::object();
  for (const auto& [k, v] : c.input) input[k] = v;
  return Json{{"input", input}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}};
}

inline Json to_json(const WitnessParams& w) {
  Json params = Json::object();
  for (const auto& [label, v] : w.nonzero()) params[label] = v.str();
  return Json{{"derivation", to_json(w.derivation)}, {"params", params}};
}

inline Json to_json(const PairWitness& p) {
  Json out{{"x", p.x.str()}, {"y", p.y.str()}, {"status", p.witness ? "feasible" : "infeasible"}};
  if (p.witness) out["witness"] = to_json(*p.witness);
  return out;
}

/// {"check", "status", "probes", "counterexamples", "witnesses"}.
inline Json to_json(const CheckReport& r) {
  Json ces = Json::array();
  for (const auto& c : r.counterexamples) ces.push_back(to_json(c));
  Json ws = Json::array();
  for (const auto& w : r.witnesses) ws.push_back(to_json(w));
  return Json{{"check", r.check},
              {"status", r.pass ? "pass" : "fail"},
              {"probes", elements(r.probes)},
              {"counterexamples", ces},
              {"witnesses", ws}};
}

inline Json to_json(const DecomposeResult& r) {
  Json out{{"check", "decompose_w22"}, {"status", r.ok() ? "pass" : "fail"}, {"result", to_string(r.status)}};
  out["mu"] = r.mu.str();
  if (r.base) out["base_witness"] = to_json(*r.base);
  if (r.derivation) out["derivation"] = to_json(*r.derivation);
  out["probes_checked"] = r.probes_checked;
  out["counterexamples"] = Json::array();
  if (r.evidence) out["counterexamples"].push_back(to_json(*r.evidence));
  return out;
}

inline Json to_json(const ClassifyResult& r) {
  Json out{{"check", "classify_thin"}, {"status", r.ok() ? "pass" : "fail"}, {"result", to_string(r.status)}};
  if (r.map) out["map"] = to_json(*r.map);
  out["probes"] = elements(r.probes_checked);
  out["counterexamples"] = Json::array();
  if (r.evidence) out["counterexamples"].push_back(to_json(*r.evidence));
  return out;
}

inline Json to_json(const GenericDerivation& d) {
  Json images = Json::object();
  for (const auto& [g, img] : d.images) images[g.str()] = img.str();
  return images;
}

inline Json to_json(const DerivationSpace& s, bool with_basis = true) {
  Json out{{"algebra", std::string(to_string(s.algebra))},
           {"window", s.window},
           {"interior", Json::array({s.interior.lo, s.interior.hi})},
           {"num_unknowns", s.num_unknowns},
           {"num_equations", s.num_equations},
           {"nullspace_dim", s.basis.size()},
           {"inner_dim", s.inner_dim},
           {"outer_dim", s.outer_dim}};
  if (s.algebra == AlgebraId::W22) {
    out["explained_by_inner_and_D"] = s.explained_by_inner_and_D;
    if (s.outer_representative) out["outer_representative"] = to_json(*s.outer_representative);
  }
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& d : s.basis) basis.push_back(to_json(d));
    out["basis"] = basis;
  }
  return out;
}

inline Json to_json(const ImplicationCheck& c) {
  return Json{{"name", c.name},
              {"status", c.pass() ? "pass" : "fail"},
              {"hypothesis", c.hypothesis},
              {"conclusion", c.conclusion},
              {"detail", c.detail}};
}

}  // namespace twolocal::json
