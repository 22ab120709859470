#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twolocal/derivations.hpp"
#include "twolocal/element.hpp"
#include "twolocal/two_local.hpp"

namespace twolocal {

enum class ClassifyStatus { Ok, Infeasible, AmbiguousLambda, Disagreement };

inline const char* to_string(ClassifyStatus s) {
  switch (s) {
    case ClassifyStatus::Ok: return "ok";
    case ClassifyStatus::Infeasible: return "Infeasible";
    case ClassifyStatus::AmbiguousLambda: return "AmbiguousLambda";
    case ClassifyStatus::Disagreement: return "Disagreement";
  }
  return "?";
}

struct ClassifyResult {
  ClassifyStatus status = ClassifyStatus::Infeasible;
  /// Canonical reconstruction (set when status is Ok).
  std::optional<ThinTwoLocalMap> map;
  std::optional<Counterexample> evidence;
  std::vector<Element> probes_checked;

  bool ok() const { return status == ClassifyStatus::Ok; }
};

/// Probes used to cross-check a reconstruction on window N (N >= 6).
inline std::vector<Element> classification_probes(std::int64_t n, std::int64_t q) {
  std::vector<Element> out = {
      e(1) + e(2) + e(3),
      e(1, 2) + e(4, 5),
      e(2) + e(3),
      e(3) + e(4),
      e(2, 3) - e(5),
      e(1, -1) + e(3, 2) - e(6),
      e(1) + e(n),
      e(2, Rational(1, 2)) + e(n, 7),
  };
  if (q <= n) {
    out.push_back(e(q, 3));
    out.push_back(e(2) + e(q));
    out.push_back(e(1) + e(q, -2));
  }
  return out;
}

/// Recovers delta + Omega from a black-box thin map:
///   1. delta = witness at (e_1, e_2); R = map - delta;
///   2. theta from R(e_1 + e_2), checked against R(e_1 + e_j), j = 3..N;
///   3. (q, lambda) from the single nonzero R(e_j), j = 3..N;
///   4. cross-check on composite probes.
template <class Map>
ClassifyResult classify_thin_two_local(const Map& map, std::int64_t window) {
  if (window < 6) throw std::invalid_argument("classification window must be >= 6");
  ClassifyResult res;
  auto fail = [&](ClassifyStatus st, std::vector<std::pair<std::string, std::string>> in, Element lhs, Element rhs) {
    res.status = st;
    res.evidence = Counterexample{std::move(in), std::move(lhs), std::move(rhs)};
    return res;
  };

  const Element v1 = evaluate_map(map, e(1)), v2 = evaluate_map(map, e(2));
  auto w = witness_find(AlgebraId::Thin, e(1), v1, e(2), v2, window);
  if (!w) return fail(ClassifyStatus::Infeasible, {{"x", "e[1]"}, {"y", "e[2]"}}, v1, v2);
  const ThinDerivation delta = std::get<ThinDerivation>(w->derivation).canonical();
  auto residual = [&](const Element& x) {
    res.probes_checked.push_back(x);
    return evaluate_map(map, x) - apply(delta, x);
  };

  // theta: R(e_1 + e_2) = sum_j theta_j e_j.
  const Element r12 = residual(e(1) + e(2));
  if (!r12.coeff(BasisSymbol(Family::E, 1)).is_zero())
    return fail(ClassifyStatus::Disagreement, {{"x", "e[1] + e[2]"}}, r12, Element(AlgebraId::Thin));
  OmegaParams omega;
  for (const auto& [s, c] : r12.terms()) {
    auto idx = static_cast<std::size_t>(s.index() - 2);
    if (omega.theta.size() <= idx) omega.theta.resize(idx + 1);
    omega.theta[idx] = c;
  }
  for (std::int64_t j = 3; j <= window; ++j) {
    Element x = e(1) + e(j);
    Element got = residual(x);
    Element want = omega_apply(omega, x);
    if (got != want) return fail(ClassifyStatus::Disagreement, {{"x", x.str()}}, got, want);
  }

  // (q, lambda): at most one single-generator residual may survive.
  std::optional<std::int64_t> q;
  for (std::int64_t j = 3; j <= window; ++j) {
    Element r = residual(e(j));
    if (r.is_zero()) continue;
    Rational lam = r.coeff(BasisSymbol(Family::E, j));
    if (r != lam * e(j)) return fail(ClassifyStatus::Disagreement, {{"x", e(j).str()}}, r, lam * e(j));
    if (q) {
      return fail(ClassifyStatus::AmbiguousLambda, {{"x", e(*q).str()}, {"y", e(j).str()}}, residual(e(*q)), r);
    }
    q = j;
    omega.lambda = lam;
    omega.q = j;
  }

  ThinTwoLocalMap rebuilt{delta, omega.canonical()};
  for (const auto& x : classification_probes(window, rebuilt.omega.q)) {
    res.probes_checked.push_back(x);
    Element got = evaluate_map(map, x);
    Element want = evaluate(rebuilt, x);
    if (got != want) return fail(ClassifyStatus::Disagreement, {{"x", x.str()}}, got, want);
  }
  res.status = ClassifyStatus::Ok;
  res.map = rebuilt;
  return res;
}

}  // namespace twolocal
