#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twolocal/derivations.hpp"
#include "twolocal/element.hpp"
#include "twolocal/two_local.hpp"

namespace twolocal {

enum class DecomposeStatus { Ok, Infeasible, ResidueNotScalarI0, Disagreement };

inline const char* to_string(DecomposeStatus s) {
  switch (s) {
    case DecomposeStatus::Ok: return "ok";
    case DecomposeStatus::Infeasible: return "Infeasible";
    case DecomposeStatus::ResidueNotScalarI0: return "ResidueNotScalarI0";
    case DecomposeStatus::Disagreement: return "Disagreement";
  }
  return "?";
}

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::Infeasible;
  /// Witness at (L_0, L_1).
  std::optional<WitnessParams> base;
  /// Coefficient of I_0 in map(I_0) - base(I_0).
  Rational mu;
  /// base + mu*D; set whenever steps 1-2 succeed.
  std::optional<W22Derivation> derivation;
  /// First probe where map and candidate differ (or the I_0 residue).
  std::optional<Counterexample> evidence;
  std::size_t probes_checked = 0;

  bool ok() const { return status == DecomposeStatus::Ok; }
};

/// Reconstructs a W(2,2) 2-local map as a derivation:
///   1. witness d0 at (L_0, L_1);
///   2. mu from map(I_0) - d0(I_0), which must be a multiple of I_0;
///   3. candidate d0 + mu*D;
///   4. exact agreement with map on every verify probe.
template <class Map>
DecomposeResult decompose_w22_two_local(const Map& map, std::int64_t window, const std::vector<Element>& verify_probes) {
  const Element l0 = L(0), l1 = L(1), i0 = I(0);
  for (const auto& x : verify_probes) {
    if (x.algebra() != AlgebraId::W22) throw AlgebraMismatch("decomposition probes must be w22 elements");
    if (x.max_abs_index() > window) throw WindowTooSmall("probe " + x.str() + " is outside window " + std::to_string(window));
  }

  DecomposeResult res;
  const Element v0 = evaluate_map(map, l0), v1 = evaluate_map(map, l1);
  res.base = witness_find(AlgebraId::W22, l0, v0, l1, v1, window);
  if (!res.base) {
    res.status = DecomposeStatus::Infeasible;
    res.evidence = Counterexample{{{"x", l0.str()}, {"y", l1.str()}}, v0, v1};
    return res;
  }
  const auto& d0 = std::get<W22Derivation>(res.base->derivation);

  const Element vi0 = evaluate_map(map, i0);
  if (vi0.max_abs_index() > window) throw WindowTooSmall("map(I[0]) = " + vi0.str() + " is outside the window");
  const Element residue = vi0 - apply(d0, i0);
  res.mu = residue.coeff(BasisSymbol(Family::I, 0));
  if (residue != res.mu * i0) {
    res.status = DecomposeStatus::ResidueNotScalarI0;
    res.evidence = Counterexample{{{"x", i0.str()}}, residue, res.mu * i0};
    return res;
  }

  W22Derivation d{d0.inner, d0.outer_coeff + res.mu};
  res.derivation = d;
  for (const auto& x : verify_probes) {
    Element lhs = evaluate_map(map, x);
    if (lhs.max_abs_index() > window)
      throw WindowTooSmall("map(" + x.str() + ") = " + lhs.str() + " is outside window " + std::to_string(window));
    Element rhs = apply(d, x);
    ++res.probes_checked;
    if (lhs != rhs) {
      res.status = DecomposeStatus::Disagreement;
      res.evidence = Counterexample{{{"x", x.str()}}, std::move(lhs), std::move(rhs)};
      return res;
    }
  }
  res.status = DecomposeStatus::Ok;
  return res;
}

// ---------------------------------------------------------------------------
// Consequences of 2-locality on W(2,2), each a hypothesis/conclusion pair
// evaluated on a concrete map and an explicit index or probe set.

struct ImplicationCheck {
  std::string name;
  bool hypothesis = false;
  bool conclusion = false;
  std::string detail;

  /// Vacuous when the hypothesis fails.
  bool pass() const { return !hypothesis || conclusion; }
};

/// map(L_i) = 0  =>  the pair (L_i, y) has a witness ad(a L_i + b I_i) + lambda D.
template <class Map>
ImplicationCheck check_kernel_witness_at_L(const Map& map, std::int64_t i, const Element& y, std::int64_t window) {
  ImplicationCheck c;
  c.name = "kernel_witness_at_L";
  c.hypothesis = evaluate_map(map, L(i)).is_zero();
  WitnessProblem prob(AlgebraId::W22, window);
  prob.match(L(i), Element(AlgebraId::W22)).match(y, evaluate_map(map, y));
  const auto& fam = prob.family();
  for (std::int64_t k = -window; k <= window; ++k) {
    if (k == i) continue;
    prob.pin(fam.a(k)).pin(fam.b(k));
  }
  c.conclusion = prob.solve().has_value();
  c.detail = "i=" + std::to_string(i) + ", y=" + y.str();
  return c;
}

/// map(I_0) = 0  =>  the pair (I_0, y) has a witness ad(a L_0 + sum_k b_k I_k).
template <class Map>
ImplicationCheck check_kernel_witness_at_I0(const Map& map, const Element& y, std::int64_t window) {
  ImplicationCheck c;
  c.name = "kernel_witness_at_I0";
  c.hypothesis = evaluate_map(map, I(0)).is_zero();
  WitnessProblem prob(AlgebraId::W22, window);
  prob.match(I(0), Element(AlgebraId::W22)).match(y, evaluate_map(map, y));
  const auto& fam = prob.family();
  for (std::int64_t k = -window; k <= window; ++k)
    if (k != 0) prob.pin(fam.a(k));
  prob.pin(fam.lambda());
  c.conclusion = prob.solve().has_value();
  c.detail = "y=" + y.str();
  return c;
}

/// map(L_0) = map(L_1) = 0  =>  map(L_i) = 0 for every i in `indices`.
template <class Map>
ImplicationCheck check_L_annihilation(const Map& map, const std::vector<std::int64_t>& indices) {
  ImplicationCheck c;
  c.name = "L_annihilation";
  c.hypothesis = evaluate_map(map, L(0)).is_zero() && evaluate_map(map, L(1)).is_zero();
  c.conclusion = true;
  for (auto i : indices) {
    Element v = evaluate_map(map, L(i));
    if (!v.is_zero()) {
      c.conclusion = false;
      c.detail = "map(" + L(i).str() + ") = " + v.str();
      return c;
    }
  }
  return c;
}

/// map(L_i) = 0 for i in `indices`  =>  map(x) = mu_x * (I-part of x), and the
/// same mu_x serves as the D-coefficient of a witness at (L_i, x) supported on
/// {L_i, I_i} for every i in `indices`.
template <class Map>
ImplicationCheck check_I_scalar_image(const Map& map, const Element& x, const std::vector<std::int64_t>& indices,
                                      std::int64_t window) {
  ImplicationCheck c;
  c.name = "I_scalar_image";
  c.hypothesis = true;
  for (auto i : indices) c.hypothesis = c.hypothesis && evaluate_map(map, L(i)).is_zero();

  const Element vx = evaluate_map(map, x);
  const Element ipart = outer_D(x);
  std::optional<Rational> mu;
  if (ipart.is_zero()) {
    if (!vx.is_zero()) {
      c.detail = "x has no I-part but map(x) = " + vx.str();
      return c;
    }
  } else {
    const auto& [s, c0] = *ipart.terms().begin();
    Rational m = vx.coeff(s) / c0;
    if (vx != m * ipart) {
      c.detail = "map(x) = " + vx.str() + " is not a multiple of " + ipart.str();
      return c;
    }
    mu = m;
  }
  for (auto i : indices) {
    WitnessProblem prob(AlgebraId::W22, window);
    prob.match(L(i), Element(AlgebraId::W22)).match(x, vx);
    const auto& fam = prob.family();
    for (std::int64_t k = -window; k <= window; ++k) {
      if (k == i) continue;
      prob.pin(fam.a(k)).pin(fam.b(k));
    }
    if (mu) prob.pin(fam.lambda(), *mu);
    if (!prob.solve()) {
      c.detail = "no witness at (L[" + std::to_string(i) + "], x) with the common scalar";
      return c;
    }
  }
  c.conclusion = true;
  c.detail = "mu=" + (mu ? mu->str() : std::string("any"));
  return c;
}

/// map(I_0) = 0 and map(L_i) = 0 for i in `indices`  =>  map(L_p + I_2p) = 0 and
/// the pair (L_p + I_2p, y) has a witness ad(xi L_p + eta I_p + xi I_2p).
template <class Map>
ImplicationCheck check_diagonal_witness(const Map& map, std::int64_t p, const Element& y,
                                        const std::vector<std::int64_t>& indices, std::int64_t window) {
  ImplicationCheck c;
  c.name = "diagonal_witness";
  c.hypothesis = evaluate_map(map, I(0)).is_zero();
  for (auto i : indices) c.hypothesis = c.hypothesis && evaluate_map(map, L(i)).is_zero();
  c.detail = "p=" + std::to_string(p) + ", y=" + y.str();
  const Element x = L(p) + I(2 * p);
  const Element vx = evaluate_map(map, x);
  if (!vx.is_zero()) {
    c.detail += ", map(L_p + I_2p) = " + vx.str();
    return c;
  }
  WitnessProblem prob(AlgebraId::W22, window);
  prob.match(x, vx).match(y, evaluate_map(map, y));
  const auto& fam = prob.family();
  for (std::int64_t k = -window; k <= window; ++k) {
    if (k != p) prob.pin(fam.a(k));
    if (k != p && k != 2 * p) prob.pin(fam.b(k));
  }
  prob.pin(fam.lambda()).tie(fam.a(p), fam.b(2 * p));
  c.conclusion = prob.solve().has_value();
  return c;
}

/// map(L_0) = map(L_1) = map(I_0) = 0  =>  map(x) = 0 for every probe.
template <class Map>
ImplicationCheck check_vanishing(const Map& map, const std::vector<Element>& probes) {
  ImplicationCheck c;
  c.name = "vanishing";
  c.hypothesis = evaluate_map(map, L(0)).is_zero() && evaluate_map(map, L(1)).is_zero() &&
                 evaluate_map(map, I(0)).is_zero();
  c.conclusion = true;
  for (const auto& x : probes) {
    Element v = evaluate_map(map, x);
    if (!v.is_zero()) {
      c.conclusion = false;
      c.detail = "map(" + x.str() + ") = " + v.str();
      break;
    }
  }
  return c;
}

}  // namespace twolocal
