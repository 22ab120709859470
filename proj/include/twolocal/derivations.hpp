#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "twolocal/element.hpp"
#include "twolocal/errors.hpp"

namespace twolocal {

/// The outer derivation of W(2,2): kills every L_m and fixes every I_m.
inline Element outer_D(const Element& x) {
  if (x.algebra() != AlgebraId::W22) throw AlgebraMismatch("outer derivation D acts on w22 elements only");
  Element out(AlgebraId::W22);
  for (const auto& [s, c] : x.terms())
    if (s.family() == Family::I) out.add_term(s, c);
  return out;
}

/// ad(inner) + outer_coeff * D. Every derivation of W(2,2) has this form.
struct W22Derivation {
  Element inner = Element(AlgebraId::W22);
  Rational outer_coeff;

  friend bool operator==(const W22Derivation&, const W22Derivation&) = default;
};

inline Element apply(const W22Derivation& d, const Element& x) {
  if (x.algebra() != AlgebraId::W22) throw AlgebraMismatch("w22 derivation applied to a thin element");
  Element out = bracket(d.inner, x);
  if (!d.outer_coeff.is_zero()) out += d.outer_coeff * outer_D(x);
  return out;
}

/// Derivation of the thin algebra, determined by
///   d(e_1) = sum_{i=1..n} alpha_i e_i
///   d(e_j) = (j-2) alpha_1 e_j + sum_{i=2..m} beta_i e_{i+j-2},   j >= 2.
/// `alpha[0]` is alpha_1 and `beta[0]` is beta_2. Empty vectors mean zero.
struct ThinDerivation {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  Rational alpha_at(std::int64_t i) const {
    return (i >= 1 && static_cast<std::size_t>(i) <= alpha.size()) ? alpha[i - 1] : Rational(0);
  }
  Rational beta_at(std::int64_t i) const {
    return (i >= 2 && static_cast<std::size_t>(i - 1) <= beta.size()) ? beta[i - 2] : Rational(0);
  }

  /// Trailing zeros trimmed; equal derivations compare equal after this.
  ThinDerivation canonical() const {
    ThinDerivation d = *this;
    while (!d.alpha.empty() && d.alpha.back().is_zero()) d.alpha.pop_back();
    while (!d.beta.empty() && d.beta.back().is_zero()) d.beta.pop_back();
    return d;
  }

  friend bool operator==(const ThinDerivation&, const ThinDerivation&) = default;
};

inline Element apply(const ThinDerivation& d, const Element& x) {
  if (x.algebra() != AlgebraId::Thin) throw AlgebraMismatch("thin derivation applied to a w22 element");
  Element out(AlgebraId::Thin);
  const Rational a1 = d.alpha_at(1);
  for (const auto& [s, k] : x.terms()) {
    const std::int64_t j = s.index();
    if (j == 1) {
      for (std::size_t i = 0; i < d.alpha.size(); ++i)
        out.add_term(BasisSymbol(Family::E, static_cast<std::int64_t>(i) + 1), k * d.alpha[i]);
      continue;
    }
    out.add_term(s, k * Rational(j - 2) * a1);
    for (std::size_t t = 0; t < d.beta.size(); ++t) {
      const std::int64_t i = static_cast<std::int64_t>(t) + 2;
      out.add_term(BasisSymbol(Family::E, i + j - 2), k * d.beta[t]);
    }
  }
  return out;
}

/// ad(e_k) written in the closed form above: ad(e_1) has beta = (0, 1);
/// ad(e_k), k >= 2, sends e_1 to -e_{k+1} and kills the rest.
inline ThinDerivation thin_inner(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("thin generator index must be >= 1");
  ThinDerivation d;
  if (k == 1) {
    d.beta = {Rational(0), Rational(1)};
  } else {
    d.alpha.assign(static_cast<std::size_t>(k + 1), Rational(0));
    d.alpha.back() = Rational(-1);
  }
  return d;
}

using Derivation = std::variant<W22Derivation, ThinDerivation>;

inline AlgebraId algebra_of(const Derivation& d) {
  return std::holds_alternative<W22Derivation>(d) ? AlgebraId::W22 : AlgebraId::Thin;
}

inline Element apply(const Derivation& d, const Element& x) {
  return std::visit([&](const auto& v) { return apply(v, x); }, d);
}

/// Closed index range [lo, hi].
struct IndexRange {
  std::int64_t lo;
  std::int64_t hi;
  bool contains(std::int64_t i) const { return lo <= i && i <= hi; }
};

/// A derivation known only through the images of the generators of a finite
/// core range. Applying it outside the core throws WindowOverflow.
struct GenericDerivation {
  AlgebraId algebra;
  IndexRange core;
  std::map<BasisSymbol, Element> images;

  Element image(const BasisSymbol& g) const {
    if (g.algebra() != algebra) throw AlgebraMismatch("generator " + g.str() + " is not in this algebra");
    if (!core.contains(g.index())) throw WindowOverflow("generator " + g.str() + " is outside the derivation window");
    auto it = images.find(g);
    return it == images.end() ? Element(algebra) : it->second;
  }
};

inline Element apply(const GenericDerivation& d, const Element& x) {
  if (x.algebra() != d.algebra) throw AlgebraMismatch("windowed derivation applied to an element of another algebra");
  Element out(d.algebra);
  for (const auto& [s, c] : x.terms()) out += c * d.image(s);
  return out;
}

/// A plain callable Element -> Element, anything with an `apply(d, x)`
/// overload, or anything with an `evaluate(m, x)` overload.
template <class Map>
Element evaluate_map(const Map& m, const Element& x) {
  if constexpr (std::invocable<const Map&, const Element&>) {
    return m(x);
  } else if constexpr (requires { twolocal::apply(m, x); }) {
    return twolocal::apply(m, x);
  } else {
    return evaluate(m, x);
  }
}

struct LeibnizEntry {
  Element x;
  Element y;
  Element residual;  // d([x,y]) - [d(x),y] - [x,d(y)]
};

struct LeibnizReport {
  std::vector<LeibnizEntry> entries;

  bool pass() const {
    for (const auto& e : entries)
      if (!e.residual.is_zero()) return false;
    return true;
  }
  std::vector<LeibnizEntry> failures() const {
    std::vector<LeibnizEntry> out;
    for (const auto& e : entries)
      if (!e.residual.is_zero()) out.push_back(e);
    return out;
  }
};

/// Exact Leibniz residual on every probe pair. For windowed derivations a
/// probe whose bracket leaves the core raises WindowOverflow.
template <class Map>
LeibnizReport leibniz_check(const Map& d, const std::vector<std::pair<Element, Element>>& probes) {
  LeibnizReport rep;
  rep.entries.reserve(probes.size());
  for (const auto& [x, y] : probes) {
    Element r = evaluate_map(d, bracket(x, y));
    r -= bracket(evaluate_map(d, x), y);
    r -= bracket(x, evaluate_map(d, y));
    rep.entries.push_back({x, y, std::move(r)});
  }
  return rep;
}

/// All ordered pairs of distinct elements of `gens`.
inline std::vector<std::pair<Element, Element>> all_pairs(const std::vector<Element>& gens) {
  std::vector<std::pair<Element, Element>> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (i != j) out.emplace_back(gens[i], gens[j]);
  return out;
}

}  // namespace twolocal
