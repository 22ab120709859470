#pragma once

// Term-by-term evaluations of the defining formulas, written independently of
// the library's bracket and apply code.

#include <cstdint>
#include <vector>

#include "twolocal/element.hpp"

namespace formulas {

using twolocal::AlgebraId;
using twolocal::BasisSymbol;
using twolocal::Element;
using twolocal::Family;
using twolocal::Rational;

/// [g, h] for W(2,2) generators straight from the structure constants.
inline Element w22_bracket(const BasisSymbol& g, const BasisSymbol& h) {
  Element out(AlgebraId::W22);
  const std::int64_t m = g.index(), n = h.index();
  if (g.family() == Family::I && h.family() == Family::I) return out;
  const Family f = (g.family() == Family::L && h.family() == Family::L) ? Family::L : Family::I;
  out.add_term(BasisSymbol(f, m + n), Rational(m - n));
  return out;
}

inline Element thin_bracket(const BasisSymbol& g, const BasisSymbol& h) {
  Element out(AlgebraId::Thin);
  if (g.index() == 1 && h.index() >= 2) out.add_term(BasisSymbol(Family::E, h.index() + 1), Rational(1));
  if (h.index() == 1 && g.index() >= 2) out.add_term(BasisSymbol(Family::E, g.index() + 1), Rational(-1));
  return out;
}

inline Element bracket(const Element& a, const Element& b) {
  Element out(a.algebra());
  for (const auto& [g, c] : a.terms())
    for (const auto& [h, d] : b.terms()) {
      Element t = a.algebra() == AlgebraId::W22 ? w22_bracket(g, h) : thin_bracket(g, h);
      out += (c * d) * t;
    }
  return out;
}

/// delta(e_1) = sum alpha_i e_i; delta(e_j) = (j-2) alpha_1 e_j + sum beta_i e_{i+j-2}.
inline Element thin_derivation(const std::vector<Rational>& alpha, const std::vector<Rational>& beta, const Element& x) {
  Element out(AlgebraId::Thin);
  const Rational a1 = alpha.empty() ? Rational(0) : alpha[0];
  for (const auto& [s, k] : x.terms()) {
    const std::int64_t j = s.index();
    if (j == 1) {
      for (std::size_t i = 0; i < alpha.size(); ++i) out.add_term(BasisSymbol(Family::E, std::int64_t(i) + 1), k * alpha[i]);
    } else {
      out.add_term(s, k * Rational(j - 2) * a1);
      for (std::size_t i = 0; i < beta.size(); ++i) out.add_term(BasisSymbol(Family::E, std::int64_t(i) + j), k * beta[i]);
    }
  }
  return out;
}

/// Omega with theta = (theta_2, ...), fixed q.
inline Element omega(const std::vector<Rational>& theta, const Rational& lambda, std::int64_t q, const Element& x) {
  Element out(AlgebraId::Thin);
  if (!x.coeff(BasisSymbol(Family::E, 1)).is_zero()) {
    for (const auto& [s, k] : x.terms()) {
      if (s.index() < 2) continue;
      for (std::size_t t = 0; t < theta.size(); ++t) out.add_term(BasisSymbol(Family::E, s.index() + std::int64_t(t)), k * theta[t]);
    }
  } else if (x.terms().size() == 1 && x.terms().begin()->first.index() == q) {
    out = lambda * x;
  }
  return out;
}

/// ad(a) + lambda D on W(2,2).
inline Element w22_derivation(const Element& a, const Rational& lambda, const Element& x) {
  Element out = formulas::bracket(a, x);
  for (const auto& [s, k] : x.terms())
    if (s.family() == Family::I) out.add_term(s, lambda * k);
  return out;
}

}  // namespace formulas
