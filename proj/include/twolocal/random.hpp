#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "twolocal/derivations.hpp"
#include "twolocal/element.hpp"
#include "twolocal/two_local.hpp"

namespace twolocal::random {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// p/q with |p| <= max_num, 1 <= q <= max_den; zero allowed.
inline Rational rational(Rng& rng, std::int64_t max_num = 6, std::int64_t max_den = 4) {
  return Rational(uniform(rng, -max_num, max_num), uniform(rng, 1, max_den));
}

inline Rational nonzero_rational(Rng& rng, std::int64_t max_num = 6, std::int64_t max_den = 4) {
  for (;;) {
    Rational r = rational(rng, max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

/// Random nonzero thin element with 1..max_terms generators of index 1..max_index.
inline Element thin_element(Rng& rng, std::int64_t max_index = 8, std::int64_t max_terms = 4) {
  Element x(AlgebraId::Thin);
  const auto terms = uniform(rng, 1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) x.add_term(BasisSymbol(Family::E, uniform(rng, 1, max_index)), nonzero_rational(rng));
  return x.is_zero() ? thin_element(rng, max_index, max_terms) : x;
}

/// Random nonzero W(2,2) element with generators of index in [-max_abs, max_abs].
inline Element w22_element(Rng& rng, std::int64_t max_abs = 4, std::int64_t max_terms = 4) {
  Element x(AlgebraId::W22);
  const auto terms = uniform(rng, 1, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    Family f = uniform(rng, 0, 1) == 0 ? Family::L : Family::I;
    x.add_term(BasisSymbol(f, uniform(rng, -max_abs, max_abs)), nonzero_rational(rng));
  }
  return x.is_zero() ? w22_element(rng, max_abs, max_terms) : x;
}

/// ad(a) + lambda*D with supp(a) in [-max_abs, max_abs] and lambda nonzero.
inline W22Derivation w22_derivation(Rng& rng, std::int64_t max_abs = 3) {
  return W22Derivation{w22_element(rng, max_abs, 5), nonzero_rational(rng)};
}

inline ThinDerivation thin_derivation(Rng& rng, std::int64_t max_len = 4) {
  ThinDerivation d;
  d.alpha.resize(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& a : d.alpha) a = rational(rng);
  d.beta.resize(static_cast<std::size_t>(uniform(rng, 0, max_len)));
  for (auto& b : d.beta) b = rational(rng);
  return d;
}

/// Random delta + Omega with q in [3, max_q] and lambda nonzero half of the time.
inline ThinTwoLocalMap thin_two_local_map(Rng& rng, std::int64_t max_q = 8, std::int64_t max_len = 4) {
  ThinTwoLocalMap m;
  m.delta = thin_derivation(rng, max_len);
  m.omega.theta.resize(static_cast<std::size_t>(uniform(rng, 1, max_len)));
  for (auto& t : m.omega.theta) t = rational(rng);
  m.omega.q = uniform(rng, 3, max_q);
  m.omega.lambda = uniform(rng, 0, 1) == 0 ? Rational(0) : nonzero_rational(rng);
  return m;
}

}  // namespace twolocal::random
