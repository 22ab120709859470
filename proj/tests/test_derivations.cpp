#include <gtest/gtest.h>

#include "support/dense_oracle.hpp"
#include "support/formulas.hpp"
#include "twolocal/derivation_space.hpp"
#include "twolocal/derivations.hpp"
#include "twolocal/random.hpp"

using namespace twolocal;

namespace {

std::vector<Element> w22_generators(std::int64_t r) {
  std::vector<Element> out;
  for (std::int64_t i = -r; i <= r; ++i) {
    out.push_back(L(i));
    out.push_back(I(i));
  }
  return out;
}

std::vector<Rational> rs(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(OuterD, Examples) {
  EXPECT_TRUE(outer_D(L(3)).is_zero());
  EXPECT_EQ(outer_D(I(3)), I(3));
  EXPECT_EQ(outer_D(L(0, 2) - I(-2, 5)), I(-2, -5));
  EXPECT_THROW(outer_D(e(1)), AlgebraMismatch);
}

TEST(ApplyW22, Examples) {
  EXPECT_EQ(apply(W22Derivation{L(0), Rational(0)}, L(5)), L(5, -5));
  EXPECT_EQ(apply(W22Derivation{L(1), Rational(2)}, I(0)), I(1) + I(0, 2));
  EXPECT_TRUE(apply(W22Derivation{}, L(3) + I(-7)).is_zero());
  EXPECT_THROW(apply(W22Derivation{}, e(1)), AlgebraMismatch);
}

TEST(ApplyThin, Examples) {
  EXPECT_EQ(apply(ThinDerivation{rs({1}), {}}, e(5)), e(5, 3));
  EXPECT_EQ(apply(ThinDerivation{rs({0, -1, 1}), rs({2})}, e(1) + e(2)), e(2) + e(3));
  for (std::int64_t j = 2; j <= 20; ++j) EXPECT_EQ(apply(ThinDerivation{rs({0}), rs({0, 1})}, e(j)), e(j + 1));
  EXPECT_THROW(apply(ThinDerivation{}, L(0)), AlgebraMismatch);
}

TEST(ApplyThin, MatchesFormula) {
  random::Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    ThinDerivation d = random::thin_derivation(rng, 5);
    Element x = random::thin_element(rng, 12, 5);
    EXPECT_EQ(apply(d, x), formulas::thin_derivation(d.alpha, d.beta, x));
  }
}

TEST(ThinInner, MatchesAdjoint) {
  for (std::int64_t k = 1; k <= 8; ++k) {
    ThinDerivation d = thin_inner(k);
    for (std::int64_t j = 1; j <= 15; ++j) EXPECT_EQ(apply(d, e(j)), bracket(e(k), e(j))) << "k=" << k << " j=" << j;
  }
}

TEST(Leibniz, InnerAndOuterOnW22) {
  auto probes = all_pairs(w22_generators(4));
  EXPECT_TRUE(leibniz_check(W22Derivation{L(2), Rational(0)}, probes).pass());
  EXPECT_TRUE(leibniz_check([](const Element& x) { return outer_D(x); }, probes).pass());
  random::Rng rng(22);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(leibniz_check(random::w22_derivation(rng), probes).pass());
}

TEST(Leibniz, IdentityLikeMapFails) {
  // D'([L1, L2]) = -L3 while [D'L1, L2] + [L1, D'L2] = -2 L3.
  auto d_prime = [](const Element& x) { return x; };
  LeibnizReport rep = leibniz_check(d_prime, {{L(1), L(2)}});
  ASSERT_FALSE(rep.pass());
  EXPECT_EQ(d_prime(bracket(L(1), L(2))), L(3, -1));
  EXPECT_EQ(bracket(d_prime(L(1)), L(2)) + bracket(L(1), d_prime(L(2))), L(3, -2));
  EXPECT_EQ(rep.failures()[0].residual, L(3));
}

TEST(Leibniz, ThinDerivationsUpToIndex50) {
  random::Rng rng(23);
  std::vector<std::pair<Element, Element>> probes;
  for (std::int64_t j = 1; j <= 50; ++j) probes.emplace_back(e(1), e(j));
  for (int t = 0; t < 30; ++t) probes.emplace_back(random::thin_element(rng, 50, 3), random::thin_element(rng, 50, 3));
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(leibniz_check(random::thin_derivation(rng, 6), probes).pass());
}

TEST(Leibniz, WindowOverflowIsNotAFailure) {
  DerivationSpace s = solve_derivation_space(AlgebraId::Thin, 6);
  ASSERT_FALSE(s.basis.empty());
  EXPECT_THROW(leibniz_check(s.basis[0], {{e(1), e(6)}}), WindowOverflow);
  EXPECT_NO_THROW(leibniz_check(s.basis[0], {{e(1), e(5)}}));
}

TEST(DerivationSpace, RequiresWindowAtLeastThree) {
  EXPECT_THROW(solve_derivation_space(AlgebraId::W22, 2), std::invalid_argument);
}

TEST(DerivationSpace, W22WindowFour) {
  DerivationSpace s = solve_derivation_space(AlgebraId::W22, 4);
  DerivationWindow win(AlgebraId::W22, 4);
  EXPECT_EQ(s.num_unknowns, win.num_unknowns());
  EXPECT_EQ(s.basis.size(), win.num_unknowns() - oracle::rank(win.leibniz_system()));
  EXPECT_EQ(s.outer_dim, 1u);
  EXPECT_TRUE(s.explained_by_inner_and_D);
  ASSERT_TRUE(s.outer_representative.has_value());

  // Every basis vector satisfies Leibniz for core pairs whose bracket stays in the core.
  std::vector<std::pair<Element, Element>> probes;
  for (const auto& [x, y] : all_pairs(w22_generators(4)))
    if (bracket(x, y).max_abs_index() <= 4) probes.emplace_back(x, y);
  for (const auto& d : s.basis) EXPECT_TRUE(leibniz_check(d, probes).pass());
}

TEST(DerivationSpace, W22InnerDerivationsLieInTheSolutionSpan) {
  DerivationSpace s = solve_derivation_space(AlgebraId::W22, 4);
  DerivationWindow win(AlgebraId::W22, 4);
  const auto gens = win.generators(win.interior());
  const std::size_t dim = gens.size() * win.span_generators().size();
  std::vector<std::vector<Rational>> sols;
  for (const auto& d : s.basis) sols.push_back(win.restrict(d, gens));
  const std::size_t base = vector_rank(sols, dim);
  for (std::int64_t k = -2; k <= 2; ++k) {
    for (const Element& a : {L(k), I(k)}) {
      auto with = sols;
      with.push_back(win.restrict([&](const Element& x) { return bracket(a, x); }, gens));
      EXPECT_EQ(vector_rank(with, dim), base) << a;
    }
  }
}

TEST(DerivationSpace, ThinWindowSixShiftForm) {
  DerivationSpace s = solve_derivation_space(AlgebraId::Thin, 6);
  DerivationWindow win(AlgebraId::Thin, 6);
  EXPECT_EQ(s.basis.size(), win.num_unknowns() - oracle::rank(win.leibniz_system()));
  for (const auto& d : s.basis) EXPECT_EQ(shift_form_violation(d, win.interior(), win.span()), "");
}

TEST(DerivationSpace, ShiftFormDetectsViolations) {
  GenericDerivation d{AlgebraId::Thin, {1, 6}, {}};
  d.images.emplace(BasisSymbol(Family::E, 2), e(3));
  d.images.emplace(BasisSymbol(Family::E, 3), e(5));
  DerivationWindow win(AlgebraId::Thin, 6);
  EXPECT_NE(shift_form_violation(d, win.interior(), win.span()), "");
  d.images.insert_or_assign(BasisSymbol(Family::E, 3), e(4) + e(2));
  EXPECT_NE(shift_form_violation(d, win.interior(), win.span()), "");
}

TEST(DerivationSpace, ThinClosedFormsAreSolutions) {
  DerivationSpace s = solve_derivation_space(AlgebraId::Thin, 6);
  DerivationWindow win(AlgebraId::Thin, 6);
  const auto gens = win.core_generators();
  const std::size_t dim = gens.size() * win.span_generators().size();
  std::vector<std::vector<Rational>> sols;
  for (const auto& d : s.basis) sols.push_back(win.restrict(d, gens));
  random::Rng rng(24);
  for (int t = 0; t < 20; ++t) {
    ThinDerivation d = random::thin_derivation(rng, 4);
    auto with = sols;
    with.push_back(win.restrict(d, gens));
    EXPECT_EQ(vector_rank(with, dim), sols.size());
  }
}

TEST(DerivationSpace, MonotoneConsistency) {
  for (AlgebraId alg : {AlgebraId::W22, AlgebraId::Thin}) {
    for (std::int64_t n = 3; n <= (alg == AlgebraId::W22 ? 4 : 7); ++n) {
      DerivationSpace small = solve_derivation_space(alg, n);
      DerivationSpace big = solve_derivation_space(alg, n + 1);
      DerivationWindow wsmall(alg, n), wbig(alg, n + 1);
      const auto gens = wsmall.generators(wsmall.interior());
      const std::size_t dim = gens.size() * wbig.span_generators().size();
      std::vector<std::vector<Rational>> vb, vs;
      for (const auto& d : big.basis) vb.push_back(wbig.restrict(d, gens));
      for (const auto& d : small.basis) vs.push_back(wbig.restrict(d, gens));
      auto both = vb;
      both.insert(both.end(), vs.begin(), vs.end());
      EXPECT_EQ(vector_rank(both, dim), vector_rank(vb, dim)) << to_string(alg) << " N=" << n;
    }
  }
}
