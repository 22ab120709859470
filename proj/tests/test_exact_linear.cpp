#include <gtest/gtest.h>

#include "support/dense_oracle.hpp"
#include "twolocal/derivation_space.hpp"
#include "twolocal/linear.hpp"
#include "twolocal/random.hpp"

using namespace twolocal;

namespace {

std::vector<Rational> ints(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

LinearSystem random_system(random::Rng& rng, std::size_t vars, std::size_t rows, bool consistent) {
  LinearSystem sys(vars);
  std::vector<Rational> x0(vars);
  for (auto& c : x0) c = random::rational(rng, 4, 3);
  for (std::size_t r = 0; r < rows; ++r) {
    std::map<std::size_t, Rational> row;
    for (std::size_t j = 0; j < vars; ++j)
      if (random::uniform(rng, 0, 2) == 0) row[j] = random::rational(rng, 3, 2);
    Rational rhs(0);
    for (const auto& [j, c] : row) rhs += c * x0[j];
    if (!consistent && r + 1 == rows) rhs += Rational(1);
    sys.add_row(row, rhs);
  }
  return sys;
}

}  // namespace

TEST(Solve, TwoByTwo) {
  LinearSystem sys(2);
  sys.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(1));
  sys.add_row({{0, Rational(1)}, {1, Rational(-1)}}, Rational(1));
  SolveResult r = solve(sys);
  EXPECT_EQ(r.status, SolveStatus::Unique);
  EXPECT_EQ(*r.particular, ints({1, 0}));
  EXPECT_TRUE(r.nullspace.empty());
}

TEST(Solve, WitnessMatchingRows) {
  // alpha_2, alpha_3, beta_2, beta_3
  LinearSystem sys(std::vector<std::string>{"alpha_2", "alpha_3", "beta_2", "beta_3"});
  sys.add_row({{0, Rational(1)}, {2, Rational(1)}}, Rational(1));
  sys.add_row({{1, Rational(1)}, {3, Rational(1)}}, Rational(1));
  sys.pin(3, Rational(0));
  sys.pin(2, Rational(2));
  SolveResult r = solve(sys);
  ASSERT_EQ(r.status, SolveStatus::Unique);
  EXPECT_EQ((*r.particular)[0], Rational(-1));
  EXPECT_EQ((*r.particular)[1], Rational(1));
  EXPECT_EQ(sys.var_labels()[0], "alpha_2");
}

TEST(Solve, InconsistentRow) {
  LinearSystem sys(1);
  sys.add_row({{0, Rational(0)}}, Rational(1));
  SolveResult r = solve(sys);
  EXPECT_EQ(r.status, SolveStatus::Infeasible);
  EXPECT_FALSE(r.particular.has_value());
}

TEST(Solve, AffineWithNormalizedNullspace) {
  LinearSystem sys(3);
  sys.add_row({{0, Rational(2)}, {1, Rational(4)}, {2, Rational(-2)}}, Rational(6));
  SolveResult r = solve(sys);
  EXPECT_EQ(r.status, SolveStatus::Affine);
  EXPECT_EQ(*r.particular, ints({3, 0, 0}));
  ASSERT_EQ(r.nullspace.size(), 2u);
  for (const auto& v : r.nullspace) {
    auto first = std::find_if(v.begin(), v.end(), [](const Rational& c) { return !c.is_zero(); });
    EXPECT_TRUE(first->is_one());
    EXPECT_TRUE(satisfies(sys, v, true));
  }
}

TEST(Solve, RejectsOutOfRangeVariable) {
  LinearSystem sys(2);
  EXPECT_THROW(sys.add_row({{2, Rational(1)}}, Rational(0)), std::out_of_range);
}

TEST(NullspaceDim, Examples) {
  EXPECT_EQ(nullspace_dim(LinearSystem(3)), 3u);
  LinearSystem line(2);
  line.add_row({{0, Rational(1)}, {1, Rational(-1)}}, Rational(0));
  EXPECT_EQ(nullspace_dim(line), 1u);
}

TEST(NullspaceDim, ThinLeibnizSystemMatchesDenseOracle) {
  DerivationWindow win(AlgebraId::Thin, 6);
  LinearSystem sys = win.leibniz_system();
  EXPECT_EQ(nullspace_dim(sys), sys.num_vars() - oracle::rank(sys));
  EXPECT_EQ(solve(sys).nullspace.size(), nullspace_dim(sys));
}

TEST(Solve, RandomizedAgainstDenseOracle) {
  random::Rng rng(11);
  for (int t = 0; t < 150; ++t) {
    const auto vars = static_cast<std::size_t>(random::uniform(rng, 1, 9));
    const auto rows = static_cast<std::size_t>(random::uniform(rng, 0, 11));
    const bool consistent = t % 3 != 0;
    LinearSystem sys = random_system(rng, vars, rows, consistent);
    SolveResult r = solve(sys);

    EXPECT_EQ(r.rank, oracle::rank(sys));
    EXPECT_EQ(r.rank + r.nullspace.size(), vars);
    EXPECT_EQ(r.feasible(), oracle::consistent(sys));
    EXPECT_EQ(r.status == SolveStatus::Unique, r.feasible() && r.nullspace.empty());
    if (r.particular) {
      EXPECT_TRUE(satisfies(sys, *r.particular));
    }
    for (const auto& v : r.nullspace) EXPECT_TRUE(satisfies(sys, v, true));
    EXPECT_EQ(vector_rank(r.nullspace, vars), r.nullspace.size());
  }
}

TEST(Solve, Deterministic) {
  random::Rng rng(12);
  LinearSystem sys = random_system(rng, 7, 5, true);
  SolveResult a = solve(sys), b = solve(sys);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.particular, b.particular);
  EXPECT_EQ(a.nullspace, b.nullspace);
}

TEST(Residual, SignConvention) {
  LinearSystem sys(2);
  sys.add_row({{0, Rational(1)}, {1, Rational(2)}}, Rational(5));
  EXPECT_EQ(residual(sys.rows()[0], ints({1, 1})), Rational(-2));
  EXPECT_EQ(residual(sys.rows()[0], ints({1, 1}), true), Rational(3));
}
