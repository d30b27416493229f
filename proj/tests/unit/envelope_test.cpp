#include <gtest/gtest.h>

#include <bjortho/linprog.hpp>
#include <random>

using namespace bjo;

namespace {

// oracle: the minimum of a max of lines is attained at a pairwise crossing
// or, for a flat piece, anywhere on it
template <class Num>
Num brute_min(const Vec<Num>& b, const Vec<Num>& m) {
  auto env = [&](const Num& l) {
    Num best = b[0] + l * m[0];
    for (std::size_t i = 1; i < b.size(); ++i) best = std::max<Num>(best, b[i] + l * m[i]);
    return best;
  };
  Num best = env(Num(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (m[i] != m[j]) best = std::min<Num>(best, env(Num((b[j] - b[i]) / (m[i] - m[j]))));
  return best;
}

Rational q(int num, int den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Envelope, AbsoluteValue) {
  auto r = lp::minimize_max_affine<Rational>({Rational(1), Rational(-1)}, {Rational(1), Rational(-1)});
  EXPECT_EQ(r.value, Rational(0));
  EXPECT_EQ(r.lambda, Rational(-1));
}

TEST(Envelope, FlatMinimumPicksPointClosestToZero) {
  // max(1, 3 + l, -2 - l): flat on [-3, -2]
  auto r = lp::minimize_max_affine<Rational>({1, 3, -2}, {0, 1, -1});
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.lambda_lo, -3);
  EXPECT_EQ(r.lambda_hi, -2);
  EXPECT_EQ(r.lambda, -2);
  auto s = lp::minimize_max_affine<Rational>({1, 0, 0}, {0, 1, -1});
  EXPECT_EQ(s.lambda, 0);
}

TEST(Envelope, UnboundedThrows) {
  EXPECT_THROW(lp::minimize_max_affine<Rational>({1, 2}, {1, 3}), std::domain_error);
}

TEST(Envelope, MatchesPairwiseOracleExactly) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int k = 0; k < 300; ++k) {
    Vec<Rational> b, m;
    int n = 2 + k % 9;
    for (int i = 0; i < n; ++i) {
      b.push_back(q(d(rng), 1 + std::abs(d(rng)) % 5));
      m.push_back(q(d(rng), 1 + std::abs(d(rng)) % 5));
    }
    m[0] = 1;
    m[1] = -1;
    auto r = lp::minimize_max_affine(b, m);
    EXPECT_EQ(r.value, brute_min(b, m));
    // the returned lambda attains the value
    Rational at = b[0] + r.lambda * m[0];
    for (int i = 1; i < n; ++i) at = std::max<Rational>(at, b[i] + r.lambda * m[i]);
    EXPECT_EQ(at, r.value);
  }
}

TEST(Envelope, DoubleAgreesWithRational) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int k = 0; k < 200; ++k) {
    Vec<Rational> b, m;
    Vec<double> bd, md;
    for (int i = 0; i < 8; ++i) {
      b.push_back(q(d(rng), 7));
      m.push_back(q(d(rng), 3));
    }
    m[0] = 1;
    m[1] = -1;
    for (int i = 0; i < 8; ++i) {
      bd.push_back(b[i].get_d());
      md.push_back(m[i].get_d());
    }
    EXPECT_NEAR(lp::minimize_max_affine(bd, md).value, lp::minimize_max_affine(b, m).value.get_d(), 1e-12);
  }
}

TEST(Simplex, SmallExactProgram) {
  // max x + y  s.t. x + 2y <= 4, 3x + y <= 6, x, y >= 0  ->  (8/5, 6/5)
  lp::Problem<Rational> p(2);
  p.objective = {1, 1};
  p.add({1, 2}, lp::Sense::le, 4);
  p.add({3, 1}, lp::Sense::le, 6);
  auto s = lp::solve(p);
  ASSERT_EQ(s.status, lp::Status::optimal);
  EXPECT_EQ(s.objective, Rational(14, 5));
  EXPECT_EQ(s.values[0], Rational(8, 5));
  EXPECT_EQ(s.values[1], Rational(6, 5));
}
