#include <gtest/gtest.h>

#include <bjortho/bjortho.hpp>
#include <cmath>

#include "../support/samplers.hpp"

using namespace bjo;
using bjo::testing::random_rational_vector;

namespace {

Vector v(std::string_view s) { return parse_vector(s); }

const std::vector<std::string> kExact = {"linf2", "linf3", "l1-2", "decagon", "fig9-hexagon", "fig6-prism"};
const std::vector<std::string> kPlanar = {"linf2", "l1-2", "decagon", "fig9-hexagon", "l2-2", "l2linf",
                                          "regular-polygon-6", "regular-polygon-12"};

// definitional oracle for x+ / x-: ||x + t y|| >= ||x|| on a grid of t with the given sign
bool sampled_part(const Space& s, const Vector& x, const Vector& y, int sign) {
  double nx = norm_eval(s, x).value();
  for (int k = 1; k <= 4000; ++k) {
    double t = sign * 1e-4 * k * (1 + k / 400.0);
    if (norm_eval(s, bjo::add(x, bjo::scaled(y, Scalar::approx(t)))).value() < nx - 1e-12) return false;
  }
  return true;
}

}  // namespace

TEST(Orthogonality, MinimizeOffsetExamples) {
  auto m = minimize_offset(catalog_space("linf2"), v("1,0"), v("1,1"));
  EXPECT_EQ(m.lambda_star.str(), "-1/2");
  EXPECT_EQ(m.min_value.str(), "1/2");
  for (const auto& name : {"decagon", "l2linf", "linf3"}) {
    Space s = catalog_space(name);
    Vector x = s.dim() == 2 ? v("1,3") : v("1,2,3");
    auto self = minimize_offset(s, x, x);
    EXPECT_NEAR(self.lambda_star.value(), -1.0, 1e-9) << name;
    EXPECT_NEAR(self.min_value.value(), 0.0, 1e-9) << name;
  }
  auto e = minimize_offset(catalog_space("l2-2"), v("1,0"), v("0,1"));
  EXPECT_NEAR(e.lambda_star.value(), 0.0, 1e-9);
  EXPECT_NEAR(e.min_value.value(), 1.0, 1e-9);
  // flat minimum: the point closest to zero is returned
  auto flat = minimize_offset(catalog_space("linf2"), v("1,1"), v("0,1"));
  EXPECT_EQ(flat.lambda_star.str(), "0");
  EXPECT_EQ(flat.min_value.str(), "1");
}

TEST(Orthogonality, CheckExamples) {
  EXPECT_TRUE(is_bj_orthogonal(catalog_space("linf3"), v("1,1/2,3/10"), v("0,1,-1")).holds);
  EXPECT_TRUE(is_bj_orthogonal(catalog_space("l2linf"), v("1,1"), v("0,1")).holds);
  EXPECT_FALSE(is_bj_orthogonal(catalog_space("l2-2"), v("1,0"), v("1,1")).holds);
  auto sq = is_bj_orthogonal(catalog_space("linf2"), v("1,1"), v("1,-1"));
  ASSERT_TRUE(sq.holds);
  ASSERT_TRUE(sq.certificate);
  EXPECT_EQ(to_string(*sq.certificate), "(1/2,1/2)");
  EXPECT_TRUE(is_bj_orthogonal(catalog_space("linf2"), v("1,1"), v("0,0")).holds);
  EXPECT_THROW(is_bj_orthogonal(catalog_space("linf2"), v("0,0"), v("1,0")), PreconditionError);
  EXPECT_THROW(is_bj_orthogonal(catalog_space("linf2"), v("1,0,0"), v("1,0")), PreconditionError);
}

TEST(Orthogonality, PartsExamples) {
  Space e = catalog_space("l2-2");
  EXPECT_TRUE(in_positive_part(e, v("1,0"), v("1,1")));
  EXPECT_FALSE(in_negative_part(e, v("1,0"), v("1,1")));
  EXPECT_TRUE(in_positive_part(e, v("1,0"), v("0,0")));
  EXPECT_TRUE(in_negative_part(e, v("1,0"), v("0,0")));
}

TEST(Orthogonality, EpsilonExamples) {
  Space linf2 = catalog_space("linf2");
  auto d = eps_d_star(linf2, v("1,0"), v("1,1"));
  EXPECT_NEAR(d.value.value(), std::sqrt(3.0) / 2, 1e-12);
  EXPECT_EQ(eps_d_star(linf2, v("1,1"), v("1,-1")).value.str(), "0");
  double h = std::sqrt(0.5);
  auto hd = eps_d_star(catalog_space("l2-2"), v("1,0"), from_doubles({h, h}));
  EXPECT_NEAR(hd.value.value(), h, 1e-9);

  Space linf3 = catalog_space("linf3");
  EXPECT_EQ(eps_b_star(linf3, v("0,1,0"), v("1,1/2,3/10")).value.str(), "1/2");
  EXPECT_EQ(eps_b_star(linf3, v("1,1/2,3/10"), v("1,-1,3/10")).value.str(), "1");
  EXPECT_EQ(eps_b_star(catalog_space("fig9-hexagon"), v("-4/3,1"), v("0,2")).value.str(), "1");
  EXPECT_EQ(eps_b_star(catalog_space("fig9-hexagon"), v("0,2"), v("-4/3,1")).value.str(), "0");
}

TEST(Orthogonality, SegmentOracleExamples) {
  EXPECT_NEAR(eps_b_star_segment_oracle(catalog_space("linf2"), v("1,1"), v("1,-1")).value.value(), 0.0, 1e-9);
  Space e = catalog_space("l2-2");
  for (double th : {0.1, 0.7, 1.3, 2.0, 2.9}) {
    Vector y = from_doubles({std::cos(th), std::sin(th)});
    EXPECT_NEAR(eps_b_star_segment_oracle(e, v("1,0"), y).value.value(), std::abs(std::cos(th)), 1e-6) << th;
  }
}

TEST(Orthogonality, StabilityConstants) {
  EXPECT_DOUBLE_EQ(d_stability_constants(0, 0, 0), 0.0);
  EXPECT_NEAR(d_stability_constants(0, 0.1, 0.1), std::sqrt(0.51), 1e-12);
  EXPECT_THROW(d_stability_constants(0.5, 0.3, 0.3), PreconditionError);
}

TEST(OrthogonalityProperty, CheckAgreesWithOffsetMinimum) {
  std::mt19937_64 rng(21);
  for (const auto& name : kExact) {
    Space s = catalog_space(name);
    int orth = 0;
    for (int i = 0; i < 500; ++i) {
      Vector x = random_rational_vector(rng, s.dim());
      Vector y = random_rational_vector(rng, s.dim());
      if (is_zero(x)) continue;
      if (i % 3 == 0) {
        // steer y into x^perp through a support functional
        auto g = support_set(s, x).generators.front();
        Scalar gy = bjo::apply(g, y), gx = bjo::apply(g, x);
        y = bjo::add(y, bjo::scaled(x, -(gy / gx)));
        if (is_zero(y)) continue;
      }
      bool check = is_bj_orthogonal(s, x, y).holds;
      bool offset = minimize_offset(s, x, y).min_value.rational() == norm_eval(s, x).rational();
      EXPECT_EQ(check, offset) << name << " " << to_string(x) << " " << to_string(y);
      orth += check;
    }
    EXPECT_GT(orth, 100) << name;
  }
}

TEST(OrthogonalityProperty, ScaleInvariance) {
  std::mt19937_64 rng(22);
  for (const auto& name : kExact) {
    Space s = catalog_space(name);
    for (int i = 0; i < 100; ++i) {
      Vector x = random_rational_vector(rng, s.dim());
      Vector y = random_rational_vector(rng, s.dim());
      if (is_zero(x) || is_zero(y)) continue;
      Rational a = bjo::testing::random_rational(rng), b = bjo::testing::random_rational(rng);
      if (a == 0 || b == 0) continue;
      Vector ax = bjo::scaled(x, Scalar(a)), by = bjo::scaled(y, Scalar(b));
      EXPECT_EQ(is_bj_orthogonal(s, x, y).holds, is_bj_orthogonal(s, ax, by).holds);
      EXPECT_EQ(eps_d_star(s, x, y).value.str(), eps_d_star(s, ax, by).value.str()) << name;
      EXPECT_EQ(eps_b_star(s, x, y).value.str(), eps_b_star(s, ax, by).value.str()) << name;
    }
  }
}

TEST(OrthogonalityProperty, PerpIsIntersectionOfParts) {
  std::mt19937_64 rng(23);
  for (const auto& name : kPlanar) {
    Space s = catalog_space(name);
    for (int i = 0; i < 150; ++i) {
      Vector x = bjo::testing::random_vector(s, rng);
      Vector y = bjo::testing::random_vector(s, rng);
      if (i % 2 == 0) {
        auto g = support_set(s, x).generators.back();
        y = bjo::add(y, bjo::scaled(x, -(bjo::apply(g, y) / bjo::apply(g, x))));
        if (is_zero(y)) continue;
      }
      bool plus = in_positive_part(s, x, y), minus = in_negative_part(s, x, y);
      EXPECT_EQ(is_bj_orthogonal(s, x, y).holds, plus && minus) << name;
      if (i < 40) {
        EXPECT_EQ(plus, sampled_part(s, x, y, 1)) << name << to_string(x) << to_string(y);
        EXPECT_EQ(minus, sampled_part(s, x, y, -1)) << name << to_string(x) << to_string(y);
      }
    }
  }
}

TEST(OrthogonalityProperty, DragomirEpsilonBelowOne) {
  std::mt19937_64 rng(24);
  for (const auto& name : kPlanar) {
    Space s = catalog_space(name);
    for (int i = 0; i < 500; ++i) {
      Vector x = bjo::testing::random_vector(s, rng), y = bjo::testing::random_vector(s, rng);
      if (!bjo::testing::linearly_independent(x, y)) continue;
      EXPECT_LT(eps_d_star(s, x, y).value.value(), 1.0) << name;
    }
  }
}

TEST(OrthogonalityProperty, HilbertEpsilonsAreInnerProducts) {
  std::mt19937_64 rng(25);
  Space e = catalog_space("l2-2");
  for (int i = 0; i < 200; ++i) {
    Vector x = bjo::testing::unit(e, from_doubles(bjo::testing::gaussian(rng, 2)));
    Vector y = bjo::testing::unit(e, from_doubles(bjo::testing::gaussian(rng, 2)));
    double ip = std::abs(bjo::apply(x, y).value());
    if (ip > 1 - 1e-6) continue;
    EXPECT_NEAR(eps_d_star(e, x, y).value.value(), ip, 1e-9);
    EXPECT_NEAR(eps_b_star(e, x, y).value.value(), ip, 1e-9);
  }
}

TEST(OrthogonalityProperty, RightPerturbationBound) {
  std::mt19937_64 rng(26);
  for (const auto& name : {"linf2", "decagon", "l2linf", "regular-polygon-8", "linf3"}) {
    Space s = catalog_space(name);
    for (int i = 0; i < 100; ++i) {
      Vector x = bjo::testing::unit(s, bjo::testing::random_vector(s, rng));
      Vector y = bjo::testing::unit(s, bjo::testing::random_vector(s, rng));
      double eps = eps_b_star(s, x, y).value.value();
      double delta = 0.01 + 0.2 * (i % 10) / 10.0;
      Vector z = bjo::testing::perturb_on_sphere(s, y, delta, rng);
      double dist = norm_eval(s, bjo::add(z, bjo::scaled(y, Scalar(-1)))).value();
      ASSERT_LE(dist, delta + 1e-12);
      EXPECT_LE(eps_b_star(s, x, z).value.value(), eps + delta + 1e-9) << name;
    }
  }
}

TEST(OrthogonalityProperty, NeighbourhoodBound) {
  std::mt19937_64 rng(27);
  for (const auto& name : {"linf2", "decagon", "l2linf", "l2-2"}) {
    Space s = catalog_space(name);
    for (int i = 0; i < 100; ++i) {
      Vector x = bjo::testing::unit(s, bjo::testing::random_vector(s, rng));
      Vector y = bjo::testing::unit(s, bjo::testing::random_vector(s, rng));
      double eps = eps_d_star(s, x, y).value.value();
      double e1 = 0.02, e2 = 0.03;
      if (std::sqrt(1 - eps * eps) - e1 - 2 * e2 <= 0) continue;
      double e3 = d_stability_constants(eps, e1, e2);
      Vector z = bjo::testing::perturb_on_sphere(s, x, e1, rng);
      Vector w = bjo::testing::perturb_on_sphere(s, y, e2, rng);
      EXPECT_LE(eps_d_star(s, z, w).value.value(), e3 + 1e-9) << name;
    }
  }
}

TEST(OrthogonalityProperty, LeftInstabilityExample) {
  Space s = catalog_space("linf2");
  Vector x = v("1,1"), y = v("-1,-1/2");
  EXPECT_LE(eps_b_star(s, x, y).value.rational(), Rational(1, 2));
  for (const char* d : {"1/100", "1/10", "1/4", "49/100"}) {
    Rational delta = parse_rational(d);
    Vector z = {Scalar(1), Scalar(Rational(1) - delta / 2)};
    EXPECT_EQ(norm_eval(s, bjo::add(z, bjo::scaled(x, Scalar(-1)))).rational(), delta / 2);
    EXPECT_EQ(eps_b_star(s, z, y).value.str(), "1") << d;
  }
}

TEST(OrthogonalityProperty, SegmentOracleMatchesFunctionalPath) {
  std::mt19937_64 rng(28);
  for (const auto& name : {"linf2", "decagon", "fig9-hexagon", "l2linf", "regular-polygon-10"}) {
    Space s = catalog_space(name);
    for (int i = 0; i < 40; ++i) {
      Vector x = bjo::testing::random_vector(s, rng), y = bjo::testing::random_vector(s, rng);
      if (!bjo::testing::linearly_independent(x, y)) continue;
      double a = eps_b_star(s, x, y).value.value();
      double b = eps_b_star_segment_oracle(s, x, y).value.value();
      EXPECT_NEAR(a, b, 1e-6) << name << to_string(x) << to_string(y);
    }
  }
}
