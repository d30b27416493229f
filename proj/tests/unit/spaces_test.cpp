#include <gtest/gtest.h>

#include <bjortho/bjortho.hpp>
#include <cmath>
#include <limits>
#include <set>

#include "../support/samplers.hpp"

using namespace bjo;
using bjo::testing::random_rational_vector;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

Vector v(std::string_view s) { return parse_vector(s); }

Space decagon() { return catalog_space("decagon"); }

std::set<std::string> as_set(const std::vector<Vector>& gens) {
  std::set<std::string> out;
  for (const auto& g : gens) out.insert(to_string(g));
  return out;
}

const std::vector<std::string> kExactCatalog = {"linf2", "linf3", "l1-2", "decagon", "fig9-hexagon", "fig6-prism"};

}  // namespace

TEST(Spaces, SquareFacets) {
  Space sq = Space::polyhedral({v("1,1"), v("-1,-1"), v("1,-1"), v("-1,1")});
  ASSERT_TRUE(sq.is_exact());
  std::set<std::string> facets;
  for (const auto& f : sq.exact_polytope().facets()) facets.insert(to_string(from_rationals(f.functional)));
  EXPECT_EQ(facets, (std::set<std::string>{"(1,0)", "(-1,0)", "(0,1)", "(0,-1)"}));
}

TEST(Spaces, DecagonFacetThroughRightEdge) {
  Space dec = decagon();
  const auto& poly = dec.exact_polytope();
  EXPECT_EQ(poly.facets().size(), 10u);
  bool found = false;
  for (const auto& f : poly.facets())
    if (to_string(from_rationals(f.functional)) == "(1/2,0)") found = true;
  EXPECT_TRUE(found);
}

TEST(Spaces, PrismBuilds) {
  Space prism = catalog_space("fig6-prism");
  EXPECT_EQ(prism.dim(), 3u);
  EXPECT_TRUE(prism.is_exact());
  EXPECT_EQ(extreme_points(prism).size(), 18u);
}

TEST(Spaces, RejectsDegenerateInput) {
  EXPECT_THROW(Space::polyhedral({v("1,0"), v("-1,0")}), PreconditionError);
  EXPECT_THROW(Space::polyhedral({v("1,1"), v("-1,-1"), v("1,-1")}), PreconditionError);  // not symmetric
  EXPECT_THROW(Space::polyhedral({v("1,1"), v("-1,-1"), v("1,2,3"), v("-1,-2,-3")}), PreconditionError);
  EXPECT_THROW(Space::regular_polygon(5), PreconditionError);
  EXPECT_THROW(Space::lp(0.5, 2), PreconditionError);
  EXPECT_THROW(catalog_space("nosuch"), PreconditionError);
}

TEST(Spaces, NormExamples) {
  Space linf2 = catalog_space("linf2");
  EXPECT_EQ(norm_eval(linf2, v("1,1/2")).str(), "1");
  EXPECT_EQ(norm_eval(decagon(), v("0,7/2")).str(), "1");
  EXPECT_EQ(norm_eval(decagon(), v("0,4")).str(), "8/7");
  Space mixed = catalog_space("l2linf");
  EXPECT_NEAR(norm_eval(mixed, v("3,4")).value(), 4.0, 1e-12);
  EXPECT_NEAR(norm_eval(mixed, v("-3,4")).value(), 5.0, 1e-12);
  EXPECT_NEAR(norm_eval(Space::lp(3, 2), v("1,1")).value(), std::cbrt(2.0), 1e-12);
}

TEST(Spaces, DualNormExamples) {
  Space linf2 = catalog_space("linf2");
  EXPECT_EQ(dual_norm_eval(linf2, v("1,1")).str(), "2");
  EXPECT_EQ(dual_norm_eval(linf2, v("1,0")).str(), "1");
  EXPECT_EQ(dual_norm_eval(decagon(), v("0,2/7")).str(), "1");
  EXPECT_NEAR(dual_norm_eval(Space::lp(3, 2), v("1,1")).value(), std::pow(2.0, 2.0 / 3.0), 1e-9);
}

TEST(Spaces, SupportSetExamples) {
  Space linf3 = catalog_space("linf3");
  EXPECT_EQ(as_set(support_set(linf3, v("1,1/2,3/10")).generators), (std::set<std::string>{"(1,0,0)"}));
  auto sq = support_set(catalog_space("linf2"), v("1,1")).generators;
  EXPECT_EQ(as_set(sq), (std::set<std::string>{"(1,0)", "(0,1)"}));
  auto smooth = support_set(catalog_space("l2linf"), v("0,1")).generators;
  ASSERT_EQ(smooth.size(), 1u);
  EXPECT_NEAR(smooth[0][0].value(), 0.0, 1e-9);
  EXPECT_NEAR(smooth[0][1].value(), 1.0, 1e-9);
}

TEST(Spaces, ClassifyExamples) {
  Space linf2 = catalog_space("linf2");
  EXPECT_EQ(classify_point(linf2, v("1,1")).position, LatticePosition::extreme_vertex);
  auto edge = classify_point(linf2, v("1,0"));
  EXPECT_EQ(edge.position, LatticePosition::facet_interior);
  EXPECT_TRUE(edge.smooth);
  // midpoint of the decagon edge (1,3)-(0,7/2)
  auto mid = classify_point(decagon(), v("1/2,13/4"));
  EXPECT_EQ(mid.position, LatticePosition::facet_interior);
  EXPECT_TRUE(mid.smooth);
  EXPECT_EQ(classify_point(catalog_space("linf3"), v("1,1,0")).position, LatticePosition::edge_interior);
  EXPECT_EQ(classify_point(catalog_space("l2-2"), v("3/5,4/5")).position, LatticePosition::smooth);
  EXPECT_THROW(classify_point(linf2, v("2,0")), PreconditionError);
}

TEST(Spaces, AdjacencyExamples) {
  Space sq = catalog_space("linf2");
  EXPECT_TRUE(adjacent_vertices(sq, v("1,1"), v("1,-1")));
  EXPECT_FALSE(adjacent_vertices(sq, v("1,1"), v("-1,-1")));
  EXPECT_TRUE(adjacent_vertices(decagon(), v("2,2"), v("2,-2")));
  EXPECT_FALSE(adjacent_vertices(decagon(), v("2,2"), v("0,7/2")));
  Space hex = Space::regular_polygon(6);
  auto ext = extreme_points(hex);
  ASSERT_EQ(ext.size(), 6u);
  EXPECT_FALSE(adjacent_vertices(hex, ext[0], ext[3]));
  EXPECT_TRUE(adjacent_vertices(hex, ext[0], ext[1]));
}

// every facet functional is 1 on its own vertices and < 1 elsewhere, exactly
TEST(SpacesProperty, IncidenceIsExact) {
  for (const auto& name : kExactCatalog) {
    Space s = catalog_space(name);
    for (const auto& f : s.exact_polytope().facets()) {
      Vector fv = from_rationals(f.functional);
      EXPECT_EQ(dual_norm_eval(s, fv).str(), "1") << name;
      for (const auto& x : extreme_points(s)) {
        Rational val = bjo::apply(fv, x).rational();
        EXPECT_LE(val, 1) << name;
      }
    }
  }
}

TEST(SpacesProperty, HomogeneitySymmetryTriangle) {
  std::mt19937_64 rng(11);
  for (const auto& name : kExactCatalog) {
    Space s = catalog_space(name);
    for (int i = 0; i < 1000; ++i) {
      Vector a = random_rational_vector(rng, s.dim());
      Vector b = random_rational_vector(rng, s.dim());
      Rational na = norm_eval(s, a).rational(), nb = norm_eval(s, b).rational();
      EXPECT_LE(norm_eval(s, bjo::add(a, b)).rational(), na + nb) << name;
      EXPECT_EQ(norm_eval(s, bjo::scaled(a, Scalar(-1))).rational(), na) << name;
      Rational alpha = bjo::testing::random_rational(rng);
      EXPECT_EQ(norm_eval(s, bjo::scaled(a, Scalar(alpha))).rational(), abs(alpha) * na) << name;
    }
  }
}

TEST(SpacesProperty, AnalyticNormsAreNorms) {
  std::mt19937_64 rng(12);
  for (const Space& s : {catalog_space("l2linf"), Space::lp(3, 3), Space::lp(1.5, 2), catalog_space("l2-3")}) {
    for (int i = 0; i < 500; ++i) {
      Vector a = from_doubles(bjo::testing::gaussian(rng, s.dim()));
      Vector b = from_doubles(bjo::testing::gaussian(rng, s.dim()));
      double na = norm_eval(s, a).value(), nb = norm_eval(s, b).value();
      EXPECT_LE(norm_eval(s, bjo::add(a, b)).value(), na + nb + 1e-12);
      EXPECT_NEAR(norm_eval(s, bjo::scaled(a, Scalar::approx(-2.5))).value(), 2.5 * na, 1e-9);
    }
  }
}

TEST(SpacesProperty, SupportGeneratorsNormX) {
  std::mt19937_64 rng(13);
  for (const auto& name : kExactCatalog) {
    Space s = catalog_space(name);
    for (int i = 0; i < 200; ++i) {
      Vector x = random_rational_vector(rng, s.dim());
      if (is_zero(x)) continue;
      Rational nx = norm_eval(s, x).rational();
      for (const auto& g : support_set(s, x).generators) {
        EXPECT_EQ(dual_norm_eval(s, g).rational(), 1) << name;
        EXPECT_EQ(bjo::apply(g, x).rational(), nx) << name;
      }
    }
  }
}

// oracle: one-sided difference quotients of the norm are max/min of g(d) over J(x)
TEST(SpacesProperty, SupportMatchesDirectionalDerivatives) {
  std::mt19937_64 rng(14);
  for (const Space& s : {catalog_space("l2linf"), Space::lp(3, 2), catalog_space("l2-2")}) {
    for (int i = 0; i < 100; ++i) {
      Vector x = bjo::testing::unit(s, from_doubles(bjo::testing::gaussian(rng, 2)));
      Vector d = from_doubles(bjo::testing::gaussian(rng, 2));
      double h = 1e-7;
      double fwd = (norm_eval(s, bjo::add(x, bjo::scaled(d, Scalar::approx(h)))).value() - 1.0) / h;
      double hi = -1e9;
      for (const auto& g : support_set(s, x).generators) hi = std::max(hi, bjo::apply(g, d).value());
      EXPECT_NEAR(fwd, hi, 1e-4);
    }
  }
}

TEST(SpacesProperty, FinitelyManySupportPatterns) {
  std::mt19937_64 rng(15);
  for (const auto& name : kExactCatalog) {
    Space s = catalog_space(name);
    const auto& poly = s.exact_polytope();
    std::set<std::set<std::string>> patterns;
    for (int i = 0; i < 100; ++i) {
      Vector x = random_rational_vector(rng, s.dim());
      if (!is_zero(x)) patterns.insert(as_set(support_set(s, x).generators));
    }
    std::size_t faces = poly.faces().size();
    EXPECT_LE(patterns.size(), faces) << name;
  }
}

TEST(SpacesProperty, RegularPolygonVerticesOnSphere) {
  for (std::size_t n = 4; n <= 16; n += 2) {
    Space s = Space::regular_polygon(n);
    auto ext = extreme_points(s);
    ASSERT_EQ(ext.size(), n);
    for (std::size_t j = 0; j < n; ++j) {
      EXPECT_NEAR(norm_eval(s, ext[j]).value(), 1.0, 1e-12);
      double ang = std::atan2(ext[j][1].value(), ext[j][0].value());
      double expect = (2.0 * (j + 1) - 1) * M_PI / n;
      EXPECT_NEAR(std::remainder(ang - expect, 2 * M_PI), 0.0, 1e-12);
    }
  }
}

TEST(SpaceIo, ParsesDescriptorsAndNamesBadFields) {
  using nlohmann::json;
  Space s = space_from_json(json::parse(R"({"kind":"lp","p":"inf","dim":3})"));
  EXPECT_TRUE(s.is_exact());
  EXPECT_EQ(s.dim(), 3u);
  Space c = space_from_json(json("decagon"));
  EXPECT_EQ(norm_eval(c, v("0,4")).str(), "8/7");
  Space f = space_from_json(json::parse(R"({"kind":"polyhedral","facets":[["1","0"],["0","1"],["-1","0"],["0","-1"]]})"));
  EXPECT_EQ(norm_eval(f, v("3,-7/2")).str(), "7/2");
  try {
    space_from_json(json::parse(R"({"kind":"polyhedral","vertices":[["1","0"],["0","q"]]})"));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("vertices[1][1]"), std::string::npos);
  }
  EXPECT_THROW(space_from_json(json::parse(R"({"kind":"blob"})")), PreconditionError);
}
