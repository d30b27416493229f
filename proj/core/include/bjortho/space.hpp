#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bjortho/analytic.hpp"
#include "bjortho/polytope.hpp"
#include "bjortho/vector.hpp"

namespace bjo {

enum class SpaceKind { polyhedral, lp, euclidean, l2linf, regular_polygon };

std::string to_string(SpaceKind kind);

/// How a space was specified; echoed into reports.
struct SpaceDescriptor {
  std::string kind;  // polyhedral, lp, euclidean, l2linf, regular_polygon, catalog
  std::string name;  // catalog name, empty otherwise
  double p = 0;      // lp exponent (inf for the max norm)
  std::size_t n = 0; // regular polygon vertex count
};

/// A norm on R^d. Immutable after construction and cheap to copy.
///
/// Polyhedral spaces with rational vertices keep an exact polytope alongside
/// its float64 image; regular polygons only have the float image.
class Space {
 public:
  static Space polyhedral(const std::vector<Vector>& vertices, double tol = kDefaultTolerance);
  static Space polyhedral_from_facets(const std::vector<Vector>& functionals, double tol = kDefaultTolerance);
  /// p may be 1 or infinity (polyhedral) or any value in between.
  static Space lp(double p, std::size_t dim);
  static Space l2linf();
  /// Regular polygon with n vertices (n even, n >= 4) at angles (2j-1)pi/n.
  static Space regular_polygon(std::size_t n);

  SpaceKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  double tolerance() const { return tol_; }
  bool is_polyhedral() const { return float_poly_ != nullptr; }
  bool is_exact() const { return exact_poly_ != nullptr; }

  const Polytope<Rational>& exact_polytope() const;
  const Polytope<double>& float_polytope() const;
  const AnalyticNorm& analytic() const;

  const SpaceDescriptor& descriptor() const { return desc_; }
  Space with_descriptor(SpaceDescriptor d) const;
  Space with_tolerance(double tol) const;

  /// Human-readable label such as "catalog:decagon" or "lp(3), dim 2".
  std::string label() const;

 private:
  Space() = default;
  SpaceKind kind_ = SpaceKind::polyhedral;
  std::size_t dim_ = 0;
  double tol_ = kDefaultTolerance;
  std::shared_ptr<const Polytope<Rational>> exact_poly_;
  std::shared_ptr<const Polytope<double>> float_poly_;
  std::shared_ptr<const AnalyticNorm> analytic_;
  SpaceDescriptor desc_;
};

/// Generators of J(x): every generator f has f(x) = ||x|| and ||f||* = 1.
struct SupportSet {
  Vector base;
  std::vector<Vector> generators;
};

enum class LatticePosition { extreme_vertex, edge_interior, facet_interior, face_interior, smooth, nonsmooth };

std::string to_string(LatticePosition pos);

struct PointClass {
  LatticePosition position;
  std::size_t face_dim = 0;  // dimension of the carrier face (polyhedral only)
  bool smooth = false;
  std::size_t generator_count = 0;
};

Scalar norm_eval(const Space& space, const Vector& v);
Scalar dual_norm_eval(const Space& space, const Vector& f);
SupportSet support_set(const Space& space, const Vector& x);
/// x must be a unit vector.
PointClass classify_point(const Space& space, const Vector& x);
/// u, v must be extreme points; true iff the segment uv lies in the unit sphere.
bool adjacent_vertices(const Space& space, const Vector& u, const Vector& v);

/// Extreme points of the unit ball (polyhedral spaces), in storage order.
std::vector<Vector> extreme_points(const Space& space);

}  // namespace bjo
