#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "bjortho/numeric.hpp"

namespace bjo {

/// Closed-form norms that are not polyhedral: l_p for 1 < p < inf, and the
/// planar norm that is max(|a|,|b|) when ab >= 0 and sqrt(a^2+b^2) otherwise.
class AnalyticNorm {
 public:
  enum class Kind { lp, l2linf };

  static AnalyticNorm lp(double p, std::size_t dim);
  static AnalyticNorm l2linf();

  Kind kind() const { return kind_; }
  double p() const { return p_; }
  std::size_t dim() const { return dim_; }

  double norm(const Vec<double>& v) const;
  double dual_norm(const Vec<double>& f) const;

  /// Generators of J(x). One functional at smooth points; the corner rays of
  /// l2linf return the two one-sided functionals.
  Mat<double> support(const Vec<double>& x, double tol) const;

  /// Points x of the unit sphere with g(x) = ||g||*. A single point for
  /// strictly convex norms, the two ends of a flat segment otherwise.
  Mat<double> exposed_face(const Vec<double>& g, double tol) const;

  bool strictly_convex() const { return kind_ == Kind::lp; }

  /// Unit vectors where the sphere changes character (corners, arc ends).
  Mat<double> special_points() const;

  /// Maximal segments contained in the unit sphere.
  std::vector<std::pair<Vec<double>, Vec<double>>> flat_segments() const;

 private:
  AnalyticNorm() = default;
  Kind kind_ = Kind::lp;
  double p_ = 2;
  std::size_t dim_ = 2;
};

}  // namespace bjo
