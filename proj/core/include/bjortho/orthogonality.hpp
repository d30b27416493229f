#pragma once

#include <optional>

#include "bjortho/space.hpp"

namespace bjo {

/// Minimum of phi(lambda) = ||x + lambda y|| over [-bracket, bracket].
struct OffsetMinimum {
  Scalar lambda_star;
  Scalar min_value;
  Scalar bracket_lo;
  Scalar bracket_hi;
};

struct Verdict {
  bool holds = false;
  /// For orthogonality: a functional f in J(x) with f(y) = 0.
  std::optional<Vector> certificate;
};

/// Minimal epsilon in [0,1]; 1 means no epsilon < 1 works.
struct EpsilonStar {
  Scalar value;
  bool attained = true;
  bool exact = false;
  std::optional<Vector> certificate;
};

OffsetMinimum minimize_offset(const Space& space, const Vector& x, const Vector& y);

/// James criterion on the generators of J(x).
Verdict is_bj_orthogonal(const Space& space, const Vector& x, const Vector& y);

bool in_positive_part(const Space& space, const Vector& x, const Vector& y);
bool in_negative_part(const Space& space, const Vector& x, const Vector& y);

/// sqrt(1 - eps^2) = min_lambda ||x + lambda y|| / ||x||.
EpsilonStar eps_d_star(const Space& space, const Vector& x, const Vector& y);

/// min over f in J(x) of |f(y)| / ||y||.
EpsilonStar eps_b_star(const Space& space, const Vector& x, const Vector& y);

/// Independent estimate of eps_b_star: the distance from y to the set of z in
/// span{x, y} with x orthogonal to z, relative to ||y||. Float search.
EpsilonStar eps_b_star_segment_oracle(const Space& space, const Vector& x, const Vector& y);

/// Neighbourhood constant: sqrt(1-eps3^2) = sqrt(1-eps^2) - eps1 - 2 eps2.
double d_stability_constants(double eps, double eps1, double eps2);

}  // namespace bjo
