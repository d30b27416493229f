#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bjortho/space.hpp"

namespace bjo {

struct SamplingOptions {
  std::size_t samples = 4096;  // sphere grid size
  std::size_t refine = 3;      // refinement rounds around the incumbent
  std::size_t factor = 16;     // step reduction per round
  std::uint64_t seed = 1;
};

struct PropertyVerdict {
  bool holds = true;
  /// false when a witness search found nothing but cannot certify the property
  bool conclusive = true;
  std::string method;  // exact, float, sampled, smooth
  std::optional<Vector> x;
  std::optional<Vector> y;
  /// f in J(x) with f(y) = 0 for failure witnesses
  std::optional<Vector> functional;
  std::string note;
};

struct SymmetryConstant {
  Scalar value;
  std::string kind;    // C or D
  std::string side;    // left, right, global
  std::string method;  // exact or sampled
  bool symmetric = false;
  std::size_t samples = 0;
  std::size_t refine = 0;
  std::size_t factor = 0;
  std::optional<Vector> x;
  std::optional<Vector> y;
};

struct RConstant {
  Scalar value;
  std::optional<Vector> u;
  std::optional<Vector> v;
  std::string method;
};

struct RxReport {
  RConstant r;
  PropertyVerdict p;
  bool premise = false;           // R(X) <= 1
  bool implication_holds = true;  // premise implies (P)
  bool converse_counterexample = false;
};

/// Every generator of J(y) takes the value 1 at x, or every one takes -1.
bool in_script_A(const Space& space, const Vector& x, const Vector& y);

PropertyVerdict local_property_p(const Space& space, const Vector& x);
PropertyVerdict property_p(const Space& space, const SamplingOptions& opts = {});
PropertyVerdict property_p1(const Space& space);
RConstant r_constant(const Space& space);

/// sup over y orthogonal to x (unit) of eps_b_star(y, x).
SymmetryConstant left_symmetry_constant(const Space& space, const Vector& x, const SamplingOptions& opts = {});
/// sup over unit y with y orthogonal to x of eps_b_star(x, y).
SymmetryConstant right_symmetry_constant(const Space& space, const Vector& x, const SamplingOptions& opts = {});

SymmetryConstant global_c_symmetry(const Space& space, const SamplingOptions& opts = {});
SymmetryConstant global_d_constant(const Space& space, const SamplingOptions& opts = {});

RxReport check_rx_implication(const Space& space);

}  // namespace bjo
