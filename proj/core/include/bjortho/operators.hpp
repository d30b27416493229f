#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bjortho/orthogonality.hpp"
#include "bjortho/symmetry.hpp"

namespace bjo {

/// Matrix of a linear map X -> Y; rows index the codomain.
class LinearMap {
 public:
  LinearMap(std::vector<Vector> rows, Space domain, Space codomain);

  const std::vector<Vector>& rows() const { return rows_; }
  const Space& domain() const { return domain_; }
  const Space& codomain() const { return codomain_; }
  bool exact() const;

  Vector apply(const Vector& x) const;
  LinearMap scaled(const Scalar& s) const;
  /// this + s * other
  LinearMap plus(const Scalar& s, const LinearMap& other) const;

 private:
  std::vector<Vector> rows_;
  Space domain_;
  Space codomain_;
};

struct OperatorNorm {
  Scalar value;
  /// Maximising extreme points (polyhedral domain) or sampled maximisers.
  std::vector<Vector> m_t;
  std::string method;  // exact, float, svd, sampled
};

struct OperatorOrthoVerdict {
  bool holds = false;
  Scalar norm_a;
  Scalar min_value;   // min over lambda of ||A + lambda T||
  Scalar lambda_star;
  std::string method;
};

struct OrthogonalPair {
  LinearMap b;
  LinearMap t;
  Scalar lambda_star;
};

struct SupInfEpsilon {
  EpsilonStar epsilon;
  Scalar sup_inf;  // sqrt(1 - eps^2), a lower bound on the true supremum
  std::optional<Vector> argmax;
  bool script_a_nonempty = false;
  std::size_t samples = 0;
  std::size_t refine = 0;
};

struct DragomirReport {
  bool certified = false;
  bool condition_a = false;
  bool condition_b = false;
  std::optional<Vector> witness_a;  // x in M_T with Ax in (Tx)+
  std::optional<Vector> witness_b;  // y in M_T with Ay in (Ty)-
  std::size_t grid = 256;
  double threshold = 0;  // sqrt(1 - eps^2)
};

OperatorNorm operator_norm(const LinearMap& t, const SamplingOptions& opts = {});

/// A orthogonal to T: min over lambda of ||A + lambda T|| equals ||A||.
OperatorOrthoVerdict op_is_bj_orthogonal(const LinearMap& a, const LinearMap& t, const SamplingOptions& opts = {});

/// B = A + lambda* T with B orthogonal to T, re-verified before returning.
OrthogonalPair make_orthogonal_pair(const LinearMap& seed_a, const LinearMap& seed_t, const SamplingOptions& opts = {});

/// sqrt(1-eps^2) = sup over x with Tx not in span{Ax} of inf_lambda ||Tx + lambda Ax||,
/// with T and A first scaled to norm one.
SupInfEpsilon sup_inf_epsilon(const LinearMap& t, const LinearMap& a, const SamplingOptions& opts = {});

DragomirReport verify_dragomir_conditions(const LinearMap& t, const LinearMap& a, double eps,
                                          const SamplingOptions& opts = {});

}  // namespace bjo
