#pragma once

// Routing of public Scalar/Vector calls onto one of three numeric back ends:
// exact rational polytopes, float64 polytopes and closed-form analytic norms.

#include <cmath>
#include <initializer_list>
#include <string>
#include <type_traits>

#include "bjortho/error.hpp"
#include "bjortho/linprog.hpp"
#include "bjortho/space.hpp"

namespace bjo::detail {

enum class Route { exact, floating, analytic };

inline void check_dim(const Space& s, const Vector& v, const char* field) {
  if (v.size() != s.dim())
    throw PreconditionError(std::string("dimension mismatch in ") + field + ": expected " + std::to_string(s.dim()) +
                            ", got " + std::to_string(v.size()));
}

inline Route route(const Space& s, std::initializer_list<const Vector*> inputs) {
  if (!s.is_polyhedral()) return Route::analytic;
  if (!s.is_exact()) return Route::floating;
  for (const Vector* v : inputs)
    if (!all_exact(*v)) return Route::floating;
  return Route::exact;
}

template <class Num>
Vec<Num> conv(const Vector& v);
template <>
inline Vec<Rational> conv<Rational>(const Vector& v) {
  return to_rationals(v);
}
template <>
inline Vec<double> conv<double>(const Vector& v) {
  return to_doubles(v);
}

inline Scalar wrap(const Rational& q, double) { return Scalar(q); }
inline Scalar wrap(double v, double tol) { return Scalar::approx(v, tol); }

template <class Num>
Vector wrap_vec(const Vec<Num>& v, double tol) {
  Vector out;
  for (const auto& c : v) out.push_back(wrap(c, tol));
  return out;
}

template <class Num>
struct OffsetMin {
  Num lambda;
  Num value;
  Num bracket;  // the search interval is [-bracket, bracket]
};

template <class N>
class PolyOracle {
 public:
  using Num = N;
  explicit PolyOracle(const Polytope<Num>& p, double tol) : p_(&p), tol_(tol) {}

  const Cmp<Num>& cmp() const { return p_->cmp(); }
  double tol() const { return tol_; }
  const Polytope<Num>& polytope() const { return *p_; }
  Num norm(const Vec<Num>& v) const { return p_->norm(v); }
  Num dual_norm(const Vec<Num>& f) const { return p_->dual_norm(f); }

  Mat<Num> support(const Vec<Num>& x) const {
    Mat<Num> out;
    for (auto k : p_->active_facets(x)) out.push_back(p_->facets()[k].functional);
    return out;
  }

  OffsetMin<Num> min_offset(const Vec<Num>& x, const Vec<Num>& y) const {
    Vec<Num> offsets, slopes;
    for (const auto& f : p_->facets()) {
      offsets.push_back(dot(f.functional, x));
      slopes.push_back(dot(f.functional, y));
    }
    auto env = lp::minimize_max_affine(offsets, slopes);
    Num value = env.value;
    if constexpr (!Cmp<Num>::exact) value = std::max(0.0, value);
    return {env.lambda, value, Num(2) * norm(x) / norm(y)};
  }

 private:
  const Polytope<Num>* p_;
  double tol_;
};

class AnalyticOracle {
 public:
  using Num = double;
  AnalyticOracle(const AnalyticNorm& n, double tol) : n_(&n), cmp_{tol} {}

  const Cmp<double>& cmp() const { return cmp_; }
  double tol() const { return cmp_.tolerance; }
  const AnalyticNorm& analytic() const { return *n_; }
  double norm(const Vec<double>& v) const { return n_->norm(v); }
  double dual_norm(const Vec<double>& f) const { return n_->dual_norm(f); }
  Mat<double> support(const Vec<double>& x) const { return n_->support(x, cmp_.tolerance); }

  OffsetMin<double> min_offset(const Vec<double>& x, const Vec<double>& y) const {
    double bracket = 2 * norm(x) / norm(y);
    auto phi = [&](double l) { return norm(axpy(l, y, x)); };
    auto g = golden_section(phi, -bracket, bracket, 1e-12);
    double slack = 1e-13 * std::max(1.0, norm(x));
    double lambda = smallest_abs_minimizer(phi, g.argmin, g.min, -bracket, bracket, slack);
    return {lambda, std::min(g.min, phi(lambda)), bracket};
  }

 private:
  const AnalyticNorm* n_;
  Cmp<double> cmp_;
};

/// Calls fn with the oracle for the chosen route.
template <class Fn>
decltype(auto) dispatch(const Space& s, Route r, Fn&& fn) {
  switch (r) {
    case Route::exact:
      return fn(PolyOracle<Rational>(s.exact_polytope(), s.tolerance()));
    case Route::floating:
      return fn(PolyOracle<double>(s.float_polytope(), s.tolerance()));
    case Route::analytic:
    default:
      return fn(AnalyticOracle(s.analytic(), s.tolerance()));
  }
}

template <class Oracle>
inline constexpr bool is_exact_oracle = Cmp<typename Oracle::Num>::exact;

}  // namespace bjo::detail
