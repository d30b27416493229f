#include "bjortho/orthogonality.hpp"

#include <cmath>

#include "bjortho/error.hpp"
#include "ortho_impl.hpp"

namespace bjo {

using detail::check_dim;
using detail::conv;

namespace {

template <class O>
using NumOf = typename std::decay_t<O>::Num;

void require_nonzero(const Vector& v, const char* what) {
  if (is_zero(v)) throw PreconditionError(std::string(what) + " must be nonzero");
}

}  // namespace

OffsetMinimum minimize_offset(const Space& space, const Vector& x, const Vector& y) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_nonzero(y, "y");
  return detail::dispatch(space, detail::route(space, {&x, &y}), [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    auto m = o.min_offset(conv<Num>(x), conv<Num>(y));
    return OffsetMinimum{detail::wrap(m.lambda, 1e-12), detail::wrap(m.value, o.tol()),
                         detail::wrap(Num(-m.bracket), o.tol()), detail::wrap(m.bracket, o.tol())};
  });
}

Verdict is_bj_orthogonal(const Space& space, const Vector& x, const Vector& y) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_nonzero(x, "x");
  return detail::dispatch(space, detail::route(space, {&x, &y}), [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    auto xv = conv<Num>(x), yv = conv<Num>(y);
    auto gens = o.support(xv);
    Verdict v;
    if (is_zero(y)) {
      v.holds = true;
      v.certificate = detail::wrap_vec(gens.front(), o.tol());
      return v;
    }
    v.holds = detail::orthogonal(o, gens, yv);
    if (v.holds) v.certificate = detail::wrap_vec(detail::vanishing_functional(gens, yv, o.cmp()), o.tol());
    return v;
  });
}

namespace {

// sign of the extreme generator value: +1 for the max side, -1 for the min side
bool in_part(const Space& space, const Vector& x, const Vector& y, bool positive) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_nonzero(x, "x");
  if (is_zero(y)) return true;
  return detail::dispatch(space, detail::route(space, {&x, &y}), [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    auto yv = conv<Num>(y);
    auto r = detail::generator_range(o.support(conv<Num>(x)), yv);
    auto ny = o.norm(yv);
    return positive ? detail::value_sign(o.cmp(), r.hi, ny) >= 0 : detail::value_sign(o.cmp(), r.lo, ny) <= 0;
  });
}

}  // namespace

bool in_positive_part(const Space& space, const Vector& x, const Vector& y) { return in_part(space, x, y, true); }
bool in_negative_part(const Space& space, const Vector& x, const Vector& y) { return in_part(space, x, y, false); }

EpsilonStar eps_d_star(const Space& space, const Vector& x, const Vector& y) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  return detail::dispatch(space, detail::route(space, {&x, &y}), [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    auto xv = conv<Num>(x), yv = conv<Num>(y);
    auto m = o.min_offset(xv, yv);
    Num ratio = m.value / o.norm(xv);
    EpsilonStar e;
    e.exact = Cmp<Num>::exact;
    if constexpr (Cmp<Num>::exact) {
      e.value = sqrt(Scalar(Num(1) - ratio * ratio));
      e.exact = e.value.exact();
      if (!e.exact) e.value = Scalar::approx(e.value.value(), 1e-15);
    } else {
      double r = std::clamp(ratio, 0.0, 1.0);
      e.value = Scalar::approx(std::sqrt(1 - r * r), std::sqrt(2 * o.tol()));
    }
    // the offset point x + lambda* y realises the minimum
    e.certificate = detail::wrap_vec(axpy(m.lambda, yv, xv), o.tol());
    return e;
  });
}

EpsilonStar eps_b_star(const Space& space, const Vector& x, const Vector& y) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  return detail::dispatch(space, detail::route(space, {&x, &y}), [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    auto r = detail::eps_b(o, o.support(conv<Num>(x)), conv<Num>(y));
    EpsilonStar e;
    e.exact = Cmp<Num>::exact;
    e.value = detail::wrap(r.value, o.tol());
    e.certificate = detail::wrap_vec(r.functional, o.tol());
    return e;
  });
}

namespace {

// One-sided derivative of t -> ||x + t y|| at 0 from difference quotients.
double one_sided_derivative(const std::function<double(const Vec<double>&)>& norm, const Vec<double>& x,
                            const Vec<double>& y, double dir, bool piecewise_linear) {
  double nx = norm(x);
  auto q = [&](double t) { return (norm(axpy(dir * t, y, x)) - nx) / t; };
  if (piecewise_linear) {
    // quotients are constant once t is below the first breakpoint, up to
    // a rounding error of order eps / t
    double t = 1e-2, prev = q(t);
    for (int i = 0; i < 30; ++i) {
      t /= 2;
      double cur = q(t);
      if (std::abs(cur - prev) <= 1e-11 + 1e-14 / t) return dir * cur;
      prev = cur;
    }
    return dir * prev;
  }
  double t = 1e-5;
  return dir * (2 * q(t) - q(2 * t));
}

}  // namespace

EpsilonStar eps_b_star_segment_oracle(const Space& space, const Vector& x, const Vector& y) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  std::function<double(const Vec<double>&)> norm;
  bool pl = space.is_polyhedral();
  if (pl) norm = [&](const Vec<double>& v) { return space.float_polytope().norm(v); };
  else norm = [&](const Vec<double>& v) { return space.analytic().norm(v); };

  Vec<double> xv = to_doubles(x), yv = to_doubles(y);
  xv = scale(xv, 1 / norm(xv));
  yv = scale(yv, 1 / norm(yv));

  auto dist_to_line = [&](double v) { return norm(axpy(v, xv, yv)); };
  double m = golden_section(dist_to_line, -3, 3, 1e-13).min;
  if (m < 1e-12) throw PreconditionError("x and y are linearly dependent");
  const double s_max = 2 / m;

  // x is orthogonal to y - c x exactly for c in [D-, D+]
  double c_lo = one_sided_derivative(norm, xv, yv, -1, pl);
  double c_hi = one_sided_derivative(norm, xv, yv, 1, pl);
  if (c_lo > c_hi) std::swap(c_lo, c_hi);

  auto h = [&](double c) {
    Vec<double> w = axpy(-c, xv, yv);
    auto f = [&](double s) { return norm(sub(scale(w, s), yv)); };
    return golden_section(f, -s_max, s_max, 1e-13).min;
  };
  double best_c = c_lo, best = h(c_lo);
  if (c_hi - c_lo > 1e-15) {
    const int grid = 64;
    double step = (c_hi - c_lo) / grid;
    int best_i = 0;
    for (int i = 1; i <= grid; ++i) {
      double c = c_lo + i * step;
      double v = h(c);
      if (v < best) {
        best = v;
        best_c = c;
        best_i = i;
      }
    }
    double lo = c_lo + std::max(0, best_i - 1) * step, hi = c_lo + std::min(grid, best_i + 1) * step;
    auto g = golden_section(h, lo, hi, 1e-13);
    if (g.min < best) {
      best = g.min;
      best_c = g.argmin;
    }
  }
  EpsilonStar e;
  e.exact = false;
  e.value = Scalar::approx(std::min(1.0, best), 1e-6);
  e.certificate = from_doubles(axpy(-best_c, xv, yv), 1e-6);
  return e;
}

double d_stability_constants(double eps, double eps1, double eps2) {
  if (eps < 0 || eps >= 1 || eps1 < 0 || eps2 < 0) throw PreconditionError("constants must satisfy 0 <= eps < 1, eps1, eps2 >= 0");
  double delta_root = std::sqrt(1 - eps * eps) - eps1;
  if (!(delta_root > 0)) throw PreconditionError("sqrt(1-eps^2) - eps1 must be positive");
  double r = delta_root - 2 * eps2;
  if (!(r > 0)) throw PreconditionError("sqrt(1-delta^2) - 2 eps2 must be positive");
  return std::sqrt(1 - r * r);
}

}  // namespace bjo
