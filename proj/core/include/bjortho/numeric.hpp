#pragma once

// Number-type policies shared by the exact (Rational) and float (double)
// code paths.

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "bjortho/scalar.hpp"

namespace bjo {

template <class Num>
using Vec = std::vector<Num>;

template <class Num>
using Mat = std::vector<Vec<Num>>;

template <class Num>
struct Cmp;

/// Exact comparisons.
template <>
struct Cmp<Rational> {
  static constexpr bool exact = true;
  int sign(const Rational& a) const { return sgn(a); }
  bool eq(const Rational& a, const Rational& b) const { return a == b; }
  bool lt(const Rational& a, const Rational& b) const { return a < b; }
  bool le(const Rational& a, const Rational& b) const { return a <= b; }
  double tol() const { return 0.0; }
};

/// Comparisons with an absolute tolerance.
template <>
struct Cmp<double> {
  static constexpr bool exact = false;
  double tolerance = kDefaultTolerance;
  int sign(double a) const { return a > tolerance ? 1 : (a < -tolerance ? -1 : 0); }
  bool eq(double a, double b) const { return std::abs(a - b) <= tolerance; }
  bool lt(double a, double b) const { return a < b - tolerance; }
  bool le(double a, double b) const { return a <= b + tolerance; }
  double tol() const { return tolerance; }
};

template <class Num>
Num dot(const Vec<Num>& a, const Vec<Num>& b) {
  Num acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

template <class Num>
Vec<Num> axpy(const std::type_identity_t<Num>& alpha, const Vec<Num>& x, const Vec<Num>& y) {
  Vec<Num> out(y);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += alpha * x[i];
  return out;
}

template <class Num>
Vec<Num> scale(const Vec<Num>& x, const std::type_identity_t<Num>& alpha) {
  Vec<Num> out(x);
  for (auto& c : out) c *= alpha;
  return out;
}

template <class Num>
Vec<Num> negate(const Vec<Num>& x) {
  Vec<Num> out(x);
  for (auto& c : out) c = -c;
  return out;
}

template <class Num>
Vec<Num> sub(const Vec<Num>& a, const Vec<Num>& b) {
  Vec<Num> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

template <class Num>
Vec<Num> add(const Vec<Num>& a, const Vec<Num>& b) {
  Vec<Num> out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

template <class Num>
bool vec_eq(const Vec<Num>& a, const Vec<Num>& b, const Cmp<Num>& cmp) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!cmp.eq(a[i], b[i])) return false;
  return true;
}

template <class Num>
bool vec_is_zero(const Vec<Num>& a, const Cmp<Num>& cmp) {
  for (const auto& c : a)
    if (cmp.sign(c) != 0) return false;
  return true;
}

inline Rational num_abs(const Rational& a) { return abs(a); }
inline double num_abs(double a) { return std::abs(a); }

inline double num_to_double(const Rational& a) { return a.get_d(); }
inline double num_to_double(double a) { return a; }

template <class Num>
Num num_from_rational(const Rational& q);
template <>
inline Rational num_from_rational<Rational>(const Rational& q) { return q; }
template <>
inline double num_from_rational<double>(const Rational& q) { return q.get_d(); }

/// Solves the square system M z = rhs. Returns nullopt when M is singular
/// (for doubles: when a pivot falls below the comparison tolerance).
template <class Num>
std::optional<Vec<Num>> solve_linear(Mat<Num> m, Vec<Num> rhs, const Cmp<Num>& cmp) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if constexpr (Cmp<Num>::exact) {
      for (std::size_t r = col; r < n; ++r)
        if (sgn(m[r][col]) != 0) {
          pivot = r;
          break;
        }
    } else {
      double best = 0;
      for (std::size_t r = col; r < n; ++r)
        if (std::abs(m[r][col]) > best) {
          best = std::abs(m[r][col]);
          pivot = r;
        }
      if (best <= cmp.tol() * 1e-3) pivot = n;
    }
    if (pivot == n) return std::nullopt;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      if constexpr (Cmp<Num>::exact) {
        if (sgn(m[r][col]) == 0) continue;
      }
      Num factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
      rhs[r] -= factor * rhs[col];
    }
  }
  Vec<Num> z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = rhs[i] / m[i][i];
  return z;
}

/// Rank of a list of row vectors.
template <class Num>
std::size_t rank(Mat<Num> rows, const Cmp<Num>& cmp) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    double best = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      if constexpr (Cmp<Num>::exact) {
        if (sgn(rows[i][c]) != 0) {
          pivot = i;
          break;
        }
      } else if (std::abs(rows[i][c]) > best) {
        best = std::abs(rows[i][c]);
        pivot = i;
      }
    }
    if constexpr (!Cmp<Num>::exact) {
      if (best <= cmp.tol()) pivot = rows.size();
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      Num factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

struct GoldenResult {
  double argmin;
  double min;
};

/// Golden-section search for a convex function on [lo, hi]. The endpoints
/// are evaluated too so that minima on the boundary are not lost.
inline GoldenResult golden_section(const std::function<double(double)>& f, double lo, double hi,
                                   double tol = 1e-12, int max_iter = 300) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  GoldenResult best{(a + b) / 2, f((a + b) / 2)};
  for (double t : {lo, hi, c, d}) {
    double v = f(t);
    if (v < best.min) best = {t, v};
  }
  return best;
}

/// For a convex f minimised at `argmin` with value `min`, returns the point of
/// smallest absolute value in {t in [lo, hi] : f(t) <= min + slack}.
inline double smallest_abs_minimizer(const std::function<double(double)>& f, double argmin, double min,
                                     double lo, double hi, double slack) {
  auto in_set = [&](double t) { return f(t) <= min + slack; };
  if (lo <= 0 && 0 <= hi && in_set(0.0)) return 0.0;
  // the sublevel set is an interval containing argmin; bisect toward zero
  double inside = argmin;
  double outside = argmin > 0 ? std::max(lo, 0.0) : std::min(hi, 0.0);
  if (in_set(outside)) return outside;
  for (int it = 0; it < 200 && std::abs(inside - outside) > 1e-15; ++it) {
    double mid = (inside + outside) / 2;
    if (in_set(mid))
      inside = mid;
    else
      outside = mid;
  }
  return inside;
}

}  // namespace bjo
