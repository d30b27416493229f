#pragma once

// Orthogonality primitives on raw number vectors, shared by the public
// orthogonality, symmetry and operator code.

#include <algorithm>
#include <optional>

#include "kernel.hpp"

namespace bjo::detail {

template <class Num>
struct GeneratorRange {
  Num lo, hi;
  std::size_t ilo = 0, ihi = 0;
};

template <class Num>
GeneratorRange<Num> generator_range(const Mat<Num>& gens, const Vec<Num>& y) {
  GeneratorRange<Num> r{dot(gens[0], y), dot(gens[0], y), 0, 0};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    Num v = dot(gens[i], y);
    if (v < r.lo) {
      r.lo = v;
      r.ilo = i;
    }
    if (v > r.hi) {
      r.hi = v;
      r.ihi = i;
    }
  }
  return r;
}

/// Sign of a generator value at y, judged relative to the size of y.
template <class Num>
int value_sign(const Cmp<Num>& cmp, const Num& v, const Num& scale) {
  if constexpr (Cmp<Num>::exact) {
    (void)scale;
    return cmp.sign(v);
  } else {
    return cmp.sign(v / std::max(1.0, scale));
  }
}

/// min_g g(y) <= 0 <= max_g g(y) over the generators of J(x).
template <class O>
bool orthogonal(const O& o, const Mat<typename O::Num>& gens, const Vec<typename O::Num>& y) {
  auto r = generator_range(gens, y);
  auto ny = o.norm(y);
  return value_sign(o.cmp(), r.lo, ny) <= 0 && value_sign(o.cmp(), r.hi, ny) >= 0;
}

template <class O>
bool orthogonal(const O& o, const Vec<typename O::Num>& x, const Vec<typename O::Num>& y) {
  return orthogonal(o, o.support(x), y);
}

/// Convex combination of two generators vanishing at y (assumes orthogonality).
template <class Num>
Vec<Num> vanishing_functional(const Mat<Num>& gens, const Vec<Num>& y, const Cmp<Num>& cmp) {
  auto r = generator_range(gens, y);
  if (cmp.sign(r.lo) >= 0) return gens[r.ilo];
  if (cmp.sign(r.hi) <= 0) return gens[r.ihi];
  Num w = r.hi - r.lo;
  Vec<Num> f = scale(gens[r.ilo], r.hi / w);
  return axpy(-r.lo / w, gens[r.ihi], f);
}

template <class Num>
struct EpsB {
  Num value;
  Vec<Num> functional;
};

/// min over f in conv(gens) of |f(y)| / ||y||.
template <class O>
EpsB<typename O::Num> eps_b(const O& o, const Mat<typename O::Num>& gens, const Vec<typename O::Num>& y) {
  using Num = typename O::Num;
  auto ny = o.norm(y);
  if (orthogonal(o, gens, y)) return {Num(0), vanishing_functional(gens, y, o.cmp())};
  std::size_t best = 0;
  Num best_val = num_abs(dot(gens[0], y));
  for (std::size_t i = 1; i < gens.size(); ++i) {
    Num v = num_abs(dot(gens[i], y));
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  Num value = best_val / ny;
  if constexpr (!Cmp<Num>::exact) value = std::min(1.0, value);
  return {value, gens[best]};
}

/// Every generator of J(y) takes the value 1 at x, or every one takes -1.
template <class O>
bool script_a(const O& o, const Vec<typename O::Num>& x, const Vec<typename O::Num>& y) {
  using Num = typename O::Num;
  bool all_plus = true, all_minus = true;
  for (const auto& g : o.support(y)) {
    Num v = dot(g, x);
    if (!o.cmp().eq(v, Num(1))) all_plus = false;
    if (!o.cmp().eq(v, Num(-1))) all_minus = false;
  }
  return all_plus || all_minus;
}

/// eps_D*(x, y) from the offset minimum; negative ratio guards are for floats.
template <class O>
typename O::Num offset_ratio(const O& o, const Vec<typename O::Num>& x, const Vec<typename O::Num>& y) {
  return o.min_offset(x, y).value / o.norm(x);
}

}  // namespace bjo::detail
