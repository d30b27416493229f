#include "bjortho/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bjortho/error.hpp"
#include "bjortho/parallel.hpp"
#include "face_lp.hpp"
#include "ortho_impl.hpp"
#include "sampling.hpp"

namespace bjo {

using detail::AnalyticOracle;
using detail::check_dim;
using detail::conv;
using detail::PolyOracle;
using detail::wrap;
using detail::wrap_vec;
using detail::sample_sup;
using detail::Sampled;
using detail::sphere_samples;

namespace {

template <class O>
using NumOf = typename std::decay_t<O>::Num;

template <class O>
constexpr bool is_analytic = std::is_same_v<std::decay_t<O>, AnalyticOracle>;

detail::Route space_route(const Space& s) {
  if (!s.is_polyhedral()) return detail::Route::analytic;
  return s.is_exact() ? detail::Route::exact : detail::Route::floating;
}

std::string method_name(detail::Route r) {
  switch (r) {
    case detail::Route::exact: return "exact";
    case detail::Route::floating: return "float";
    default: return "sampled";
  }
}

void require_unit(const Space& space, const Vector& x, const char* field) {
  Scalar n = norm_eval(space, x);
  bool ok = n.exact() ? n.rational() == 1 : std::abs(n.value() - 1) <= space.tolerance() * 10;
  if (!ok) throw PreconditionError(std::string(field) + " is not a unit vector (norm " + n.str() + ")");
}

// counter-clockwise angle from x to a is smaller than from x to b
template <class Num>
bool ccw_before(const Vec<Num>& x, const Vec<Num>& a, const Vec<Num>& b, const Cmp<Num>& cmp) {
  auto key = [&](const Vec<Num>& v) {
    Vec<Num> k{x[0] * v[0] + x[1] * v[1], x[0] * v[1] - x[1] * v[0]};
    return k;
  };
  auto ka = key(a), kb = key(b);
  auto half = [&](const Vec<Num>& p) {
    int sy = cmp.sign(p[1]);
    return (sy > 0 || (sy == 0 && cmp.sign(p[0]) > 0)) ? 0 : 1;
  };
  int ha = half(ka), hb = half(kb);
  if (ha != hb) return ha < hb;
  return cmp.sign(ka[0] * kb[1] - ka[1] * kb[0]) > 0;
}

// ---- polyhedral (exact or float) -------------------------------------------

template <class Num>
PropertyVerdict local_p_poly(const PolyOracle<Num>& o, const Vec<Num>& x) {
  const auto& P = o.polytope();
  const auto& cmp = o.cmp();
  auto gens = o.support(x);
  std::optional<Vec<Num>> best;
  for (const auto& G : P.faces()) {
    bool plus = true, minus = true;
    for (auto k : G.facets) {
      Num v = dot(P.facets()[k].functional, x);
      if (!cmp.eq(v, Num(1))) plus = false;
      if (!cmp.eq(v, Num(-1))) minus = false;
    }
    if (!plus && !minus) continue;  // relint G misses A(x)
    auto y = detail::orth_point_in_relint(P, G, gens);
    if (!y) continue;
    if (!detail::script_a(o, x, *y) || !detail::orthogonal(o, gens, *y))
      throw VerificationError("local (P) witness failed pointwise re-check");
    if (P.dim() != 2) {
      best = y;
      break;
    }
    if (!best || ccw_before(x, *y, *best, cmp)) best = y;
  }
  PropertyVerdict v;
  v.holds = !best;
  if (best) {
    v.x = wrap_vec(x, o.tol());
    v.y = wrap_vec(*best, o.tol());
    v.functional = wrap_vec(detail::vanishing_functional(gens, *best, cmp), o.tol());
  }
  return v;
}

template <class Num>
PropertyVerdict property_p_poly(const PolyOracle<Num>& o, const SamplingOptions& opts) {
  const auto& P = o.polytope();
  for (const auto& v : P.vertices()) {
    auto r = local_p_poly(o, v);
    if (!r.holds) return r;
  }
  // holding at every vertex forces it on the whole sphere; spot-check that
  std::mt19937_64 rng(opts.seed);
  for (const auto& G : P.faces()) {
    if (G.dim == 0) continue;
    std::vector<Vec<Num>> probes{P.centroid(G)};
    for (int s = 0; s < 2; ++s) {
      Vec<Num> mu;
      Num total = 0;
      for (std::size_t k = 0; k < G.vertices.size(); ++k) {
        Num w = Num(long(1 + rng() % 97));
        mu.push_back(w);
        total += w;
      }
      for (auto& m : mu) m /= total;
      probes.push_back(detail::combine(P, G, mu));
    }
    for (const auto& p : probes)
      if (!local_p_poly(o, p).holds)
        throw VerificationError("local (P) holds at every extreme point but fails at an interior sphere point");
  }
  PropertyVerdict v;
  v.holds = true;
  return v;
}

template <class Num>
PropertyVerdict p1_planar(const PolyOracle<Num>& o) {
  const auto& P = o.polytope();
  const auto& cmp = o.cmp();
  const auto& V = P.vertices();
  const std::size_t n = V.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& u = V[k];
    auto gens = o.support(u);
    for (const auto* nb : {&V[(k + 1) % n], &V[(k + n - 1) % n]}) {
      // on the edge, g((1-t)u + t nb) = 1 + t (g(nb) - 1); it reaches 0 inside
      // the edge only for functionals negative at the neighbour
      std::optional<Num> t;
      for (const auto& g : gens) {
        Num gv = dot(g, *nb);
        if (cmp.sign(gv) >= 0) continue;
        Num cand = Num(1) / (Num(1) - gv);
        if (!t || cand < *t) t = cand;
      }
      if (!t) continue;
      Vec<Num> y = axpy(*t, sub(*nb, u), u);
      if (!P.share_facet(u, y) || !detail::orthogonal(o, gens, y) || P.vertex_index(y))
        throw VerificationError("(P1) witness failed re-check");
      PropertyVerdict v;
      v.holds = false;
      v.x = wrap_vec(u, o.tol());
      v.y = wrap_vec(y, o.tol());
      v.functional = wrap_vec(detail::vanishing_functional(gens, y, cmp), o.tol());
      return v;
    }
  }
  PropertyVerdict v;
  v.holds = true;
  return v;
}

template <class Num>
PropertyVerdict p1_search(const PolyOracle<Num>& o) {
  const auto& P = o.polytope();
  const auto& cmp = o.cmp();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& F : P.facets()) {
      std::vector<const detail::FaceOf<Num>*> inside;
      for (const auto& G : P.faces())
        if (std::includes(F.vertices.begin(), F.vertices.end(), G.vertices.begin(), G.vertices.end()))
          inside.push_back(&G);
      std::vector<Vec<Num>> xs;
      if (pass == 0) {
        for (auto vi : F.vertices) xs.push_back(P.vertices()[vi]);
      } else {
        for (const auto* G : inside)
          if (G->dim > 0) xs.push_back(P.centroid(*G));
      }
      for (const auto& x : xs) {
        auto gens = o.support(x);
        bool x_extreme = P.vertex_index(x).has_value();
        for (const auto* H : inside) {
          if (x_extreme && H->dim == 0) continue;
          auto y = detail::orth_point_in_relint(P, *H, gens);
          if (!y || vec_eq(*y, x, cmp)) continue;
          bool y_extreme = P.vertex_index(*y).has_value();
          if (!P.share_facet(x, *y) || !detail::orthogonal(o, gens, *y) || (x_extreme && y_extreme))
            throw VerificationError("(P1) witness failed re-check");
          PropertyVerdict v;
          v.holds = false;
          v.x = wrap_vec(x, o.tol());
          v.y = wrap_vec(*y, o.tol());
          v.functional = wrap_vec(detail::vanishing_functional(gens, *y, cmp), o.tol());
          return v;
        }
      }
    }
  }
  PropertyVerdict v;
  v.holds = true;
  v.conclusive = false;
  v.note = "no witness found at stratification level";
  return v;
}

template <class Num>
RConstant r_poly(const PolyOracle<Num>& o) {
  const auto& P = o.polytope();
  const auto& V = P.vertices();
  const std::size_t n = V.size();
  std::optional<Num> best;
  Vec<Num> bu, bv;
  auto consider = [&](const Vec<Num>& u, const Vec<Num>& v) {
    Num d = o.norm(sub(u, v));
    if (!best || o.cmp().lt(*best, d)) {
      best = d;
      bu = u;
      bv = v;
    }
  };
  for (std::size_t k = 0; k < P.facets().size(); ++k) {
    const auto& F = P.facets()[k];
    if (P.dim() == 2) {
      consider(V[k], V[(k + n - 1) % n]);
      continue;
    }
    for (std::size_t i = 0; i < F.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < F.vertices.size(); ++j) consider(V[F.vertices[i]], V[F.vertices[j]]);
  }
  RConstant r;
  r.value = wrap(*best, o.tol());
  r.u = wrap_vec(bu, o.tol());
  r.v = wrap_vec(bv, o.tol());
  return r;
}

template <class Num>
struct FaceMax {
  std::optional<Num> value;
  Vec<Num> x, y;
};

template <class Num>
FaceMax<Num> left_poly(const PolyOracle<Num>& o, const Vec<Num>& x) {
  const auto& P = o.polytope();
  const auto& cmp = o.cmp();
  auto gens = o.support(x);
  FaceMax<Num> best;
  for (const auto& G : P.faces()) {
    auto fs = detail::face_functionals(P, G);
    auto r = detail::generator_range(fs, x);
    Num c;
    if (cmp.sign(r.lo) <= 0 && cmp.sign(r.hi) >= 0) c = 0;
    else c = std::min(num_abs(r.lo), num_abs(r.hi));
    if (best.value && !cmp.lt(*best.value, c)) continue;
    auto y = detail::orth_point_in_relint(P, G, gens);
    if (!y) continue;
    best.value = c;
    best.y = *y;
  }
  best.x = x;
  return best;
}

template <class Num>
FaceMax<Num> right_poly(const PolyOracle<Num>& o, const Vec<Num>& x) {
  const auto& P = o.polytope();
  const auto& cmp = o.cmp();
  auto gens = o.support(x);
  FaceMax<Num> best;
  for (const auto& G : P.faces()) {
    auto r = detail::generator_range(detail::face_functionals(P, G), x);
    if (!(cmp.sign(r.lo) <= 0 && cmp.sign(r.hi) >= 0)) continue;  // no g in J(y) vanishes at x
    auto [v1, y1] = detail::max_min_value(P, G, gens, 1);
    auto [v2, y2] = detail::max_min_value(P, G, gens, -1);
    Num v = std::max(Num(0), std::max(v1, v2));
    const auto& y = v2 > v1 ? y2 : y1;
    if (best.value && !cmp.lt(*best.value, v)) continue;
    best.value = v;
    best.y = y;
  }
  best.x = x;
  return best;
}

template <class Num>
SymmetryConstant global_c_poly(const PolyOracle<Num>& o, const SamplingOptions& opts) {
  SymmetryConstant c;
  c.kind = "C";
  c.side = "global";
  auto p = property_p_poly(o, opts);
  if (!p.holds) {
    c.value = wrap(Num(1), o.tol());
    c.symmetric = false;
    c.x = p.x;
    c.y = p.y;
    return c;
  }
  const auto& P = o.polytope();
  const auto& cmp = o.cmp();
  FaceMax<Num> best;
  for (const auto& F : P.faces()) {
    auto gens_x = detail::face_functionals(P, F);
    for (const auto& G : P.faces()) {
      auto gens_y = detail::face_functionals(P, G);
      auto [v1, x1] = detail::max_min_value(P, F, gens_y, 1);
      auto [v2, x2] = detail::max_min_value(P, F, gens_y, -1);
      Num v = std::max(Num(0), std::max(v1, v2));
      if (best.value && !cmp.lt(*best.value, v)) continue;
      auto y = detail::orth_point_in_relint(P, G, gens_x);
      if (!y) continue;
      best.value = v;
      best.x = v2 > v1 ? x2 : x1;
      best.y = *y;
    }
  }
  if (!cmp.lt(*best.value, Num(1)))
    throw VerificationError("property (P) holds but the global C constant reached 1");
  c.value = wrap(*best.value, o.tol());
  c.symmetric = true;
  c.x = wrap_vec(best.x, o.tol());
  c.y = wrap_vec(best.y, o.tol());
  return c;
}

// ---- analytic ---------------------------------------------------------------


Sampled left_analytic(const AnalyticOracle& o, const Vec<double>& x, std::mt19937_64& rng) {
  Sampled best;
  best.x = x;
  for (const auto& f : detail::functional_samples(o.support(x), 64)) {
    for (auto y : detail::kernel_directions(f, 32, rng)) {
      y = scale(y, 1 / o.norm(y));
      double v = detail::eps_b(o, o.support(y), x).value;
      if (v > best.value) {
        best.value = v;
        best.y = y;
      }
    }
  }
  return best;
}

Sampled right_analytic(const AnalyticOracle& o, const Vec<double>& x, std::mt19937_64& rng) {
  const auto& N = o.analytic();
  auto gens = o.support(x);
  Mat<double> annihilators;
  if (x.size() == 2) annihilators = {{-x[1], x[0]}, {x[1], -x[0]}};
  else annihilators = detail::kernel_directions(x, 64 * x.size(), rng);
  Sampled best;
  best.x = x;
  for (const auto& g : annihilators) {
    auto face = N.exposed_face(g, o.tol());
    Mat<double> ys = face;
    if (face.size() == 2)
      for (int i = 1; i < 64; ++i) ys.push_back(axpy(i / 64.0, sub(face[1], face[0]), face[0]));
    for (const auto& y : ys) {
      if (!detail::orthogonal(o, y, x)) continue;
      double v = detail::eps_b(o, gens, y).value;
      if (v > best.value) {
        best.value = v;
        best.y = y;
      }
    }
  }
  return best;
}

PropertyVerdict local_p_analytic(const AnalyticOracle& o, const Vec<double>& x) {
  PropertyVerdict v;
  auto gens = o.support(x);
  if (gens.size() == 1) {
    v.method = "smooth";
    return v;
  }
  v.method = "sampled";
  const auto& N = o.analytic();
  Mat<double> cands = N.special_points();
  for (const auto& [a, b] : N.flat_segments())
    for (int i = 0; i <= 64; ++i) cands.push_back(axpy(i / 64.0, sub(b, a), a));
  std::mt19937_64 rng(7);
  for (const auto& f : detail::functional_samples(gens, 64))
    for (auto y : detail::kernel_directions(f, 16, rng)) {
      y = scale(y, 1 / o.norm(y));
      cands.push_back(y);
      cands.push_back(negate(y));
    }
  std::optional<Vec<double>> best;
  for (const auto& y : cands) {
    if (!detail::script_a(o, x, y) || !detail::orthogonal(o, gens, y)) continue;
    if (!best || (x.size() == 2 && ccw_before(x, y, *best, o.cmp()))) best = y;
  }
  if (best) {
    v.holds = false;
    v.x = wrap_vec(x, o.tol());
    v.y = wrap_vec(*best, o.tol());
    v.functional = wrap_vec(detail::vanishing_functional(gens, *best, o.cmp()), o.tol());
  }
  return v;
}

template <class O>
Sampled d_score(const O& o, const Vec<double>& x, std::mt19937_64& rng) {
  Sampled best;
  best.x = x;
  for (const auto& f : detail::functional_samples(o.support(x), 16)) {
    for (auto y : detail::kernel_directions(f, 4, rng)) {
      y = scale(y, 1 / o.norm(y));
      double m = std::clamp(o.min_offset(y, x).value, 0.0, 1.0);
      double v = std::sqrt(1 - m * m);
      if (v > best.value) {
        best.value = v;
        best.y = y;
      }
    }
  }
  return best;
}

}  // namespace

bool in_script_A(const Space& space, const Vector& x, const Vector& y) {
  check_dim(space, x, "x");
  check_dim(space, y, "y");
  require_unit(space, x, "x");
  require_unit(space, y, "y");
  return detail::dispatch(space, detail::route(space, {&x, &y}), [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    return detail::script_a(o, conv<Num>(x), conv<Num>(y));
  });
}

PropertyVerdict local_property_p(const Space& space, const Vector& x) {
  check_dim(space, x, "x");
  require_unit(space, x, "x");
  auto r = detail::route(space, {&x});
  return detail::dispatch(space, r, [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    if constexpr (is_analytic<decltype(o)>) {
      return local_p_analytic(o, conv<Num>(x));
    } else {
      auto v = local_p_poly(o, conv<Num>(x));
      v.method = method_name(r);
      return v;
    }
  });
}

PropertyVerdict property_p(const Space& space, const SamplingOptions& opts) {
  auto r = space_route(space);
  return detail::dispatch(space, r, [&](const auto& o) {
    if constexpr (is_analytic<decltype(o)>) {
      PropertyVerdict v;
      v.method = "sampled";
      if (o.analytic().kind() == AnalyticNorm::Kind::lp) {
        v.method = "smooth";
        v.note = "every unit vector is smooth";
        return v;
      }
      std::mt19937_64 rng(opts.seed);
      for (const auto& x : sphere_samples(space, 256, rng)) {
        auto lv = local_p_analytic(o, x);
        if (!lv.holds) {
          lv.method = "sampled";
          return lv;
        }
      }
      v.conclusive = false;
      return v;
    } else {
      auto v = property_p_poly(o, opts);
      v.method = method_name(r);
      return v;
    }
  });
}

PropertyVerdict property_p1(const Space& space) {
  if (!space.is_polyhedral()) throw PreconditionError("property (P1) needs a polyhedral space");
  if (space.dim() > 3) throw PreconditionError("property (P1) is supported in dimensions 2 and 3 only");
  auto r = space_route(space);
  return detail::dispatch(space, r, [&](const auto& o) {
    if constexpr (is_analytic<decltype(o)>) {
      return PropertyVerdict{};
    } else {
      auto v = space.dim() == 2 ? p1_planar(o) : p1_search(o);
      v.method = method_name(r);
      if (space.dim() == 3) v.method += "-search";
      return v;
    }
  });
}

RConstant r_constant(const Space& space) {
  auto r = space_route(space);
  return detail::dispatch(space, r, [&](const auto& o) {
    if constexpr (is_analytic<decltype(o)>) {
      RConstant rc;
      rc.method = "analytic";
      double best = 0;
      for (const auto& [a, b] : o.analytic().flat_segments()) {
        double d = o.norm(sub(a, b));
        if (d > best) {
          best = d;
          rc.u = from_doubles(a, o.tol());
          rc.v = from_doubles(b, o.tol());
        }
      }
      rc.value = Scalar::approx(best, o.tol());
      return rc;
    } else {
      auto rc = r_poly(o);
      rc.method = method_name(r);
      return rc;
    }
  });
}

namespace {

SymmetryConstant one_sided(const Space& space, const Vector& x, const SamplingOptions& opts, bool left) {
  check_dim(space, x, "x");
  require_unit(space, x, "x");
  auto r = detail::route(space, {&x});
  return detail::dispatch(space, r, [&](const auto& o) {
    using Num = NumOf<decltype(o)>;
    SymmetryConstant c;
    c.kind = "C";
    c.side = left ? "left" : "right";
    auto xv = conv<Num>(x);
    if constexpr (is_analytic<decltype(o)>) {
      std::mt19937_64 rng(opts.seed);
      auto s = left ? left_analytic(o, xv, rng) : right_analytic(o, xv, rng);
      c.method = "sampled";
      c.samples = 64;
      c.value = Scalar::approx(std::max(0.0, s.value), o.tol());
      c.symmetric = s.value < 1 - 10 * o.tol();
      c.x = from_doubles(xv, o.tol());
      if (!s.y.empty()) c.y = from_doubles(s.y, o.tol());
    } else {
      auto m = left ? left_poly(o, xv) : right_poly(o, xv);
      c.method = method_name(r);
      Num v = m.value ? *m.value : Num(0);
      c.value = wrap(v, o.tol());
      c.symmetric = o.cmp().lt(v, Num(1));
      c.x = wrap_vec(xv, o.tol());
      if (m.value) c.y = wrap_vec(m.y, o.tol());
    }
    return c;
  });
}

}  // namespace

SymmetryConstant left_symmetry_constant(const Space& space, const Vector& x, const SamplingOptions& opts) {
  return one_sided(space, x, opts, true);
}

SymmetryConstant right_symmetry_constant(const Space& space, const Vector& x, const SamplingOptions& opts) {
  return one_sided(space, x, opts, false);
}

SymmetryConstant global_c_symmetry(const Space& space, const SamplingOptions& opts) {
  auto r = space_route(space);
  return detail::dispatch(space, r, [&](const auto& o) {
    if constexpr (is_analytic<decltype(o)>) {
      auto best = sample_sup(space, opts, [&](const Vec<double>& x, std::mt19937_64& rng) {
        return left_analytic(o, x, rng);
      });
      SymmetryConstant c;
      c.kind = "C";
      c.side = "global";
      c.method = "sampled";
      c.samples = opts.samples;
      c.refine = opts.refine;
      c.factor = opts.factor;
      c.value = Scalar::approx(best.value, o.tol());
      c.symmetric = best.value < 1 - 10 * o.tol();
      c.x = from_doubles(best.x, o.tol());
      c.y = from_doubles(best.y, o.tol());
      return c;
    } else {
      auto c = global_c_poly(o, opts);
      c.method = method_name(r);
      return c;
    }
  });
}

SymmetryConstant global_d_constant(const Space& space, const SamplingOptions& opts) {
  Sampled best;
  if (space.is_polyhedral()) {
    PolyOracle<double> o(space.float_polytope(), space.tolerance());
    best = sample_sup(space, opts, [&](const Vec<double>& x, std::mt19937_64& rng) { return d_score(o, x, rng); });
  } else {
    AnalyticOracle o(space.analytic(), space.tolerance());
    best = sample_sup(space, opts, [&](const Vec<double>& x, std::mt19937_64& rng) { return d_score(o, x, rng); });
  }
  SymmetryConstant c;
  c.kind = "D";
  c.side = "global";
  c.method = "sampled";
  c.samples = opts.samples;
  c.refine = opts.refine;
  c.factor = opts.factor;
  // sqrt(1 - m^2) turns rounding in m into errors near sqrt(machine eps) when the value is close to 0
  double v = std::max(0.0, best.value);
  c.value = Scalar::approx(v, v < 1e-6 ? 1e-7 : 1e-9);
  c.symmetric = best.value < 1;
  c.x = from_doubles(best.x, space.tolerance());
  c.y = from_doubles(best.y, space.tolerance());
  return c;
}

RxReport check_rx_implication(const Space& space) {
  if (!space.is_polyhedral()) throw PreconditionError("R(X) implication check needs a polyhedral space");
  RxReport rep;
  rep.r = r_constant(space);
  rep.p = property_p(space);
  if (rep.r.value.exact()) rep.premise = rep.r.value.rational() <= 1;
  else rep.premise = rep.r.value.value() <= 1 + 1e-9;
  rep.implication_holds = !rep.premise || rep.p.holds;
  rep.converse_counterexample = !rep.premise && rep.p.holds;
  return rep;
}

}  // namespace bjo
