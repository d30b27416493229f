#pragma once

// Linear programs over a single face G of a polytope. Points of G are
// written y = sum_k mu_k w_k over the vertices w_k of G.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "bjortho/linprog.hpp"
#include "bjortho/polytope.hpp"

namespace bjo::detail {

template <class Num>
using FaceOf = typename Polytope<Num>::Face;

template <class Num>
bool strictly_positive(const Num& v, const Cmp<Num>& cmp) {
  if constexpr (Cmp<Num>::exact)
    return v > 0;
  else
    return v > cmp.tol();
}

template <class Num>
Vec<Num> combine(const Polytope<Num>& P, const FaceOf<Num>& G, const Vec<Num>& mu) {
  Vec<Num> y(P.dim(), Num(0));
  for (std::size_t k = 0; k < G.vertices.size(); ++k) y = axpy(mu[k], P.vertices()[G.vertices[k]], y);
  return y;
}

template <class Num>
Mat<Num> face_functionals(const Polytope<Num>& P, const FaceOf<Num>& G) {
  Mat<Num> out;
  for (auto k : G.facets) out.push_back(P.facets()[k].functional);
  return out;
}

/// A point y in the relative interior of G with min_i g_i(y) <= 0 <= max_j g_j(y),
/// i.e. a point of relint G orthogonal to any x with J(x) = conv(gens).
template <class Num>
std::optional<Vec<Num>> orth_point_in_relint(const Polytope<Num>& P, const FaceOf<Num>& G, const Mat<Num>& gens) {
  const auto& cmp = P.cmp();
  const std::size_t m = G.vertices.size();
  auto centre = P.centroid(G);
  {
    Num lo = dot(gens[0], centre), hi = lo;
    for (const auto& g : gens) {
      Num v = dot(g, centre);
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    if (cmp.sign(lo) <= 0 && cmp.sign(hi) >= 0) return centre;
  }
  Mat<Num> vals(gens.size(), Vec<Num>(m));
  Vec<Num> vmin(gens.size()), vmax(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t k = 0; k < m; ++k) vals[i][k] = dot(gens[i], P.vertices()[G.vertices[k]]);
    vmin[i] = *std::min_element(vals[i].begin(), vals[i].end());
    vmax[i] = *std::max_element(vals[i].begin(), vals[i].end());
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (cmp.sign(vmin[i]) > 0) continue;  // g_i(y) <= 0 impossible on G
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (cmp.sign(vmax[j]) < 0) continue;
      lp::Problem<Num> prob(m + 1);  // (mu, tau)
      prob.free[m] = true;
      prob.objective[m] = 1;
      for (std::size_t k = 0; k < m; ++k) {
        Vec<Num> c(m + 1, Num(0));
        c[k] = 1;
        c[m] = -1;
        prob.add(c, lp::Sense::ge, Num(0));
      }
      Vec<Num> ones(m + 1, Num(1));
      ones[m] = 0;
      prob.add(ones, lp::Sense::eq, Num(1));
      Vec<Num> ci(vals[i]), cj(vals[j]);
      ci.push_back(Num(0));
      cj.push_back(Num(0));
      prob.add(ci, lp::Sense::le, Num(0));
      prob.add(cj, lp::Sense::ge, Num(0));
      auto sol = lp::solve(prob);
      if (sol.status == lp::Status::optimal && strictly_positive(sol.objective, cmp))
        return combine(P, G, Vec<Num>(sol.values.begin(), sol.values.begin() + m));
    }
  }
  return std::nullopt;
}

/// max over y in G of min_i sign * g_i(y), with the maximiser.
template <class Num>
std::pair<Num, Vec<Num>> max_min_value(const Polytope<Num>& P, const FaceOf<Num>& G, const Mat<Num>& gens, int sign) {
  const std::size_t m = G.vertices.size();
  lp::Problem<Num> prob(m + 1);  // (mu, t)
  prob.free[m] = true;
  prob.objective[m] = 1;
  for (const auto& g : gens) {
    Vec<Num> c(m + 1, Num(0));
    for (std::size_t k = 0; k < m; ++k) c[k] = -Num(sign) * dot(g, P.vertices()[G.vertices[k]]);
    c[m] = 1;
    prob.add(c, lp::Sense::le, Num(0));
  }
  Vec<Num> ones(m + 1, Num(1));
  ones[m] = 0;
  prob.add(ones, lp::Sense::eq, Num(1));
  auto sol = lp::solve(prob);
  if (sol.status != lp::Status::optimal) throw std::logic_error("face LP failed");
  return {sol.objective, combine(P, G, Vec<Num>(sol.values.begin(), sol.values.begin() + m))};
}

}  // namespace bjo::detail
