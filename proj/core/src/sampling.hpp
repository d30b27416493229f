#pragma once

// Sphere and functional sampling shared by the sampled constants.

#include <cmath>
#include <cstdint>
#include <random>

#include <algorithm>

#include "bjortho/parallel.hpp"
#include "bjortho/space.hpp"
#include "bjortho/symmetry.hpp"

namespace bjo::detail {

inline constexpr double kPi = 3.14159265358979323846;

inline Vec<double> unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline Vec<double> random_direction(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  Vec<double> v(dim);
  double n2 = 0;
  do {
    n2 = 0;
    for (auto& c : v) {
      c = nd(rng);
      n2 += c * c;
    }
  } while (n2 < 1e-12);
  return scale(v, 1 / std::sqrt(n2));
}

/// Elements of conv(gens) used to probe x^perp: all generators, plus a
/// grid along the segment when there are exactly two.
inline Mat<double> functional_samples(const Mat<double>& gens, std::size_t k) {
  if (gens.size() == 1) return gens;
  Mat<double> out;
  if (gens.size() == 2) {
    for (std::size_t i = 0; i <= k; ++i) {
      double s = double(i) / double(k);
      out.push_back(axpy(s, sub(gens[1], gens[0]), gens[0]));
    }
    return out;
  }
  out = gens;
  Vec<double> c(gens[0].size(), 0.0);
  for (const auto& g : gens) c = add(c, g);
  out.push_back(scale(c, 1.0 / double(gens.size())));
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) out.push_back(scale(add(gens[i], gens[j]), 0.5));
  return out;
}

/// Directions in ker f: the rotation in the plane, random projections otherwise.
inline Mat<double> kernel_directions(const Vec<double>& f, std::size_t count, std::mt19937_64& rng) {
  if (f.size() == 2) return {{-f[1], f[0]}};
  Mat<double> out;
  double ff = dot(f, f);
  for (std::size_t i = 0; i < count; ++i) {
    auto r = random_direction(f.size(), rng);
    auto p = axpy(-dot(f, r) / ff, f, r);
    if (dot(p, p) > 1e-16) out.push_back(p);
  }
  return out;
}

inline double angle_of(const Vec<double>& v) { return std::atan2(v[1], v[0]); }

struct Sampled {
  double value = -1;
  Vec<double> x, y;
};

// Unit vectors probing the sphere: special points first, then a grid.
inline Mat<double> sphere_samples(const Space& space, std::size_t count, std::mt19937_64& rng) {
  Mat<double> xs;
  auto unit = [&](const Vec<double>& v) {
    double n = space.is_polyhedral() ? space.float_polytope().norm(v) : space.analytic().norm(v);
    return scale(v, 1 / n);
  };
  if (space.is_polyhedral())
    for (const auto& v : space.float_polytope().vertices()) xs.push_back(v);
  else
    for (const auto& v : space.analytic().special_points()) xs.push_back(unit(v));
  for (std::size_t i = 0; i < count; ++i) {
    if (space.dim() == 2) xs.push_back(unit(detail::unit_direction(2 * detail::kPi * double(i) / double(count))));
    else xs.push_back(unit(detail::random_direction(space.dim(), rng)));
  }
  return xs;
}

// Maximises score(x) over sampled unit x with refinement rounds around the
// incumbent. Lowest index wins ties.
template <class Score>
Sampled sample_sup(const Space& space, const SamplingOptions& opts, Score&& score) {
  std::mt19937_64 rng(opts.seed);
  auto xs = sphere_samples(space, std::max<std::size_t>(opts.samples, 1), rng);
  auto unit = [&](const Vec<double>& v) {
    double n = space.is_polyhedral() ? space.float_polytope().norm(v) : space.analytic().norm(v);
    return scale(v, 1 / n);
  };
  auto run = [&](const Mat<double>& pts, std::uint64_t salt) {
    auto results = parallel_map<Sampled>(pts.size(), [&](std::size_t i) {
      std::mt19937_64 local(opts.seed ^ (salt * 0x9E3779B97F4A7C15ull) ^ (i + 1));
      return score(pts[i], local);
    });
    Sampled best;
    for (auto& r : results)
      if (r.value > best.value) best = std::move(r);
    return best;
  };
  Sampled best = run(xs, 0);
  double step = 2 * detail::kPi / double(std::max<std::size_t>(opts.samples, 1));
  double radius = 1.0 / std::sqrt(double(std::max<std::size_t>(opts.samples, 1)));
  for (std::size_t round = 1; round <= opts.refine; ++round) {
    Mat<double> pts;
    const int f = int(std::max<std::size_t>(opts.factor, 2));
    if (space.dim() == 2) {
      step /= f;
      double theta = detail::angle_of(best.x);
      for (int k = -f; k <= f; ++k) pts.push_back(unit(detail::unit_direction(theta + k * step)));
    } else {
      radius /= f;
      for (int k = 0; k < 2 * f; ++k) pts.push_back(unit(axpy(radius, detail::random_direction(space.dim(), rng), best.x)));
    }
    auto r = run(pts, round);
    if (r.value > best.value) best = std::move(r);
  }
  return best;
}


}  // namespace bjo::detail
