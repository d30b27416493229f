#include "bjortho/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bjortho/error.hpp"

namespace bjo {

namespace {

double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

double lp_norm(const Vec<double>& v, double p) {
  double m = 0;
  for (double c : v) m = std::max(m, std::abs(c));
  if (m == 0) return 0;
  double acc = 0;
  for (double c : v) acc += std::pow(std::abs(c) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

// candidate boundary points of the l2linf ball that can maximise a functional
const Mat<double>& l2linf_corners() {
  static const Mat<double> pts{{1, 1}, {-1, -1}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return pts;
}

}  // namespace

AnalyticNorm AnalyticNorm::lp(double p, std::size_t dim) {
  if (!(p > 1) || !std::isfinite(p)) throw PreconditionError("analytic l_p norm needs 1 < p < inf");
  if (dim < 2 || dim > 8) throw PreconditionError("dimension must be between 2 and 8 (got " + std::to_string(dim) + ")");
  AnalyticNorm n;
  n.kind_ = Kind::lp;
  n.p_ = p;
  n.dim_ = dim;
  return n;
}

AnalyticNorm AnalyticNorm::l2linf() {
  AnalyticNorm n;
  n.kind_ = Kind::l2linf;
  n.p_ = 0;
  n.dim_ = 2;
  return n;
}

double AnalyticNorm::norm(const Vec<double>& v) const {
  if (v.size() != dim_) throw PreconditionError("dimension mismatch: expected " + std::to_string(dim_));
  if (kind_ == Kind::lp) return lp_norm(v, p_);
  double a = v[0], b = v[1];
  if (a * b >= 0) return std::max(std::abs(a), std::abs(b));
  return std::hypot(a, b);
}

double AnalyticNorm::dual_norm(const Vec<double>& f) const {
  if (f.size() != dim_) throw PreconditionError("dimension mismatch: expected " + std::to_string(dim_));
  if (kind_ == Kind::lp) return lp_norm(f, p_ / (p_ - 1));
  double best = 0;
  for (const auto& c : l2linf_corners()) best = std::max(best, dot(f, c));
  // the Euclidean arcs live in the quadrants where ab < 0
  if (f[0] * f[1] <= 0) best = std::max(best, std::hypot(f[0], f[1]));
  return best;
}

Mat<double> AnalyticNorm::support(const Vec<double>& x, double tol) const {
  double n = norm(x);
  if (n == 0) throw PreconditionError("support set undefined at the origin");
  Vec<double> u = scale(x, 1.0 / n);
  if (kind_ == Kind::lp) {
    Vec<double> g(dim_);
    for (std::size_t i = 0; i < dim_; ++i) g[i] = sgn(u[i]) * std::pow(std::abs(u[i]), p_ - 1);
    return {scale(g, 1.0 / dual_norm(g))};
  }
  double a = u[0], b = u[1];
  if (std::abs(a) <= tol) return {{0.0, sgn(b)}};
  if (std::abs(b) <= tol) return {{sgn(a), 0.0}};
  if (a * b < 0) return {{a / std::hypot(a, b), b / std::hypot(a, b)}};
  if (std::abs(a) > std::abs(b) + tol) return {{sgn(a), 0.0}};
  if (std::abs(b) > std::abs(a) + tol) return {{0.0, sgn(b)}};
  return {{sgn(a), 0.0}, {0.0, sgn(b)}};
}

Mat<double> AnalyticNorm::exposed_face(const Vec<double>& g, double tol) const {
  double h = dual_norm(g);
  if (h == 0) throw PreconditionError("exposed face of the zero functional");
  if (kind_ == Kind::lp) {
    double q = p_ / (p_ - 1);
    Vec<double> x(dim_);
    for (std::size_t i = 0; i < dim_; ++i) x[i] = sgn(g[i]) * std::pow(std::abs(g[i]) / h, q - 1);
    return {scale(x, 1.0 / norm(x))};
  }
  Mat<double> hits;
  for (const auto& c : l2linf_corners())
    if (dot(g, c) >= h - tol * std::max(1.0, h)) hits.push_back(c);
  if (g[0] * g[1] < 0) {
    double r = std::hypot(g[0], g[1]);
    Vec<double> arc{g[0] / r, g[1] / r};
    bool dup = false;
    for (const auto& p : hits)
      if (std::abs(p[0] - arc[0]) <= tol && std::abs(p[1] - arc[1]) <= tol) dup = true;
    if (!dup && hits.empty()) hits.push_back(arc);
  }
  if (hits.size() > 2) {
    // collinear points on a flat piece; keep the two farthest apart
    std::size_t bi = 0, bj = 1;
    double best = -1;
    for (std::size_t i = 0; i < hits.size(); ++i)
      for (std::size_t j = i + 1; j < hits.size(); ++j) {
        double d = norm(sub(hits[i], hits[j]));
        if (d > best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    hits = {hits[bi], hits[bj]};
  }
  return hits;
}

Mat<double> AnalyticNorm::special_points() const {
  if (kind_ == Kind::l2linf) return l2linf_corners();
  Mat<double> pts;
  for (std::size_t i = 0; i < dim_; ++i) {
    Vec<double> e(dim_, 0.0);
    e[i] = 1;
    pts.push_back(e);
    pts.push_back(negate(e));
  }
  return pts;
}

std::vector<std::pair<Vec<double>, Vec<double>>> AnalyticNorm::flat_segments() const {
  if (kind_ == Kind::lp) return {};
  return {{{1, 0}, {1, 1}}, {{1, 1}, {0, 1}}, {{-1, 0}, {-1, -1}}, {{-1, -1}, {0, -1}}};
}

}  // namespace bjo
