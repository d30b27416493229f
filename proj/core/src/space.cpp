#include "bjortho/space.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "bjortho/error.hpp"
#include "kernel.hpp"

namespace bjo {

using detail::check_dim;
using detail::conv;
using detail::Route;

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::polyhedral: return "polyhedral";
    case SpaceKind::lp: return "lp";
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::l2linf: return "l2linf";
    case SpaceKind::regular_polygon: return "regular_polygon";
  }
  return "unknown";
}

std::string to_string(LatticePosition pos) {
  switch (pos) {
    case LatticePosition::extreme_vertex: return "extreme_vertex";
    case LatticePosition::edge_interior: return "edge_interior";
    case LatticePosition::facet_interior: return "facet_interior";
    case LatticePosition::face_interior: return "face_interior";
    case LatticePosition::smooth: return "smooth";
    case LatticePosition::nonsmooth: return "nonsmooth";
  }
  return "unknown";
}

namespace {

void check_point_list(const std::vector<Vector>& pts, const char* what) {
  if (pts.empty()) throw PreconditionError(std::string("empty ") + what + " list");
  std::size_t d = pts.front().size();
  for (const auto& p : pts)
    if (p.size() != d) throw PreconditionError(std::string(what) + " list has inconsistent dimensions");
}

bool list_exact(const std::vector<Vector>& pts) {
  for (const auto& p : pts)
    if (!all_exact(p)) return false;
  return true;
}

template <class Num>
Mat<Num> to_mat(const std::vector<Vector>& pts) {
  Mat<Num> out;
  for (const auto& p : pts) out.push_back(conv<Num>(p));
  return out;
}

}  // namespace

Space Space::polyhedral(const std::vector<Vector>& vertices, double tol) {
  check_point_list(vertices, "vertex");
  Space s;
  s.kind_ = SpaceKind::polyhedral;
  s.dim_ = vertices.front().size();
  s.tol_ = tol;
  if (list_exact(vertices)) {
    auto exact = Polytope<Rational>::from_vertices(to_mat<Rational>(vertices));
    s.float_poly_ = std::make_shared<Polytope<double>>(exact.to_double(tol));
    s.exact_poly_ = std::make_shared<Polytope<Rational>>(std::move(exact));
  } else {
    s.float_poly_ = std::make_shared<Polytope<double>>(Polytope<double>::from_vertices(to_mat<double>(vertices), {tol}));
  }
  s.desc_.kind = "polyhedral";
  return s;
}

Space Space::polyhedral_from_facets(const std::vector<Vector>& functionals, double tol) {
  check_point_list(functionals, "facet functional");
  Space s;
  s.kind_ = SpaceKind::polyhedral;
  s.dim_ = functionals.front().size();
  s.tol_ = tol;
  if (list_exact(functionals)) {
    auto exact = Polytope<Rational>::from_facets(to_mat<Rational>(functionals));
    s.float_poly_ = std::make_shared<Polytope<double>>(exact.to_double(tol));
    s.exact_poly_ = std::make_shared<Polytope<Rational>>(std::move(exact));
  } else {
    s.float_poly_ =
        std::make_shared<Polytope<double>>(Polytope<double>::from_facets(to_mat<double>(functionals), {tol}));
  }
  s.desc_.kind = "polyhedral";
  return s;
}

Space Space::lp(double p, std::size_t dim) {
  if (dim < 2 || dim > 8) throw PreconditionError("dimension must be between 2 and 8 (got " + std::to_string(dim) + ")");
  if (!(p >= 1)) throw PreconditionError("l_p needs p >= 1");
  Space s;
  s.dim_ = dim;
  s.desc_.kind = "lp";
  s.desc_.p = p;
  if (p == 1 || std::isinf(p)) {
    // the cube and the cross-polytope, with both descriptions known
    Mat<Rational> axes, signs;
    for (std::size_t i = 0; i < dim; ++i)
      for (int sg : {1, -1}) {
        Vec<Rational> e(dim, Rational(0));
        e[i] = sg;
        axes.push_back(e);
      }
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
      Vec<Rational> v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
      signs.push_back(v);
    }
    auto poly = std::isinf(p) ? Polytope<Rational>::from_vertices_and_facets(signs, axes)
                              : Polytope<Rational>::from_vertices_and_facets(axes, signs);
    s.kind_ = SpaceKind::lp;
    s.float_poly_ = std::make_shared<Polytope<double>>(poly.to_double(s.tol_));
    s.exact_poly_ = std::make_shared<Polytope<Rational>>(std::move(poly));
    return s;
  }
  s.kind_ = p == 2 ? SpaceKind::euclidean : SpaceKind::lp;
  if (p == 2) s.desc_.kind = "euclidean";
  s.analytic_ = std::make_shared<AnalyticNorm>(AnalyticNorm::lp(p, dim));
  return s;
}

Space Space::l2linf() {
  Space s;
  s.kind_ = SpaceKind::l2linf;
  s.dim_ = 2;
  s.analytic_ = std::make_shared<AnalyticNorm>(AnalyticNorm::l2linf());
  s.desc_.kind = "l2linf";
  return s;
}

Space Space::regular_polygon(std::size_t n) {
  if (n < 4 || n % 2 != 0 || n > 64)
    throw PreconditionError("regular polygon needs an even vertex count between 4 and 64 (got " + std::to_string(n) + ")");
  const double pi = std::acos(-1.0);
  Mat<double> verts, facets;
  for (std::size_t j = 1; j <= n; ++j) {
    double a = (2.0 * j - 1) * pi / n;
    verts.push_back({std::cos(a), std::sin(a)});
    double b = 2.0 * j * pi / n;
    double r = std::cos(pi / n);
    facets.push_back({std::cos(b) / r, std::sin(b) / r});
  }
  Space s;
  s.kind_ = SpaceKind::regular_polygon;
  s.dim_ = 2;
  s.float_poly_ = std::make_shared<Polytope<double>>(
      Polytope<double>::from_vertices_and_facets(verts, facets, {s.tol_}));
  s.desc_.kind = "regular_polygon";
  s.desc_.n = n;
  return s;
}

const Polytope<Rational>& Space::exact_polytope() const {
  if (!exact_poly_) throw PreconditionError("space has no exact polytope");
  return *exact_poly_;
}

const Polytope<double>& Space::float_polytope() const {
  if (!float_poly_) throw PreconditionError("space is not polyhedral");
  return *float_poly_;
}

const AnalyticNorm& Space::analytic() const {
  if (!analytic_) throw PreconditionError("space has no analytic norm");
  return *analytic_;
}

Space Space::with_descriptor(SpaceDescriptor d) const {
  Space s = *this;
  s.desc_ = std::move(d);
  return s;
}

Space Space::with_tolerance(double tol) const {
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  Space s = *this;
  s.tol_ = tol;
  if (exact_poly_) s.float_poly_ = std::make_shared<Polytope<double>>(exact_poly_->to_double(tol));
  else if (float_poly_) s.float_poly_ = std::make_shared<Polytope<double>>(float_poly_->to_double(tol));
  return s;
}

std::string Space::label() const {
  std::ostringstream os;
  if (!desc_.name.empty()) return "catalog:" + desc_.name;
  switch (kind_) {
    case SpaceKind::lp:
      os << "lp(" << (std::isinf(desc_.p) ? std::string("inf") : format_double(desc_.p)) << "), dim " << dim_;
      break;
    case SpaceKind::euclidean: os << "euclidean, dim " << dim_; break;
    case SpaceKind::l2linf: os << "l2linf"; break;
    case SpaceKind::regular_polygon: os << "regular_polygon(" << desc_.n << ")"; break;
    case SpaceKind::polyhedral:
      os << "polyhedral, dim " << dim_ << ", " << float_poly_->vertices().size() << " vertices";
      break;
  }
  return os.str();
}

Scalar norm_eval(const Space& space, const Vector& v) {
  check_dim(space, v, "vector");
  return detail::dispatch(space, detail::route(space, {&v}), [&](const auto& o) {
    using Num = typename std::decay_t<decltype(o)>::Num;
    return detail::wrap(o.norm(conv<Num>(v)), o.tol());
  });
}

Scalar dual_norm_eval(const Space& space, const Vector& f) {
  check_dim(space, f, "functional");
  return detail::dispatch(space, detail::route(space, {&f}), [&](const auto& o) {
    using Num = typename std::decay_t<decltype(o)>::Num;
    return detail::wrap(o.dual_norm(conv<Num>(f)), o.tol());
  });
}

SupportSet support_set(const Space& space, const Vector& x) {
  check_dim(space, x, "x");
  if (is_zero(x)) throw PreconditionError("support set undefined at x = 0");
  return detail::dispatch(space, detail::route(space, {&x}), [&](const auto& o) {
    using Num = typename std::decay_t<decltype(o)>::Num;
    SupportSet out{x, {}};
    for (const auto& g : o.support(conv<Num>(x))) out.generators.push_back(detail::wrap_vec(g, o.tol()));
    return out;
  });
}

namespace {

void require_unit(const Space& space, const Vector& x, const char* field) {
  Scalar n = norm_eval(space, x);
  bool ok = n.exact() ? n.rational() == 1 : std::abs(n.value() - 1) <= space.tolerance() * 10;
  if (!ok) throw PreconditionError(std::string(field) + " is not a unit vector (norm " + n.str() + ")");
}

}  // namespace

PointClass classify_point(const Space& space, const Vector& x) {
  check_dim(space, x, "x");
  require_unit(space, x, "x");
  return detail::dispatch(space, detail::route(space, {&x}), [&](const auto& o) {
    using Num = typename std::decay_t<decltype(o)>::Num;
    PointClass pc{};
    auto xv = conv<Num>(x);
    pc.generator_count = o.support(xv).size();
    pc.smooth = pc.generator_count == 1;
    if constexpr (std::is_same_v<std::decay_t<decltype(o)>, detail::AnalyticOracle>) {
      pc.position = pc.smooth ? LatticePosition::smooth : LatticePosition::nonsmooth;
    } else {
      const auto& P = o.polytope();
      const auto& face = P.faces()[P.carrier_face(xv)];
      pc.face_dim = face.dim;
      if (face.dim == 0) pc.position = LatticePosition::extreme_vertex;
      else if (face.dim + 1 == P.dim()) pc.position = LatticePosition::facet_interior;
      else if (face.dim == 1) pc.position = LatticePosition::edge_interior;
      else pc.position = LatticePosition::face_interior;
    }
    return pc;
  });
}

bool adjacent_vertices(const Space& space, const Vector& u, const Vector& v) {
  check_dim(space, u, "u");
  check_dim(space, v, "v");
  return detail::dispatch(space, detail::route(space, {&u, &v}), [&](const auto& o) -> bool {
    using Num = typename std::decay_t<decltype(o)>::Num;
    auto a = conv<Num>(u), b = conv<Num>(v);
    if constexpr (std::is_same_v<std::decay_t<decltype(o)>, detail::AnalyticOracle>) {
      const auto& N = o.analytic();
      const auto& cmp = o.cmp();
      auto extreme = [&](const Vec<double>& p) {
        if (!cmp.eq(N.norm(p), 1.0)) return false;
        for (const auto& [s, e] : N.flat_segments()) {
          auto d = sub(e, s);
          double t = dot(sub(p, s), d) / dot(d, d);
          if (cmp.lt(0.0, t) && cmp.lt(t, 1.0) && vec_eq(axpy(t, d, s), p, cmp)) return false;
        }
        return true;
      };
      if (!extreme(a) || !extreme(b)) throw PreconditionError("inputs are not extreme points of the unit ball");
      if (vec_eq(a, b, cmp)) return true;
      for (const auto& [s, e] : N.flat_segments())
        if ((vec_eq(a, s, cmp) && vec_eq(b, e, cmp)) || (vec_eq(a, e, cmp) && vec_eq(b, s, cmp))) return true;
      return false;
    } else {
      const auto& P = o.polytope();
      if (!P.vertex_index(a) || !P.vertex_index(b))
        throw PreconditionError("inputs are not extreme points of the unit ball");
      return P.share_facet(a, b);
    }
  });
}

std::vector<Vector> extreme_points(const Space& space) {
  std::vector<Vector> out;
  if (space.is_exact()) {
    for (const auto& v : space.exact_polytope().vertices()) out.push_back(from_rationals(v));
  } else {
    for (const auto& v : space.float_polytope().vertices()) out.push_back(from_doubles(v, space.tolerance()));
  }
  return out;
}

}  // namespace bjo
