#include "bjortho/operators.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "bjortho/error.hpp"
#include "ortho_impl.hpp"
#include "sampling.hpp"

namespace bjo {

using detail::conv;

LinearMap::LinearMap(std::vector<Vector> rows, Space domain, Space codomain)
    : rows_(std::move(rows)), domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (rows_.size() != codomain_.dim())
    throw PreconditionError("matrix has " + std::to_string(rows_.size()) + " rows but the codomain has dimension " +
                            std::to_string(codomain_.dim()));
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != domain_.dim())
      throw PreconditionError("matrix row " + std::to_string(i) + " has " + std::to_string(rows_[i].size()) +
                              " entries but the domain has dimension " + std::to_string(domain_.dim()));
}

bool LinearMap::exact() const {
  for (const auto& r : rows_)
    if (!all_exact(r)) return false;
  return true;
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != domain_.dim()) throw PreconditionError("dimension mismatch in operator argument");
  Vector out;
  for (const auto& r : rows_) out.push_back(bjo::apply(r, x));
  return out;
}

LinearMap LinearMap::scaled(const Scalar& s) const {
  std::vector<Vector> rows;
  for (const auto& r : rows_) rows.push_back(bjo::scaled(r, s));
  return LinearMap(rows, domain_, codomain_);
}

LinearMap LinearMap::plus(const Scalar& s, const LinearMap& other) const {
  if (other.rows_.size() != rows_.size() || other.domain_.dim() != domain_.dim())
    throw PreconditionError("operators have different shapes");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < rows_.size(); ++i) rows.push_back(add(rows_[i], bjo::scaled(other.rows_[i], s)));
  return LinearMap(rows, domain_, codomain_);
}

namespace {

template <class Num>
Mat<Num> matrix_of(const LinearMap& t) {
  Mat<Num> m;
  for (const auto& r : t.rows()) m.push_back(conv<Num>(r));
  return m;
}

template <class Num>
Vec<Num> mul(const Mat<Num>& m, const Vec<Num>& x) {
  Vec<Num> out;
  for (const auto& r : m) out.push_back(dot(r, x));
  return out;
}

template <class Num>
Mat<Num> mat_axpy(const Num& s, const Mat<Num>& b, const Mat<Num>& a) {
  Mat<Num> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(axpy(s, b[i], a[i]));
  return out;
}

bool exact_route(const LinearMap& a) {
  return a.domain().is_exact() && a.codomain().is_exact() && a.exact();
}

double codomain_norm(const Space& y, const Vec<double>& v) {
  return y.is_polyhedral() ? y.float_polytope().norm(v) : y.analytic().norm(v);
}

struct FloatNorm {
  double value = 0;
  Mat<double> argmax;
  std::string method;
};

// Operator norm of a float matrix; exact vertex maximum for polyhedral domains.
FloatNorm float_op_norm(const Space& dom, const Space& cod, const Mat<double>& m, const SamplingOptions& opts,
                        bool collect = true) {
  FloatNorm out;
  double tol = std::max(dom.tolerance(), cod.tolerance());
  if (dom.is_polyhedral()) {
    out.method = "float";
    const auto& V = dom.float_polytope().vertices();
    Vec<double> vals;
    for (const auto& v : V) vals.push_back(codomain_norm(cod, mul(m, v)));
    out.value = *std::max_element(vals.begin(), vals.end());
    if (collect)
      for (std::size_t i = 0; i < V.size(); ++i)
        if (vals[i] >= out.value - tol * std::max(1.0, out.value)) out.argmax.push_back(V[i]);
    return out;
  }
  if (dom.kind() == SpaceKind::euclidean && cod.kind() == SpaceKind::euclidean) {
    out.method = "svd";
    Eigen::MatrixXd e(m.size(), dom.dim());
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < dom.dim(); ++j) e(i, j) = m[i][j];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(e, Eigen::ComputeFullV);
    out.value = svd.singularValues()(0);
    if (collect) {
      Vec<double> v(dom.dim());
      for (std::size_t j = 0; j < dom.dim(); ++j) v[j] = svd.matrixV()(j, 0);
      out.argmax = {v, negate(v)};
    }
    return out;
  }
  out.method = "sampled";
  auto best = detail::sample_sup(dom, opts, [&](const Vec<double>& x, std::mt19937_64&) {
    detail::Sampled s;
    s.x = x;
    s.value = codomain_norm(cod, mul(m, x));
    return s;
  });
  out.value = best.value;
  if (collect) out.argmax = {best.x};
  return out;
}

struct Pencil {
  Scalar min_value;
  Scalar lambda;
  Scalar norm_a;
  std::string method;
};

// min over lambda of ||A + lambda T||
Pencil minimize_pencil(const LinearMap& a, const LinearMap& t, const SamplingOptions& opts) {
  const Space& dom = a.domain();
  const Space& cod = a.codomain();
  if (exact_route(a) && t.exact()) {
    auto A = matrix_of<Rational>(a), T = matrix_of<Rational>(t);
    Vec<Rational> offsets, slopes;
    Rational na = 0;
    const auto& P = cod.exact_polytope();
    for (const auto& v : dom.exact_polytope().vertices()) {
      auto av = mul(A, v), tv = mul(T, v);
      na = std::max(na, P.norm(av));
      for (const auto& f : P.facets()) {
        offsets.push_back(dot(f.functional, av));
        slopes.push_back(dot(f.functional, tv));
      }
    }
    auto env = lp::minimize_max_affine(offsets, slopes);
    return {Scalar(env.value), Scalar(env.lambda), Scalar(na), "exact"};
  }
  auto A = matrix_of<double>(a), T = matrix_of<double>(t);
  double tol = std::max(dom.tolerance(), cod.tolerance());
  double na = float_op_norm(dom, cod, A, opts, false).value;
  if (dom.is_polyhedral() && cod.is_polyhedral()) {
    Vec<double> offsets, slopes;
    const auto& P = cod.float_polytope();
    for (const auto& v : dom.float_polytope().vertices()) {
      auto av = mul(A, v), tv = mul(T, v);
      for (const auto& f : P.facets()) {
        offsets.push_back(dot(f.functional, av));
        slopes.push_back(dot(f.functional, tv));
      }
    }
    auto env = lp::minimize_max_affine(offsets, slopes);
    return {Scalar::approx(env.value, tol), Scalar::approx(env.lambda, 1e-12), Scalar::approx(na, tol), "float"};
  }
  double nt = float_op_norm(dom, cod, T, opts, false).value;
  double bracket = 2 * na / nt;
  SamplingOptions inner = opts;
  inner.samples = std::min<std::size_t>(opts.samples, 1024);
  inner.refine = 2;
  auto phi = [&](double l) { return float_op_norm(dom, cod, mat_axpy(l, T, A), inner, false).value; };
  auto g = golden_section(phi, -bracket, bracket, 1e-10);
  double lambda = smallest_abs_minimizer(phi, g.argmin, g.min, -bracket, bracket, 1e-12);
  double sampled_tol = std::max(tol, 1e-9);
  return {Scalar::approx(std::min(g.min, phi(lambda)), sampled_tol), Scalar::approx(lambda, 1e-10),
          Scalar::approx(na, sampled_tol), "sampled"};
}

bool pencil_is_orthogonal(const Pencil& p, double tol) {
  if (p.min_value.exact() && p.norm_a.exact()) return p.min_value.rational() == p.norm_a.rational();
  return p.min_value.value() >= p.norm_a.value() - tol * std::max(1.0, p.norm_a.value());
}

void require_same_shape(const LinearMap& a, const LinearMap& t) {
  if (a.domain().dim() != t.domain().dim() || a.codomain().dim() != t.codomain().dim())
    throw PreconditionError("operators act between spaces of different dimensions");
}

bool is_zero_map(const LinearMap& t) {
  for (const auto& r : t.rows())
    if (!is_zero(r)) return false;
  return true;
}

}  // namespace

OperatorNorm operator_norm(const LinearMap& t, const SamplingOptions& opts) {
  OperatorNorm out;
  if (exact_route(t)) {
    auto T = matrix_of<Rational>(t);
    const auto& V = t.domain().exact_polytope().vertices();
    const auto& P = t.codomain().exact_polytope();
    std::vector<Rational> vals;
    for (const auto& v : V) vals.push_back(P.norm(mul(T, v)));
    Rational best = *std::max_element(vals.begin(), vals.end());
    for (std::size_t i = 0; i < V.size(); ++i)
      if (vals[i] == best) out.m_t.push_back(from_rationals(V[i]));
    out.value = Scalar(best);
    out.method = "exact";
    return out;
  }
  auto r = float_op_norm(t.domain(), t.codomain(), matrix_of<double>(t), opts);
  double tol = std::max(t.domain().tolerance(), t.codomain().tolerance());
  out.value = Scalar::approx(r.value, r.method == "sampled" ? 1e-6 : tol);
  for (const auto& v : r.argmax) out.m_t.push_back(from_doubles(v, tol));
  out.method = r.method;
  return out;
}

OperatorOrthoVerdict op_is_bj_orthogonal(const LinearMap& a, const LinearMap& t, const SamplingOptions& opts) {
  require_same_shape(a, t);
  if (is_zero_map(t)) throw PreconditionError("T must be nonzero");
  auto p = minimize_pencil(a, t, opts);
  OperatorOrthoVerdict v;
  double tol = p.method == "sampled" ? 1e-7 : std::max(a.domain().tolerance(), a.codomain().tolerance());
  v.holds = pencil_is_orthogonal(p, tol);
  v.norm_a = p.norm_a;
  v.min_value = p.min_value;
  v.lambda_star = p.lambda;
  v.method = p.method;
  return v;
}

OrthogonalPair make_orthogonal_pair(const LinearMap& seed_a, const LinearMap& seed_t, const SamplingOptions& opts) {
  require_same_shape(seed_a, seed_t);
  // seeds must be linearly independent as matrices
  Mat<double> flat(2);
  for (const auto& r : seed_a.rows())
    for (const auto& c : r) flat[0].push_back(c.value());
  for (const auto& r : seed_t.rows())
    for (const auto& c : r) flat[1].push_back(c.value());
  bool dependent;
  if (seed_a.exact() && seed_t.exact()) {
    Mat<Rational> q(2);
    for (const auto& r : seed_a.rows())
      for (const auto& c : r) q[0].push_back(c.rational());
    for (const auto& r : seed_t.rows())
      for (const auto& c : r) q[1].push_back(c.rational());
    dependent = rank(q, Cmp<Rational>{}) < 2;
  } else {
    dependent = rank(flat, Cmp<double>{1e-12}) < 2;
  }
  if (dependent) throw PreconditionError("seed operators are linearly dependent");

  auto p = minimize_pencil(seed_a, seed_t, opts);
  LinearMap b = seed_a.plus(p.lambda, seed_t);
  auto check = op_is_bj_orthogonal(b, seed_t, opts);
  if (!check.holds) throw VerificationError("constructed pair failed the orthogonality re-check");
  return {b, seed_t, p.lambda};
}

SupInfEpsilon sup_inf_epsilon(const LinearMap& t, const LinearMap& a, const SamplingOptions& opts) {
  require_same_shape(a, t);
  if (is_zero_map(t) || is_zero_map(a)) throw PreconditionError("operators must be nonzero");
  const Space& dom = t.domain();
  const Space& cod = t.codomain();
  auto T = matrix_of<double>(t), A = matrix_of<double>(a);
  double nt = float_op_norm(dom, cod, T, opts, false).value;
  double na = float_op_norm(dom, cod, A, opts, false).value;
  for (auto& r : T) r = scale(r, 1 / nt);
  for (auto& r : A) r = scale(r, 1 / na);

  auto inf_offset = [&](const Vec<double>& u, const Vec<double>& w) {
    if (cod.is_polyhedral()) return detail::PolyOracle<double>(cod.float_polytope(), cod.tolerance()).min_offset(u, w).value;
    return detail::AnalyticOracle(cod.analytic(), cod.tolerance()).min_offset(u, w).value;
  };
  auto best = detail::sample_sup(dom, opts, [&](const Vec<double>& x, std::mt19937_64&) {
    detail::Sampled s;
    s.x = x;
    auto tx = mul(T, x), ax = mul(A, x);
    double ntx = codomain_norm(cod, tx);
    if (ntx < 1e-12) return s;  // Tx = 0 lies in span{Ax}
    double v = codomain_norm(cod, ax) < 1e-12 ? ntx : inf_offset(tx, ax);
    if (v < 1e-12) return s;  // Tx parallel to Ax
    s.value = v;
    return s;
  });
  SupInfEpsilon out;
  out.samples = opts.samples;
  out.refine = opts.refine;
  out.script_a_nonempty = best.value > 0;
  double sup = std::clamp(best.value, 0.0, 1.0);
  out.sup_inf = Scalar::approx(sup, 1e-9);
  out.epsilon.value = Scalar::approx(std::sqrt(1 - sup * sup), 1e-6);
  out.epsilon.exact = false;
  out.epsilon.attained = out.script_a_nonempty;
  if (out.script_a_nonempty) out.argmax = from_doubles(best.x, dom.tolerance());
  return out;
}

DragomirReport verify_dragomir_conditions(const LinearMap& t, const LinearMap& a, double eps,
                                          const SamplingOptions& opts) {
  require_same_shape(a, t);
  if (!(eps >= 0 && eps < 1)) throw PreconditionError("eps must lie in [0, 1)");
  const Space& dom = t.domain();
  const Space& cod = t.codomain();
  auto T = matrix_of<double>(t), A = matrix_of<double>(a);
  double nt = float_op_norm(dom, cod, T, opts, false).value;
  double na = float_op_norm(dom, cod, A, opts, false).value;
  if (nt == 0 || na == 0) throw PreconditionError("operators must be nonzero");
  for (auto& r : T) r = scale(r, 1 / nt);
  for (auto& r : A) r = scale(r, 1 / na);
  double tol = std::max(1e-9, std::max(dom.tolerance(), cod.tolerance()));

  DragomirReport rep;
  rep.threshold = std::sqrt(1 - eps * eps);
  const double s = rep.threshold;

  // M_T: maximising extreme points, plus centroids of faces spanned by them
  auto mt = float_op_norm(dom, cod, T, opts, true);
  Mat<double> candidates = mt.argmax;
  if (dom.is_polyhedral()) {
    const auto& P = dom.float_polytope();
    for (const auto& G : P.faces()) {
      if (G.dim == 0) continue;
      bool all_in = true;
      for (auto vi : G.vertices) {
        bool found = false;
        for (const auto& m : mt.argmax)
          if (vec_eq(m, P.vertices()[vi], P.cmp())) found = true;
        all_in = all_in && found;
      }
      if (all_in) candidates.push_back(P.centroid(G));
    }
  }
  auto support = [&](const Vec<double>& y) {
    if (cod.is_polyhedral()) return detail::PolyOracle<double>(cod.float_polytope(), tol).support(y);
    return detail::AnalyticOracle(cod.analytic(), tol).support(y);
  };
  for (const auto& x : candidates) {
    auto tx = mul(T, x), ax = mul(A, x);
    if (codomain_norm(cod, tx) < 1e-12) continue;
    auto r = detail::generator_range(support(tx), ax);
    if (!rep.witness_a && r.hi >= -tol) rep.witness_a = from_doubles(x, tol);
    if (!rep.witness_b && r.lo <= tol) rep.witness_b = from_doubles(x, tol);
  }
  SamplingOptions inner = opts;
  inner.samples = std::min<std::size_t>(opts.samples, 1024);
  inner.refine = 1;
  auto interval_ok = [&](double lo, double hi) {
    for (std::size_t i = 0; i < rep.grid; ++i) {
      double l = lo + (double(i) + 0.5) * (hi - lo) / double(rep.grid);
      double n = float_op_norm(dom, cod, mat_axpy(l, A, T), inner, false).value;
      if (n < s - tol) return false;
    }
    return true;
  };
  rep.condition_a = rep.witness_a && interval_ok(-1 - s, -1 + s);
  rep.condition_b = rep.witness_b && interval_ok(1 - s, 1 + s);
  rep.certified = rep.condition_a || rep.condition_b;
  return rep;
}

}  // namespace bjo
