#include "bjortho/polytope.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bjortho/error.hpp"

namespace bjo {

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class Num>
Mat<Num> dedupe(const Mat<Num>& pts, const Cmp<Num>& cmp) {
  Mat<Num> out;
  for (const auto& p : pts) {
    bool seen = false;
    for (const auto& q : out)
      if (vec_eq(p, q, cmp)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(p);
  }
  return out;
}

template <class Num>
void require_symmetric(const Mat<Num>& pts, const Cmp<Num>& cmp, const char* what) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto neg = negate(pts[i]);
    bool found = false;
    for (const auto& q : pts)
      if (vec_eq(neg, q, cmp)) {
        found = true;
        break;
      }
    if (!found) throw PreconditionError(std::string(what) + " list is not origin-symmetric (entry " +
                                        std::to_string(i) + " has no antipode)");
  }
}

// All solutions z of <rows[i], z> = 1 for d linearly independent rows that
// satisfy <r, z> <= 1 for every row r.
template <class Num>
Mat<Num> enumerate_dual_points(const Mat<Num>& rows, std::size_t d, const Cmp<Num>& cmp) {
  Mat<Num> found;
  for_each_subset(rows.size(), d, [&](const std::vector<std::size_t>& idx) {
    Mat<Num> m;
    for (auto i : idx) m.push_back(rows[i]);
    auto z = solve_linear(m, Vec<Num>(d, Num(1)), cmp);
    if (!z) return;
    for (const auto& r : rows)
      if (!cmp.le(dot(r, *z), Num(1))) return;
    for (const auto& f : found)
      if (vec_eq(f, *z, cmp)) return;
    found.push_back(*z);
  });
  return found;
}

// half-plane index then cross product: counter-clockwise from angle 0
template <class Num>
bool polar_less(const Vec<Num>& a, const Vec<Num>& b, const Cmp<Num>& cmp) {
  auto half = [&](const Vec<Num>& p) {
    int sy = cmp.sign(p[1]);
    return (sy > 0 || (sy == 0 && cmp.sign(p[0]) > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cmp.sign(a[0] * b[1] - a[1] * b[0]) > 0;
}

}  // namespace

template <class Num>
Polytope<Num> Polytope<Num>::from_vertices(const Mat<Num>& points, Cmp<Num> cmp) {
  if (points.empty()) throw PreconditionError("no vertices given");
  const std::size_t d = points.front().size();
  for (const auto& p : points)
    if (p.size() != d) throw PreconditionError("vertices have inconsistent dimensions");
  if (d < 2 || d > 3)
    throw PreconditionError("hull construction supports dimensions 2 and 3 only (got " + std::to_string(d) +
                            "); supply facet functionals instead");
  auto pts = dedupe(points, cmp);
  require_symmetric(pts, cmp, "vertex");

  auto functionals = enumerate_dual_points(pts, d, cmp);
  if (functionals.empty()) throw PreconditionError("degenerate hull: vertices do not span the space");

  Polytope out;
  out.dim_ = d;
  out.cmp_ = cmp;
  for (const auto& p : pts) {
    Mat<Num> active;
    for (const auto& f : functionals)
      if (cmp.eq(dot(f, p), Num(1))) active.push_back(f);
    if (rank(active, cmp) == d) out.vertices_.push_back(p);
  }
  for (const auto& f : functionals) out.facets_.push_back({f, {}});
  out.build_lattice();
  return out;
}

template <class Num>
Polytope<Num> Polytope<Num>::from_facets(const Mat<Num>& functionals, Cmp<Num> cmp) {
  if (functionals.empty()) throw PreconditionError("no facet functionals given");
  const std::size_t d = functionals.front().size();
  for (const auto& f : functionals)
    if (f.size() != d) throw PreconditionError("facet functionals have inconsistent dimensions");
  if (d < 2 || d > 8) throw PreconditionError("dimension must be between 2 and 8 (got " + std::to_string(d) + ")");
  auto fs = dedupe(functionals, cmp);
  require_symmetric(fs, cmp, "facet functional");

  auto verts = enumerate_dual_points(fs, d, cmp);
  if (verts.empty() || rank(verts, cmp) < d)
    throw PreconditionError("degenerate facet input: unit ball is unbounded or flat");

  Polytope out;
  out.dim_ = d;
  out.cmp_ = cmp;
  out.vertices_ = verts;
  for (const auto& f : fs) {
    Mat<Num> incident;
    for (const auto& v : verts)
      if (cmp.eq(dot(f, v), Num(1))) incident.push_back(v);
    if (rank(incident, cmp) == d) out.facets_.push_back({f, {}});
  }
  out.build_lattice();
  return out;
}

template <class Num>
Polytope<Num> Polytope<Num>::from_vertices_and_facets(const Mat<Num>& vertices, const Mat<Num>& functionals,
                                                      Cmp<Num> cmp) {
  if (vertices.empty() || functionals.empty()) throw PreconditionError("empty polytope description");
  const std::size_t d = vertices.front().size();
  Polytope out;
  out.dim_ = d;
  out.cmp_ = cmp;
  out.vertices_ = vertices;
  for (const auto& f : functionals) {
    if (f.size() != d) throw PreconditionError("facet functionals have inconsistent dimensions");
    for (const auto& v : vertices)
      if (!cmp.le(dot(f, v), Num(1))) throw PreconditionError("vertex lies outside a facet half-space");
    out.facets_.push_back({f, {}});
  }
  for (const auto& v : vertices) {
    Mat<Num> active;
    for (const auto& f : functionals)
      if (cmp.eq(dot(f, v), Num(1))) active.push_back(f);
    if (rank(active, cmp) != d) throw PreconditionError("a listed vertex is not a vertex of the facet description");
  }
  out.build_lattice();
  return out;
}

template <class Num>
void Polytope<Num>::build_lattice() {
  if (dim_ == 2) order_planar();

  for (auto& facet : facets_) {
    facet.vertices.clear();
    for (std::size_t v = 0; v < vertices_.size(); ++v)
      if (cmp_.eq(dot(facet.functional, vertices_[v]), Num(1))) facet.vertices.push_back(v);
  }

  // every face is an intersection of facets
  std::set<std::vector<std::size_t>> sets;
  for (const auto& f : facets_) sets.insert(f.vertices);
  std::vector<std::vector<std::size_t>> frontier(sets.begin(), sets.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier)
      for (const auto& f : facets_) {
        std::vector<std::size_t> meet;
        std::set_intersection(s.begin(), s.end(), f.vertices.begin(), f.vertices.end(), std::back_inserter(meet));
        if (!meet.empty() && sets.insert(meet).second) next.push_back(meet);
      }
    frontier = std::move(next);
  }

  faces_.clear();
  for (const auto& s : sets) {
    Face face;
    face.vertices = s;
    for (std::size_t k = 0; k < facets_.size(); ++k)
      if (std::includes(facets_[k].vertices.begin(), facets_[k].vertices.end(), s.begin(), s.end()))
        face.facets.push_back(k);
    Mat<Num> diffs;
    for (std::size_t i = 1; i < s.size(); ++i) diffs.push_back(sub(vertices_[s[i]], vertices_[s[0]]));
    face.dim = rank(diffs, cmp_);
    faces_.push_back(std::move(face));
  }
  std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.dim == 0) return a.vertices < b.vertices;
    return a.facets < b.facets;
  });
  face_lookup_.clear();
  for (std::size_t i = 0; i < faces_.size(); ++i) face_lookup_[faces_[i].vertices] = i;
}

template <class Num>
void Polytope<Num>::order_planar() {
  std::stable_sort(vertices_.begin(), vertices_.end(),
                   [&](const Vec<Num>& a, const Vec<Num>& b) { return polar_less(a, b, cmp_); });
  const std::size_t n = vertices_.size();
  std::vector<Facet> ordered;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& a = vertices_[(k + n - 1) % n];
    const auto& b = vertices_[k];
    for (const auto& f : facets_)
      if (cmp_.eq(dot(f.functional, a), Num(1)) && cmp_.eq(dot(f.functional, b), Num(1))) {
        ordered.push_back(f);
        break;
      }
  }
  if (ordered.size() != facets_.size()) throw PreconditionError("polygon edges are inconsistent with its vertices");
  facets_ = std::move(ordered);
}

template <class Num>
Num Polytope<Num>::norm(const Vec<Num>& v) const {
  Num best = dot(facets_.front().functional, v);
  for (std::size_t k = 1; k < facets_.size(); ++k) {
    Num val = dot(facets_[k].functional, v);
    if (val > best) best = val;
  }
  return best;
}

template <class Num>
Num Polytope<Num>::dual_norm(const Vec<Num>& f) const {
  Num best = dot(f, vertices_.front());
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    Num val = dot(f, vertices_[k]);
    if (val > best) best = val;
  }
  return best;
}

template <class Num>
std::vector<std::size_t> Polytope<Num>::active_facets(const Vec<Num>& x) const {
  Num n = norm(x);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    Num val = dot(facets_[k].functional, x);
    bool hit;
    if constexpr (Cmp<Num>::exact)
      hit = val == n;
    else
      hit = std::abs(val - n) <= cmp_.tol() * std::max(1.0, std::abs(n));
    if (hit) out.push_back(k);
  }
  return out;
}

template <class Num>
std::optional<std::size_t> Polytope<Num>::vertex_index(const Vec<Num>& v) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vec_eq(vertices_[i], v, cmp_)) return i;
  return std::nullopt;
}

template <class Num>
std::optional<std::size_t> Polytope<Num>::face_with_vertices(const std::vector<std::size_t>& vertex_set) const {
  auto it = face_lookup_.find(vertex_set);
  if (it == face_lookup_.end()) return std::nullopt;
  return it->second;
}

template <class Num>
std::size_t Polytope<Num>::carrier_face(const Vec<Num>& x) const {
  auto active = active_facets(x);
  std::vector<std::size_t> meet = facets_[active.front()].vertices;
  for (std::size_t i = 1; i < active.size(); ++i) {
    std::vector<std::size_t> next;
    const auto& vs = facets_[active[i]].vertices;
    std::set_intersection(meet.begin(), meet.end(), vs.begin(), vs.end(), std::back_inserter(next));
    meet = std::move(next);
  }
  auto idx = face_with_vertices(meet);
  if (!idx) throw VerificationError("carrier face missing from lattice");
  return *idx;
}

template <class Num>
Vec<Num> Polytope<Num>::centroid(const Face& face) const {
  Vec<Num> c(dim_, Num(0));
  for (auto v : face.vertices) c = add(c, vertices_[v]);
  return scale(c, Num(1) / Num(static_cast<long>(face.vertices.size())));
}

template <class Num>
bool Polytope<Num>::share_facet(const Vec<Num>& u, const Vec<Num>& v) const {
  for (const auto& f : facets_)
    if (cmp_.eq(dot(f.functional, u), Num(1)) && cmp_.eq(dot(f.functional, v), Num(1))) return true;
  return false;
}

template <class Num>
Polytope<double> Polytope<Num>::to_double(double tol) const {
  Polytope<double> out;
  out.dim_ = dim_;
  out.cmp_ = Cmp<double>{tol};
  for (const auto& v : vertices_) {
    Vec<double> w;
    for (const auto& c : v) w.push_back(num_to_double(c));
    out.vertices_.push_back(std::move(w));
  }
  for (const auto& f : facets_) {
    Vec<double> g;
    for (const auto& c : f.functional) g.push_back(num_to_double(c));
    out.facets_.push_back({std::move(g), f.vertices});
  }
  for (const auto& face : faces_) out.faces_.push_back({face.vertices, face.facets, face.dim});
  out.face_lookup_ = face_lookup_;
  return out;
}

template class Polytope<Rational>;
template class Polytope<double>;

}  // namespace bjo
