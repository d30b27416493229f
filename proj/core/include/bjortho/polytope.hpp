#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bjortho/numeric.hpp"

namespace bjo {

/// Origin-symmetric polytope serving as the unit ball of a polyhedral norm.
///
/// Facet functionals are normalised so that f == 1 on their facet; they are
/// then exactly the vertices of the dual ball. The face lattice holds every
/// proper face (vertices, edges, ..., facets) as the set of its vertices
/// together with the facets containing it.
///
/// In two dimensions vertices are stored counter-clockwise starting at the
/// smallest non-negative polar angle, and facet k joins vertex k-1 to
/// vertex k (facet 0 closes the polygon from the last vertex).
template <class Num>
class Polytope {
 public:
  struct Facet {
    Vec<Num> functional;
    std::vector<std::size_t> vertices;
  };
  struct Face {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> facets;
    std::size_t dim = 0;
  };

  /// Hull mode: points in dimension 2 or 3, origin-symmetric, full-dimensional.
  /// Points that are not extreme are dropped.
  static Polytope from_vertices(const Mat<Num>& points, Cmp<Num> cmp = {});

  /// Facet mode: dual functionals g with B = {x : g(x) <= 1 for all g}, any
  /// dimension 2..8. Redundant functionals are dropped.
  static Polytope from_facets(const Mat<Num>& functionals, Cmp<Num> cmp = {});

  /// Both descriptions already known (cubes, cross-polytopes, regular
  /// polygons). Incidences are still checked.
  static Polytope from_vertices_and_facets(const Mat<Num>& vertices, const Mat<Num>& functionals, Cmp<Num> cmp = {});

  std::size_t dim() const { return dim_; }
  const Cmp<Num>& cmp() const { return cmp_; }
  const Mat<Num>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Face>& faces() const { return faces_; }

  /// max over facet functionals f of f(v)
  Num norm(const Vec<Num>& v) const;
  /// max over vertices w of f(w)
  Num dual_norm(const Vec<Num>& f) const;
  /// Facets f with f(x) = ||x||; x must be nonzero.
  std::vector<std::size_t> active_facets(const Vec<Num>& x) const;
  std::optional<std::size_t> vertex_index(const Vec<Num>& v) const;
  std::optional<std::size_t> face_with_vertices(const std::vector<std::size_t>& vertex_set) const;
  /// Face whose relative interior contains x / ||x||.
  std::size_t carrier_face(const Vec<Num>& x) const;
  Vec<Num> centroid(const Face& face) const;
  /// True when both points lie in a common facet (segment inside the sphere).
  bool share_facet(const Vec<Num>& u, const Vec<Num>& v) const;

  Polytope<double> to_double(double tol) const;

 private:
  template <class>
  friend class Polytope;

  Polytope() = default;
  void build_lattice();
  void order_planar();

  std::size_t dim_ = 0;
  Cmp<Num> cmp_{};
  Mat<Num> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_lookup_;
};

extern template class Polytope<Rational>;
extern template class Polytope<double>;

}  // namespace bjo
