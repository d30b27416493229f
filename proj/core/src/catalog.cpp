#include "bjortho/catalog.hpp"

#include <limits>

#include "bjortho/error.hpp"

namespace bjo {

namespace {

Space named(Space s, const std::string& name) {
  SpaceDescriptor d = s.descriptor();
  d.name = name;
  return s.with_descriptor(d);
}

std::vector<Vector> symmetric(std::initializer_list<std::initializer_list<std::string_view>> half) {
  std::vector<Vector> out;
  for (auto row : half) out.push_back(make_vector(row));
  std::size_t n = out.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(scaled(out[i], Scalar(-1)));
  return out;
}

Space decagon() { return Space::polyhedral(symmetric({{"2", "2"}, {"1", "3"}, {"0", "7/2"}, {"-1", "3"}, {"-2", "2"}})); }

Space fig9_hexagon() { return Space::polyhedral(symmetric({{"2", "1/2"}, {"0", "2"}, {"-2", "1/2"}})); }

// Hexagonal prism-like body: hexagon H at heights -3, 0, 3 scaled by 3, 6, 3.
// H is a linear image of the regular hexagon with rational coordinates.
Space fig6_prism() {
  const int hex[6][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};
  std::vector<Vector> pts;
  for (auto [r, z] : {std::pair{3, -3}, std::pair{6, 0}, std::pair{3, 3}})
    for (auto& h : hex) pts.push_back(make_vector({Rational(r * h[0]), Rational(r * h[1]), Rational(z)}));
  return Space::polyhedral(pts);
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names{"linf2", "linf3", "l1-2", "l2-2", "l2-3", "l2linf"};
  for (int n = 6; n <= 16; n += 2) names.push_back("regular-polygon-" + std::to_string(n));
  names.insert(names.end(), {"decagon", "fig9-hexagon", "fig6-prism"});
  return names;
}

Space catalog_space(const std::string& name) {
  const double inf = std::numeric_limits<double>::infinity();
  if (name == "linf2") return named(Space::lp(inf, 2), name);
  if (name == "linf3") return named(Space::lp(inf, 3), name);
  if (name == "l1-2") return named(Space::lp(1, 2), name);
  if (name == "l2-2") return named(Space::lp(2, 2), name);
  if (name == "l2-3") return named(Space::lp(2, 3), name);
  if (name == "l2linf") return named(Space::l2linf(), name);
  if (name == "decagon") return named(decagon(), name);
  if (name == "fig9-hexagon") return named(fig9_hexagon(), name);
  if (name == "fig6-prism") return named(fig6_prism(), name);
  const std::string prefix = "regular-polygon-";
  if (name.rfind(prefix, 0) == 0) {
    std::string digits = name.substr(prefix.size());
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 4)
      return named(Space::regular_polygon(std::stoul(digits)), name);
  }
  throw PreconditionError("unknown catalog name '" + name + "'");
}

}  // namespace bjo
