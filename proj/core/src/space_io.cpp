#include "bjortho/space_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "bjortho/catalog.hpp"
#include "bjortho/error.hpp"

namespace bjo {

using nlohmann::json;

namespace {

Scalar entry(const json& e, const std::string& field) {
  if (e.is_string()) {
    try {
      return Scalar::parse(e.get<std::string>());
    } catch (const PreconditionError& err) {
      throw PreconditionError(field + ": " + err.what());
    }
  }
  if (e.is_number_integer()) return Scalar(Rational(std::to_string(e.get<long long>())));
  if (e.is_number_float()) return Scalar::approx(e.get<double>(), kDefaultTolerance);
  throw PreconditionError(field + ": expected a rational string or number");
}

std::vector<Vector> rows_of(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw PreconditionError(field + ": expected a non-empty array of rows");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& row = j[i];
    std::string f = field + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw PreconditionError(f + ": expected an array");
    Vector v;
    for (std::size_t k = 0; k < row.size(); ++k) v.push_back(entry(row[k], f + "[" + std::to_string(k) + "]"));
    if (!out.empty() && v.size() != out.front().size())
      throw PreconditionError("dimension mismatch in " + f + ": expected " + std::to_string(out.front().size()) +
                              ", got " + std::to_string(v.size()));
    out.push_back(std::move(v));
  }
  return out;
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read file " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw PreconditionError("malformed JSON in " + path + ": " + e.what());
  }
}

std::string require_kind(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw PreconditionError("kind: missing or not a string");
  return j["kind"].get<std::string>();
}

}  // namespace

Space space_from_json(const json& j) {
  if (j.is_string()) return catalog_space(j.get<std::string>());
  std::string kind = require_kind(j);
  double tol = j.value("tol", kDefaultTolerance);
  Space s = [&]() {
    if (kind == "polyhedral") {
      if (j.contains("vertices")) return Space::polyhedral(rows_of(j["vertices"], "vertices"), tol);
      if (j.contains("facets")) return Space::polyhedral_from_facets(rows_of(j["facets"], "facets"), tol);
      throw PreconditionError("polyhedral space needs vertices or facets");
    }
    if (kind == "lp") {
      if (!j.contains("p") || !j.contains("dim")) throw PreconditionError("lp space needs p and dim");
      double p;
      if (j["p"].is_string()) {
        std::string ps = j["p"].get<std::string>();
        if (ps == "inf") p = std::numeric_limits<double>::infinity();
        else p = to_double(parse_rational(ps));
      } else if (j["p"].is_number()) {
        p = j["p"].get<double>();
      } else {
        throw PreconditionError("p: expected a number or \"inf\"");
      }
      if (!j["dim"].is_number_unsigned()) throw PreconditionError("dim: expected a positive integer");
      return Space::lp(p, j["dim"].get<std::size_t>());
    }
    if (kind == "euclidean") return Space::lp(2, j.value("dim", std::size_t(2)));
    if (kind == "l2linf") return Space::l2linf();
    if (kind == "regular_polygon") {
      if (!j.contains("n") || !j["n"].is_number_unsigned()) throw PreconditionError("n: expected a positive integer");
      return Space::regular_polygon(j["n"].get<std::size_t>());
    }
    if (kind == "catalog") {
      if (!j.contains("name") || !j["name"].is_string()) throw PreconditionError("name: missing catalog name");
      return catalog_space(j["name"].get<std::string>());
    }
    throw PreconditionError("kind: unknown space kind '" + kind + "'");
  }();
  if (j.contains("tol") && tol != s.tolerance()) s = s.with_tolerance(tol);
  return s;
}

Space load_space(const std::string& path) { return space_from_json(read_file(path)); }

LinearMap operator_from_json(const json& j) {
  if (require_kind(j) != "operator") throw PreconditionError("kind: expected 'operator'");
  if (!j.contains("matrix")) throw PreconditionError("matrix: missing");
  if (!j.contains("domain")) throw PreconditionError("domain: missing");
  Space dom = space_from_json(j["domain"]);
  Space cod = j.contains("codomain") ? space_from_json(j["codomain"]) : dom;
  return LinearMap(rows_of(j["matrix"], "matrix"), dom, cod);
}

LinearMap load_operator(const std::string& path) { return operator_from_json(read_file(path)); }

json scalar_json(const Scalar& s) { return s.str(); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.str());
  return out;
}

json descriptor_json(const Space& s) {
  const auto& d = s.descriptor();
  json out;
  out["kind"] = d.kind;
  out["dim"] = s.dim();
  out["label"] = s.label();
  if (!d.name.empty()) out["name"] = d.name;
  if (d.kind == "lp") out["p"] = std::isinf(d.p) ? json("inf") : json(d.p);
  if (d.kind == "regular_polygon") out["n"] = d.n;
  out["exact"] = s.is_exact();
  out["polyhedral"] = s.is_polyhedral();
  out["tolerance"] = s.tolerance();
  return out;
}

}  // namespace bjo
