#pragma once

#include <bjortho/bjortho.hpp>
#include <json.hpp>
#include <string>

namespace bjo::cli {

using nlohmann::json;

json vec(const Vector& v);
json opt_vec(const std::optional<Vector>& v);
json vec_list(const std::vector<Vector>& vs);

json verdict_json(const PropertyVerdict& v);
json constant_json(const SymmetryConstant& c);
json epsilon_json(const EpsilonStar& e);
json r_json(const RConstant& r);

/// Indented "key: value" lines; arrays of scalars are printed inline.
std::string render_text(const json& report);

}  // namespace bjo::cli
