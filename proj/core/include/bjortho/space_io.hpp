#pragma once

#include <json.hpp>
#include <string>

#include "bjortho/operators.hpp"
#include "bjortho/space.hpp"

namespace bjo {

/// Space definitions:
///   {"kind":"polyhedral","vertices":[["2","2"],...]}   (or "facets")
///   {"kind":"lp","p":3,"dim":2}                         (p may be "inf")
///   {"kind":"l2linf"}
///   {"kind":"regular_polygon","n":6}
///   {"kind":"catalog","name":"decagon"}
/// A bare string is read as a catalog name.
Space space_from_json(const nlohmann::json& j);
Space load_space(const std::string& path);

/// {"kind":"operator","matrix":[["1","0"],["0","1/2"]],"domain":{...},"codomain":{...}}
/// codomain defaults to the domain.
LinearMap operator_from_json(const nlohmann::json& j);
LinearMap load_operator(const std::string& path);

nlohmann::json descriptor_json(const Space& s);
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json vector_json(const Vector& v);

}  // namespace bjo
