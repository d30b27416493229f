#include "report.hpp"

#include <sstream>

namespace bjo::cli {

json vec(const Vector& v) { return vector_json(v); }

json opt_vec(const std::optional<Vector>& v) { return v ? vec(*v) : json(nullptr); }

json vec_list(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec(v));
  return out;
}

json verdict_json(const PropertyVerdict& v) {
  json j;
  j["holds"] = v.holds;
  j["conclusive"] = v.conclusive;
  j["method"] = v.method;
  j["x"] = opt_vec(v.x);
  j["y"] = opt_vec(v.y);
  j["functional"] = opt_vec(v.functional);
  j["note"] = v.note;
  return j;
}

json constant_json(const SymmetryConstant& c) {
  json j;
  j["value"] = c.value.str();
  j["kind"] = c.kind;
  j["side"] = c.side;
  j["method"] = c.method;
  j["symmetric"] = c.symmetric;
  j["resolution"] = {{"samples", c.samples}, {"refine", c.refine}, {"factor", c.factor}};
  j["x"] = opt_vec(c.x);
  j["y"] = opt_vec(c.y);
  return j;
}

json epsilon_json(const EpsilonStar& e) {
  json j;
  j["value"] = e.value.str();
  j["attained"] = e.attained;
  j["exact"] = e.exact;
  j["certificate"] = opt_vec(e.certificate);
  return j;
}

json r_json(const RConstant& r) {
  json j;
  j["value"] = r.value.str();
  j["u"] = opt_vec(r.u);
  j["v"] = opt_vec(r.v);
  j["method"] = r.method;
  return j;
}

namespace {

bool scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

std::string inline_value(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (scalar_array(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + inline_value(j[i]);
    return s + ")";
  }
  return j.dump();
}

void render(std::ostringstream& os, const json& j, int depth) {
  std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        os << pad << k << ":\n";
        render(os, v, depth + 1);
      } else {
        os << pad << k << ": " << inline_value(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !scalar_array(v)) {
        os << pad << "-\n";
        render(os, v, depth + 1);
      } else {
        os << pad << "- " << inline_value(v) << "\n";
      }
    }
  } else {
    os << pad << inline_value(j) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace bjo::cli
