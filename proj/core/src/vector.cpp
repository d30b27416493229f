#include "bjortho/vector.hpp"

#include "bjortho/error.hpp"

namespace bjo {

Vector make_vector(std::initializer_list<Rational> coords) {
  Vector v;
  v.reserve(coords.size());
  for (const auto& c : coords) v.emplace_back(c);
  return v;
}

Vector make_vector(std::initializer_list<std::string_view> coords) {
  Vector v;
  v.reserve(coords.size());
  for (auto c : coords) v.emplace_back(parse_rational(c));
  return v;
}

Vector from_doubles(const std::vector<double>& coords, double tol) {
  Vector v;
  v.reserve(coords.size());
  for (double c : coords) v.push_back(Scalar::approx(c, tol));
  return v;
}

Vector from_rationals(const std::vector<Rational>& coords) {
  return Vector(coords.begin(), coords.end());
}

Vector parse_vector(std::string_view text) {
  Vector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    v.emplace_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

bool all_exact(const Vector& v) {
  for (const auto& s : v)
    if (!s.exact()) return false;
  return true;
}

std::vector<Rational> to_rationals(const Vector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.rational());
  return out;
}

std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.value());
  return out;
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out + ")";
}

Scalar apply(const Vector& f, const Vector& x) {
  if (f.size() != x.size())
    throw PreconditionError("dimension mismatch: functional has " + std::to_string(f.size()) +
                            " coordinates, vector has " + std::to_string(x.size()));
  Scalar acc;
  for (std::size_t i = 0; i < f.size(); ++i) acc = acc + f[i] * x[i];
  return acc;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c * s);
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("dimension mismatch in vector sum");
  Vector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& c : v)
    if (c.sign() != 0) return false;
  return true;
}

}  // namespace bjo
