#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "bjortho/scalar.hpp"

namespace bjo {

/// Coordinates of a point of R^n, or dual coordinates of a functional.
using Vector = std::vector<Scalar>;

Vector make_vector(std::initializer_list<Rational> coords);
Vector make_vector(std::initializer_list<std::string_view> coords);
Vector from_doubles(const std::vector<double>& coords, double tol = kDefaultTolerance);
Vector from_rationals(const std::vector<Rational>& coords);

/// Parses "1,-1/2,3/10".
Vector parse_vector(std::string_view text);

bool all_exact(const Vector& v);
std::vector<Rational> to_rationals(const Vector& v);
std::vector<double> to_doubles(const Vector& v);
std::vector<std::string> to_strings(const Vector& v);
std::string to_string(const Vector& v);

/// Action of a functional: sum of f_i x_i.
Scalar apply(const Vector& f, const Vector& x);
Vector scaled(const Vector& v, const Scalar& s);
Vector add(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace bjo
