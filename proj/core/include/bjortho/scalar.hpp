#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace bjo {

using Rational = mpq_class;

inline constexpr double kDefaultTolerance = 1e-9;

/// Parses "p", "p/q" or a finite decimal such as "-3.25" into a reduced rational.
/// Throws PreconditionError on anything else.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

/// Exact rational, or float64 carrying an absolute error bound.
///
/// Arithmetic between two exact values stays exact. As soon as one operand
/// is approximate the result is approximate and the error bounds are
/// propagated to first order.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational q);  // NOLINT(google-explicit-constructor)
  Scalar(int v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  static Scalar approx(double v, double tol = kDefaultTolerance);
  static Scalar parse(std::string_view text) { return Scalar(parse_rational(text)); }

  bool exact() const { return std::holds_alternative<Rational>(value_); }

  /// Throws PreconditionError when the value is approximate.
  const Rational& rational() const;
  double value() const;
  double tolerance() const;

  /// "p/q" for exact values, 17 significant digits otherwise.
  std::string str() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Exact values compare exactly; otherwise equal within the combined tolerance.
  friend bool approx_equal(const Scalar& a, const Scalar& b);
  /// Sign with tolerance: 0 when |value| <= tolerance.
  int sign() const;

 private:
  struct Approx {
    double value;
    double tol;
  };
  explicit Scalar(Approx a) : value_(a) {}

  std::variant<Rational, Approx> value_;
};

Scalar abs(const Scalar& s);
/// Exact square root when the argument is the square of a rational, float otherwise.
Scalar sqrt(const Scalar& s);

}  // namespace bjo
