#include "bjortho/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "bjortho/error.hpp"

namespace bjo {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view raw) {
  std::string_view text = raw;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  auto fail = [&]() -> Rational {
    throw PreconditionError("malformed rational '" + std::string(raw) + "'");
  };
  if (text.empty()) return fail();

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational q;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos && text.find('/') == std::string_view::npos) {
    // decimal with exponent, as printed for floats
    auto exp_text = text.substr(e + 1);
    bool neg_exp = !exp_text.empty() && exp_text.front() == '-';
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) exp_text.remove_prefix(1);
    if (!all_digits(exp_text) || exp_text.size() > 4) return fail();
    Rational mantissa = parse_rational(text.substr(0, e));
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, std::stoul(std::string(exp_text)));
    q = neg_exp ? Rational(mantissa / p) : Rational(mantissa * p);
  } else if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw PreconditionError("zero denominator in '" + std::string(raw) + "'");
    q = Rational(n, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      return fail();
    mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
    q = Rational(n, d);
  } else {
    if (!all_digits(text)) return fail();
    q = Rational(mpz_class(std::string(text), 10));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// get_d truncates; pick the nearest of the truncated value and its outward neighbour
double to_double(const Rational& q) {
  double d = q.get_d();
  if (!std::isfinite(d) || Rational(d) == q) return d;
  double other = std::nextafter(d, sgn(q) > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(other)) return d;
  Rational ed = abs(q - Rational(d)), eo = abs(q - Rational(other));
  return eo < ed ? other : d;
}

std::string format_double(double v) {
  char buf[64];
  if (v == 0) v = 0;  // no "-0"
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Scalar::Scalar(Rational q) : value_(std::move(q)) {
  std::get<Rational>(value_).canonicalize();
}

Scalar Scalar::approx(double v, double tol) { return Scalar(Approx{v, tol}); }

const Rational& Scalar::rational() const {
  if (!exact()) throw PreconditionError("scalar " + str() + " is not exact");
  return std::get<Rational>(value_);
}

double Scalar::value() const {
  if (exact()) return std::get<Rational>(value_).get_d();
  return std::get<Approx>(value_).value;
}

double Scalar::tolerance() const { return exact() ? 0.0 : std::get<Approx>(value_).tol; }

std::string Scalar::str() const {
  if (exact()) return to_string(std::get<Rational>(value_));
  return format_double(std::get<Approx>(value_).value);
}

Scalar Scalar::operator-() const {
  if (exact()) return Scalar(Rational(-std::get<Rational>(value_)));
  auto a = std::get<Approx>(value_);
  return Scalar(Approx{-a.value, a.tol});
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() + b.rational()));
  return Scalar::approx(a.value() + b.value(), a.tolerance() + b.tolerance());
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() * b.rational()));
  double ta = a.tolerance(), tb = b.tolerance();
  return Scalar::approx(a.value() * b.value(),
                        std::abs(a.value()) * tb + std::abs(b.value()) * ta + ta * tb);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.exact() && sgn(b.rational()) == 0) throw PreconditionError("division by zero");
  if (a.exact() && b.exact()) return Scalar(Rational(a.rational() / b.rational()));
  double bv = b.value();
  double q = a.value() / bv;
  double tol = (a.tolerance() + std::abs(q) * b.tolerance()) / std::abs(bv);
  return Scalar::approx(q, tol);
}

bool approx_equal(const Scalar& a, const Scalar& b) {
  if (a.exact() && b.exact()) return a.rational() == b.rational();
  return std::abs(a.value() - b.value()) <= a.tolerance() + b.tolerance();
}

int Scalar::sign() const {
  if (exact()) return sgn(std::get<Rational>(value_));
  auto a = std::get<Approx>(value_);
  if (a.value > a.tol) return 1;
  if (a.value < -a.tol) return -1;
  return 0;
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar sqrt(const Scalar& s) {
  if (s.sign() < 0) throw PreconditionError("square root of negative scalar " + s.str());
  if (s.exact()) {
    const Rational& q = s.rational();
    mpz_class n = q.get_num(), d = q.get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
      return Scalar(Rational(rn, rd));
    }
    return Scalar::approx(std::sqrt(q.get_d()), 1e-15);
  }
  double v = std::max(0.0, s.value());
  double r = std::sqrt(v);
  // first-order bound, falling back to sqrt(tol) near zero
  double tol = r > 0 ? std::min(s.tolerance() / (2 * r), std::sqrt(s.tolerance())) : std::sqrt(s.tolerance());
  return Scalar::approx(r, tol);
}

}  // namespace bjo
