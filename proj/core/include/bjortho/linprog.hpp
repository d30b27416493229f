#pragma once

// Small dense two-phase simplex with Bland's anti-cycling rule. Works over
// Rational (exact) and double (with a fixed pivot tolerance). Problems in
// this library have at most a few dozen rows and columns.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bjortho/numeric.hpp"

namespace bjo::lp {

enum class Sense { le, ge, eq };
enum class Status { optimal, infeasible, unbounded };

template <class Num>
struct Constraint {
  Vec<Num> coeffs;
  Sense sense;
  Num rhs;
};

/// maximize objective . z subject to constraints; variables flagged free are
/// unrestricted in sign, all others are >= 0.
template <class Num>
struct Problem {
  std::size_t num_vars = 0;
  Vec<Num> objective;
  std::vector<bool> free;
  std::vector<Constraint<Num>> constraints;

  explicit Problem(std::size_t n) : num_vars(n), objective(n, Num(0)), free(n, false) {}

  void add(Vec<Num> coeffs, Sense sense, Num rhs) {
    constraints.push_back({std::move(coeffs), sense, std::move(rhs)});
  }
};

template <class Num>
struct Solution {
  Status status = Status::infeasible;
  Num objective = 0;
  Vec<Num> values;
};

namespace detail {

template <class Num>
struct PivotCmp;
template <>
struct PivotCmp<Rational> {
  static int sign(const Rational& a) { return sgn(a); }
};
template <>
struct PivotCmp<double> {
  static constexpr double eps = 1e-11;
  static int sign(double a) { return a > eps ? 1 : (a < -eps ? -1 : 0); }
};

template <class Num>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : t_(rows + 1, Vec<Num>(cols + 1, Num(0))), basis_(rows) {}

  Num& at(std::size_t r, std::size_t c) { return t_[r][c]; }
  Num& rhs(std::size_t r) { return t_[r].back(); }
  Num& obj(std::size_t c) { return t_.back()[c]; }
  Num& obj_value() { return t_.back().back(); }
  std::size_t rows() const { return t_.size() - 1; }
  std::size_t cols() const { return t_.front().size() - 1; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    Num p = t_[r][c];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r) continue;
      Num f = t_[i][c];
      if (PivotCmp<Num>::sign(f) == 0) {
        t_[i][c] = 0;
        continue;
      }
      for (std::size_t k = 0; k < t_[i].size(); ++k) t_[i][k] -= f * t_[r][k];
    }
    basis_[r] = c;
  }

  // Objective row holds reduced costs of a maximisation in the form
  // z - c.x = 0, so a negative entry can still improve the objective.
  // Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = cols();
      for (std::size_t c = 0; c < cols(); ++c)
        if (allowed[c] && PivotCmp<Num>::sign(obj(c)) < 0) {
          enter = c;
          break;
        }
      if (enter == cols()) return true;
      std::size_t leave = rows();
      Num best_ratio = 0;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (PivotCmp<Num>::sign(at(r, enter)) <= 0) continue;
        Num ratio = rhs(r) / at(r, enter);
        if (leave == rows() || ratio < best_ratio ||
            (PivotCmp<Num>::sign(ratio - best_ratio) == 0 && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter);
    }
  }

 private:
  Mat<Num> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

template <class Num>
Solution<Num> solve(const Problem<Num>& prob) {
  using detail::PivotCmp;
  const std::size_t n = prob.num_vars;
  const std::size_t m = prob.constraints.size();

  // column layout: [split originals | slacks | artificials]
  std::vector<std::size_t> pos_col(n), neg_col(n, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos_col[j] = ncols++;
    if (prob.free[j]) neg_col[j] = ncols++;
  }
  const std::size_t first_slack = ncols;
  std::size_t slacks = 0;
  for (const auto& c : prob.constraints)
    if (c.sense != Sense::eq) ++slacks;
  const std::size_t first_art = first_slack + slacks;
  const std::size_t total = first_art + m;

  detail::Tableau<Num> tab(m, total);
  std::size_t slack = first_slack;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& con = prob.constraints[i];
    bool flip = PivotCmp<Num>::sign(con.rhs) < 0;
    Num s = flip ? Num(-1) : Num(1);
    for (std::size_t j = 0; j < n; ++j) {
      tab.at(i, pos_col[j]) = s * con.coeffs[j];
      if (prob.free[j]) tab.at(i, neg_col[j]) = -s * con.coeffs[j];
    }
    if (con.sense == Sense::le) tab.at(i, slack++) = s;
    else if (con.sense == Sense::ge) tab.at(i, slack++) = -s;
    tab.rhs(i) = s * con.rhs;
    tab.at(i, first_art + i) = 1;
    tab.basis()[i] = first_art + i;
  }

  // phase 1: maximise -(sum of artificials)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t c = 0; c <= total; ++c) tab.obj(c) -= (c == total ? tab.rhs(i) : tab.at(i, c));
  for (std::size_t i = 0; i < m; ++i) tab.obj(first_art + i) = 0;

  std::vector<bool> allowed(total, true);
  tab.optimize(allowed);
  Solution<Num> sol;
  if (PivotCmp<Num>::sign(tab.obj_value()) != 0) {
    sol.status = Status::infeasible;
    return sol;
  }
  // drive zero-valued artificials out of the basis where possible
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis()[r] < first_art) continue;
    for (std::size_t c = 0; c < first_art; ++c)
      if (PivotCmp<Num>::sign(tab.at(r, c)) != 0) {
        tab.pivot(r, c);
        break;
      }
  }
  for (std::size_t c = first_art; c < total; ++c) allowed[c] = false;

  // phase 2
  for (std::size_t c = 0; c <= total; ++c) tab.obj(c) = 0;
  for (std::size_t j = 0; j < n; ++j) {
    tab.obj(pos_col[j]) = -prob.objective[j];
    if (prob.free[j]) tab.obj(neg_col[j]) = prob.objective[j];
  }
  for (std::size_t r = 0; r < m; ++r) {
    std::size_t b = tab.basis()[r];
    Num coef = tab.obj(b);
    if (PivotCmp<Num>::sign(coef) == 0) continue;
    for (std::size_t c = 0; c <= total; ++c) tab.obj(c) -= coef * (c == total ? tab.rhs(r) : tab.at(r, c));
  }
  if (!tab.optimize(allowed)) {
    sol.status = Status::unbounded;
    return sol;
  }

  Vec<Num> cols(total, Num(0));
  for (std::size_t r = 0; r < m; ++r) cols[tab.basis()[r]] = tab.rhs(r);
  sol.values.assign(n, Num(0));
  for (std::size_t j = 0; j < n; ++j) {
    sol.values[j] = cols[pos_col[j]];
    if (prob.free[j]) sol.values[j] -= cols[neg_col[j]];
  }
  sol.objective = dot(prob.objective, sol.values);
  sol.status = Status::optimal;
  return sol;
}

/// Minimises max_i (offsets[i] + lambda * slopes[i]) over lambda by walking
/// the upper envelope of the lines. Throws std::domain_error when unbounded.
template <class Num>
struct EnvelopeMinimum {
  Num value;
  Num lambda_lo;  // the minimiser set is [lambda_lo, lambda_hi], clipped at 0 when a half-line
  Num lambda_hi;
  Num lambda;     // point of the minimiser set closest to 0
};

template <class Num>
EnvelopeMinimum<Num> minimize_max_affine(const Vec<Num>& offsets, const Vec<Num>& slopes) {
  struct Line {
    Num m, b;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < offsets.size(); ++i)
    lines.push_back({detail::PivotCmp<Num>::sign(slopes[i]) == 0 ? Num(0) : slopes[i], offsets[i]});
  if (lines.empty()) throw std::domain_error("max-affine envelope of no lines");
  std::sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.m < b.m || (a.m == b.m && a.b < b.b); });
  if (lines.front().m > 0 || lines.back().m < 0) throw std::domain_error("max-affine envelope is unbounded below");

  // keep the largest offset per slope
  std::vector<Line> uniq;
  for (const auto& l : lines) {
    if (!uniq.empty() && uniq.back().m == l.m) uniq.back() = l;
    else uniq.push_back(l);
  }
  // l2 is hidden when l1 and l3 meet at or above it
  auto hidden = [](const Line& l1, const Line& l2, const Line& l3) {
    return (l3.b - l1.b) * (l2.m - l1.m) >= (l2.b - l1.b) * (l3.m - l1.m);
  };
  std::vector<Line> hull;
  for (const auto& l : uniq) {
    while (hull.size() >= 2 && hidden(hull[hull.size() - 2], hull.back(), l)) hull.pop_back();
    hull.push_back(l);
  }
  auto meet = [](const Line& a, const Line& b) { return Num((a.b - b.b) / (b.m - a.m)); };

  std::size_t k = 0;
  while (hull[k].m < 0) ++k;  // first piece with slope >= 0
  EnvelopeMinimum<Num> out;
  if (hull[k].m == 0) {
    out.value = hull[k].b;
    bool left = k > 0, right = k + 1 < hull.size();
    out.lambda_lo = left ? meet(hull[k - 1], hull[k]) : Num(0);
    out.lambda_hi = right ? meet(hull[k], hull[k + 1]) : Num(0);
    if (!left) out.lambda_lo = std::min(out.lambda_hi, Num(0));
    if (!right) out.lambda_hi = std::max(out.lambda_lo, Num(0));
  } else {
    Num x = meet(hull[k - 1], hull[k]);
    out.value = hull[k].b + hull[k].m * x;
    out.lambda_lo = out.lambda_hi = x;
  }
  if (out.lambda_lo > 0) out.lambda = out.lambda_lo;
  else if (out.lambda_hi < 0) out.lambda = out.lambda_hi;
  else out.lambda = 0;
  return out;
}

}  // namespace bjo::lp
