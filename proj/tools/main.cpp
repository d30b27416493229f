#include <CLI11.hpp>
#include <bjortho/bjortho.hpp>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "report.hpp"

#ifndef BJORTHO_VERSION
#define BJORTHO_VERSION "0"
#endif

using namespace bjo;
using bjo::cli::json;

namespace {

struct Context {
  std::string format = "json";
  std::size_t samples = 4096;
  std::size_t refine = 3;
  std::size_t factor = 16;
  double tol = 0;
  std::uint64_t seed = 1;
  std::string space_file;
  std::string catalog;
  std::size_t threads = 0;

  std::string x, y, side = "both", a, t, eps;
  bool segment = false;
  std::vector<std::string> args;

  SamplingOptions sampling() const {
    SamplingOptions o;
    o.samples = samples;
    o.refine = refine;
    o.factor = factor;
    o.seed = seed;
    return o;
  }
};

struct Output {
  std::string command;
  json space;
  std::string method;
  bool sampled = false;
  json result;
  int exit_code = 0;
};

Space load(const Context& c) {
  if (!c.space_file.empty() && !c.catalog.empty()) throw PreconditionError("--space and --catalog are exclusive");
  if (c.space_file.empty() && c.catalog.empty()) throw PreconditionError("a space is required (--space FILE or --catalog NAME)");
  Space s = c.space_file.empty() ? catalog_space(c.catalog) : load_space(c.space_file);
  if (c.tol > 0) s = s.with_tolerance(c.tol);
  return s;
}

Vector need_vector(const std::string& text, const char* field, const Space& s) {
  if (text.empty()) throw PreconditionError(std::string("--") + field + " is required");
  Vector v;
  try {
    v = parse_vector(text);
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string(field) + ": " + e.what());
  }
  if (v.size() != s.dim())
    throw PreconditionError(std::string("dimension mismatch in ") + field + ": expected " + std::to_string(s.dim()) +
                            ", got " + std::to_string(v.size()));
  return v;
}

std::string method_for(const Space& s, std::initializer_list<const Vector*> inputs) {
  if (!s.is_polyhedral()) return "analytic";
  if (!s.is_exact()) return "float";
  for (auto* v : inputs)
    if (!all_exact(*v)) return "float";
  return "exact";
}

void guard(bool ok, const std::string& what) {
  if (!ok) throw VerificationError("witness re-check failed: " + what);
}

bool unit(const Space& s, const Vector& v) {
  Scalar n = norm_eval(s, v);
  return approx_equal(n, Scalar(1)) || (!n.exact() && std::abs(n.value() - 1) <= 1e-9);
}

// ---- space / catalog

void space_info(const Context& c, Output& out) {
  Space s = load(c);
  out.space = descriptor_json(s);
  out.method = s.is_exact() ? "exact" : (s.is_polyhedral() ? "float" : "analytic");
  json r;
  r["dim"] = s.dim();
  r["polyhedral"] = s.is_polyhedral();
  if (s.is_polyhedral()) {
    r["vertices"] = cli::vec_list(extreme_points(s));
    json facets = json::array();
    std::vector<std::size_t> counts(s.dim(), 0);
    auto emit = [&](const auto& p) {
      for (const auto& f : p.facets()) {
        Vector fv;
        for (const auto& q : f.functional) {
          if constexpr (std::is_same_v<std::decay_t<decltype(q)>, double>) fv.push_back(Scalar::approx(q, s.tolerance()));
          else fv.push_back(Scalar(q));
        }
        facets.push_back({{"functional", cli::vec(fv)}, {"vertices", f.vertices}});
      }
      for (const auto& face : p.faces()) ++counts[face.dim];
    };
    if (s.is_exact()) emit(s.exact_polytope());
    else emit(s.float_polytope());
    r["facets"] = facets;
    r["face_counts"] = counts;
  }
  if (!c.x.empty()) {
    Vector x = need_vector(c.x, "x", s);
    json p;
    p["x"] = cli::vec(x);
    p["norm"] = norm_eval(s, x).str();
    auto sup = support_set(s, x);
    p["support_generators"] = cli::vec_list(sup.generators);
    if (unit(s, x)) {
      auto pc = classify_point(s, x);
      p["classification"] = {{"position", to_string(pc.position)},
                             {"face_dim", pc.face_dim},
                             {"smooth", pc.smooth},
                             {"generator_count", pc.generator_count}};
    }
    r["point"] = p;
  }
  out.result = r;
}

void catalog_list(const Context&, Output& out) {
  out.method = "exact";
  out.result = {{"names", catalog_names()}};
}

// ---- ortho

void ortho_check(const Context& c, Output& out) {
  Space s = load(c);
  Vector x = need_vector(c.x, "x", s), y = need_vector(c.y, "y", s);
  out.space = descriptor_json(s);
  out.method = method_for(s, {&x, &y});
  auto v = is_bj_orthogonal(s, x, y);
  auto m = minimize_offset(s, x, y);
  Scalar nx = norm_eval(s, x);
  bool agrees = approx_equal(m.min_value, nx) == v.holds;
  if (out.method == "exact") {
    guard(agrees, "James criterion and offset minimisation disagree");
    if (v.certificate) {
      guard(bjo::apply(*v.certificate, y).rational() == 0, "certificate does not vanish at y");
      guard(bjo::apply(*v.certificate, x).rational() == nx.rational(), "certificate is not a support functional of x");
    }
  }
  out.result = {{"orthogonal", v.holds},
                {"certificate", cli::opt_vec(v.certificate)},
                {"positive_part", in_positive_part(s, x, y)},
                {"negative_part", in_negative_part(s, x, y)},
                {"norm_x", nx.str()},
                {"min_offset", m.min_value.str()},
                {"lambda_star", m.lambda_star.str()},
                {"criteria_agree", agrees}};
}

void ortho_min(const Context& c, Output& out) {
  Space s = load(c);
  Vector x = need_vector(c.x, "x", s), y = need_vector(c.y, "y", s);
  out.space = descriptor_json(s);
  out.method = method_for(s, {&x, &y});
  auto m = minimize_offset(s, x, y);
  out.result = {{"lambda_star", m.lambda_star.str()},
                {"min_value", m.min_value.str()},
                {"bracket", {m.bracket_lo.str(), m.bracket_hi.str()}}};
}

void ortho_eps(const Context& c, Output& out, bool dragomir) {
  Space s = load(c);
  Vector x = need_vector(c.x, "x", s), y = need_vector(c.y, "y", s);
  out.space = descriptor_json(s);
  out.method = method_for(s, {&x, &y});
  auto eval = [&](const Vector& u, const Vector& w) {
    if (dragomir) return eps_d_star(s, u, w);
    if (c.segment) return eps_b_star_segment_oracle(s, u, w);
    return eps_b_star(s, u, w);
  };
  if (c.segment) out.method = "segment-oracle";
  // the reversed pair measures the failure of symmetry
  out.result = cli::epsilon_json(eval(x, y));
  out.result["reversed"] = cli::epsilon_json(eval(y, x));
}

// ---- props

void props_p(const Context& c, Output& out) {
  Space s = load(c);
  out.space = descriptor_json(s);
  PropertyVerdict v;
  if (!c.x.empty()) {
    Vector x = need_vector(c.x, "x", s);
    v = local_property_p(s, x);
  } else {
    v = property_p(s, c.sampling());
  }
  if (!v.holds && v.x && v.y) {
    guard(is_bj_orthogonal(s, *v.x, *v.y).holds, "x not orthogonal to y");
    guard(in_script_A(s, *v.x, *v.y), "y not in the set A(x)");
  }
  out.method = v.method;
  out.sampled = v.method == "sampled";
  out.result = cli::verdict_json(v);
}

void props_p1(const Context& c, Output& out) {
  Space s = load(c);
  out.space = descriptor_json(s);
  auto v = property_p1(s);
  if (!v.holds && v.x && v.y) {
    const Vector &x = *v.x, &y = *v.y;
    guard(is_bj_orthogonal(s, x, y).holds, "x not orthogonal to y");
    guard(unit(s, x) && unit(s, y) && unit(s, scaled(add(x, y), Scalar(Rational(1, 2)))), "segment leaves the sphere");
    guard(classify_point(s, x).position != LatticePosition::extreme_vertex ||
              classify_point(s, y).position != LatticePosition::extreme_vertex,
          "both endpoints are extreme");
  }
  out.method = v.method;
  out.result = cli::verdict_json(v);
}

void props_r(const Context& c, Output& out) {
  Space s = load(c);
  out.space = descriptor_json(s);
  auto r = r_constant(s);
  out.method = r.method;
  out.result = cli::r_json(r);
}

void props_rx(const Context& c, Output& out) {
  Space s = load(c);
  out.space = descriptor_json(s);
  auto rep = check_rx_implication(s);
  out.method = rep.r.method;
  out.result = {{"r", cli::r_json(rep.r)},
                {"p", cli::verdict_json(rep.p)},
                {"premise", rep.premise},
                {"implication_holds", rep.implication_holds},
                {"converse_counterexample", rep.converse_counterexample}};
  if (!rep.implication_holds) out.exit_code = 3;
}

// ---- symmetry

void symmetry_point(const Context& c, Output& out) {
  Space s = load(c);
  Vector x = need_vector(c.x, "x", s);
  out.space = descriptor_json(s);
  if (c.side != "left" && c.side != "right" && c.side != "both")
    throw PreconditionError("side: expected left, right or both");
  json r;
  std::string method;
  if (c.side != "right") {
    auto l = left_symmetry_constant(s, x, c.sampling());
    r["left"] = cli::constant_json(l);
    method = l.method;
  }
  if (c.side != "left") {
    auto rt = right_symmetry_constant(s, x, c.sampling());
    r["right"] = cli::constant_json(rt);
    method = rt.method;
  }
  out.method = method;
  out.sampled = method == "sampled";
  out.result = r;
}

void symmetry_global(const Context& c, Output& out, bool c_kind) {
  Space s = load(c);
  out.space = descriptor_json(s);
  auto k = c_kind ? global_c_symmetry(s, c.sampling()) : global_d_constant(s, c.sampling());
  if (c_kind && !k.symmetric && k.x && k.y && k.value.exact()) {
    guard(is_bj_orthogonal(s, *k.x, *k.y).holds, "x not orthogonal to y");
    guard(approx_equal(eps_b_star(s, *k.y, *k.x).value, Scalar(1)), "eps_b_star(y, x) is not 1");
  }
  out.method = k.method;
  out.sampled = k.method == "sampled";
  out.result = cli::constant_json(k);
}

// ---- operators

LinearMap load_map(const Context& c, const std::string& text, const char* field) {
  if (text.empty()) throw PreconditionError(std::string("--") + field + " is required");
  if (std::filesystem::exists(text)) return load_operator(text);
  Space s = load(c);
  std::vector<Vector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    try {
      rows.push_back(parse_vector(row));
    } catch (const PreconditionError& e) {
      throw PreconditionError(std::string(field) + ": " + e.what());
    }
  }
  return LinearMap(rows, s, s);
}

json matrix_json(const LinearMap& m) { return cli::vec_list(m.rows()); }

json op_space(const LinearMap& m) {
  return {{"domain", descriptor_json(m.domain())}, {"codomain", descriptor_json(m.codomain())}};
}

void op_norm(const Context& c, Output& out) {
  LinearMap t = load_map(c, c.t, "t");
  out.space = op_space(t);
  auto n = operator_norm(t, c.sampling());
  out.method = n.method;
  out.sampled = n.method == "sampled";
  out.result = {{"value", n.value.str()}, {"m_t", cli::vec_list(n.m_t)}, {"matrix", matrix_json(t)}};
}

void op_ortho(const Context& c, Output& out) {
  LinearMap a = load_map(c, c.a, "a"), t = load_map(c, c.t, "t");
  out.space = op_space(a);
  auto v = op_is_bj_orthogonal(a, t, c.sampling());
  out.method = v.method;
  out.sampled = v.method == "sampled";
  out.result = {{"orthogonal", v.holds},
                {"norm_a", v.norm_a.str()},
                {"min_value", v.min_value.str()},
                {"lambda_star", v.lambda_star.str()}};
}

void op_make_pair(const Context& c, Output& out) {
  LinearMap a = load_map(c, c.a, "a"), t = load_map(c, c.t, "t");
  out.space = op_space(a);
  auto p = make_orthogonal_pair(a, t, c.sampling());
  auto check = op_is_bj_orthogonal(p.b, p.t, c.sampling());
  out.method = check.method;
  out.sampled = check.method == "sampled";
  out.result = {{"b", matrix_json(p.b)}, {"t", matrix_json(p.t)}, {"lambda_star", p.lambda_star.str()},
                {"verified", check.holds}};
}

json sup_inf_json(const SupInfEpsilon& e) {
  return {{"epsilon", cli::epsilon_json(e.epsilon)},
          {"sup_inf", e.sup_inf.str()},
          {"argmax", cli::opt_vec(e.argmax)},
          {"script_a_nonempty", e.script_a_nonempty}};
}

void op_eps(const Context& c, Output& out) {
  LinearMap t = load_map(c, c.t, "t"), a = load_map(c, c.a, "a");
  out.space = op_space(t);
  auto e = sup_inf_epsilon(t, a, c.sampling());
  out.method = "sampled";
  out.sampled = true;
  out.result = sup_inf_json(e);
}

void op_dragomir(const Context& c, Output& out) {
  LinearMap t = load_map(c, c.t, "t"), a = load_map(c, c.a, "a");
  out.space = op_space(t);
  double eps;
  if (c.eps.empty()) {
    auto e = sup_inf_epsilon(t, a, c.sampling());
    eps = e.epsilon.value.value();
    out.result["sup_inf_epsilon"] = sup_inf_json(e);
  } else {
    eps = to_double(parse_rational(c.eps));
  }
  auto rep = verify_dragomir_conditions(t, a, eps, c.sampling());
  out.method = "sampled";
  out.sampled = true;
  out.result["eps"] = format_double(eps);
  out.result["threshold"] = format_double(rep.threshold);
  out.result["certified"] = rep.certified;
  out.result["condition_a"] = rep.condition_a;
  out.result["condition_b"] = rep.condition_b;
  out.result["witness_a"] = cli::opt_vec(rep.witness_a);
  out.result["witness_b"] = cli::opt_vec(rep.witness_b);
  out.result["grid"] = rep.grid;
}

// Lets "--y -4/3,1" through: a value that looks like a negative number list
// is glued onto its option.
std::vector<std::string> normalise_args(int argc, char** argv) {
  static const std::set<std::string> valued{"--x", "--y", "--a", "--t", "--eps"};
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (valued.count(arg) && i + 1 < argc) {
      std::string next = argv[i + 1];
      if (next.size() > 1 && next[0] == '-' && (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
        out.push_back(arg + "=" + next);
        ++i;
        continue;
      }
    }
    out.push_back(arg);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  Output out;
  std::function<void()> action;

  CLI::App app{"Birkhoff-James orthogonality and symmetry checks in finite-dimensional normed spaces", "bjortho"};
  app.set_version_flag("--version", BJORTHO_VERSION);
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", ctx.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--samples", ctx.samples, "Sphere samples for sampled constants")->check(CLI::PositiveNumber);
  app.add_option("--refine", ctx.refine, "Refinement rounds around the incumbent");
  app.add_option("--factor", ctx.factor, "Step reduction per refinement round")->check(CLI::Range(2, 1024));
  app.add_option("--tol", ctx.tol, "Float comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", ctx.seed, "Sampling seed");
  app.add_option("--space", ctx.space_file, "Space definition file");
  app.add_option("--catalog", ctx.catalog, "Catalog space name");
  app.add_option("--threads", ctx.threads, "Worker threads (0 = all cores)");

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, auto fn) {
    auto* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&, name, parent, fn] {
      out.command = parent->get_name() + " " + name;
      action = [&, fn] { fn(ctx, out); };
    });
    return sub;
  };
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->fallthrough();
    g->require_subcommand(1);
    return g;
  };
  auto add_x = [&](CLI::App* s) { s->add_option("--x", ctx.x, "Vector, e.g. 1,-1/2,3/10"); };
  auto add_xy = [&](CLI::App* s) {
    add_x(s);
    s->add_option("--y", ctx.y, "Vector, e.g. -4/3,1");
  };
  auto add_ops = [&](CLI::App* s, bool need_a) {
    s->add_option("--t", ctx.t, "Operator file, or inline rows '1,0;0,1/2' on --space/--catalog");
    if (need_a) s->add_option("--a", ctx.a, "Operator file or inline rows");
  };

  auto* space = group("space", "Space inspection");
  add_x(leaf(space, "info", "Describe a space, optionally classify --x", space_info));
  auto* catalog = group("catalog", "Built-in spaces");
  leaf(catalog, "list", "List catalog names", catalog_list);

  auto* ortho = group("ortho", "Orthogonality of a pair");
  add_xy(leaf(ortho, "check", "Decide x orthogonal to y", ortho_check));
  add_xy(leaf(ortho, "min", "Minimise ||x + lambda y||", ortho_min));
  add_xy(leaf(ortho, "eps-d", "Minimal Dragomir epsilon", [](const Context& c, Output& o) { ortho_eps(c, o, true); }));
  auto* eb = leaf(ortho, "eps-b", "Minimal Chmielinski epsilon", [](const Context& c, Output& o) { ortho_eps(c, o, false); });
  add_xy(eb);
  eb->add_flag("--segment", ctx.segment, "Use the independent segment search");

  auto* props = group("props", "Symmetry properties");
  add_x(leaf(props, "p", "Property (P), or local (P) at --x", props_p));
  leaf(props, "p1", "Property (P1)", props_p1);
  leaf(props, "r", "The constant R(X)", props_r);
  leaf(props, "rx-check", "R(X) <= 1 implies (P)", props_rx);

  auto* sym = group("symmetry", "Approximate symmetry constants");
  auto* pt = leaf(sym, "point", "Left/right constants at --x", symmetry_point);
  add_x(pt);
  pt->add_option("--side", ctx.side, "left, right or both");
  leaf(sym, "global-c", "Global C constant and decision", [](const Context& c, Output& o) { symmetry_global(c, o, true); });
  leaf(sym, "global-d", "Global D constant", [](const Context& c, Output& o) { symmetry_global(c, o, false); });

  auto* op = group("op", "Linear operators");
  add_ops(leaf(op, "norm", "Operator norm and norm-attaining set", op_norm), false);
  add_ops(leaf(op, "ortho", "Decide A orthogonal to T", op_ortho), true);
  add_ops(leaf(op, "make-pair", "B = A + lambda* T orthogonal to T", op_make_pair), true);
  add_ops(leaf(op, "eps", "Sup-inf epsilon for T and A", op_eps), true);
  auto* dr = leaf(op, "dragomir-check", "Dragomir conditions (a)/(b)", op_dragomir);
  add_ops(dr, true);
  dr->add_option("--eps", ctx.eps, "Epsilon; computed by the sup-inf estimate when omitted");

  auto args = normalise_args(argc, argv);
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  ctx.args = args;
  set_thread_count(ctx.threads);

  try {
    action();
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  json report;
  report["command"] = out.command;
  report["arguments"] = ctx.args;
  report["space"] = out.space;
  json mode = {{"method", out.method}, {"sampled", out.sampled}};
  if (out.sampled) mode["resolution"] = {{"samples", ctx.samples}, {"refine", ctx.refine}, {"factor", ctx.factor}};
  report["mode"] = mode;
  report["seed"] = ctx.seed;
  report["version"] = BJORTHO_VERSION;
  report["result"] = out.result;
  if (ctx.format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << cli::render_text(report);
  return out.exit_code;
}
