#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arq/component.hpp"
#include "arq/config.hpp"

namespace {

using namespace arq;

AlgebraSpec load_algebra(const std::string& preset, const std::string& path) {
  if (!preset.empty()) {
    auto a = preset_by_name(preset);
    if (!a) fail(Err::ParseError, "unknown preset '" + preset + "'");
    return *a;
  }
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return algebra_from_json(buf.str());
  }
  fail(Err::ParseError, "one of --preset or --algebra is required");
}

IntervalModule parse_module(const AlgebraSpec& alg, const std::string& expr) {
  if (auto m = module_by_alias(alg, expr)) return *m;
  // interval-shaped input that did not resolve is a domain problem
  if (!expr.empty() && expr.front() == '[' && expr.back() == ']' &&
      expr.find(',') != std::string::npos)
    fail(Err::InvalidModule, "module out of range: " + expr);
  fail(Err::ParseError, "unknown module expression '" + expr + "'");
}

// alias | nu(alias) | nu^-1(alias) | [a,b], each with optional shift "[k]"
Complex parse_complex(const AlgebraSpec& alg, const std::string& expr0) {
  std::string expr = expr0;
  int k = 0;
  if (!expr.empty() && expr.back() == ']') {
    size_t open = expr.rfind('[');
    if (open != std::string::npos && open > 0) {
      std::string inner = expr.substr(open + 1, expr.size() - open - 2);
      if (inner.find(',') == std::string::npos) {
        try {
          size_t used = 0;
          k = std::stoi(inner, &used);
          if (used == inner.size()) expr = expr.substr(0, open);
        } catch (const std::exception&) {
        }
      }
    }
  }
  Complex base = zero_complex(alg);
  if (expr.rfind("nu(", 0) == 0 && expr.back() == ')') {
    IntervalModule m = parse_module(alg, expr.substr(3, expr.size() - 4));
    base = minimize_only(projectivize(nu_complex(p_stalk(alg, m))).q);
  } else if (expr.rfind("nu^-1(", 0) == 0 && expr.back() == ')') {
    IntervalModule m = parse_module(alg, expr.substr(6, expr.size() - 7));
    base = minimize_only(nu_inv_complex(inj_resolution(alg, m)));
  } else {
    base = p_stalk(alg, parse_module(alg, expr));
  }
  return shift(base, k);
}

std::string middle_str(const AlgebraSpec& alg, const ARTriangle& t) {
  if (t.middle.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < t.middle.size(); ++i) {
    if (i) out += " (+) ";
    if (t.middle[i].second > 1) out += std::to_string(t.middle[i].second) + "*";
    out += complex_alias(alg, t.middle[i].first);
  }
  return out;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Err::ParseError, "cannot write '" + path + "'");
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"AR triangles, tau-orbits and AR components of D^b(kA_n/I)"};
  app.require_subcommand(1);

  std::string preset, algebra_path, module_expr, side = "proj", start_expr, end_expr;
  std::string format = "text", out_path, verify_target;
  int steps = 4, budget = 200;
  long long seed = -1;

  app.add_option("--seed", seed, "deterministic seed for randomized internals");

  auto add_alg = [&](CLI::App* c) {
    c->add_option("--preset", preset, "a4gamma | radsquare:n | longrel:n | hereditary:n");
    c->add_option("--algebra", algebra_path, "algebra spec file (JSON)");
  };

  CLI::App* c_info = app.add_subcommand("info", "Kupisch data of the algebra");
  add_alg(c_info);
  CLI::App* c_modules = app.add_subcommand("modules", "list the indecomposable modules");
  add_alg(c_modules);
  CLI::App* c_resolve = app.add_subcommand("resolve", "minimal resolution of a module");
  add_alg(c_resolve);
  c_resolve->add_option("--module", module_expr, "module alias or [a,b]")->required();
  c_resolve->add_option("--side", side, "proj | inj");
  CLI::App* c_hom = app.add_subcommand("hom", "hom dimension between two modules");
  add_alg(c_hom);
  c_hom->add_option("--start", start_expr, "source module")->required();
  c_hom->add_option("--end", end_expr, "target module")->required();
  CLI::App* c_gldim = app.add_subcommand("gldim", "global dimension and relation bound");
  add_alg(c_gldim);
  CLI::App* c_triangle = app.add_subcommand("triangle", "AR triangle ending at a complex");
  add_alg(c_triangle);
  c_triangle->add_option("--end", end_expr, "endpoint complex expression")->required();
  CLI::App* c_orbit = app.add_subcommand("tau-orbit", "tau-orbit of a complex");
  add_alg(c_orbit);
  c_orbit->add_option("--start", start_expr, "start complex expression")->required();
  c_orbit->add_option("--steps", steps, "number of orbit entries to print");
  CLI::App* c_comp = app.add_subcommand("component", "knit the AR component of a complex");
  add_alg(c_comp);
  c_comp->add_option("--start", start_expr, "start complex expression")->required();
  c_comp->add_option("--budget", budget, "maximal number of AR triangles");
  c_comp->add_option("--format", format, "text | dot | structured");
  c_comp->add_option("--out", out_path, "output path (default standard output)");
  CLI::App* c_verify = app.add_subcommand("verify", "run a theorem verifier");
  c_verify->add_option("target", verify_target, "example-d4 | zan:n | zdn:n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (seed >= 0) set_global_seed(uint64_t(seed));

  if (c_verify->parsed()) {
    VerifyResult r;
    if (verify_target == "example-d4") {
      r = verify_example_d4();
    } else if (verify_target.rfind("zan:", 0) == 0) {
      r = verify_zan(std::stoi(verify_target.substr(4)));
    } else if (verify_target.rfind("zdn:", 0) == 0) {
      r = verify_zdn(std::stoi(verify_target.substr(4)));
    } else {
      fail(Err::ParseError, "unknown verify target '" + verify_target + "'");
    }
    for (const std::string& l : r.lines) std::cout << l << "\n";
    if (r.pass) {
      std::cout << "PASS " << verify_target << "\n";
      return 0;
    }
    std::cout << "FAIL " << verify_target << ": " << r.first_fail << "\n";
    return 1;
  }

  AlgebraSpec alg = load_algebra(preset, algebra_path);

  if (c_info->parsed()) {
    std::cout << "n=" << alg.n() << "\n";
    std::cout << "relations:";
    for (auto& [u, v] : alg.relations()) std::cout << " [" << u << "," << v << "]";
    if (alg.relations().empty()) std::cout << " none";
    std::cout << "\nproj_len:";
    for (int i = 1; i <= alg.n(); ++i) std::cout << " " << alg.proj_len(i);
    std::cout << "\ninj_len:";
    for (int i = 1; i <= alg.n(); ++i) std::cout << " " << alg.inj_len(i);
    std::cout << "\n";
  } else if (c_modules->parsed()) {
    for (const IntervalModule& m : all_modules(alg))
      std::cout << module_alias(alg, m) << " = [" << m.lo << "," << m.hi << "]\n";
  } else if (c_resolve->parsed()) {
    IntervalModule m = parse_module(alg, module_expr);
    if (side == "proj") {
      Complex r = proj_resolution(alg, m);
      std::cout << "0";
      for (int d = r.lo; d <= r.hi(); ++d)
        for (const Summand& s : r.term(d)) std::cout << " -> " << summand_str(s);
      std::cout << "\n";
    } else if (side == "inj") {
      Complex r = inj_resolution(alg, m);
      for (int d = r.lo; d <= r.hi(); ++d)
        for (const Summand& s : r.term(d)) std::cout << summand_str(s) << " -> ";
      std::cout << "0\n";
    } else {
      fail(Err::ParseError, "--side must be proj or inj");
    }
  } else if (c_hom->parsed()) {
    IntervalModule a = parse_module(alg, start_expr), b = parse_module(alg, end_expr);
    std::cout << "hom=" << hom_dim(alg, a, b) << "\n";
  } else if (c_gldim->parsed()) {
    std::cout << "gldim=" << gldim(alg) << " bound=" << gdim_bound(alg) << "\n";
  } else if (c_triangle->parsed()) {
    Complex z = parse_complex(alg, end_expr);
    if (minimize_only(z).is_zero_complex()) fail(Err::ZeroModule, "triangle endpoint is zero");
    ARTriangle t = ar_triangle_ending(z);
    std::cout << "tau: " << complex_alias(alg, t.tau_z) << "\n";
    std::cout << "middle: " << middle_str(alg, t) << "\n";
    std::cout << "end: " << complex_alias(alg, t.z) << "\n";
    for (const StripEvent& ev : t.strips)
      std::cout << "strip: " << summand_str(ev.label) << " at degree " << ev.degree << "\n";
  } else if (c_orbit->parsed()) {
    Complex c = parse_complex(alg, start_expr);
    if (minimize_only(c).is_zero_complex()) fail(Err::ZeroModule, "orbit start is zero");
    std::string line;
    for (int i = 0; i < steps; ++i) {
      if (i) {
        line += ", ";
        c = tau(c, Direction::Forward);
      }
      line += complex_alias(alg, c);
    }
    std::cout << line << "\n";
  } else if (c_comp->parsed()) {
    Complex c = parse_complex(alg, start_expr);
    if (minimize_only(c).is_zero_complex()) fail(Err::ZeroModule, "component start is zero");
    Component comp = build_component(alg, c, budget);
    if (comp.budget_exceeded) {
      std::cerr << "error: budget of " << budget << " triangles exceeded\n";
      return 4;
    }
    if (format == "dot") {
      write_out(out_path, component_dot(comp));
    } else if (format == "structured") {
      write_out(out_path, component_json(comp));
    } else if (format == "text") {
      ComponentReport rep = component_report(comp);
      std::ostringstream out;
      out << "vertices=" << comp.vertices.size() << " closed=" << (comp.closed ? "yes" : "no")
          << " orbits=" << rep.orbit_count << " verdict=" << rep.verdict << "\n";
      for (size_t i = 0; i < comp.vertices.size(); ++i)
        out << "  v" << i << ": " << complex_alias(alg, comp.vertices[i].c) << "  "
            << comp.vertices[i].desc << (comp.vertices[i].shift_only ? "  (shift)" : "") << "\n";
      write_out(out_path, out.str());
    } else {
      fail(Err::ParseError, "--format must be text, dot or structured");
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const arq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case arq::Err::ParseError:
        return 2;
      case arq::Err::BudgetExceeded:
        return 4;
      default:
        return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
