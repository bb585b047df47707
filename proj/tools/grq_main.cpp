#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "grq/arquiver/arquiver.hpp"
#include "grq/checks/checks.hpp"
#include "grq/constructions/constructions.hpp"
#include "grq/error.hpp"
#include "grq/grmod/hom.hpp"
#include "grq/grmod/json.hpp"
#include "grq/grmod/ops.hpp"
#include "grq/homological/homological.hpp"
#include "grq/polynomial/polynomial.hpp"

using namespace grq;

namespace {

struct Globals {
  unsigned p = 3;
  std::uint64_t seed = 0;
};

void check_prime(unsigned p) {
  bool prime = p >= 3 && p % 2 == 1;
  for (unsigned q = 3; prime && q * q <= p; q += 2) prime = p % q != 0;
  if (!prime) throw UsageError("--p must be an odd prime, got " + std::to_string(p));
}

// a file holding module JSON, or a family label
GradedModule load_module(const std::string& input, unsigned p) {
  GradedModule m = [&] {
    std::error_code ec;
    if (std::filesystem::is_regular_file(input, ec)) {
      std::ifstream in(input);
      std::stringstream ss;
      ss << in.rdbuf();
      return module_from_string(ss.str());
    }
    return build(parse_label(input), p);
  }();
  if (m.algebra().p() != p) throw UsageError("module is over p=" + std::to_string(m.algebra().p()) + ", --p is " + std::to_string(p));
  return m;
}

std::string describe(const GradedModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return "0";
  auto parts = split_indecomposables(m, seed);
  std::vector<std::string> names;
  for (const auto& s : parts) names.push_back(identify(s.module, seed).label);
  std::sort(names.begin(), names.end());
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " + ") + n;
  return out;
}

int cmd_module(const Globals& g, const std::string& spec, const std::string& emit) {
  GradedModule m = load_module(spec, g.p);
  if (emit == "json") {
    std::cout << module_to_string(m) << "\n";
    return 0;
  }
  auto verdict = is_polynomial(m);
  std::cout << "module: " << describe(m, g.seed) << "\n";
  std::cout << "dim: " << m.dim() << "\n";
  std::cout << "support:";
  for (const auto& w : m.support()) std::cout << " " << w.str();
  std::cout << "\n";
  std::cout << "degree: " << (verdict.degree ? std::to_string(*verdict.degree) : "mixed") << "\n";
  std::cout << "polynomial: " << (verdict.is_polynomial ? "yes" : "no") << "\n";
  if (m.algebra().kind() == AlgebraKind::Sl2R1) std::cout << "projective: " << (is_projective(m) ? "yes" : "no") << "\n";
  return 0;
}

GradedModule apply_functor(const std::string& op, const GradedModule& m) {
  if (op == "t") return t_poly(m).module;
  if (op == "u") return u_poly(m).module;
  if (op == "dual") return contravariant_dual(m);
  if (op == "w0") return weyl_twist(m);
  if (op == "omega") return omega(m);
  if (op == "tau") return tau(m);
  if (op == "socle") return socle(m).module;
  if (op == "top") return top(m).module;
  throw UsageError("unknown functor '" + op + "' (t, u, dual, w0, omega, tau, socle, top)");
}

int cmd_functor(const Globals& g, const std::string& ops, const std::string& input, const std::string& emit) {
  GradedModule m = load_module(input, g.p);
  GradedModule r = m;
  std::stringstream chain(ops);
  std::string op;
  while (std::getline(chain, op, ',')) r = apply_functor(op, r);
  if (emit == "json") std::cout << module_to_string(r) << "\n";
  std::cout << "identified: " << describe(r, g.seed) << "\n";
  if (ops.find(',') != std::string::npos)
    std::cout << "isomorphic to input: " << (is_isomorphic(r, m, g.seed) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_ar(const Globals& g, const std::string& spec, const std::string& emit, int max_ql, int max_tau) {
  GradedModule m = load_module(spec, g.p);
  if (emit == "sequence") {
    std::cout << short_exact_to_json(almost_split_sequence(m)).dump() << "\n";
    return 0;
  }
  ARQuiver q = explore_component(m, {max_ql, max_tau});
  if (!mesh_violations(q).empty()) throw InvariantViolation("mesh relation fails in the explored patch");
  if (emit == "json")
    std::cout << quiver_to_json(q).dump() << "\n";
  else
    std::cout << to_dot(q, "component");
  return 0;
}

int cmd_schur(const Globals& g, int d, const std::string& seed_label, const std::string& emit, bool drop,
              const std::string& out) {
  if (d < 0) throw UsageError("--d must be >= 0");
  FamilyLabel seed = seed_label.empty() ? FamilyLabel{} : parse_label(seed_label);
  if (seed_label.empty()) {
    // first non-semisimple block if any, else the first block
    auto blocks = polynomial_blocks(g.p, d);
    if (blocks.empty()) throw UsageError("no polynomial modules of degree " + std::to_string(d));
    std::size_t pick = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].size() > 1) {
        pick = i;
        break;
      }
    auto id = identify(blocks[pick].front(), g.seed);
    if (!id.family) throw InvariantViolation("unlabelled block member " + id.label);
    seed = *id.family;
  }
  SchurBlock b = schur_block_quiver(g.p, d, seed);
  ARQuiver q = drop ? stable_part(b.quiver) : b.quiver;

  std::ostringstream report;
  report << "blocks in degree " << d << ": " << b.blocks << " (" << non_semisimple_block_count(g.p, d)
         << " non-semisimple)\n";
  if (b.semisimple) {
    report << "semisimple block: " << b.quiver.size() << " vertex, no arrows\n";
  } else {
    report << "block vertices: " << b.quiver.size() << "\n";
    if (!b.injective_arrows_consistent) throw InvariantViolation("injective vertices disagree with computed arrows");
    if (drop) {
      report << "stable vertices: " << q.size() << "\n";
      int n = int(std::lround(std::sqrt(double(q.size()))));
      bool match = n * n == q.size() && template_match(q, n, n).has_value();
      report << "template ℤ[A_" << n << "]/τ^" << n << ": " << (match ? "MATCH" : "NO MATCH") << "\n";
    }
  }

  std::string graph = emit == "json" ? quiver_to_json(q).dump() + "\n" : emit == "dot" ? to_dot(q, "block") : "";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw UsageError("cannot write " + out);
    f << graph;
    std::cout << report.str();
  } else if (graph.empty()) {
    std::cout << report.str();
  } else {
    // graph owns stdout
    std::cout << graph;
    std::cerr << report.str();
  }
  return 0;
}

int cmd_borel(const Globals& g, int r, int d) {
  auto b = Algebra::borel(g.p, r);
  std::cout << "nakayama shift: " << nakayama_shift(*b).str() << "\n";
  std::cout << "2rho: " << borel_two_rho(*b).str() << "\n";
  bool all = true;
  for (const auto& s : quasi_hereditary_check(g.p, r, d)) {
    all = all && s.ok();
    std::cout << "standard " << s.lambda.str() << ": dim " << s.dim << " " << (s.ok() ? "ok" : "FAIL") << "\n";
  }
  std::cout << "quasi-hereditary data: " << (all ? "ok" : "FAIL") << "\n";
  return all ? 0 : 1;
}

int cmd_check(const Globals& g, const std::string& suite) {
  auto results = run_suite(suite, g.p);
  ojson j = results_to_json(results);
  std::cout << j.dump(2) << "\n";
  return j["pass"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded representations of sl2 Frobenius kernels"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::optional<std::uint64_t> seed;
  app.add_option("--p", g.p, "characteristic (odd prime)")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized certificates (default: $GRQ_SEED or 0)");

  std::string spec, emit = "summary", ops, input, seed_label, out, suite = "all";
  int max_ql = 2, max_tau = 2, d = 0, r = 1;
  bool drop = false;

  auto* mod = app.add_subcommand("module", "build a module from a family label");
  mod->add_option("spec", spec, "family label or JSON file")->required();
  mod->add_option("--emit", emit)->check(CLI::IsMember({"json", "summary"}));

  auto* fun = app.add_subcommand("functor", "apply t, u, dual, w0, omega, tau, socle, top (comma-separated chain)");
  fun->add_option("op", ops)->required();
  fun->add_option("input", input, "family label or JSON file")->required();
  std::string femit = "json";
  fun->add_option("--emit", femit)->check(CLI::IsMember({"json", "label"}));

  auto* ar = app.add_subcommand("ar", "explore the AR component of a module");
  ar->add_option("spec", spec)->required();
  std::string aemit = "dot";
  ar->add_option("--emit", aemit)->check(CLI::IsMember({"dot", "json", "sequence"}));
  ar->add_option("--max-ql", max_ql);
  ar->add_option("--max-tau", max_tau);

  auto* sch = app.add_subcommand("schur", "AR quiver of a block of polynomial modules");
  sch->add_option("--d", d)->required();
  sch->add_option("--seed-label", seed_label);
  std::string semit = "summary";
  sch->add_option("--emit", semit)->check(CLI::IsMember({"dot", "json", "summary"}));
  sch->add_flag("--drop-projective-injective", drop);
  sch->add_option("--out", out, "write the graph here instead of stdout");

  auto* bor = app.add_subcommand("borel", "standard modules and Nakayama data for the Borel kernels");
  bor->add_option("--r", r)->check(CLI::Range(1, 2));
  int bd = 8;
  bor->add_option("--d", bd, "largest degree of standard modules");

  auto* chk = app.add_subcommand("check", "run the acceptance checks");
  chk->add_option("--suite", suite)->check(CLI::IsMember({"core", "schur", "borel", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (seed)
      g.seed = *seed;
    else if (const char* env = std::getenv("GRQ_SEED"))
      g.seed = std::stoull(env);
    check_prime(g.p);
    std::string cmd = app.get_subcommands().front()->get_name();
    std::cerr << "# grq " << cmd << " p=" << g.p << " seed=" << g.seed << "\n";
    if (*mod) return cmd_module(g, spec, emit);
    if (*fun) return cmd_functor(g, ops, input, femit);
    if (*ar) return cmd_ar(g, spec, aemit, max_ql, max_tau);
    if (*sch) return cmd_schur(g, d, seed_label, semit, drop, out);
    if (*bor) return cmd_borel(g, r, bd);
    if (*chk) return cmd_check(g, suite);
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
