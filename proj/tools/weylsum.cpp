// Command-line front end: define a homogeneous space by root data, evaluate
// characteristic numbers and equivariant pushforwards, emit text or JSON.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylsum/errors.hpp"
#include "weylsum/expr.hpp"
#include "weylsum/grassmann.hpp"
#include "weylsum/localize.hpp"

using namespace weylsum;
using nlohmann::json;

namespace {

struct Options {
  std::string family = "A";
  int rank = 0;
  std::string h;
  std::string hfile;
  std::string expr;
  std::string m_csv;
  int k = 0;
  int n = 0;
  int threads = 1;
  bool as_json = false;
};

std::vector<int> parse_csv(const std::string& text, const char* what) {
  std::vector<int> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    size_t a = cur.find_first_not_of(" \t");
    size_t b = cur.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw ValidationError(std::string("empty entry in ") + what + " list");
    cur = cur.substr(a, b - a + 1);
    try {
      size_t used = 0;
      int v = std::stoi(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError(std::string("bad integer '") + cur + "' in " + what + " list");
    }
  }
  return out;
}

SpaceSpec build_space(const Options& opt) {
  if (opt.rank < 1) throw ValidationError("--rank must be a positive integer");
  RootSystem rs = build_root_system(family_from_string(opt.family), opt.rank);
  SubsystemSpec sub = opt.hfile.empty()
                          ? subsystem(rs, parse_csv(opt.h, "--h"))
                          : load_subsystem_file(rs, opt.hfile);
  return make_space(rs, sub);
}

json space_json(const SpaceSpec& space) {
  json j;
  j["family"] = std::string(1, family_letter(space.g.family));
  j["rank"] = space.g.rank;
  if (!space.h.root_indices.empty() && space.h.simple_selection.empty()) {
    j["h_simple"] = nullptr;
    j["h_roots"] = space.h.root_indices;
  } else {
    j["h_simple"] = space.h.simple_selection;
  }
  return j;
}

void emit(const Options& opt, const json& space, const std::string& command,
          const std::string& kind, const json& value, const std::string& text) {
  if (opt.as_json) {
    json j;
    j["space"] = space;
    j["command"] = command;
    j["result"] = {{"kind", kind}, {"value", value}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

void emit_rational(const Options& opt, const json& space, const std::string& command,
                   const Rational& q) {
  emit(opt, space, command, "rational", to_string(q), to_string(q));
}

void emit_polynomial(const Options& opt, const json& space, const std::string& command,
                     const Polynomial& p) {
  emit(opt, space, command, "polynomial", json::parse(p.to_json()), p.to_string());
}

Polynomial compile_for(const SpaceSpec& space, const std::string& text) {
  return compile_expression(parse_expression(text), CompileContext::for_space(space));
}

std::string poincare_text(const std::vector<long>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = std::to_string(coeffs[i]);
    if (i == 0)
      out += c;
    else if (coeffs[i] == 1)
      out += "t^" + std::to_string(i);
    else
      out += c + "*t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int run_fixed_points(const Options& opt) {
  SpaceSpec space = build_space(opt);
  CompileContext ctx = CompileContext::for_space(space);
  json rows = json::array();
  std::string text;
  for (const CosetRep& rep : *space.reps) {
    json row;
    row["index"] = rep.index;
    row["length"] = rep.len;
    row["one_line"] = rep.element.one_line();
    std::string line = std::to_string(rep.index) + ": " + rep.element.to_string() +
                       "  length " + std::to_string(rep.len);
    if (ctx.blocks) {
      GrassmannSpec g = grassmannian(ctx.blocks->first, ctx.blocks->second);
      auto [I, J] = multi_index(g, rep);
      row["multi_index"] = {{"I", I}, {"J", J}};
      auto render_set = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i)
          s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
      };
      line += "  I=" + render_set(I) + " J=" + render_set(J);
    }
    rows.push_back(row);
    if (!text.empty()) text += "\n";
    text += line;
  }
  emit(opt, space_json(space), "fixed-points", "table", rows, text);
  return 0;
}

int run_euler_class(const Options& opt) {
  SpaceSpec space = build_space(opt);
  json rows = json::array();
  std::string text;
  for (const CosetRep& rep : *space.reps) {
    FactoredLinearProduct e = euler_at(space, rep);
    rows.push_back({{"index", rep.index},
                    {"one_line", rep.element.one_line()},
                    {"euler", e.to_string()}});
    if (!text.empty()) text += "\n";
    text += std::to_string(rep.index) + ": " + rep.element.to_string() + "  " + e.to_string();
  }
  emit(opt, space_json(space), "euler-class", "table", rows, text);
  return 0;
}

int run_integrate(const Options& opt, bool equivariant) {
  SpaceSpec space = build_space(opt);
  EquivariantClass cls = make_class(space, compile_for(space, opt.expr));
  if (equivariant) {
    emit_polynomial(opt, space_json(space), "eq-integrate",
                    equivariant_integrate(cls, opt.threads));
  } else {
    emit_rational(opt, space_json(space), "integrate", integrate(cls, opt.threads));
  }
  return 0;
}

int run_euler_char(const Options& opt) {
  SpaceSpec space = build_space(opt);
  long chi = euler_characteristic(space);
  emit(opt, space_json(space), "euler-char", "rational", std::to_string(chi),
       std::to_string(chi));
  return 0;
}

int run_poincare(const Options& opt) {
  SpaceSpec space = build_space(opt);
  std::vector<long> coeffs = poincare_polynomial(space);
  emit(opt, space_json(space), "poincare", "polynomial", coeffs, poincare_text(coeffs));
  return 0;
}

int run_verify_relations(const Options& opt) {
  SpaceSpec space = build_space(opt);
  Polynomial witness = compile_for(space, opt.expr).retagged(VarFamily::U);
  bool ok = verify_relation(space, witness);
  emit(opt, space_json(space), "verify-relations", "table", {{"holds", ok}},
       ok ? "ok: every fixed-point restriction equals the witness"
          : "mismatch: some restriction differs from the witness");
  return ok ? 0 : 1;
}

int run_grassmann(const Options& opt) {
  GrassmannSpec g = grassmannian(opt.k, opt.n);
  json space = space_json(g.space);
  space["k"] = opt.k;
  space["n"] = opt.n;
  if (!opt.m_csv.empty()) {
    std::vector<int> m = parse_csv(opt.m_csv, "--m");
    Rational via_cosets = char_number(g, m, opt.threads);
    Rational direct = char_number_direct(g, m, opt.threads);
    if (via_cosets != direct)
      throw std::logic_error("coset and multi-index routes disagree: " +
                             to_string(via_cosets) + " vs " + to_string(direct));
    emit_rational(opt, space, "grassmann", via_cosets);
  } else {
    EquivariantClass cls = make_class(
        g.space,
        compile_expression(parse_expression(opt.expr), CompileContext::for_grassmannian(g)));
    emit_rational(opt, space, "grassmann", integrate(cls, opt.threads));
  }
  return 0;
}

int report_error(const Options& opt, const EngineError& e) {
  if (opt.as_json) {
    json err;
    err["kind"] = e.kind();
    err["message"] = e.what();
    if (auto* ni = dynamic_cast<const NotInvariantError*>(&e))
      err["reflection"] = ni->reflection();
    if (auto* np = dynamic_cast<const NotPolynomialError*>(&e))
      err["surviving_factors"] = np->surviving_factors();
    if (auto* dv = dynamic_cast<const DenominatorVanishesError*>(&e)) err["form"] = dv->form();
    if (auto* se = dynamic_cast<const SyntaxError*>(&e)) err["position"] = se->position();
    std::cout << json{{"error", err}}.dump() << "\n";
  } else {
    std::cerr << "error (" << e.kind() << "): " << e.what() << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact characteristic numbers of homogeneous spaces by fixed-point summation"};
  app.require_subcommand(1);
  // --h names the isotropy subgroup, so the short help alias must go
  app.set_help_flag("--help", "Print this help message and exit");

  auto add_space_flags = [&](CLI::App* cmd) {
    cmd->set_help_flag("--help", "Print this help message and exit");
    cmd->add_option("--family", opt.family, "Root-system family: A, B, C, or D")->required();
    cmd->add_option("--rank", opt.rank, "Number of torus coordinates")->required();
    CLI::Option* h = cmd->add_option(
        "--h", opt.h, "Comma-separated 1-based simple-root indices of H; empty for H = T");
    cmd->add_option("--hfile", opt.hfile,
                    "Expert mode: file of 0-based positive-root indices, one per line")
        ->excludes(h);
    cmd->add_option("--threads", opt.threads, "Parallel summation width (output-invariant)");
    cmd->add_flag("--json", opt.as_json, "Emit the JSON schema instead of text");
  };

  CLI::App* fixed = app.add_subcommand("fixed-points", "List the torus fixed points");
  add_space_flags(fixed);
  CLI::App* euler = app.add_subcommand("euler-class", "Factored Euler class at each fixed point");
  add_space_flags(euler);
  CLI::App* integ = app.add_subcommand("integrate", "Ordinary integral of a class expression");
  add_space_flags(integ);
  integ->add_option("--expr", opt.expr, "Class expression in y/c/e/p symbols")->required();
  CLI::App* eq = app.add_subcommand("eq-integrate", "Equivariant pushforward to the point");
  add_space_flags(eq);
  eq->add_option("--expr", opt.expr, "Class expression in y/c/e/p symbols")->required();
  CLI::App* echar = app.add_subcommand("euler-char", "Fixed-point count via localization");
  add_space_flags(echar);
  CLI::App* poin = app.add_subcommand("poincare", "Poincare polynomial from cell lengths");
  add_space_flags(poin);
  CLI::App* verify =
      app.add_subcommand("verify-relations", "Check a Weyl-invariant witness at all fixed points");
  add_space_flags(verify);
  verify->add_option("--expr", opt.expr, "Invariant witness, read as a u-polynomial")->required();
  CLI::App* grass = app.add_subcommand("grassmann", "Characteristic numbers of G(k,n)");
  grass->set_help_flag("--help", "Print this help message and exit");
  grass->add_option("--k", opt.k, "Subspace dimension")->required();
  grass->add_option("--n", opt.n, "Ambient dimension")->required();
  CLI::Option* mopt = grass->add_option(
      "--m", opt.m_csv, "Exponents of c_1(S)..c_k(S), comma-separated; both routes cross-checked");
  grass->add_option("--expr", opt.expr, "Class expression to integrate instead of --m")
      ->excludes(mopt);
  grass->add_option("--threads", opt.threads, "Parallel summation width (output-invariant)");
  grass->add_flag("--json", opt.as_json, "Emit the JSON schema instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (fixed->parsed()) return run_fixed_points(opt);
    if (euler->parsed()) return run_euler_class(opt);
    if (integ->parsed()) return run_integrate(opt, false);
    if (eq->parsed()) return run_integrate(opt, true);
    if (echar->parsed()) return run_euler_char(opt);
    if (poin->parsed()) return run_poincare(opt);
    if (verify->parsed()) return run_verify_relations(opt);
    if (grass->parsed()) {
      if (opt.m_csv.empty() && opt.expr.empty()) {
        std::cerr << "grassmann needs --m or --expr\nRun with --help for more information.\n";
        return 2;
      }
      return run_grassmann(opt);
    }
  } catch (const EngineError& e) {
    return report_error(opt, e);
  } catch (const std::exception& e) {
    if (opt.as_json)
      std::cout << json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    else
      std::cerr << "error (Internal): " << e.what() << "\n";
    return 1;
  }
  return 2;
}
