// conjforge CLI: batch front door over the shared-library C API.
//
// Subcommands: build, invariants, conjugacy, verify, export.
// Exit codes: 0 success, 2 input error, 3 invariant violation / failing
// verification, 4 iteration budget exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "conjforge.h"

namespace {

struct Options {
  std::string kind, input, input2, suite, format = "json", out;
  int n = 0, levels = 1, cap = 3, samples = 0;
  std::uint64_t seed = 0;
};

[[noreturn]] void fail(int code, const std::string& message) {
  std::cerr << "error: " << message << "\n";
  std::exit(code);
}

void fail_status(cf_status status) { fail(static_cast<int>(status), cf_last_error()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(2, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream of(out);
  if (!of) fail(2, "cannot write '" + out + "'");
  of << text;
}

// RAII wrappers over the C handles.
struct Handle {
  cf_object* obj = nullptr;
  ~Handle() { cf_free(obj); }
  cf_object** slot() { return &obj; }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { cf_string_free(s); }
  std::string str() const { return s == nullptr ? std::string() : std::string(s); }
};

Handle parse_file(const std::string& type, const std::string& path) {
  Handle h;
  cf_status st = cf_parse(type.c_str(), read_file(path).c_str(), h.slot());
  if (st != CF_OK) fail_status(st);
  return h;
}

void emit_object(const cf_object* obj, const Options& opt) {
  OwnedString text;
  cf_status st = (opt.format == "dot") ? cf_to_dot(obj, &text.s)
                                       : cf_to_json(obj, &text.s);
  if (st != CF_OK) fail_status(st);
  write_output(opt.out, text.str());
}

int cmd_build(const Options& opt) {
  Handle out;
  cf_status st;
  if (opt.kind == "phiL") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_phi_l(in.obj, out.slot());
  } else if (opt.kind == "sn-reduction") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_sn_reduction(in.obj, opt.n, out.slot());
  } else if (opt.kind == "graph-reduction") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_graph_reduction(in.obj, opt.n, opt.levels, opt.cap, out.slot());
  } else if (opt.kind == "tournament-reduction") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_tournament_reduction(in.obj, opt.levels, opt.cap, out.slot());
  } else if (opt.kind == "infree-reduction") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_infree_reduction(in.obj, opt.n, opt.levels, opt.cap, out.slot());
  } else if (opt.kind == "forbidden-reduction") {
    if (opt.input2.empty()) fail(2, "forbidden-reduction needs --input2 (family JSON)");
    Handle in = parse_file("structure", opt.input);
    Handle fam = parse_file("family", opt.input2);
    st = cf_build_forbidden_reduction(in.obj, fam.obj, opt.levels, opt.cap, out.slot());
  } else if (opt.kind == "multipartite-reduction") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_multipartite_reduction(in.obj, opt.n, opt.levels, opt.cap, out.slot());
  } else if (opt.kind == "hat") {
    Handle in = parse_file("structure", opt.input);
    st = cf_build_hat(in.obj, out.slot());
  } else {
    fail(2, "unknown build kind '" + opt.kind + "'");
  }
  if (st != CF_OK) fail_status(st);
  emit_object(out.obj, opt);
  return 0;
}

int cmd_invariants(const Options& opt) {
  Handle out;
  cf_status st;
  if (opt.kind == "orbital") {
    Handle in = parse_file("plmap", opt.input);
    st = cf_orbital_decomposition(in.obj, out.slot());
  } else if (opt.kind == "recover-order") {
    Handle in = parse_file("plmap", opt.input);
    st = cf_recover_order(in.obj, out.slot());
  } else if (opt.kind == "recover-order-sn") {
    Handle in = parse_file("snmap", opt.input);
    st = cf_recover_order_sn(in.obj, out.slot());
  } else if (opt.kind == "recover-base") {
    Handle in = parse_file("layered", opt.input);
    st = cf_recover_base(in.obj, out.slot());
  } else if (opt.kind == "composite") {
    Handle in = parse_file("composite", opt.input);
    st = cf_composite_invariant(in.obj, out.slot());
  } else if (opt.kind == "c3") {
    Handle in = parse_file("composite", opt.input);
    st = cf_c3_invariant(in.obj, out.slot());
  } else if (opt.kind == "eset") {
    Handle in = parse_file("composite", opt.input);
    st = cf_eset_encode(in.obj, out.slot());
  } else {
    fail(2, "unknown invariants kind '" + opt.kind + "'");
  }
  if (st != CF_OK) fail_status(st);
  emit_object(out.obj, opt);
  return 0;
}

int cmd_conjugacy(const Options& opt) {
  if (opt.input2.empty()) fail(2, "conjugacy needs --input and --input2");
  int verdict = 0;
  if (opt.kind == "pl") {
    Handle a = parse_file("plmap", opt.input);
    Handle b = parse_file("plmap", opt.input2);
    OwnedString witness;
    cf_status st = cf_pl_conjugacy(a.obj, b.obj, opt.seed,
                                   opt.samples > 0 ? opt.samples : 100, &verdict,
                                   &witness.s);
    if (st != CF_OK) fail_status(st);
    std::cout << (verdict ? "conjugate" : "not conjugate") << "\n";
    if (verdict && !opt.out.empty()) write_output(opt.out, witness.str());
  } else if (opt.kind == "composite") {
    Handle a = parse_file("composite", opt.input);
    Handle b = parse_file("composite", opt.input2);
    Handle witness;
    cf_status st = cf_composite_conjugacy(a.obj, b.obj, &verdict, witness.slot());
    if (st != CF_OK) fail_status(st);
    std::cout << (verdict ? "conjugate" : "not conjugate") << "\n";
    if (verdict && !opt.out.empty()) {
      OwnedString text;
      if (cf_to_json(witness.obj, &text.s) != CF_OK) fail_status(CF_INVARIANT_ERROR);
      write_output(opt.out, text.str());
    }
  } else {
    fail(2, "unknown conjugacy kind '" + opt.kind + "'");
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  int passed = 0;
  OwnedString report;
  cf_status st = cf_run_suite(opt.suite.c_str(), opt.seed, opt.samples, &passed,
                              &report.s);
  if (st != CF_OK) fail_status(st);
  if (opt.out.empty())
    std::cout << report.str();
  else
    write_output(opt.out, report.str());
  if (!passed) {
    std::cerr << "suite '" << opt.suite << "' failed\n";
    return 3;
  }
  return 0;
}

int cmd_export(const Options& opt) {
  // Structures and layered structures both export; sniff the input type.
  std::string text = read_file(opt.input);
  Handle h;
  if (cf_parse("structure", text.c_str(), h.slot()) != CF_OK) {
    cf_status st = cf_parse("layered", text.c_str(), h.slot());
    if (st != CF_OK) fail_status(st);
  }
  emit_object(h.obj, opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("FORGE_BUDGET"))
    cf_set_iteration_budget(std::atol(env));

  CLI::App app{"constructions and conjugacy invariants for automorphisms of "
               "countable homogeneous structures"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* cmd, bool need_input) {
    cmd->add_option("--input", opt.input, "input JSON file")->required(need_input);
    cmd->add_option("--input2", opt.input2, "second input JSON file");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "dot"}));
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };

  CLI::App* build = app.add_subcommand("build", "build structures and reductions");
  build->add_option("--kind", opt.kind, "what to build")->required();
  build->add_option("--n", opt.n, "freeness / arity parameter");
  build->add_option("--levels", opt.levels, "construction levels");
  build->add_option("--cap", opt.cap, "max creating-subset size");
  build->add_option("--seed", opt.seed, "seed (reserved)");
  add_io(build, true);

  CLI::App* inv = app.add_subcommand("invariants", "compute invariants and recoveries");
  inv->add_option("--kind", opt.kind, "which invariant")->required();
  add_io(inv, true);

  CLI::App* conj = app.add_subcommand("conjugacy", "decide conjugacy, emit witnesses");
  conj->add_option("--kind", opt.kind, "pl or composite")->required();
  conj->add_option("--seed", opt.seed, "witness sampling seed");
  conj->add_option("--samples", opt.samples, "witness sample count");
  add_io(conj, true);

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", opt.suite, "suite name or 'all'")->required();
  verify->add_option("--seed", opt.seed, "suite seed");
  verify->add_option("--samples", opt.samples, "override seeded case counts");
  verify->add_option("--out", opt.out, "report file (default stdout)");

  CLI::App* exp = app.add_subcommand("export", "re-serialize structures (json or dot)");
  add_io(exp, true);

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) return cmd_build(opt);
  if (inv->parsed()) return cmd_invariants(opt);
  if (conj->parsed()) return cmd_conjugacy(opt);
  if (verify->parsed()) return cmd_verify(opt);
  if (exp->parsed()) return cmd_export(opt);
  return 2;
}
