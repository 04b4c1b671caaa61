// Command-line surface for the exact Leibniz-algebra kernel: algebra I/O,
// series and Cartan computations, conjugacy certificates, oracle
// enumeration, per-theorem verification, and the acceptance-style suite.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "leibniz/verify.hpp"

using namespace leibniz;

namespace {

LeibnizAlgebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

json series_to_json(const SeriesReport& s) {
  json terms = json::array();
  for (const Subspace& t : s.terms) terms.push_back(subspace_to_json(t));
  return json{{"terms", terms}, {"stabilized", s.stabilized}};
}

int cmd_check(const std::string& path) {
  LeibnizAlgebra L = load_algebra(path);
  auto bad = check_leibniz(L);
  if (bad.empty()) {
    std::cout << "ok: " << L.fingerprint() << " satisfies the left Leibniz identity\n";
    return 0;
  }
  std::cout << "violations (1-based basis triples i,j,k):\n";
  for (auto& t : bad) std::cout << "  (" << t[0] + 1 << "," << t[1] + 1 << "," << t[2] + 1 << ")\n";
  return 1;
}

int cmd_series(const std::string& path) {
  LeibnizAlgebra L = load_algebra(path);
  json out;
  out["algebra"] = L.fingerprint();
  out["derived"] = series_to_json(derived_series(L));
  out["lower_central"] = series_to_json(lower_central_series(L));
  out["upper_central"] = series_to_json(upper_central_series(L));
  auto nil = is_nilpotent(L);
  out["nilpotent"] = nil.nilpotent;
  if (nil.nilpotent) out["nilpotency_class"] = nil.cls;
  out["solvable"] = is_solvable(L);
  auto j = j_infinity(L);
  out["j_infinity"] = subspace_to_json(j.j);
  out["j_abelian"] = j.abelian;
  auto guard = char_p_guard(L);
  out["char_p_guard"] = guard.ok ? "ok" : guard.reason();
  if (is_solvable(L)) {
    auto nr = nilradical(L);
    if (nr.certified) out["nilradical"] = subspace_to_json(nr.nilradical);
    auto len = nilpotent_length(L);
    if (len.certified) {
      out["nilpotent_length"] = len.length;
      json chain = json::array();
      for (const Subspace& c : len.chain) chain.push_back(subspace_to_json(c));
      out["nilpotent_length_chain"] = chain;
    }
  }
  if (L.field().is_rationals()) out["radical"] = subspace_to_json(radical(L));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_cartan(const std::string& path, uint64_t seed, bool randomized) {
  LeibnizAlgebra L = load_algebra(path);
  auto h = randomized ? find_cartan_seeded(L, seed) : find_cartan(L);
  if (!h) {
    std::cout << "not_found: candidate budget exhausted\n";
    return 1;
  }
  json out{{"cartan", subspace_to_json(*h)}, {"verified", is_cartan(L, *h)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_conjugate(const std::string& path, const std::string& h1_flag,
                  const std::string& h2_flag, bool via_j) {
  LeibnizAlgebra L = load_algebra(path);
  Subspace h1 = parse_subspace_flag(h1_flag, L.dim(), L.field());
  Subspace h2 = parse_subspace_flag(h2_flag, L.dim(), L.field());
  ConjugacyCertificate cert =
      via_j ? conjugate_cartans_abelian_J(L, h1, h2) : conjugate_cartans(L, h1, h2);
  std::cout << certificate_to_json(cert).dump(2) << "\n";
  return 0;
}

int cmd_enumerate(const std::string& path, const std::string& what, const std::string& ideal_flag,
                  int max_dim) {
  LeibnizAlgebra L = load_algebra(path);
  EnumerationBudget budget;
  budget.max_dim = max_dim;
  budget.fields = {2, 3, 5};
  std::vector<Subspace> result;
  if (what == "subalgebras") result = enum_subalgebras(L, budget);
  else if (what == "ideals") result = enum_ideals(L, budget);
  else if (what == "maximal") result = enum_maximal_subalgebras(L, budget);
  else if (what == "cartans") result = enum_cartans(L, budget);
  else if (what == "complements") {
    if (ideal_flag.empty()) throw precondition_error("--ideal required for complements");
    result = enum_complements(L, parse_subspace_flag(ideal_flag, L.dim(), L.field()), budget);
  } else if (what == "minimal-ideals") {
    auto mi = minimal_ideals(L);
    if (!mi.complete) {
      std::cout << json{{"complete", false}, {"note", mi.note}}.dump(2) << "\n";
      return 1;
    }
    result = mi.ideals;
  } else {
    throw precondition_error("unknown --what '" + what + "'");
  }
  json out = json::array();
  for (const Subspace& s : result) out.push_back(subspace_to_json(s));
  std::cout << json{{"what", what}, {"count", result.size()}, {"items", out}}.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& theorem, const std::vector<std::string>& files, uint64_t seed,
               int max_dim) {
  std::vector<LeibnizAlgebra> instances;
  for (const std::string& f : files) {
    LeibnizAlgebra L = load_algebra(f);
    auto bad = check_leibniz(L);
    if (!bad.empty()) {
      std::cerr << "rejected " << f << ": Leibniz identity fails at triple (" << bad[0][0] + 1
                << "," << bad[0][1] + 1 << "," << bad[0][2] + 1 << ")\n";
      return 2;
    }
    if (L.name().empty()) L.set_name(f);
    instances.push_back(std::move(L));
  }
  VerifyOptions opt;
  opt.seed = seed;
  opt.budget.max_dim = max_dim;
  opt.budget.fields = {2, 3, 5};
  int falsified = 0;
  for (const TheoremReport& r : verify(theorem, instances, opt)) {
    std::cout << report_to_json(r).dump() << "\n";
    std::cerr << r.theorem << " " << r.instance_id << ": " << verdict_str(r.verdict)
              << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
    falsified += r.verdict == Verdict::falsified;
  }
  return falsified == 0 ? 0 : 1;
}

int cmd_suite(const std::string& config_path, const std::string& report_path) {
  SuiteConfig cfg = config_path.empty()
                        ? SuiteConfig::defaults(std::string(LEIBNIZ_DATA_DIR) +
                                                "/catalog_nilpotent.json")
                        : suite_config_from_json(load_json_file(config_path));
  std::ofstream report_file;
  std::ostringstream sink;
  std::ostream* jsonl = &sink;
  if (!report_path.empty()) {
    report_file.open(report_path);
    if (!report_file) throw precondition_error("cannot write " + report_path);
    jsonl = &report_file;
  }
  SuiteSummary s = run_suite(cfg, *jsonl, std::cout);
  if (report_path.empty()) std::cout << sink.str();
  std::cout << s.to_json().dump(2) << "\n";
  return s.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic kernel and verification harness for "
               "finite-dimensional Leibniz algebras"};
  app.require_subcommand(1);

  std::string file, h1_flag, h2_flag, what = "subalgebras", ideal_flag, theorem, config_path,
              report_path;
  std::vector<std::string> files;
  uint64_t seed = 1;
  int max_dim = 5;
  bool randomized = false, via_j = false;

  CLI::App* check = app.add_subcommand("check", "validate the left Leibniz identity");
  check->add_option("file", file)->required();

  CLI::App* series = app.add_subcommand("series", "characteristic series and radicals");
  series->add_option("file", file)->required();

  CLI::App* cartan = app.add_subcommand("cartan", "find a verified Cartan subalgebra");
  cartan->add_option("file", file)->required();
  cartan->add_option("--seed", seed);
  cartan->add_flag("--randomized", randomized, "seeded random candidates first");

  CLI::App* conjugate = app.add_subcommand("conjugate", "conjugacy certificate for two Cartans");
  conjugate->add_option("file", file)->required();
  conjugate->add_option("--h1", h1_flag, "semicolon-separated vectors")->required();
  conjugate->add_option("--h2", h2_flag, "semicolon-separated vectors")->required();
  conjugate->add_flag("--via-j", via_j, "use the one-shot abelian-J solver");

  CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustive oracle enumeration (GF(p))");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--what", what,
                        "subalgebras|ideals|maximal|cartans|complements|minimal-ideals");
  enumerate->add_option("--ideal", ideal_flag, "ideal flag for complements");
  enumerate->add_option("--max-dim", max_dim);

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify a theorem on instance files");
  verify_cmd->add_option("--theorem", theorem, "L1|T1|T2|C1|T3|T4|T5|T6|T7|T8|T9")->required();
  verify_cmd->add_option("files", files)->required();
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--max-dim", max_dim);

  CLI::App* suite = app.add_subcommand("suite", "run the full verification matrix");
  suite->add_option("--config", config_path, "suite config JSON");
  suite->add_option("--report", report_path, "JSONL report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);
    if (series->parsed()) return cmd_series(file);
    if (cartan->parsed()) return cmd_cartan(file, seed, randomized);
    if (conjugate->parsed()) return cmd_conjugate(file, h1_flag, h2_flag, via_j);
    if (enumerate->parsed()) return cmd_enumerate(file, what, ideal_flag, max_dim);
    if (verify_cmd->parsed()) return cmd_verify(theorem, files, seed, max_dim);
    if (suite->parsed()) return cmd_suite(config_path, report_path);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
