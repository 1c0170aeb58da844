// Command-line front end: verification suites with machine-readable reports,
// plus direct access to the individual computations (casimirs, appell
// polynomials, cohomology dimensions, the group law, correlator scans).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "alt1/appell.hpp"
#include "alt1/checks.hpp"
#include "alt1/cohomology.hpp"
#include "alt1/correlators.hpp"
#include "alt1/fock.hpp"
#include "alt1/grouplaw.hpp"

using namespace alt1;

namespace {

int cmd_verify(const std::string& filter, const std::string& json_path, bool parallel) {
  std::vector<CheckResult> results;
  try {
    results = run_suite(filter, parallel);
  } catch (const Alt1Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  int n_pass = 0, n_fail = 0, n_disc = 0;
  for (const auto& r : results) {
    const char* tag = status_name(r.status);
    (r.status == CheckStatus::pass ? n_pass
                                   : r.status == CheckStatus::fail ? n_fail : n_disc)++;
    std::cout << "[" << tag << "] " << r.id << " (" << r.ms << " ms)\n";
    if (!r.details.empty()) std::cout << "    " << r.details << "\n";
    if (r.status == CheckStatus::paper_discrepancy) {
      std::cout << "    printed: " << r.printed << "\n";
      std::cout << "    derived: " << r.derived << "\n";
    }
  }
  std::cout << results.size() << " checks: " << n_pass << " pass, " << n_disc
            << " paper_discrepancy, " << n_fail << " fail\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      return 2;
    }
    out << report_json(results);
  }
  return suite_exit_code(results);
}

int cmd_casimir(const std::string& rep, bool json) {
  Realization real;
  if (rep == "zeta_standard") real = zeta_standard();
  else if (rep == "contact_J") real = contact_J();
  else if (rep == "fixed_mass") real = fixed_mass();
  else {
    std::cerr << "error: unknown realization " << rep << "\n";
    return 2;
  }
  auto res = casimir_image(real);
  if (json) {
    std::cout << "{\"realization\": \"" << rep << "\", \"casimir\": \"" << res.op.str()
              << "\", \"commutes\": " << (res.commutes.ok ? "true" : "false") << "}\n";
  } else {
    std::cout << "S_hat(" << rep << ") = " << res.op.str() << "\n";
    std::cout << (res.commutes.ok ? "commutes with all six generators"
                                  : "COMMUTATION FAILURE: " + res.commutes.summary())
              << "\n";
  }
  return res.commutes.ok ? 0 : 1;
}

int cmd_appell(const std::string& file, int n, bool json) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "error: cannot read " << file << "\n";
    return 2;
  }
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  MomentSequence m = MomentSequence::formal(0);
  try {
    m = parse_moment_json(text);
  } catch (const Alt1Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (n > m.size()) {
    std::cerr << "error: need moments up to m_" << n << "\n";
    return 2;
  }
  auto p = appell_polynomials(n, m);
  if (json) {
    std::cout << "{\"n\": " << n << ", \"polynomials\": [";
    for (int i = 0; i <= n; ++i) std::cout << (i ? ", " : "") << "\"" << p[i].str() << "\"";
    std::cout << "]}\n";
  } else {
    for (int i = 0; i <= n; ++i) std::cout << "P_" << i << " = " << p[i].str() << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& algebra, bool json) {
  LieAlgebraDef alg = make_abelian(2);
  if (algebra == "alt1") alg = make_alt1();
  else if (algebra == "sl2") alg = make_sl2();
  else if (algebra != "abelian2") {
    std::cerr << "error: unknown algebra " << algebra << "\n";
    return 2;
  }
  auto res = h2(alg);
  if (json) {
    std::cout << "{\"algebra\": \"" << algebra << "\", \"dim_Z2\": " << res.dim_z2
              << ", \"dim_B2\": " << res.dim_b2 << ", \"dim_H2\": " << res.dim_h2 << "}\n";
  } else {
    std::cout << "dim Z^2 = " << res.dim_z2 << ", dim B^2 = " << res.dim_b2
              << ", dim H^2 = " << res.dim_h2 << "\n";
  }
  return 0;
}

int cmd_fock_gram(int order, bool json) {
  if (json) std::cout << "{\"order\": " << order << ", \"gram\": [";
  bool first = true;
  for (int j = 0; j <= order; ++j)
    for (int k = 0; j + k <= order; ++k)
      for (int jp = 0; jp <= order; ++jp)
        for (int kp = 0; jp + kp <= order; ++kp) {
          Poly g = gram(j, k, jp, kp);
          if (json) {
            if (!first) std::cout << ", ";
            first = false;
            std::cout << "{\"bra\": [" << j << ", " << k << "], \"ket\": [" << jp << ", " << kp
                      << "], \"value\": \"" << g.str() << "\"}";
          } else if (!g.is_zero()) {
            std::cout << "<" << j << "," << k << "|" << jp << "," << kp << "> = " << g.str()
                      << "\n";
          }
        }
  if (json) std::cout << "]}\n";
  return 0;
}

int cmd_grouplaw(const std::string& what, bool json) {
  if (what == "product") {
    auto rep = group_product_check();
    std::cout << (rep.ok ? "product matrix reproduced entrywise" : "FAIL: " + rep.summary())
              << "\n";
    return rep.ok ? 0 : 1;
  }
  if (what == "prop7") {
    auto res = leibniz_group_law();
    for (const auto& s : res.slots) {
      std::cout << s.name << ": derived " << s.derived.str();
      if (s.match)
        std::cout << " (matches printed)\n";
      else
        std::cout << "\n  printed " << s.printed.str() << "  [paper discrepancy]\n";
    }
    std::cout << "identity g(derived) == product: " << (res.identity_ok ? "holds" : "FAILS")
              << "\n";
    return res.identity_ok ? 0 : 1;
  }
  if (what == "pi") {
    auto res = pi_matrices();
    auto print = [&](const char* name, const MatQ& m) {
      std::cout << name << ":\n";
      for (int i = 0; i < 6; ++i) {
        std::cout << "  (";
        for (int j = 0; j < 6; ++j) std::cout << (j ? ", " : "") << m(i, j).str();
        std::cout << ")\n";
      }
    };
    print("pi_dagger", res.pi_dagger);
    print("pi_star", res.pi_star);
    for (const auto& m : res.dagger_mismatches)
      std::cout << "printed-vs-derived: " << m << "  [paper discrepancy]\n";
    return res.identity.ok ? 0 : 1;
  }
  if (what == "flow") {
    std::array<double, 6> alpha = {0.25, -1.0 / 3, 0.2, -0.5, 1.0 / 3, 0.25};
    double dev = splitting_flow_max_deviation(alpha, 1000, true);
    std::cout << "splitting flow max deviation (pi*, 1000 steps): " << dev << "\n";
    return dev < 1e-9 ? 0 : 1;
  }
  (void)json;
  std::cerr << "error: unknown group-law check " << what << "\n";
  return 2;
}

int cmd_correlator(const std::string& form, const std::string& rep_name) {
  ScanReport rep;
  if (form == "phi_st") rep = scan_phi_st();
  else if (form == "phi_j") rep = scan_phi_j();
  else if (form == "fixed1" || form == "fixed3") rep = scan_fixed_mass();
  else {
    std::cerr << "error: unknown form " << form << "\n";
    return 2;
  }
  (void)rep_name;
  for (const auto& a : rep.assumptions) std::cout << "# assumption: " << a << "\n";
  for (const auto& e : rep.entries) {
    if ((form == "fixed1" && e.generator.find("item1") == std::string::npos) ||
        (form == "fixed3" && e.generator.find("item3") == std::string::npos))
      continue;
    std::cout << e.generator << ": " << e.residual.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for the alt1 algebra and its extension W"};
  app.require_subcommand(1);

  std::string filter = "*", json_path;
  bool parallel = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--filter", filter, "check-id glob (default *)");
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_flag("--parallel", parallel, "run checks concurrently");

  std::string rep = "zeta_standard";
  bool as_json = false;
  auto* casimir = app.add_subcommand("casimir", "print the Casimir image in a realization");
  casimir->add_option("--rep", rep, "zeta_standard | contact_J | fixed_mass")->required();
  casimir->add_flag("--json", as_json, "JSON output");

  std::string moments_file;
  int n = 4;
  auto* appell = app.add_subcommand("appell", "Appell polynomials from a moment file");
  appell->add_option("--moments", moments_file, "JSON moment file")->required();
  appell->add_option("--n", n, "highest degree");
  appell->add_flag("--json", as_json, "JSON output");

  std::string algebra;
  auto* coh = app.add_subcommand("cohomology", "H^2 dimensions");
  coh->add_option("--algebra", algebra, "alt1 | sl2 | abelian2")->required();
  coh->add_flag("--json", as_json, "JSON output");

  int order = 2;
  auto* fockg = app.add_subcommand("fock-gram", "Gram matrix of the Fock pairing");
  fockg->add_option("--order", order, "level cutoff j+k <= order");
  fockg->add_flag("--json", as_json, "JSON output");

  std::string glcheck;
  auto* gl = app.add_subcommand("grouplaw", "group-law computations");
  gl->add_option("--check", glcheck, "product | prop7 | pi | flow")->required();
  gl->add_flag("--json", as_json, "JSON output");

  std::string corr_form, corr_rep;
  auto* corr = app.add_subcommand("correlator", "two-point covariance scans");
  corr->add_option("--form", corr_form, "phi_st | phi_j | fixed1 | fixed3")->required();
  corr->add_option("--rep", corr_rep, "realization name (informational)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(filter, json_path, parallel);
    if (casimir->parsed()) return cmd_casimir(rep, as_json);
    if (appell->parsed()) return cmd_appell(moments_file, n, as_json);
    if (coh->parsed()) return cmd_cohomology(algebra, as_json);
    if (fockg->parsed()) return cmd_fock_gram(order, as_json);
    if (gl->parsed()) return cmd_grouplaw(glcheck, as_json);
    if (corr->parsed()) return cmd_correlator(corr_form, corr_rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
