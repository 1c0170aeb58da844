// Acceptance suite: one pass/fail line per criterion, exact checks with the
// stated time bounds. Exit code is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "alt1/appell.hpp"
#include "alt1/checks.hpp"
#include "alt1/cohomology.hpp"
#include "alt1/correlators.hpp"
#include "alt1/fock.hpp"
#include "alt1/grouplaw.hpp"

using namespace alt1;

namespace {

struct Criterion {
  std::string name;
  double limit_seconds;  // 0 = no individual limit
  std::function<void(std::vector<std::string>&)> run;  // push failure notes
};

int failures = 0;

void require(std::vector<std::string>& notes, bool ok, const std::string& what) {
  if (!ok) notes.push_back(what);
}

Poly pv(const char* n) { return Poly::var(n); }

}  // namespace

int main() {
  std::vector<Criterion> criteria;

  criteria.push_back({"criterion 01: jacobi suites (alt1, sv N=5, W N=8)", 1.0,
                      [](std::vector<std::string>& notes) {
    auto a = jacobi_check(make_alt1());
    require(notes, a.ok() && a.checked == 20, "alt1: 20 triples, zero violations");
    auto s = jacobi_check(make_sv(5));
    require(notes, s.ok(), "sv N=5: zero violations");
    auto w = jacobi_check(make_W(8));
    require(notes, w.ok(), "W N=8: zero violations");
  }});

  criteria.push_back({"criterion 02: Prop 1 grassmann isomorphism", 1.0,
                      [](std::vector<std::string>& notes) {
    require(notes, prop1_isomorphism_check().ok,
            "grassmann_tensor(sl2) bracket table equals alt1 under Phi");
  }});

  criteria.push_back({"criterion 03: representation checks |n|,|m| <= 8", 5.0,
                      [](std::vector<std::string>& notes) {
    require(notes, verify_realization(fixed_mass(), 8).ok, "fixed-mass realization");
    require(notes, verify_realization(contact_J(), 8).ok, "contact realization");
    require(notes, verify_zeta_alt1().ok, "zeta realization restricted to alt1");
  }});

  criteria.push_back({"criterion 04: casimir images", 0, [](std::vector<std::string>& notes) {
    auto z = casimir_image(zeta_standard());
    auto c = casimir_image(contact_J());
    auto f = casimir_image(fixed_mass());
    require(notes, z.commutes.ok && c.commutes.ok && f.commutes.ok,
            "[S_hat, eta] = 0 in all three realizations, identically in (x, gamma, A)");
    Poly t = Poly::var_pow(DiffOp::var_t(), 1);
    DiffOp printed_z =
        DiffOp::term((t * t).scaled(Scalar::i() * Scalar(-2)), {1, 0, 1, 0}) +
        DiffOp::term(-(t * t), {0, 2, 0, 0}) +
        DiffOp::term((t * (pv("x").scaled(Scalar(2)) - Poly::one())).scaled(-Scalar::i()),
                     {0, 0, 1, 0});
    require(notes, z.op == printed_z, "S_hat(zeta_standard) equals the printed operator");
    DiffOp printed_c =
        DiffOp::term((pv("A") * (pv("x").scaled(Scalar::ratio(1, 2)) - Poly::one()))
                         .scaled(Scalar::i()),
                     {0, 0, 1, 0}) +
        DiffOp::term(Poly::constant(Scalar::ratio(-1, 4)), {0, 0, 2, 0});
    if (!(c.op == printed_c)) {
      notes.push_back(
          "S_hat(contact_J) equals the printed dzeta-expression: the exact image is "
          "i A (x/2 - 1) dzeta + (1/4) dzeta^2, while the paper prints -(1/4) dzeta^2. "
          "S1 = Y-1 Y1 - Y0^2 lands on +(1/4) uniquely (machine-derived; the same S1 "
          "convention makes the zeta_standard printed value correct, so no sign convention "
          "rescues the print). Emitted as paper_discrepancy casimir.contact_j.");
    }
    require(notes, f.op.max_order() == 0, "S_hat(fixed_mass) has derivative order 0");
  }});

  criteria.push_back({"criterion 05: cohomology dimensions", 1.0,
                      [](std::vector<std::string>& notes) {
    require(notes, h2(make_alt1()).dim_h2 == 0, "dim H^2(alt1) = 0");
    require(notes, h2(make_sl2()).dim_h2 == 0, "dim H^2(sl2) = 0");
    require(notes, h2(make_abelian(2)).dim_h2 == 1, "dim H^2(abelian-2) = 1");
  }});

  criteria.push_back({"criterion 06: W extensions (cocycles N=6, two-virasoro)", 0,
                      [](std::vector<std::string>& notes) {
    auto g = graded_cocycle_check(6);
    require(notes, g.vir_closed.ok && g.omega_closed.ok,
            "both cocycles closed on all window-interior triples");
    require(notes, g.vir_noncoboundary.ok && g.omega_noncoboundary.ok,
            "non-coboundary certificates produced");
    require(notes, two_virasoro_check(4).ok,
            "two-virasoro construction reproduces the (c+c')/12 and c/12 terms");
    require(notes, omega_extension_check(4).ok, "omega extension builds and passes jacobi");
  }});

  criteria.push_back({"criterion 07: group law (Prop 7)", 0,
                      [](std::vector<std::string>& notes) {
    require(notes, group_product_check().ok, "product matrix reproduced entrywise");
    auto res = leibniz_group_law();
    require(notes, res.identity_ok,
            "derived coordinates rebuild the product matrix as rational-function identities");
    // corrected A1 and e^{A4} identities
    Poly b1 = pv("B1"), b2 = pv("B2"), v1 = pv("V1"), v2 = pv("V2");
    Poly d = Poly::one() - b2 * v2;
    for (const auto& s : res.slots) {
      if (s.name == "A1")
        require(notes, s.derived == RFn(v1 + b1 * v2 * v2, d * d),
                "A1 with the squared denominator holds");
      if (s.name == "e^A4")
        require(notes, s.derived == RFn(d * d), "e^{A4} = (1 - B2 V2)^2 holds");
    }
    auto suite = run_suite("grouplaw.prop7.*", false);
    int disc = 0;
    for (const auto& r : suite)
      if (r.status == CheckStatus::paper_discrepancy) ++disc;
    if (disc != 2) {
      std::ostringstream os;
      os << "exactly two paper_discrepancy entries for Prop 7: " << disc
         << " are emitted (A1 power, A4 factor, and A5). The printed A5 slot is "
            "machine-refuted: the unique solution of g(A) = product has A5 = "
            "(B1 + B2^2 V1)/(1-B2V2)^2; the printed slot matches only the misprinted "
            "A5 extraction formula (sign of g24 g21/g22^2), which itself fails the "
            "round-trip invariant extract(build(A)) = A. Suppressing the third entry "
            "would hide a real discrepancy.";
      notes.push_back(os.str());
    }
  }});

  criteria.push_back({"criterion 08: 4x4 matrix representation", 0,
                      [](std::vector<std::string>& notes) {
    auto printed = verify_matrix_rep(printed_rep4());
    bool only_xm1 = !printed.ok && printed.failing_pairs.size() == 5;
    for (const auto& p : printed.failing_pairs)
      if (p.find("X-1") == std::string::npos) only_xm1 = false;
    require(notes, only_xm1, "printed set fails exactly the pairs involving X-1");
    auto rep = repair_matrix_rep();
    require(notes, rep.unique && rep.all_pass && rep.xm1 == repaired_rep4().at(3),
            "repaired X-1 = -(E21 + E43) passes all 15 pairs");
    auto cas = matrix_casimir();
    Mat<Poly> s0(4, 4);
    s0(0, 2) = Poly::constant(Scalar::ratio(-3, 2));
    s0(1, 3) = Poly::constant(Scalar::ratio(-3, 2));
    require(notes,
            cas.s1.is_zero() && cas.commutes &&
                cas.s_hat == s0.map([](const Poly& p) { return p * Poly::var("A"); }),
            "repaired-rep casimir equals -(3/2) A (E13 + E24) and commutes");
  }});

  criteria.push_back({"criterion 09: pi matrices and splitting flow", 0,
                      [](std::vector<std::string>& notes) {
    auto res = pi_matrices();
    require(notes, res.identity.ok, "eta_j g = sum pi d_mu g holds exactly");
    require(notes, res.star_mismatches.empty(), "computed pi* equals the printed matrix");
    if (!res.dagger_mismatches.empty()) {
      notes.push_back(
          "computed pi^dag equals the printed matrix entrywise: entry (3,1) differs. The "
          "exact solve gives row 3 = (-A2, 0, 1, 0, 0, 0); the paper prints (0,0,1,0,0,0). "
          "The -A2 entry is forced by [X1, Y0] = Y1 (compare the printed -A1, -A2 entries "
          "in row 4, which the paper does include). Emitted as paper_discrepancy "
          "grouplaw.pi_dagger.printed.");
    }
    auto t0 = std::chrono::steady_clock::now();
    std::array<double, 6> alpha = {0.5, -0.5, 0.25, -0.5, 1.0 / 3, 0.5};
    double dev_star = splitting_flow_max_deviation(alpha, 1000, true);
    double dev_dag = splitting_flow_max_deviation(alpha, 1000, false);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream os;
    os << "splitting flow deviation < 1e-9 (got pi*: " << dev_star << ", pi+: " << dev_dag
       << ")";
    require(notes, dev_star < 1e-9 && dev_dag < 1e-9, os.str());
    require(notes, secs < 1.0, "flow test under 1 s");
  }});

  criteria.push_back({"criterion 10: fock ladder actions and pairing", 0,
                      [](std::vector<std::string>& notes) {
    const auto& act = derive_ladder_actions();
    require(notes, act.brackets.ok, "all 15 brackets hold symbolically in (j,k,gamma,x)");
    require(notes, leibniz_function_check(4).ok,
            "gram matrix equals the Leibniz series through level 4");
    require(notes, adjointness_check(6).ok, "adjointness at beta = 1 up to level 6");
    require(notes,
            act.acti_mismatches.size() == 1 && act.acti_mismatches[0].find("Y-1") == 0,
            "Y-1 row paper_discrepancy emitted against the printed action table");
  }});

  criteria.push_back({"criterion 11: Prop 8 generating function", 0,
                      [](std::vector<std::string>& notes) {
    auto res = prop8_check(4);
    require(notes, res.corrected.ok,
            "identity verified through total order 4 with the corrected third factor");
    require(notes, res.printed_fails, "one paper_discrepancy emitted (printed third factor)");
  }});

  criteria.push_back({"criterion 12: appell systems", 0, [](std::vector<std::string>& notes) {
    auto mom = MomentSequence::formal(4);
    auto w2 = wick_product(2, mom);
    Poly e1 = mom.joint({1}), e2 = mom.joint({2}), e12 = mom.joint({1, 2});
    require(notes,
            w2.coefficient(3) == Poly::one() && w2.coefficient(1) == -e2 &&
                w2.coefficient(2) == -e1 &&
                w2.coefficient(0) == e1 * e2.scaled(Scalar(2)) - e12,
            "example 1 wick products reproduced");
    auto ex2 = example2_check();
    require(notes, ex2.p0_p3_ok, "example 2 P0..P3 reproduced");
    require(notes, ex2.printed_p4_wrong && ex2.printed_pair_breaks_recursion,
            "example 2 P4/P5 paper_discrepancy emitted");
    auto m8 = MomentSequence::formal(8);
    auto p = appell_polynomials(8, m8);
    bool conds = true;
    int x = Vars::id("x");
    for (int n = 1; n <= 8; ++n) {
      if (!(p[n].derivative(x) == p[n - 1].scaled(Scalar(n)))) conds = false;
      Poly e;
      for (const auto& [mono, c] : p[n].terms()) {
        int dd = mono.exponent(x);
        Monomial rest;
        for (const auto& f : mono.factors)
          if (f.var != x) rest.factors.push_back(f);
        e += Poly::monomial(rest, c) * m8.moment(dd);
      }
      if (!e.is_zero()) conds = false;
    }
    require(notes, conds, "derivative/expectation conditions hold for n <= 8, symbolically");
    require(notes, hermite_check(8).ok, "hermite specialization matches He_n for n <= 8");
  }});

  criteria.push_back({"criterion 13: Prop 4 no-go", 2.0, [](std::vector<std::string>& notes) {
    auto res = nogo_solve(4, true);
    require(notes, res.status == SolveStatus::infeasible, "ansatz degree <= 4 infeasible");
    require(notes,
            res.witness.find("d_r f = -6 t^2") != std::string::npos &&
                res.witness.find("d_r f = 0") != std::string::npos,
            "witness exhibits the d_r f = -6t^2 vs d_r f = 0 clash");
  }});

  criteria.push_back({"criterion 14: Prop 5 contact form, |n| <= 5", 0,
                      [](std::vector<std::string>& notes) {
    require(notes, contact_check(5).ok, "conditions (i)-(iii) verified by exact divisibility");
  }});

  criteria.push_back({"criterion 15: Prop 6 contraction", 0,
                      [](std::vector<std::string>& notes) {
    require(notes, contraction_check(4).ok,
            "a-parametric brackets hold; a -> 0 constants equal W");
  }});

  criteria.push_back({"criterion 16: correlators", 0, [](std::vector<std::string>& notes) {
    auto st = scan_phi_st();
    bool zeros = true;
    bool dconstr = false;
    for (const auto& e : st.entries) {
      if (e.generator.find("Y-1/2") != std::string::npos ||
          e.generator.find("Y1/2") != std::string::npos ||
          e.generator.find("M0") != std::string::npos)
        zeros = zeros && e.residual.kind == FBasisResidual::Kind::zero;
      if (e.generator.find("D-") != std::string::npos &&
          e.residual.kind == FBasisResidual::Kind::ode_constraint) {
        Poly expect = (pv("x1") + pv("x2")).scaled(Scalar::ratio(1, 2));
        dconstr = e.residual.ode_s == RFn(expect);
      }
    }
    require(notes, zeros, "translation/M0 annihilation of phi_st, exact zeros");
    require(notes, dconstr, "D-residual reduces to u f' + ((x1+x2)/2) f = 0");
    Poly m1 = pv("M1");
    auto op = op_sum(instantiate(fourier_transport(zeta_Y2(1)), 0, "Y", m1),
                     instantiate(fourier_transport(zeta_Y2(1)), 1, "Y", -m1));
    auto res = apply_two_particle(op, fixed_mass_form1());
    require(notes, res.kind == FBasisResidual::Kind::zero,
            "item-1 kernel annihilated by the transported Y-pair with opposite masses");
    require(notes,
            spot_check_zero(pair_sum(zeta_Y2(-1), "Y"), phi_st_form(), 20, 301) &&
                spot_check_zero(pair_sum(zeta_M0(), "M0"), phi_st_form(), 20, 302) &&
                spot_check_zero(op, fixed_mass_form1(), 20, 303),
            "numeric spot-checks agree at 20 random points");
  }});

  auto suite_start = std::chrono::steady_clock::now();
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> notes;
    try {
      c.run(notes);
    } catch (const std::exception& e) {
      notes.push_back(std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      std::ostringstream os;
      os << "time limit " << c.limit_seconds << " s exceeded (" << secs << " s)";
      notes.push_back(os.str());
    }
    bool ok = notes.empty();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.name << "  (" << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    for (const auto& n : notes) std::cout << "       - " << n << "\n";
  }

  // supplementary: report determinism (serial vs parallel, ms normalized)
  {
    auto serial = run_suite("grouplaw.*", false);
    auto parallel = run_suite("grouplaw.*", true);
    auto norm = [](std::vector<CheckResult> v) {
      for (auto& r : v) r.ms = 0;
      return report_json(v);
    };
    bool same = norm(serial) == norm(parallel);
    std::cout << (same ? "[PASS] " : "[FAIL] ")
              << "supplement: report determinism across serial/parallel execution\n";
    if (!same) ++failures;
    bool unknown_rejected = false;
    try {
      run_suite("nosuchcheck", false);
    } catch (const Alt1Error&) {
      unknown_rejected = true;
    }
    std::cout << (unknown_rejected ? "[PASS] " : "[FAIL] ")
              << "supplement: unknown check id is rejected\n";
    if (!unknown_rejected) ++failures;
  }

  auto suite_end = std::chrono::steady_clock::now();
  double total = std::chrono::duration<double>(suite_end - suite_start).count();
  bool in_budget = total < 30.0;
  std::cout << (in_budget ? "[PASS] " : "[FAIL] ") << "full suite runtime " << std::fixed
            << std::setprecision(2) << total << " s (target < 30 s)\n";
  if (!in_budget) ++failures;

  if (failures) {
    std::cout << failures << " criterion(s) failed. The criterion-4/7/9 failures, if present, "
                 "are machine-proven paper typos the specification inherited; see the "
                 "paper_discrepancy entries in `alt1verify verify` for the derived values.\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
