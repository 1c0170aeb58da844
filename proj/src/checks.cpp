#include "alt1/checks.hpp"

#include <json.hpp>

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

#include "alt1/appell.hpp"
#include "alt1/cohomology.hpp"
#include "alt1/correlators.hpp"
#include "alt1/diffop.hpp"
#include "alt1/fock.hpp"
#include "alt1/grouplaw.hpp"

namespace alt1 {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::paper_discrepancy:
      return "paper_discrepancy";
  }
  return "?";
}

namespace {

using CheckFn = std::function<CheckResult()>;

CheckResult from_report(const std::string& id, const Report& rep) {
  CheckResult r;
  r.id = id;
  r.status = rep.ok ? CheckStatus::pass : CheckStatus::fail;
  std::ostringstream os;
  for (size_t i = 0; i < rep.notes.size(); ++i) os << (i ? "; " : "") << rep.notes[i];
  r.details = os.str();
  return r;
}

CheckResult pass(const std::string& id, const std::string& details) {
  return {id, CheckStatus::pass, details, "", "", 0};
}
CheckResult fail(const std::string& id, const std::string& details) {
  return {id, CheckStatus::fail, details, "", "", 0};
}
CheckResult discrepancy(const std::string& id, const std::string& details,
                        const std::string& printed, const std::string& derived) {
  return {id, CheckStatus::paper_discrepancy, details, printed, derived, 0};
}

CheckResult jacobi_result(const std::string& id, const JacobiReport& rep,
                          const std::string& what) {
  if (rep.ok())
    return pass(id, what + ": no violations on " + std::to_string(rep.checked) + " triples (" +
                        std::to_string(rep.skipped) + " window-escaping skipped)");
  return fail(id, what + ": " + std::to_string(rep.violations.size()) + " violations");
}

std::vector<std::pair<std::string, CheckFn>> build_registry() {
  std::vector<std::pair<std::string, CheckFn>> reg;
  auto add = [&](const std::string& id, CheckFn fn) { reg.push_back({id, std::move(fn)}); };

  // ---- jacobi ----
  add("jacobi.alt1", [] { return jacobi_result("jacobi.alt1", jacobi_check(make_alt1()), "alt1"); });
  add("jacobi.sv_n5", [] { return jacobi_result("jacobi.sv_n5", jacobi_check(make_sv(5)), "sv N=5"); });
  add("jacobi.w_n8", [] { return jacobi_result("jacobi.w_n8", jacobi_check(make_W(8)), "W N=8"); });
  add("jacobi.negative_control", [] {
    auto a = make_alt1();
    a.set_bracket(a.index_of("X0"), a.index_of("X1"), {{a.index_of("X1"), Poly(-2)}});
    auto rep = jacobi_check(a);
    if (rep.ok()) return fail("jacobi.negative_control", "corrupted constant not detected");
    return pass("jacobi.negative_control",
                "corrupted c_{X0X1}^{X1} detected; first violating triple (" +
                    a.label(rep.violations[0].i) + "," + a.label(rep.violations[0].j) + "," +
                    a.label(rep.violations[0].k) + ") residual " + rep.violations[0].residual);
  });

  // ---- liealg ----
  add("liealg.prop1_grassmann",
      [] { return from_report("liealg.prop1_grassmann", prop1_isomorphism_check()); });
  add("liealg.contraction", [] { return from_report("liealg.contraction", contraction_check(4)); });
  add("liealg.density_action",
      [] { return from_report("liealg.density_action", density_action_check(3)); });
  add("liealg.two_virasoro",
      [] { return from_report("liealg.two_virasoro", two_virasoro_check(4)); });
  add("liealg.adjoint_rep", [] { return from_report("liealg.adjoint_rep", adjoint_rep_check(make_alt1())); });
  add("liealg.printed_adjoint6", [] {
    auto rep = adjoint6_convention_check();
    int unmatched = 0;
    std::string details;
    for (const auto& n : rep.notes) {
      if (!details.empty()) details += "; ";
      details += n;
      if (n.find("no convention") != std::string::npos) ++unmatched;
    }
    if (unmatched == 0) return pass("liealg.printed_adjoint6", details);
    return discrepancy("liealg.printed_adjoint6", details,
                       "printed Y1 and X-1 6x6 matrices (index shifts)",
                       "ad matrices from the structure constants; " + details);
  });

  // ---- realizations ----
  add("realization.fixed_mass",
      [] { return from_report("realization.fixed_mass", verify_realization(fixed_mass(), 8)); });
  add("realization.contact_j",
      [] { return from_report("realization.contact_j", verify_realization(contact_J(), 8)); });
  add("realization.zeta_alt1", [] { return from_report("realization.zeta_alt1", verify_zeta_alt1()); });
  add("realization.zeta_sch1", [] { return from_report("realization.zeta_sch1", verify_zeta_sch1()); });

  // ---- casimirs ----
  add("casimir.zeta_standard", [] {
    auto res = casimir_image(zeta_standard());
    Poly t = Poly::var_pow(DiffOp::var_t(), 1), x = Poly::var("x");
    DiffOp printed =
        DiffOp::term((t * t).scaled(Scalar::i() * Scalar(-2)), {1, 0, 1, 0}) +
        DiffOp::term(-(t * t), {0, 2, 0, 0}) +
        DiffOp::term((t * (x.scaled(Scalar(2)) - Poly::one())).scaled(-Scalar::i()), {0, 0, 1, 0});
    if (!res.commutes.ok) return fail("casimir.zeta_standard", res.commutes.summary());
    if (!(res.op == printed))
      return fail("casimir.zeta_standard", "image differs from the printed operator: " + res.op.str());
    return pass("casimir.zeta_standard", "S_hat = " + res.op.str() + "; commutes with all six");
  });
  add("casimir.contact_j", [] {
    auto res = casimir_image(contact_J());
    if (!res.commutes.ok) return fail("casimir.contact_j", res.commutes.summary());
    Poly A = Poly::var("A"), x = Poly::var("x");
    DiffOp first = DiffOp::term(
        (A * (x.scaled(Scalar::ratio(1, 2)) - Poly::one())).scaled(Scalar::i()), {0, 0, 1, 0});
    DiffOp derived = first + DiffOp::term(Poly::constant(Scalar::ratio(1, 4)), {0, 0, 2, 0});
    DiffOp printed = first + DiffOp::term(Poly::constant(Scalar::ratio(-1, 4)), {0, 0, 2, 0});
    if (!(res.op == derived)) return fail("casimir.contact_j", "unexpected image " + res.op.str());
    (void)printed;
    return discrepancy(
        "casimir.contact_j",
        "S1 = Y-1 Y1 - Y0^2 lands on +(1/4) dzeta^2; the printed sign is negative. Both commute "
        "with every generator (dzeta is central here), but the printed value is not A S0 + S1.",
        "i A (x/2 - 1) dzeta - (1/4) dzeta^2", res.op.str());
  });
  add("casimir.fixed_mass", [] {
    auto res = casimir_image(fixed_mass());
    if (!res.commutes.ok) return fail("casimir.fixed_mass", res.commutes.summary());
    if (res.op.max_order() != 0)
      return fail("casimir.fixed_mass", "image is not order zero: " + res.op.str());
    return pass("casimir.fixed_mass", "S_hat = " + res.op.str() + " (order zero)");
  });
  add("schrodinger.operator", [] {
    DiffOp s = schrodinger_operator();
    DiffOp expected = DiffOp::term(Poly::constant(Scalar::i() * Scalar(-2)), {1, 0, 1, 0}) +
                      DiffOp::term(Poly(-1), {0, 2, 0, 0});
    if (!(s == expected)) return fail("schrodinger.operator", "S != -2i dz dt - dr^2");
    return pass("schrodinger.operator", "2 M0 X-1 - Y_{-1/2}^2 = " + s.str());
  });

  // ---- cohomology ----
  add("cohomology.h2_alt1", [] {
    auto r = h2(make_alt1());
    return r.dim_h2 == 0 ? pass("cohomology.h2_alt1", "dim H^2(alt1) = 0")
                         : fail("cohomology.h2_alt1", "dim H^2 = " + std::to_string(r.dim_h2));
  });
  add("cohomology.h2_sl2", [] {
    auto r = h2(make_sl2());
    return r.dim_h2 == 0 ? pass("cohomology.h2_sl2", "dim H^2(sl2) = 0")
                         : fail("cohomology.h2_sl2", "dim H^2 = " + std::to_string(r.dim_h2));
  });
  add("cohomology.h2_abelian2", [] {
    auto r = h2(make_abelian(2));
    return r.dim_h2 == 1 ? pass("cohomology.h2_abelian2", "dim H^2 = 1, representative emitted")
                         : fail("cohomology.h2_abelian2", "dim H^2 = " + std::to_string(r.dim_h2));
  });
  add("cohomology.dd_zero", [] {
    bool ok = dd_zero_check(make_alt1()) && dd_zero_check(make_sl2()) &&
              dd_zero_check(grassmann_tensor(make_sl2()).algebra);
    return ok ? pass("cohomology.dd_zero", "d o d = 0 on all constructed algebras")
              : fail("cohomology.dd_zero", "d o d != 0");
  });
  add("cohomology.prop2_structure",
      [] { return from_report("cohomology.prop2_structure", prop2_structure_check()); });
  add("cohomology.graded_cocycles", [] {
    auto rep = graded_cocycle_check(6);
    if (!rep.ok()) return fail("cohomology.graded_cocycles", "windowed cocycle check failed");
    return pass("cohomology.graded_cocycles",
                rep.vir_closed.summary() + " | " + rep.omega_closed.summary() + " | " +
                    rep.vir_noncoboundary.summary() + " | " + rep.omega_noncoboundary.summary());
  });
  add("cohomology.omega_extension",
      [] { return from_report("cohomology.omega_extension", omega_extension_check(4)); });

  // ---- no-go and contact form ----
  add("nogo.prop4", [] {
    auto d4 = nogo_solve(4, true);
    auto d3 = nogo_solve(3, true);
    auto d3b = nogo_solve(3, false);
    if (d4.status != SolveStatus::infeasible || d3.status != SolveStatus::infeasible ||
        d3b.status != SolveStatus::infeasible)
      return fail("nogo.prop4", "ansatz unexpectedly feasible");
    return pass("nogo.prop4", "infeasible for degree <= 4 (with and without the order-zero "
                              "term); witness: " + d4.witness);
  });
  add("nogo.relaxed", [] {
    auto r = nogo_solve_relaxed(3, true);
    if (r.status != SolveStatus::parametric)
      return fail("nogo.relaxed", "dropping the third relation should leave freedom");
    return pass("nogo.relaxed",
                "third relation dropped: parametric with " + std::to_string(r.n_free) +
                    " free coefficients");
  });
  add("contact.prop5", [] { return from_report("contact.prop5", contact_check(5)); });

  // ---- group law ----
  add("grouplaw.printed_rep", [] {
    auto check = verify_matrix_rep(printed_rep4());
    if (check.ok) return fail("grouplaw.printed_rep", "printed matrices unexpectedly pass");
    std::string fails;
    for (const auto& p : check.failing_pairs) fails += (fails.empty() ? "" : ", ") + p;
    bool only_xm1 = true;
    for (const auto& p : check.failing_pairs)
      if (p.find("X-1") == std::string::npos) only_xm1 = false;
    if (!only_xm1 || check.failing_pairs.size() != 5)
      return fail("grouplaw.printed_rep", "unexpected failing set: " + fails);
    return discrepancy("grouplaw.printed_rep",
                       "printed X-1 violates exactly the five brackets involving it: " + fails,
                       "X-1 = -(E22 + E43)", "X-1 = -(E21 + E43)");
  });
  add("grouplaw.repaired_rep", [] {
    auto res = repair_matrix_rep();
    if (!res.unique || !res.all_pass)
      return fail("grouplaw.repaired_rep", "repair not unique or incomplete");
    if (!(res.xm1 == repaired_rep4().at(3)))
      return fail("grouplaw.repaired_rep", "repair differs from -(E21 + E43)");
    return pass("grouplaw.repaired_rep",
                "unique repaired X-1 = -(E21 + E43); all 15 bracket pairs pass");
  });
  add("grouplaw.matrix_casimir", [] {
    auto cas = matrix_casimir();
    Mat<Poly> expected(4, 4);
    expected(0, 2) = Poly::constant(Scalar::ratio(-3, 2));
    expected(1, 3) = Poly::constant(Scalar::ratio(-3, 2));
    if (!(cas.s0 == expected) || !cas.s1.is_zero() || !cas.commutes)
      return fail("grouplaw.matrix_casimir", "casimir matrices unexpected");
    return pass("grouplaw.matrix_casimir",
                "S0 = -(3/2)(E13 + E24), S1 = 0; S_hat commutes with all six");
  });
  add("grouplaw.product", [] { return from_report("grouplaw.product", group_product_check()); });

  add("grouplaw.prop7.identity", [] {
    auto res = leibniz_group_law();
    return res.identity_ok
               ? pass("grouplaw.prop7.identity",
                      "g(derived coordinates) reproduces the product matrix entrywise")
               : fail("grouplaw.prop7.identity", "derived coordinates do not rebuild the product");
  });
  auto prop7_slot = [](const std::string& slot) {
    return [slot]() -> CheckResult {
      auto res = leibniz_group_law();
      for (const auto& s : res.slots) {
        std::string id = "grouplaw.prop7." + slot;
        std::string nm = slot == "a4" ? "e^A4" : std::string("A") + slot.substr(1);
        if (s.name != nm) continue;
        if (s.match) return pass(id, s.name + " printed slot matches: " + s.derived.str());
        return discrepancy(id, s.name + " printed slot differs from the matrix-oracle value",
                           s.printed.str(), s.derived.str());
      }
      return fail("grouplaw.prop7." + slot, "slot not found");
    };
  };
  for (const char* s : {"a1", "a2", "a3", "a4", "a5", "a6"})
    add(std::string("grouplaw.prop7.") + s, prop7_slot(s));

  add("grouplaw.extract.roundtrip", [] {
    Coordinates c;
    c.a1 = RFn(Poly(2));
    c.a2 = RFn(Poly(-1));
    c.a3 = RFn(Poly(3));
    c.a5 = RFn(Poly(1));
    c.a6 = RFn(Poly(-2));
    c.e_a4_half = RFn(Poly(5));
    auto back = extract_coordinates(build_group_element(c));
    bool ok = back.a1 == c.a1 && back.a2 == c.a2 && back.a3 == c.a3 && back.a5 == c.a5 &&
              back.a6 == c.a6 && back.e_a4_half == c.e_a4_half;
    return ok ? pass("grouplaw.extract.roundtrip", "extract(build(A)) = A")
              : fail("grouplaw.extract.roundtrip", "round trip failed");
  });
  add("grouplaw.extract.a5_formula", [] {
    auto rep = extract_a5_formula_check();
    if (!rep.ok) return fail("grouplaw.extract.a5_formula", rep.summary());
    return discrepancy("grouplaw.extract.a5_formula",
                       "the printed A5 extraction returns A5 + A3 A6 on g(A); the corrected "
                       "sign round-trips (this propagates into the printed Prop 7 A5 slot)",
                       "A5 = -g23/g22 - g24 g21/g22^2", "A5 = -g23/g22 + g24 g21/g22^2");
  });
  add("grouplaw.pi_star", [] {
    auto res = pi_matrices();
    if (!res.star_mismatches.empty())
      return fail("grouplaw.pi_star", "pi* differs from the printed matrix");
    return pass("grouplaw.pi_star", "computed pi* equals the printed matrix entrywise");
  });
  add("grouplaw.pi_dagger.identity", [] {
    auto res = pi_matrices();
    return res.identity.ok
               ? pass("grouplaw.pi_dagger.identity", "eta_j g = sum pi+ d_mu g holds entrywise")
               : fail("grouplaw.pi_dagger.identity", res.identity.summary());
  });
  add("grouplaw.pi_dagger.printed", [] {
    auto res = pi_matrices();
    if (res.dagger_mismatches.empty())
      return fail("grouplaw.pi_dagger.printed", "expected the row-3 mismatch, found none");
    if (res.dagger_mismatches.size() != 1 ||
        res.dagger_mismatches[0].find("(3,1)") == std::string::npos)
      return fail("grouplaw.pi_dagger.printed", "unexpected mismatch set");
    return discrepancy("grouplaw.pi_dagger.printed",
                       "printed pi+ row 3 omits the -A2 entry in column 1 (compare the -A1, "
                       "-A2 entries printed in row 4)",
                       "row 3 = (0, 0, 1, 0, 0, 0)", "row 3 = (-A2, 0, 1, 0, 0, 0)");
  });
  add("grouplaw.flow", [] {
    std::array<double, 6> alpha = {0.25, -1.0 / 3, 0.2, -0.5, 1.0 / 3, 0.25};
    double dev_star = splitting_flow_max_deviation(alpha, 1000, true);
    double dev_dag = splitting_flow_max_deviation(alpha, 1000, false);
    std::ostringstream os;
    os << "max deviation: pi* " << dev_star << ", pi+ " << dev_dag << " (1000 steps)";
    if (dev_star < 1e-9 && dev_dag < 1e-9) return pass("grouplaw.flow", os.str());
    return fail("grouplaw.flow", os.str());
  });

  // ---- fock ----
  add("fock.derivation", [] {
    const auto& a = derive_ladder_actions();
    return from_report("fock.derivation", a.derivation);
  });
  add("fock.brackets", [] { return from_report("fock.brackets", derive_ladder_actions().brackets); });
  add("fock.vacuum", [] { return from_report("fock.vacuum", derive_ladder_actions().vacuum); });
  add("fock.imres", [] { return from_report("fock.imres", derive_ladder_actions().imres_match); });
  add("fock.acti.printed", [] {
    const auto& a = derive_ladder_actions();
    if (a.acti_mismatches.size() != 1 || a.acti_mismatches[0].find("Y-1") != 0)
      return fail("fock.acti.printed", "expected exactly the Y-1 row to differ");
    return discrepancy("fock.acti.printed",
                       "printed Y-1 action row fails the bracket [Y-1, X1] = -2 Y0; the series "
                       "oracle gives the corrected row",
                       "Y-1|j,k> = k(k-1)|j+1,k-1> + 2 gamma |j,k-1>",
                       "Y-1|j,k> = k(k-1)|j+1,k-2> + 2 gamma k |j,k-1>");
  });
  add("fock.bosre.printed", [] {
    const auto& a = derive_ladder_actions();
    if (a.bosre_mismatches.size() != 1 || a.bosre_mismatches[0].find("X-1") != 0)
      return fail("fock.bosre.printed", "expected exactly the X-1 word to differ");
    return discrepancy("fock.bosre.printed",
                       "printed bosonic X-1 first term is inconsistent with the (imres) display "
                       "and the brackets",
                       "X-1 = a2+ a1^2 + 2 a1+ a1 a2 + 2 gamma a1 + 2 x a2",
                       "X-1 = a2+ a2^2 + 2 a1+ a1 a2 + 2 gamma a1 + 2 x a2");
  });
  add("fock.detlf", [] {
    const auto& a = derive_ladder_actions();
    if (!a.detlf.ok) return fail("fock.detlf", a.detlf.summary());
    return discrepancy("fock.detlf",
                       "the second printed PDE for the Leibniz function lacks the factor 2 "
                       "present in the (imres) word 2 S1 V1 V2",
                       "d_B2 Y = (V2^2 d_V2 + V1 V2 d_V1 + 2x V2 + 2 gamma V1) Y",
                       "d_B2 Y = (V2^2 d_V2 + 2 V1 V2 d_V1 + 2x V2 + 2 gamma V1) Y");
  });
  add("fock.gram_leibniz", [] { return from_report("fock.gram_leibniz", leibniz_function_check(4)); });
  add("fock.adjointness", [] { return from_report("fock.adjointness", adjointness_check(6)); });
  add("fock.leibf_from_grouplaw",
      [] { return from_report("fock.leibf_from_grouplaw", leibniz_from_grouplaw_check()); });
  add("fock.tilted_plane", [] { return from_report("fock.tilted_plane", tilted_plane_check()); });
  add("fock.prop8.identity", [] {
    auto res = prop8_check(4);
    return from_report("fock.prop8.identity", res.corrected);
  });
  add("fock.prop8.third_factor", [] {
    auto res = prop8_check(4);
    if (!res.printed_fails)
      return fail("fock.prop8.third_factor", "printed third factor unexpectedly works");
    return discrepancy("fock.prop8.third_factor",
                       "the printed third factor breaks the generating identity at total order "
                       "2; the corrected denominator restores it through order 4",
                       "exp(-2 gamma beta v1 / (1 - beta v2))",
                       "exp(-2 gamma beta v1 / (1 + beta v2))");
  });
  add("fock.coherent", [] { return from_report("fock.coherent", coherent_state_check(4)); });

  // ---- appell ----
  add("appell.example1", [] {
    auto mom = MomentSequence::formal(4);
    auto w1 = wick_product(1, mom);
    auto w2 = wick_product(2, mom);
    Poly e1 = mom.joint({1}), e2 = mom.joint({2}), e12 = mom.joint({1, 2});
    bool ok = w1.coefficient(1) == Poly::one() && w1.coefficient(0) == -e1 &&
              w2.coefficient(3) == Poly::one() && w2.coefficient(1) == -e2 &&
              w2.coefficient(2) == -e1 &&
              w2.coefficient(0) == e1 * e2.scaled(Scalar(2)) - e12;
    return ok ? pass("appell.example1", "<X1> and <X1,X2> match the printed rows")
              : fail("appell.example1", "wick products differ from example 1");
  });
  add("appell.example2", [] {
    auto rep = example2_check();
    if (!rep.p0_p3_ok) return fail("appell.example2", "P0..P3 do not match the printed rows");
    return pass("appell.example2", "P0..P3 reproduce the printed rows");
  });
  add("appell.example2_p4p5", [] {
    auto rep = example2_check();
    if (!rep.printed_p4_wrong || !rep.printed_pair_breaks_recursion)
      return fail("appell.example2_p4p5", "printed P4/P5 rows unexpectedly consistent");
    std::string derived = "P4 = " + rep.derived_p4.str() + "; P5 = " + rep.derived_p5.str();
    return discrepancy(
        "appell.example2_p4p5",
        std::string("printed P4 duplicates P5's tail and fails both characterizing conditions "
                    "as a pair (P5' != 5 P4 with the printed P4); the printed P5 itself agrees "
                    "with the derived value: ") +
            (rep.printed_p5_matches_derived ? "yes" : "no"),
        "P4 = x^4 - 10 m2 x^3 - 10 m3 x^2 + 5x(6 m2^2 - m4)", derived);
  });
  add("appell.conditions", [] {
    auto mom = MomentSequence::formal(8);
    auto p = appell_polynomials(8, mom);
    int x = Vars::id("x");
    for (int n = 1; n <= 8; ++n) {
      if (!(p[n].derivative(x) == p[n - 1].scaled(Scalar(n))))
        return fail("appell.conditions", "P_n' != n P_{n-1} at n = " + std::to_string(n));
      Poly e;
      for (const auto& [mono, c] : p[n].terms()) {
        int d = mono.exponent(x);
        Monomial rest;
        for (const auto& f : mono.factors)
          if (f.var != x) rest.factors.push_back(f);
        e += Poly::monomial(rest, c) * mom.moment(d);
      }
      if (!e.is_zero()) return fail("appell.conditions", "E P_n != 0 at n = " + std::to_string(n));
    }
    return pass("appell.conditions", "derivative and expectation conditions hold for n <= 8");
  });
  add("appell.wick_derivative", [] {
    auto mom = MomentSequence::formal_single(6);
    for (int k = 2; k <= 6; ++k) {
      auto w = wick_product(k, mom);
      for (int i = 1; i <= k; ++i)
        if (!w.derivative(i).expectation(mom).is_zero())
          return fail("appell.wick_derivative", "E d_i <...> != 0");
    }
    return pass("appell.wick_derivative", "partial derivatives are wick products (k <= 6)");
  });
  add("appell.wick_specialize", [] {
    auto mom = MomentSequence::formal_single(6);
    auto ap = appell_polynomials(6, mom);
    for (int k = 1; k <= 6; ++k)
      if (!(wick_product(k, mom).specialize_single() == ap[k]))
        return fail("appell.wick_specialize", "diagonal wick product != appell at k = " +
                                                  std::to_string(k));
    return pass("appell.wick_specialize", "P_n = <X,...,X> for n <= 6");
  });
  add("appell.shifted", [] {
    auto mu = MomentSequence::formal(8);
    auto p = shifted_moment_system(8, mu);
    int x = Vars::id("x");
    for (int n = 1; n <= 8; ++n)
      if (!(p[n].derivative(x) == p[n - 1].scaled(Scalar(n))))
        return fail("appell.shifted", "derivative condition fails");
    return pass("appell.shifted", "shifted moment systems satisfy P_n' = n P_{n-1} for n <= 8");
  });
  add("appell.hermite", [] {
    auto rep = hermite_check(8);
    return rep.ok ? pass("appell.hermite", "gaussian moments give He_n for n <= 8")
                  : fail("appell.hermite", "hermite specialization failed");
  });

  // ---- correlators ----
  add("correlator.phi_st", [] {
    auto rep = scan_phi_st();
    for (const char* g : {"Y-1/2", "Y1/2", "M0"}) {
      bool found = false;
      for (const auto& e : rep.entries)
        if (e.generator.find(g) != std::string::npos) {
          found = true;
          if (e.residual.kind != FBasisResidual::Kind::zero)
            return fail("correlator.phi_st", std::string(g) + " residual nonzero");
        }
      if (!found) return fail("correlator.phi_st", "missing generator entry");
    }
    return pass("correlator.phi_st", "translations, Galilei pair and phase annihilate exactly");
  });
  add("correlator.phi_st.dilation", [] {
    auto rep = scan_phi_st();
    for (const auto& e : rep.entries)
      if (e.generator.find("D") != std::string::npos) {
        if (e.residual.kind != FBasisResidual::Kind::ode_constraint)
          return fail("correlator.phi_st.dilation", "D residual not an ODE constraint");
        return pass("correlator.phi_st.dilation",
                    "D-pair residual reduces to u f' + ((x1+x2)/2) f = 0; constraint s = " +
                        e.residual.ode_s.str() +
                        " (the paper's 'arbitrary f' holds for the translation/phase subset "
                        "only; reported, not decided)");
      }
    return fail("correlator.phi_st.dilation", "missing D entry");
  });
  add("correlator.phi_j", [] {
    auto rep = scan_phi_j();
    for (const auto& e : rep.entries) {
      bool is_m0 = e.generator.find("M0") != std::string::npos;
      if (!is_m0 && e.residual.kind != FBasisResidual::Kind::zero)
        return fail("correlator.phi_j", e.generator + " residual nonzero");
      if (is_m0 && e.residual.kind == FBasisResidual::Kind::zero)
        return fail("correlator.phi_j", "symmetric-phase operator unexpectedly annihilates");
    }
    return pass("correlator.phi_j",
                "all contact-realization pairs annihilate (x2 = x1); i(dz1 + dz2) leaves 2i f' "
                "as the paper's symmetric zeta-dependence predicts");
  });
  add("correlator.fixed_mass", [] {
    auto rep = scan_fixed_mass();
    for (const auto& e : rep.entries) {
      if (e.generator.find("item3:L0") != std::string::npos) {
        if (e.residual.kind != FBasisResidual::Kind::other ||
            !(e.residual.c0 == RFn(-Poly::var("x1"))))
          return fail("correlator.fixed_mass", "item3 L0 residual unexpected");
      } else if (e.residual.kind != FBasisResidual::Kind::zero) {
        return fail("correlator.fixed_mass", e.generator + " residual nonzero");
      }
    }
    return pass("correlator.fixed_mass",
                "items 1-3 annihilated by their generator pairs (item 1 with opposite masses); "
                "item 3 under L0 leaves -x1 F, reported");
  });
  add("correlator.spot_checks", [] {
    bool ok = spot_check_zero(pair_sum(zeta_Y2(-1), "Y"), phi_st_form(), 20, 101) &&
              spot_check_zero(pair_sum(zeta_M0(), "M0"), phi_st_form(), 20, 102);
    Poly m1 = Poly::var("M1");
    auto op = op_sum(instantiate(fourier_transport(zeta_Y2(1)), 0, "Y", m1),
                     instantiate(fourier_transport(zeta_Y2(1)), 1, "Y", -m1));
    ok = ok && spot_check_zero(op, fixed_mass_form1(), 20, 103);
    return ok ? pass("correlator.spot_checks",
                     "zero residuals confirmed at 20 random rational points, f = exp(lambda u), "
                     "three lambda values")
              : fail("correlator.spot_checks", "a spot check disagreed");
  });
  add("correlator.fourier", [] { return from_report("correlator.fourier", fourier_transport_check()); });
  add("correlator.derivation",
      [] { return from_report("correlator.derivation", derivation_property_check()); });

  return reg;
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static auto reg = build_registry();
  return reg;
}

}  // namespace

bool glob_match(const std::string& pattern, const std::string& text) {
  // iterative glob with '*' and '?'
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<CheckResult> run_suite(const std::string& filter, bool parallel) {
  std::vector<const std::pair<std::string, CheckFn>*> selected;
  for (const auto& entry : registry())
    if (glob_match(filter.empty() ? "*" : filter, entry.first)) selected.push_back(&entry);
  if (selected.empty()) throw Alt1Error("no checks match '" + filter + "'");

  std::vector<CheckResult> results(selected.size());
  auto run_one = [](const std::pair<std::string, CheckFn>& entry) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = entry.second();
    } catch (const std::exception& e) {
      r.id = entry.first;
      r.status = CheckStatus::fail;
      r.details = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return r;
  };
  if (parallel) {
    std::vector<std::future<CheckResult>> futures;
    futures.reserve(selected.size());
    for (const auto* entry : selected)
      futures.push_back(std::async(std::launch::async, run_one, *entry));
    for (size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < selected.size(); ++i) results[i] = run_one(*selected[i]);
  }
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return results;
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json out;
  out["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json c;
    c["id"] = r.id;
    c["status"] = status_name(r.status);
    c["details"] = r.details;
    c["printed"] = r.printed;
    c["derived"] = r.derived;
    c["ms"] = r.ms;
    out["checks"].push_back(c);
  }
  return out.dump(2) + "\n";
}

int suite_exit_code(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == CheckStatus::fail) return 1;
  return 0;
}

}  // namespace alt1
