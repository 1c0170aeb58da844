#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alt1/appell.hpp"
#include "alt1/checks.hpp"
#include "alt1/cohomology.hpp"
#include "alt1/correlators.hpp"
#include "alt1/fock.hpp"
#include "alt1/grouplaw.hpp"

namespace py = pybind11;
using namespace alt1;

namespace {

Realization realization_by_name(const std::string& name) {
  if (name == "zeta_standard") return zeta_standard();
  if (name == "contact_J") return contact_J();
  if (name == "fixed_mass") return fixed_mass();
  throw Alt1Error("unknown realization " + name);
}

LieAlgebraDef algebra_by_name(const std::string& name) {
  if (name == "alt1") return make_alt1();
  if (name == "sl2") return make_sl2();
  if (name == "abelian2") return make_abelian(2);
  throw Alt1Error("unknown algebra " + name);
}

py::list suite_to_list(const std::vector<CheckResult>& results) {
  py::list out;
  for (const auto& r : results) {
    py::dict d;
    d["id"] = r.id;
    d["status"] = status_name(r.status);
    d["details"] = r.details;
    d["printed"] = r.printed;
    d["derived"] = r.derived;
    d["ms"] = r.ms;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(alt1verify, m) {
  m.doc() = "exact verification toolkit for the alt1 algebra and its extension W";

  m.def(
      "run_suite",
      [](const std::string& filter, bool parallel) {
        return suite_to_list(run_suite(filter, parallel));
      },
      py::arg("filter") = "*", py::arg("parallel") = false,
      "run the verification checks matching the glob");

  m.def("check_ids", [] { return check_ids(); }, "all registered check ids");

  m.def(
      "report_json",
      [](const std::string& filter) { return report_json(run_suite(filter, false)); },
      py::arg("filter") = "*", "JSON report for the matching checks");

  m.def(
      "casimir",
      [](const std::string& rep) {
        auto res = casimir_image(realization_by_name(rep));
        if (!res.commutes.ok) throw Alt1Error("casimir does not commute: " + res.commutes.summary());
        return res.op.str();
      },
      py::arg("rep"), "Casimir image in a realization (canonical text)");

  m.def(
      "h2_dim", [](const std::string& algebra) { return h2(algebra_by_name(algebra)).dim_h2; },
      py::arg("algebra"), "dim H^2 for alt1 | sl2 | abelian2");

  m.def(
      "jacobi_violations",
      [](const std::string& algebra) {
        return static_cast<int>(jacobi_check(algebra_by_name(algebra)).violations.size());
      },
      py::arg("algebra"));

  m.def(
      "appell",
      [](int n, const std::vector<std::string>& moments) {
        std::vector<Rational> vals;
        for (const auto& s : moments) vals.push_back(parse_rational(s));
        auto p = appell_polynomials(n, MomentSequence::from_values(vals));
        std::vector<std::string> out;
        for (const auto& q : p) out.push_back(q.str());
        return out;
      },
      py::arg("n"), py::arg("moments"),
      "Appell polynomials P_0..P_n for exact rational moments m_1..m_k");

  m.def(
      "hermite",
      [](int n) {
        auto rep = hermite_check(n);
        std::vector<std::string> out;
        for (const auto& q : rep.p) out.push_back(q.str());
        return out;
      },
      py::arg("n"), "gaussian-moment Appell polynomials (= probabilists' Hermite)");

  m.def(
      "wick",
      [](int k) { return wick_product(k, MomentSequence::formal(k)).str(); }, py::arg("k"),
      "the multilinear Wick product <X_1,...,X_k> with formal joint moments");

  m.def(
      "fock_gram",
      [](int order) {
        py::list out;
        for (int j = 0; j <= order; ++j)
          for (int k = 0; j + k <= order; ++k)
            for (int jp = 0; jp <= order; ++jp)
              for (int kp = 0; jp + kp <= order; ++kp)
                out.append(py::make_tuple(j, k, jp, kp, gram(j, k, jp, kp).str()));
        return out;
      },
      py::arg("order"), "Gram pairing entries up to level j+k <= order");

  m.def("prop7_slots", [] {
    auto res = leibniz_group_law();
    py::list out;
    for (const auto& s : res.slots) {
      py::dict d;
      d["name"] = s.name;
      d["derived"] = s.derived.str();
      d["printed"] = s.printed.str();
      d["match"] = s.match;
      out.append(d);
    }
    return out;
  });

  m.def(
      "splitting_flow_deviation",
      [](const std::array<double, 6>& alpha, int steps, bool use_star) {
        return splitting_flow_max_deviation(alpha, steps, use_star);
      },
      py::arg("alpha"), py::arg("steps") = 1000, py::arg("use_star") = true);

  m.def(
      "correlator_scan",
      [](const std::string& form) {
        ScanReport rep;
        if (form == "phi_st") rep = scan_phi_st();
        else if (form == "phi_j") rep = scan_phi_j();
        else if (form == "fixed") rep = scan_fixed_mass();
        else throw Alt1Error("unknown form " + form);
        py::list out;
        for (const auto& e : rep.entries) {
          py::dict d;
          d["generator"] = e.generator;
          d["residual"] = e.residual.str();
          d["zero"] = e.residual.kind == FBasisResidual::Kind::zero;
          out.append(d);
        }
        return out;
      },
      py::arg("form"), "per-generator covariance residuals: phi_st | phi_j | fixed");

  py::register_exception<Alt1Error>(m, "Alt1Error");
}
