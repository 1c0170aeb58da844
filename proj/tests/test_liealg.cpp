#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alt1/liealg.hpp"

using namespace alt1;

namespace {
LieAlgebraDef::Element bk(const LieAlgebraDef& a, const std::string& x, const std::string& y) {
  return a.bracket(a.basis_element(a.index_of(x)), a.basis_element(a.index_of(y)));
}
LieAlgebraDef::Element single(const LieAlgebraDef& a, const std::string& x, long c) {
  auto e = a.zero_element();
  e[a.index_of(x)] = Poly(c);
  return e;
}
}  // namespace

TEST_CASE("make_alt1 brackets") {
  auto a = make_alt1();
  CHECK(bk(a, "X1", "Y-1") == single(a, "Y0", 2));   // (n-m) = 2
  CHECK(bk(a, "Y1", "Y-1") == a.zero_element());      // h is abelian
  CHECK(bk(a, "X0", "X0") == a.zero_element());       // antisymmetry
  CHECK(bk(a, "X-1", "Y-1") == a.zero_element());     // escaping index, zero coefficient
  CHECK(bk(a, "X0", "X1") == single(a, "X1", -1));
  CHECK(bk(a, "X1", "X-1") == single(a, "X0", 2));
  CHECK(antisymmetry_check(a));
}

TEST_CASE("make_W window brackets") {
  auto w = make_W(5);
  CHECK(bk(w, "L2", "Leps3") == single(w, "Leps5", -1));
  CHECK(bk(w, "Leps2", "Leps3") == w.zero_element());
  CHECK(bk(w, "L1", "L1") == w.zero_element());
  CHECK(w.is_truncated(w.index_of("L4"), w.index_of("L3")));
}

TEST_CASE("jacobi: alt1 passes on all 20 triples") {
  auto rep = jacobi_check(make_alt1());
  CHECK(rep.ok());
  CHECK(rep.checked == 20);
  CHECK(rep.skipped == 0);
}

TEST_CASE("jacobi: sv window N=5") {
  auto rep = jacobi_check(make_sv(5));
  CHECK(rep.ok());
  CHECK(rep.checked > 0);
}

TEST_CASE("jacobi: W windows up to N=8") {
  for (int n = 2; n <= 8; n += 3) {
    auto rep = jacobi_check(make_W(n));
    CHECK(rep.ok());
  }
}

TEST_CASE("jacobi: corrupted constant is detected") {
  auto a = make_alt1();
  // corrupt c_{X0 X1}^{X1}: should be -1, make it -2
  a.set_bracket(a.index_of("X0"), a.index_of("X1"), {{a.index_of("X1"), Poly(-2)}});
  auto rep = jacobi_check(a);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violations.size() > 0);
  // the violating triples and residuals are reported
  for (const auto& v : rep.violations) CHECK(v.residual != "0");
}

TEST_CASE("grassmann_tensor of sl2 doubles the basis with eps relations") {
  auto g = grassmann_tensor(make_sl2());
  const auto& a = g.algebra;
  CHECK(a.dim() == 6);
  CHECK(bk(a, "L0eps", "L1eps") == a.zero_element());
  CHECK(bk(a, "L0", "L1eps") == single(a, "L1eps", -1));
  CHECK(bk(a, "L1", "L-1eps") == single(a, "L0eps", 2));
  CHECK(jacobi_check(a).ok());
}

TEST_CASE("prop 1: grassmann_tensor(sl2) is alt1 under the Phi dictionary") {
  auto rep = prop1_isomorphism_check();
  CHECK(rep.ok);
}

TEST_CASE("adjoint representation satisfies ad[x,y] = [ad x, ad y]") {
  CHECK(adjoint_rep_check(make_alt1()).ok);
  CHECK(adjoint_rep_check(make_sl2()).ok);
  CHECK(adjoint_rep_check(grassmann_tensor(make_sl2()).algebra).ok);
}

TEST_CASE("contraction: a-parametric brackets and the a->0 limit") {
  auto rep = contraction_check(4);
  CHECK(rep.ok);
}

TEST_CASE("density action examples") {
  int z = Vars::intern("z", true);
  Poly zp = Poly::var_pow(z, 1);
  // l0 . z (dz)^-1 = 0
  CHECK(density_action(-zp, zp, Poly(-1)).is_zero());
  // alpha = 0 action on constants
  CHECK(density_action(-zp, Poly::one(), Poly::zero()).is_zero());
  // generic: l_n on -z^{m+1} reproduces (n-m) times -z^{n+m+1}
  Poly f = -Poly::var_pow(z, 3);  // l_2
  Poly u = -Poly::var_pow(z, 2);  // mode 1
  CHECK(density_action(f, u, Poly(-1)) == (-Poly::var_pow(z, 4)).scaled(Scalar(1)));
}

TEST_CASE("density action reproduces the W window") {
  CHECK(density_action_check(3).ok);
}

TEST_CASE("two commuting virasoro algebras give both central terms") {
  CHECK(two_virasoro_check(4).ok);
}

TEST_CASE("printed 6x6 adjoint matrices: convention report") {
  auto rep = adjoint6_convention_check();
  int matched = 0, unmatched = 0;
  for (const auto& n : rep.notes)
    (n.find("no convention") != std::string::npos ? unmatched : matched)++;
  CHECK(matched + unmatched == 6);
  // Y-1, Y0, X0 match ad; X1 matches the transpose; Y1 and X-1 match nothing
  CHECK(unmatched == 2);
}

TEST_CASE("change of basis preserves jacobi") {
  auto a = make_alt1();
  int n = a.dim();
  MatQ q = MatQ::identity(n), qinv = MatQ::identity(n);
  // unipotent change of basis with known inverse
  q(0, 3) = RFn(Poly(2));
  qinv(0, 3) = RFn(Poly(-2));
  q(1, 4) = RFn(Poly(1));
  qinv(1, 4) = RFn(Poly(-1));
  auto b = a.change_of_basis(q, qinv);
  CHECK(jacobi_check(b).ok());
  CHECK(antisymmetry_check(b));
}
