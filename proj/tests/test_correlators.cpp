#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alt1/correlators.hpp"

using namespace alt1;

namespace {
const FBasisResidual* find(const ScanReport& rep, const std::string& gen) {
  for (const auto& e : rep.entries)
    if (e.generator.find(gen) != std::string::npos) return &e.residual;
  return nullptr;
}
}  // namespace

TEST_CASE("phi_st: translations and phase annihilate; D gives the ODE constraint") {
  auto rep = scan_phi_st();
  REQUIRE(find(rep, "Y-1/2"));
  CHECK(find(rep, "Y-1/2")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "Y1/2")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "M0")->kind == FBasisResidual::Kind::zero);
  auto* d = find(rep, "D");
  REQUIRE(d);
  CHECK(d->kind == FBasisResidual::Kind::ode_constraint);
  // u f' + ((x1 + x2)/2) f = 0
  Poly expect = (Poly::var("x1") + Poly::var("x2")).scaled(Scalar::ratio(1, 2));
  CHECK(d->ode_s == RFn(expect));
}

TEST_CASE("phi_st: numeric spot checks at 20 random rational points") {
  auto form = phi_st_form();
  CHECK(spot_check_zero(pair_sum(zeta_Y2(-1), "Y-1/2"), form, 20, 11));
  CHECK(spot_check_zero(pair_sum(zeta_Y2(1), "Y1/2"), form, 20, 12));
  CHECK(spot_check_zero(pair_sum(zeta_M0(), "M0"), form, 20, 13));
}

TEST_CASE("phi_j: contact generators annihilate with x2 = x1") {
  auto rep = scan_phi_j();
  for (const char* g : {"L-1-", "L0-", "L1-", "Leps-1", "Leps0", "Leps1"}) {
    auto* r = find(rep, g);
    REQUIRE(r);
    CHECK(r->kind == FBasisResidual::Kind::zero);
  }
  // the symmetric zeta-dependence shows up under i(d_z1 + d_z2)
  auto* m0 = find(rep, "M0");
  REQUIRE(m0);
  CHECK(m0->kind != FBasisResidual::Kind::zero);
  CHECK(m0->c0.is_zero());
  CHECK(m0->c1 == RFn(Poly::constant(Scalar(Rational(0), Rational(2))))); // 2i f'
}

TEST_CASE("fixed-mass forms under the transported generators") {
  auto rep = scan_fixed_mass();
  CHECK(find(rep, "item1:Y-1/2")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item1:Y1/2")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item1:M0")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item2:Leps-1")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item2:Leps0")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item2:Leps1")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item3:L-1")->kind == FBasisResidual::Kind::zero);
  CHECK(find(rep, "item3:Leps-1")->kind == FBasisResidual::Kind::zero);
  // item 3 under L0: residual -x1 F, reported with its closed form
  auto* l0 = find(rep, "item3:L0");
  REQUIRE(l0);
  CHECK(l0->kind == FBasisResidual::Kind::other);
  CHECK(l0->c0 == RFn(-Poly::var("x1")));
  CHECK(l0->c1.is_zero());
}

TEST_CASE("fixed-mass item-1 spot check with opposite masses") {
  auto form = fixed_mass_form1();
  Poly m1 = Poly::var("M1");
  auto op = op_sum(instantiate(fourier_transport(zeta_Y2(1)), 0, "Y", m1),
                   instantiate(fourier_transport(zeta_Y2(1)), 1, "Y", -m1));
  CHECK(spot_check_zero(op, form, 20, 14));
  // with equal masses the pair does NOT annihilate the kernel
  auto bad = op_sum(instantiate(fourier_transport(zeta_Y2(1)), 0, "Y", m1),
                    instantiate(fourier_transport(zeta_Y2(1)), 1, "Y", m1));
  CHECK_FALSE(spot_check_zero(bad, form, 20, 15));
}

TEST_CASE("residual is stable under particle relabeling") {
  // swapping the roles (and parameters) in the D-pair constraint leaves the
  // extracted ODE unchanged, because s is symmetric in (x1, x2)
  auto rep = scan_phi_st();
  auto* d = find(rep, "D");
  REQUIRE(d);
  RFn s = d->ode_s;
  Poly swapped_num = s.num().subst(Vars::id("x1"), Poly::var("xs"))
                         .subst(Vars::id("x2"), Poly::var("x1"))
                         .subst(Vars::id("xs"), Poly::var("x2"));
  CHECK(RFn(swapped_num, s.den()) == s);
}

TEST_CASE("fourier transport of the generators") {
  CHECK(fourier_transport_check().ok);
}

TEST_CASE("apply_two_particle is a derivation on products") {
  CHECK(derivation_property_check().ok);
}
