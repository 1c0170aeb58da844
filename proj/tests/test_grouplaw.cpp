#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alt1/grouplaw.hpp"

using namespace alt1;

TEST_CASE("printed 4x4 matrices fail exactly the X-1 pairs") {
  auto check = verify_matrix_rep(printed_rep4());
  CHECK_FALSE(check.ok);
  CHECK(check.failing_pairs.size() == 5);
  for (const auto& p : check.failing_pairs)
    CHECK(p.find("X-1") != std::string::npos);
}

TEST_CASE("repaired matrices pass all 15 pairs") {
  auto check = verify_matrix_rep(repaired_rep4());
  CHECK(check.ok);
}

TEST_CASE("repair solves to the unique X-1 = -(E21 + E43)") {
  auto res = repair_matrix_rep();
  CHECK(res.unique);
  CHECK(res.all_pass);
  CHECK(res.xm1 == repaired_rep4().at(3));
}

TEST_CASE("matrix casimir: S0 = -(3/2)(E13 + E24), S1 = 0, commutes") {
  auto cas = matrix_casimir();
  Mat<Poly> expected(4, 4);
  expected(0, 2) = Poly::constant(Scalar::ratio(-3, 2));
  expected(1, 3) = Poly::constant(Scalar::ratio(-3, 2));
  CHECK(cas.s0 == expected);
  CHECK(cas.s1.is_zero());
  CHECK(cas.commutes);
  // S_hat = -(3/2) A (E13 + E24)
  Poly A = Poly::var("A");
  CHECK(cas.s_hat == expected.map([&](const Poly& p) { return p * A; }));
}

TEST_CASE("exact_exp on nilpotent and diagonal inputs") {
  auto rep = repaired_rep4();
  Poly v1 = Poly::var("V1"), v2 = Poly::var("V2");
  Mat<Poly> upper = rep.at(2).map([&](const Poly& p) { return p * v1; }) +
                    rep.at(5).map([&](const Poly& p) { return p * v2; });
  Mat<Poly> e = exact_exp(upper);
  CHECK(e == Mat<Poly>::identity(4) + upper);  // square vanishes

  Poly b1 = Poly::var("B1"), b2 = Poly::var("B2");
  Mat<Poly> lower = rep.at(0).map([&](const Poly& p) { return p * b1; }) +
                    rep.at(3).map([&](const Poly& p) { return p * b2; });
  CHECK(exact_exp(lower) == Mat<Poly>::identity(4) + lower);

  Mat<Poly> d = exact_exp(rep.at(4));  // X0 diagonal, entries +-1/2
  int E = Vars::id("E");
  CHECK(d(0, 0) == Poly::var_pow(E, -1));
  CHECK(d(1, 1) == Poly::var_pow(E, 1));

  CHECK(exact_exp(Mat<Poly>(4, 4)) == Mat<Poly>::identity(4));

  Mat<Poly> bad(4, 4);
  bad(0, 0) = Poly::var("A1");  // diagonal but not half-integer
  CHECK_THROWS_AS(exact_exp(bad), Alt1Error);
}

TEST_CASE("exp(-m) exp(m) = 1 for admissible m") {
  auto rep = repaired_rep4();
  for (int i : {0, 1, 2, 3, 5}) {
    Poly c = Poly::var("B1");
    Mat<Poly> m = rep.at(i).map([&](const Poly& p) { return p * c; });
    CHECK(exact_exp_nilpotent(m.map([](const Poly& p) { return -p; })) * exact_exp_nilpotent(m) ==
          Mat<Poly>::identity(4));
  }
  Mat<Poly> d = exact_exp_diag_half(rep.at(4));
  Mat<Poly> dinv = exact_exp_diag_half(rep.at(4).map([](const Poly& p) { return -p; }));
  CHECK(d * dinv == Mat<Poly>::identity(4));
}

TEST_CASE("group product matches the printed matrix") {
  auto rep = group_product_check();
  CHECK(rep.ok);
  // spot entries
  Mat<Poly> p = group_product();
  Poly b1 = Poly::var("B1"), b2 = Poly::var("B2"), v1 = Poly::var("V1"), v2 = Poly::var("V2");
  CHECK(p(1, 1) == Poly::one() - b2 * v2);
  CHECK(p(1, 3) == -(b2 * v1) - b1 * v2);
}

TEST_CASE("prop 7: derived coordinates, printed slots, exactly three mismatches") {
  auto res = leibniz_group_law();
  CHECK(res.identity_ok);
  REQUIRE(res.slots.size() == 6);
  std::map<std::string, bool> match;
  for (const auto& s : res.slots) match[s.name] = s.match;
  CHECK(match["A2"]);
  CHECK(match["A3"]);
  CHECK(match["A6"]);
  CHECK_FALSE(match["A1"]);    // printed denominator power is 1, derived 2
  CHECK_FALSE(match["e^A4"]);  // printed ln(1-B2V2), derived 2 ln(1-B2V2)
  CHECK_FALSE(match["A5"]);    // printed numerator inconsistent with the matrices
  CHECK(res.discrepancies == 3);

  // derived A5 value
  Poly b1 = Poly::var("B1"), b2 = Poly::var("B2"), v1 = Poly::var("V1"), v2 = Poly::var("V2");
  Poly d = Poly::one() - b2 * v2;
  for (const auto& s : res.slots)
    if (s.name == "A5") CHECK(s.derived == RFn(b1 + b2 * b2 * v1, d * d));
}

TEST_CASE("V = 0 gives the left factor coordinates (0,0,0,0,B1,B2)") {
  auto res = leibniz_group_law();
  int v1 = Vars::id("V1"), v2 = Vars::id("V2");
  auto at_v0 = [&](const RFn& f) {
    return RFn(f.num().subst_scalar(v1, Scalar(0)).subst_scalar(v2, Scalar(0)),
               f.den().subst_scalar(v1, Scalar(0)).subst_scalar(v2, Scalar(0)));
  };
  Coordinates c;
  for (const auto& s : res.slots) {
    if (s.name == "A1") CHECK(at_v0(s.derived).is_zero());
    if (s.name == "A2") CHECK(at_v0(s.derived).is_zero());
    if (s.name == "A3") CHECK(at_v0(s.derived).is_zero());
    if (s.name == "e^A4") CHECK(at_v0(s.derived) == RFn::one());
    if (s.name == "A5") CHECK(at_v0(s.derived) == RFn(Poly::var("B1")));
    if (s.name == "A6") CHECK(at_v0(s.derived) == RFn(Poly::var("B2")));
  }
}

TEST_CASE("extraction round-trip on random rational coordinates") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  std::uniform_int_distribution<int> e(1, 4);
  for (int it = 0; it < 8; ++it) {
    Coordinates c;
    c.a1 = RFn(Poly(d(rng)));
    c.a2 = RFn(Poly(d(rng)));
    c.a3 = RFn(Poly(d(rng)));
    c.a5 = RFn(Poly(d(rng)));
    c.a6 = RFn(Poly(d(rng)));
    c.e_a4_half = RFn(Poly(e(rng)));  // rational E value ( = e^{A4/2} )
    auto g = build_group_element(c);
    auto back = extract_coordinates(g);
    CHECK(back.a1 == c.a1);
    CHECK(back.a2 == c.a2);
    CHECK(back.a3 == c.a3);
    CHECK(back.a5 == c.a5);
    CHECK(back.a6 == c.a6);
    CHECK(back.e_a4_half == c.e_a4_half);
  }
}

TEST_CASE("the printed A5 extraction formula is the sign typo") {
  CHECK(extract_a5_formula_check().ok);
}

TEST_CASE("pi matrices: exact identity and printed comparison") {
  auto res = pi_matrices();
  CHECK(res.identity.ok);
  // pi_star matches the paper on all 36 entries
  CHECK(res.star_mismatches.empty());
  // pi_dagger matches except the missing -A2 at row 3, column 1
  REQUIRE(res.dagger_mismatches.size() == 1);
  CHECK(res.dagger_mismatches[0].find("pi_dagger(3,1)") != std::string::npos);
  CHECK(res.pi_dagger(2, 0) == -RFn(Poly::var("A2")));
  // at A = 0 both matrices reduce to the identity
  std::map<int, Scalar> zero_pt;
  for (const char* v : {"A1", "A2", "A3", "A5", "A6"}) zero_pt[Vars::id(v)] = Scalar(0);
  zero_pt[Vars::id("E")] = Scalar(1);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      Scalar sv = res.pi_star(i, j).eval(zero_pt);
      Scalar dv = res.pi_dagger(i, j).eval(zero_pt);
      CHECK(sv == (i == j ? Scalar(1) : Scalar(0)));
      CHECK(dv == (i == j ? Scalar(1) : Scalar(0)));
    }
}

TEST_CASE("splitting flow: alpha = 0 stays at the identity") {
  CHECK(splitting_flow_max_deviation({0, 0, 0, 0, 0, 0}, 10, true) == 0.0);
}

TEST_CASE("splitting flow: nilpotent directions are exact up to float noise") {
  double dev = splitting_flow_max_deviation({0.25, -0.5, 0, 0, 0, 0}, 200, true);
  CHECK(dev < 1e-12);
}

TEST_CASE("splitting flow: generic alpha, both pi matrices, 1000 steps") {
  std::array<double, 6> alpha = {1.0 / 4, -1.0 / 3, 1.0 / 5, -1.0 / 2, 1.0 / 3, 1.0 / 4};
  CHECK(splitting_flow_max_deviation(alpha, 1000, true) < 1e-9);
  CHECK(splitting_flow_max_deviation(alpha, 1000, false) < 1e-9);
}
