#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alt1/appell.hpp"

using namespace alt1;

namespace {
Poly X() { return Poly::var("x"); }
Poly m(int g) { return Poly::var("m" + std::to_string(g)); }
}  // namespace

TEST_CASE("wick product k = 1: x1 - E X1") {
  auto mom = MomentSequence::formal(4);
  auto w = wick_product(1, mom);
  CHECK(w.coefficient(1) == Poly::one());
  CHECK(w.coefficient(0) == -mom.joint({1}));
}

TEST_CASE("wick product k = 2 reproduces example 1") {
  auto mom = MomentSequence::formal(4);
  auto w = wick_product(2, mom);
  Poly e1 = mom.joint({1}), e2 = mom.joint({2}), e12 = mom.joint({1, 2});
  CHECK(w.coefficient(3) == Poly::one());           // x1 x2
  CHECK(w.coefficient(1) == -e2);                   // -x1 E X2
  CHECK(w.coefficient(2) == -e1);                   // -x2 E X1
  CHECK(w.coefficient(0) == e1 * e2.scaled(Scalar(2)) - e12);
}

TEST_CASE("wick product k = 2 with centered independent variables") {
  auto mom = MomentSequence::formal(4);
  mom.set_joint({1}, Poly::zero());
  mom.set_joint({2}, Poly::zero());
  mom.set_joint({1, 2}, Poly::zero());
  auto w = wick_product(2, mom);
  CHECK(w.coefficient(3) == Poly::one());
  CHECK(w.coefficient(0).is_zero());
  CHECK(w.coefficient(1).is_zero());
  CHECK(w.coefficient(2).is_zero());
}

TEST_CASE("wick derivative condition holds for all i, k <= 6") {
  auto mom = MomentSequence::formal_single(6);
  for (int k = 2; k <= 6; ++k) {
    auto w = wick_product(k, mom);
    auto smaller = wick_product(k - 1, mom);
    for (int i = 1; i <= k; ++i) {
      auto d = w.derivative(i);
      // d must equal the (k-1)-variable wick product after reindexing the
      // remaining variables {1..k} \ {i} onto {1..k-1} (single-sequence
      // moments are exchangeable, so the reindexing is exact)
      std::vector<int> remap;  // position b (0-based) of remaining vars
      for (int b = 0; b < k; ++b)
        if (b != i - 1) remap.push_back(b);
      for (const auto& [mask_small, c] : smaller.coeff) {
        unsigned mask_big = 0;
        for (int b = 0; b < k - 1; ++b)
          if (mask_small & (1u << b)) mask_big |= 1u << remap[b];
        CHECK(d.coefficient(mask_big) == c);
      }
      // and nothing extra
      int small_terms = static_cast<int>(smaller.coeff.size());
      CHECK(static_cast<int>(d.coeff.size()) == small_terms);
      // expectation of a wick product vanishes, so E(d) = 0 too
      CHECK(d.expectation(mom).is_zero());
      // mixed-partial compatibility
      for (int j2 = 1; j2 <= k; ++j2)
        if (j2 != i)
          CHECK(d.derivative(j2).coeff == w.derivative(j2).derivative(i).coeff);
    }
  }
}

TEST_CASE("specializing the wick product gives the appell polynomial") {
  auto mom = MomentSequence::formal_single(6);
  auto appell = appell_polynomials(6, mom);
  for (int k = 1; k <= 6; ++k) {
    auto w = wick_product(k, mom);
    CHECK(w.specialize_single() == appell[k]);
  }
}

TEST_CASE("appell polynomials with general m1") {
  auto mom = MomentSequence::formal(4);
  auto p = appell_polynomials(2, mom);
  // P2 = x^2 - 2 m1 x + (2 m1^2 - m2)
  Poly expect = X().pow(2) - m(1).scaled(Scalar(2)) * X() + m(1) * m(1).scaled(Scalar(2)) - m(2);
  CHECK(p[2] == expect);
  CHECK(p[1] == X() - m(1));
}

TEST_CASE("appell conditions hold symbolically for n <= 8") {
  auto mom = MomentSequence::formal(8);
  auto p = appell_polynomials(8, mom);
  int x = Vars::id("x");
  for (int n = 1; n <= 8; ++n) {
    CHECK(p[n].derivative(x) == p[n - 1].scaled(Scalar(n)));
    // E P_n = 0: substitute x^d -> m_d
    Poly e;
    for (const auto& [mono, c] : p[n].terms()) {
      int d = mono.exponent(x);
      Monomial rest;
      for (const auto& f : mono.factors)
        if (f.var != x) rest.factors.push_back(f);
      e += Poly::monomial(rest, c) * mom.moment(d);
    }
    CHECK(e.is_zero());
    // monic of degree n
    CHECK(p[n].coefficient_of(x, n) == Poly::one());
    CHECK(p[n].degree(x) == n);
  }
}

TEST_CASE("example 2: P0..P3 printed rows, P4/P5 analysis") {
  auto rep = example2_check();
  CHECK(rep.p0_p3_ok);
  CHECK(rep.printed_p4_wrong);
  CHECK(rep.printed_p5_matches_derived);
  CHECK(rep.printed_pair_breaks_recursion);
  // derived P4 = x^4 - 6 m2 x^2 - 4 m3 x + 6 m2^2 - m4
  Poly expect = X().pow(4) - m(2).scaled(Scalar(6)) * X().pow(2) -
                m(3).scaled(Scalar(4)) * X() + m(2) * m(2).scaled(Scalar(6)) - m(4);
  CHECK(rep.derived_p4 == expect);
}

TEST_CASE("shifted moment systems") {
  auto mu = MomentSequence::formal(8);
  auto p = shifted_moment_system(8, mu);
  int x = Vars::id("x");
  // point mass at zero: P_n = x^n
  std::vector<Rational> delta0(8, 0);
  auto pm = shifted_moment_system(8, MomentSequence::from_values(delta0));
  for (int n = 0; n <= 8; ++n) CHECK(pm[n] == X().pow(n));
  // n = 2 generic: x^2 + 2 mu1 x + mu2
  CHECK(p[2] == X().pow(2) + m(1).scaled(Scalar(2)) * X() + m(2));
  // derivative condition for all n <= 8
  for (int n = 1; n <= 8; ++n) CHECK(p[n].derivative(x) == p[n - 1].scaled(Scalar(n)));
}

TEST_CASE("hermite specialization matches He_n for n <= 8") {
  auto rep = hermite_check(8);
  CHECK(rep.ok);
  // He2 = x^2 - 1, He4 = x^4 - 6x^2 + 3, He1 = x
  CHECK(rep.p[2] == X().pow(2) - Poly::one());
  CHECK(rep.p[4] == X().pow(4) - X().pow(2).scaled(Scalar(6)) + Poly(3));
  CHECK(rep.p[1] == X());
}

TEST_CASE("moment json parsing") {
  auto m = parse_moment_json(R"({"moments": ["0", "1", "0", "3"]})");
  CHECK(m.moment(2) == Poly::one());
  CHECK(m.moment(4) == Poly(3));
  CHECK(m.moment(1).is_zero());
  auto withj = parse_moment_json(
      R"({"moments": ["0", "1"], "joint": [{"indices": [1, 2], "value": "1/2"}]})");
  CHECK(withj.joint({1, 2}) == Poly::constant(Scalar::ratio(1, 2)));
  CHECK_THROWS_AS(parse_moment_json("{"), Alt1Error);
  CHECK_THROWS_AS(parse_moment_json(R"({"nope": 1})"), Alt1Error);
}
