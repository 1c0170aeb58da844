#include "alt1/appell.hpp"

#include <json.hpp>

#include <bit>
#include <sstream>

namespace alt1 {

namespace {
int xvar() { return Vars::intern("x"); }
Poly xpoly(int e) { return Poly::var_pow(xvar(), e); }
std::string joint_name(const std::vector<int>& idx) {
  std::string s = "jm";
  for (int i : idx) s += "_" + std::to_string(i);
  return s;
}
}  // namespace

MomentSequence MomentSequence::formal(int n_max) {
  MomentSequence m;
  m.n_max_ = n_max;
  m.formal_ = true;
  return m;
}

MomentSequence MomentSequence::formal_single(int n_max) {
  MomentSequence m;
  m.n_max_ = n_max;
  m.formal_ = true;
  m.single_ = true;
  return m;
}

MomentSequence MomentSequence::from_values(const std::vector<Rational>& v) {
  MomentSequence m;
  m.n_max_ = static_cast<int>(v.size());
  m.formal_ = false;
  m.values_.push_back(Poly::one());  // m_0
  for (const auto& r : v) m.values_.push_back(Poly::constant(Scalar(r)));
  return m;
}

MomentSequence MomentSequence::gaussian(int n_max) {
  std::vector<Rational> v;
  for (int g = 1; g <= n_max; ++g) {
    if (g % 2 == 1) {
      v.push_back(0);
    } else {
      Rational dd = 1;  // (g-1)!! for even g
      for (int i = g - 1; i > 0; i -= 2) dd *= i;
      v.push_back(dd);
    }
  }
  return from_values(v);
}

Poly MomentSequence::moment(int g) const {
  if (g == 0) return Poly::one();
  if (g > n_max_) throw Alt1Error("MomentSequence: insufficient moments (need m_" +
                                  std::to_string(g) + ")");
  if (!formal_) return values_[g];
  return Poly::var("m" + std::to_string(g));
}

Poly MomentSequence::joint(const std::vector<int>& indices) const {
  if (indices.empty()) return Poly::one();
  std::vector<int> key = indices;
  std::sort(key.begin(), key.end());
  auto it = joint_.find(key);
  if (it != joint_.end()) return it->second;
  if (!formal_ || single_) return moment(static_cast<int>(key.size()));
  // formal joint moment, one variable per index multiset
  auto ct = cache_.find(key);
  if (ct != cache_.end()) return ct->second;
  Poly v = Poly::var(joint_name(key));
  cache_[key] = v;
  return v;
}

void MomentSequence::set_joint(const std::vector<int>& indices, Poly value) {
  std::vector<int> key = indices;
  std::sort(key.begin(), key.end());
  joint_[key] = std::move(value);
}

// ---------------------------------------------------------------- wick

Poly WickPolynomial::expectation(const MomentSequence& m) const {
  Poly total;
  for (const auto& [mask, c] : coeff) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) idx.push_back(i + 1);
    total += c * m.joint(idx);
  }
  return total;
}

WickPolynomial WickPolynomial::derivative(int i) const {
  WickPolynomial d;
  d.k = k;
  unsigned bit = 1u << (i - 1);
  for (const auto& [mask, c] : coeff)
    if (mask & bit) d.coeff[mask & ~bit] = c;
  return d;
}

Poly WickPolynomial::specialize_single() const {
  Poly total;
  for (const auto& [mask, c] : coeff) {
    int sz = std::popcount(mask);
    total += c * xpoly(sz);
  }
  return total;
}

std::string WickPolynomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [mask, c] : coeff) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) os << "*x" << (i + 1);
  }
  return first ? "0" : os.str();
}

namespace {

WickPolynomial wick_on_subset(unsigned vars_mask, int k, const MomentSequence& m,
                              std::map<unsigned, WickPolynomial>& memo) {
  auto it = memo.find(vars_mask);
  if (it != memo.end()) return it->second;
  WickPolynomial w;
  w.k = k;
  if (vars_mask == 0) {
    w.coeff[0] = Poly::one();
    memo[0] = w;
    return w;
  }
  // every nonempty subset coefficient comes from the derivative recursion:
  // c_S = coefficient of x_{S \ i} in <without i>, for any i in S
  for (unsigned s = 1; s <= vars_mask; ++s) {
    if ((s & vars_mask) != s) continue;
    int i = std::countr_zero(s);
    unsigned sub_vars = vars_mask & ~(1u << i);
    WickPolynomial sub = wick_on_subset(sub_vars, k, m, memo);
    Poly c = sub.coefficient(s & ~(1u << i));
    if (!c.is_zero()) w.coeff[s] = c;
  }
  // constant term from zero expectation
  Poly e;
  for (const auto& [mask, c] : w.coeff) {
    std::vector<int> idx;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) idx.push_back(b + 1);
    e += c * m.joint(idx);
  }
  if (!e.is_zero()) w.coeff[0] = -e;
  memo[vars_mask] = w;
  return w;
}

}  // namespace

WickPolynomial wick_product(int k, const MomentSequence& m) {
  if (k < 0 || k > 20) throw Alt1Error("wick_product: k out of range");
  std::map<unsigned, WickPolynomial> memo;
  unsigned full = k == 0 ? 0u : ((1u << k) - 1);
  return wick_on_subset(full, k, m, memo);
}

// ---------------------------------------------------------------- appell

std::vector<Poly> appell_polynomials(int n_max, const MomentSequence& m) {
  std::vector<Poly> p;
  p.push_back(Poly::one());
  for (int n = 1; n <= n_max; ++n) {
    // antidifferentiate n * P_{n-1}
    Poly q;
    for (const auto& [mono, c] : p[n - 1].terms()) {
      int e = mono.exponent(xvar());
      Monomial rest;
      for (const auto& f : mono.factors)
        if (f.var != xvar()) rest.factors.push_back(f);
      Poly t = Poly::monomial(rest, c * Scalar(Rational(n, e + 1)));
      q += t * xpoly(e + 1);
    }
    // constant from E P_n = 0
    Poly e;
    for (const auto& [mono, c] : q.terms()) {
      int d = mono.exponent(xvar());
      Monomial rest;
      for (const auto& f : mono.factors)
        if (f.var != xvar()) rest.factors.push_back(f);
      e += Poly::monomial(rest, c) * m.moment(d);
    }
    p.push_back(q - e);
  }
  return p;
}

std::vector<Poly> shifted_moment_system(int n_max, const MomentSequence& mu) {
  std::vector<Poly> p;
  for (int n = 0; n <= n_max; ++n) {
    Poly q;
    for (int g = 0; g <= n; ++g) {
      Rational c = factorial(n) / (factorial(g) * factorial(n - g));
      q += xpoly(n - g).scaled(Scalar(c)) * mu.moment(g);
    }
    p.push_back(q);
  }
  return p;
}

HermiteReport hermite_check(int n_max) {
  HermiteReport rep;
  rep.p = appell_polynomials(n_max, MomentSequence::gaussian(n_max));
  rep.he.push_back(Poly::one());
  if (n_max >= 1) rep.he.push_back(xpoly(1));
  for (int n = 1; n < n_max; ++n)
    rep.he.push_back(xpoly(1) * rep.he[n] - rep.he[n - 1].scaled(Scalar(n)));
  for (int n = 0; n <= n_max; ++n)
    if (rep.p[n] != rep.he[n]) rep.ok = false;
  return rep;
}

Example2Report example2_check() {
  Example2Report rep;
  auto m = MomentSequence::formal(5);
  // the examples assume m1 = 0
  auto at_m1_zero = [&](const Poly& p) {
    return p.subst_scalar(Vars::intern("m1"), Scalar(0));
  };
  auto derived = appell_polynomials(5, m);
  for (auto& p : derived) p = at_m1_zero(p);
  Poly x = xpoly(1);
  Poly m2 = Poly::var("m2"), m3 = Poly::var("m3"), m4 = Poly::var("m4"), m5 = Poly::var("m5");

  std::vector<Poly> printed = {
      Poly::one(), x, x.pow(2) - m2, x.pow(3) - m3 - m2.scaled(Scalar(3)) * x,
      // printed P4 (the duplicated row):
      x.pow(4) - m2.scaled(Scalar(10)) * x.pow(3) - m3.scaled(Scalar(10)) * x.pow(2) +
          (m2 * m2.scaled(Scalar(6)) - m4) * x.scaled(Scalar(5)),
      // printed P5:
      x.pow(5) - m2.scaled(Scalar(10)) * x.pow(3) - m3.scaled(Scalar(10)) * x.pow(2) +
          (m2 * m2.scaled(Scalar(6)) - m4) * x.scaled(Scalar(5)) +
          m2.scaled(Scalar(20)) * m3 - m5};

  rep.p0_p3_ok = derived[0] == printed[0] && derived[1] == printed[1] &&
                 derived[2] == printed[2] && derived[3] == printed[3];
  rep.printed_p4_wrong = !(derived[4] == printed[4]);
  rep.printed_p5_matches_derived = derived[5] == printed[5];
  // the printed pair fails the recursion P5' = 5 P4 (with printed P4)
  Poly p5prime = printed[5].derivative(xvar());
  rep.printed_pair_breaks_recursion = !(p5prime == printed[4].scaled(Scalar(5)));
  rep.derived_p4 = derived[4];
  rep.derived_p5 = derived[5];
  return rep;
}

MomentSequence parse_moment_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw Alt1Error(std::string("moment file: JSON parse failure: ") + e.what());
  }
  if (!j.contains("moments") || !j["moments"].is_array())
    throw Alt1Error("moment file: missing \"moments\" array");
  std::vector<Rational> values;
  for (const auto& v : j["moments"]) {
    if (!v.is_string()) throw Alt1Error("moment file: moments must be rational strings");
    values.push_back(parse_rational(v.get<std::string>()));
  }
  MomentSequence m = MomentSequence::from_values(values);
  if (j.contains("joint")) {
    for (const auto& entry : j["joint"]) {
      std::vector<int> idx;
      for (const auto& i : entry.at("indices")) idx.push_back(i.get<int>());
      m.set_joint(idx, Poly::constant(Scalar(parse_rational(entry.at("value").get<std::string>()))));
    }
  }
  return m;
}

}  // namespace alt1
