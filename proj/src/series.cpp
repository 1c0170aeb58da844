#include "alt1/series.hpp"

#include <sstream>

namespace alt1 {

Series::Series(std::vector<int> vars, std::vector<int> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
  if (vars_.size() != caps_.size()) throw Alt1Error("Series: vars/caps mismatch");
}

Series Series::constant(const Series& like, const Poly& c) {
  Series s(like.vars_, like.caps_);
  if (!c.is_zero()) s.coeffs_[std::vector<int>(like.vars_.size(), 0)] = c;
  return s;
}

Poly Series::coeff(const std::vector<int>& exps) const {
  auto it = coeffs_.find(exps);
  return it == coeffs_.end() ? Poly::zero() : it->second;
}

void Series::set_coeff(std::vector<int> exps, Poly c) {
  if (c.is_zero())
    coeffs_.erase(exps);
  else
    coeffs_[std::move(exps)] = std::move(c);
}

Series operator+(const Series& a, const Series& b) {
  if (!a.compatible(b)) throw Alt1Error("Series: incompatible operands");
  Series r = a;
  for (const auto& [e, c] : b.coeffs_) {
    auto it = r.coeffs_.find(e);
    if (it == r.coeffs_.end()) {
      r.coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

Series Series::operator-() const {
  Series r(vars_, caps_);
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  if (!a.compatible(b)) throw Alt1Error("Series: incompatible operands");
  Series r(a.vars_, a.caps_);
  const size_t nv = a.vars_.size();
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      std::vector<int> e(nv);
      bool keep = true;
      for (size_t i = 0; i < nv; ++i) {
        e[i] = ea[i] + eb[i];
        if (e[i] > a.caps_[i]) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      auto it = r.coeffs_.find(e);
      if (it == r.coeffs_.end()) {
        Poly p = ca * cb;
        if (!p.is_zero()) r.coeffs_[std::move(e)] = std::move(p);
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  }
  return r;
}

Series Series::scaled(const Poly& c) const {
  Series r(vars_, caps_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : coeffs_) {
    Poly p = v * c;
    if (!p.is_zero()) r.coeffs_[e] = std::move(p);
  }
  return r;
}

Series Series::truncated_total(int n) const {
  Series r(vars_, caps_);
  for (const auto& [e, c] : coeffs_) {
    int d = 0;
    for (int x : e) d += x;
    if (d <= n) r.coeffs_[e] = c;
  }
  return r;
}

std::string Series::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] != 0) {
        os << "*" << Vars::name(vars_[i]);
        if (e[i] != 1) os << "^" << e[i];
      }
  }
  return os.str();
}

// ---------------------------------------------------------------- SExpr

SExpr::Ptr SExpr::poly(Poly p) {
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::poly;
  e->payload_ = std::move(p);
  return e;
}
SExpr::Ptr SExpr::sum(std::vector<Ptr> kids) {
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::sum;
  e->kids_ = std::move(kids);
  return e;
}
SExpr::Ptr SExpr::prod(std::vector<Ptr> kids) {
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::prod;
  e->kids_ = std::move(kids);
  return e;
}
SExpr::Ptr SExpr::ipow(Ptr base, int n) {
  if (n < 0) throw Alt1Error("SExpr::ipow: negative exponent (use fpow)");
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::ipow;
  e->ipow_ = n;
  e->kids_ = {std::move(base)};
  return e;
}
SExpr::Ptr SExpr::fpow(Ptr base, Poly exponent) {
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::fpow;
  e->payload_ = std::move(exponent);
  e->kids_ = {std::move(base)};
  return e;
}
SExpr::Ptr SExpr::exp(Ptr arg) {
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::exp_;
  e->kids_ = {std::move(arg)};
  return e;
}
SExpr::Ptr SExpr::log(Ptr arg) {
  auto e = std::make_shared<SExpr>();
  e->kind_ = Kind::log_;
  e->kids_ = {std::move(arg)};
  return e;
}

namespace {

// split s = c + u with c the constant coefficient and u the rest
std::pair<Poly, Series> split_constant(const Series& s) {
  std::vector<int> zero(s.vars().size(), 0);
  Poly c = s.coeff(zero);
  Series u = s;
  u.set_coeff(zero, Poly::zero());
  return {c, u};
}

int max_useful_order(const Series& like) {
  int n = 0;
  for (int c : like.caps()) n += c;
  return n;
}

}  // namespace

Series SExpr::expand(const std::vector<int>& vars, const std::vector<int>& caps) const {
  Series like(vars, caps);
  switch (kind_) {
    case Kind::poly: {
      Series r(vars, caps);
      // distribute the poly's series-variable content into exponent keys
      for (const auto& [m, c] : payload_.terms()) {
        std::vector<int> e(vars.size(), 0);
        Monomial rest;
        bool keep = true;
        for (const auto& f : m.factors) {
          auto it = std::find(vars.begin(), vars.end(), f.var);
          if (it == vars.end()) {
            rest.factors.push_back(f);
          } else {
            size_t i = it - vars.begin();
            if (f.exp < 0) throw Alt1Error("SExpr: laurent series variable");
            e[i] = f.exp;
            if (f.exp > caps[i]) keep = false;
          }
        }
        if (!keep) continue;
        auto cur = r.coeff(e);
        r.set_coeff(e, cur + Poly::monomial(rest, c));
      }
      return r;
    }
    case Kind::sum: {
      Series r(vars, caps);
      for (const auto& k : kids_) r = r + k->expand(vars, caps);
      return r;
    }
    case Kind::prod: {
      Series r = Series::constant(like, Poly::one());
      for (const auto& k : kids_) r = r * k->expand(vars, caps);
      return r;
    }
    case Kind::ipow: {
      Series b = kids_[0]->expand(vars, caps);
      Series r = Series::constant(like, Poly::one());
      for (int i = 0; i < ipow_; ++i) r = r * b;
      return r;
    }
    case Kind::fpow: {
      auto [c, u] = split_constant(kids_[0]->expand(vars, caps));
      if (!(c == Poly::one()))
        throw Alt1Error("SExpr::fpow: base must have constant term 1");
      Series r = Series::constant(like, Poly::one());
      Series upow = Series::constant(like, Poly::one());
      int n = max_useful_order(like);
      for (int k = 1; k <= n; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        r = r + upow.scaled(binomial_poly(payload_, k));
      }
      return r;
    }
    case Kind::exp_: {
      auto [c, u] = split_constant(kids_[0]->expand(vars, caps));
      if (!c.is_zero())
        throw Alt1Error("SExpr::exp: argument must have zero constant term");
      Series r = Series::constant(like, Poly::one());
      Series upow = Series::constant(like, Poly::one());
      int n = max_useful_order(like);
      for (int k = 1; k <= n; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        r = r + upow.scaled(Poly::constant(Scalar(Rational(1) / factorial(k))));
      }
      return r;
    }
    case Kind::log_: {
      auto [c, u] = split_constant(kids_[0]->expand(vars, caps));
      if (!(c == Poly::one()))
        throw Alt1Error("SExpr::log: argument must have constant term 1");
      Series r(vars, caps);
      Series upow = Series::constant(like, Poly::one());
      int n = max_useful_order(like);
      for (int k = 1; k <= n; ++k) {
        upow = upow * u;
        if (upow.is_zero()) break;
        Rational c2 = Rational((k % 2) ? 1 : -1, k);
        r = r + upow.scaled(Poly::constant(Scalar(c2)));
      }
      return r;
    }
  }
  throw Alt1Error("SExpr: unreachable");
}

}  // namespace alt1
