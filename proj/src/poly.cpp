#include "alt1/poly.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace alt1 {

// ---------------------------------------------------------------- scalars

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Alt1Error("parse_rational: zero denominator");
    return Rational(num, den);
  } catch (const std::exception& e) {
    throw Alt1Error("parse_rational: bad input '" + s + "'");
  }
}

std::string Scalar::str() const {
  if (im_ == 0) return rational_str(re_);
  std::string ims;
  if (im_ == 1)
    ims = "i";
  else if (im_ == -1)
    ims = "-i";
  else
    ims = rational_str(im_) + "*i";
  if (re_ == 0) return ims;
  std::string res = rational_str(re_);
  if (im_ > 0) return "(" + res + "+" + ims + ")";
  return "(" + res + ims + ")";
}

// ---------------------------------------------------------------- variables

namespace {
struct VarTable {
  std::vector<std::string> names;
  std::vector<bool> laurent;
  std::unordered_map<std::string, int> index;
  std::mutex mu;
};
VarTable& table() {
  static VarTable t;
  return t;
}
}  // namespace

int Vars::intern(const std::string& name, bool laurent) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.index.find(name);
  if (it != t.index.end()) {
    if (laurent) t.laurent[it->second] = true;
    return it->second;
  }
  int id = static_cast<int>(t.names.size());
  t.names.push_back(name);
  t.laurent.push_back(laurent);
  t.index[name] = id;
  return id;
}

int Vars::id(const std::string& name) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  auto it = t.index.find(name);
  if (it == t.index.end()) throw Alt1Error("Vars: unknown variable " + name);
  return it->second;
}

const std::string& Vars::name(int id) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.names.at(id);
}

bool Vars::laurent(int id) {
  auto& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  return t.laurent.at(id);
}

// ---------------------------------------------------------------- monomials

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.factors.reserve(factors.size() + o.factors.size());
  auto a = factors.begin(), b = o.factors.begin();
  while (a != factors.end() || b != o.factors.end()) {
    if (b == o.factors.end() || (a != factors.end() && a->var < b->var)) {
      r.factors.push_back(*a++);
    } else if (a == factors.end() || b->var < a->var) {
      r.factors.push_back(*b++);
    } else {
      int e = a->exp + b->exp;
      if (e != 0) r.factors.push_back({a->var, e});
      ++a;
      ++b;
    }
  }
  return r;
}

// ---------------------------------------------------------------- poly

Poly Poly::constant(const Scalar& c) {
  Poly p;
  if (!c.is_zero()) p.terms_[Monomial{}] = c;
  return p;
}

Poly Poly::var_pow(const std::string& name, int e) {
  return var_pow(Vars::intern(name), e);
}

Poly Poly::var_pow(int var_id, int e) {
  if (e == 0) return one();
  if (e < 0 && !Vars::laurent(var_id))
    throw Alt1Error("Poly: laurent exponent on non-laurent variable " + Vars::name(var_id));
  Poly p;
  p.terms_[Monomial{{{var_id, e}}}] = Scalar(1);
  return p;
}

Poly Poly::monomial(Monomial m, Scalar c) {
  Poly p;
  if (!c.is_zero()) {
    for (const auto& f : m.factors)
      if (f.exp < 0 && !Vars::laurent(f.var))
        throw Alt1Error("Poly: laurent exponent on non-laurent variable " + Vars::name(f.var));
    p.terms_[std::move(m)] = std::move(c);
  }
  return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_[m] = v * c;
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) {
    // only monomials are invertible
    if (terms_.size() != 1) throw Alt1Error("Poly: negative power of a non-monomial");
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& f : m.factors) inv.factors.push_back({f.var, -f.exp});
    return Poly::monomial(inv, c.inverse()).pow(-e);
  }
  Poly r = one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    if (e >>= 1) b *= b;
  }
  return r;
}

Poly Poly::derivative(int var_id) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var_id);
    if (e == 0) continue;
    Monomial d;
    for (const auto& f : m.factors) {
      if (f.var == var_id) {
        if (f.exp != 1) d.factors.push_back({f.var, f.exp - 1});
      } else {
        d.factors.push_back(f);
      }
    }
    r.add_term(d, c * Scalar(e));
  }
  return r;
}

Poly Poly::subst(int var_id, const Poly& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var_id);
    Monomial rest;
    for (const auto& f : m.factors)
      if (f.var != var_id) rest.factors.push_back(f);
    if (e == 0) {
      r.add_term(m, c);
      continue;
    }
    // negative exponents work when the value is an invertible monomial
    r += Poly::monomial(rest, c) * value.pow(e);
  }
  return r;
}

Poly Poly::subst_scalar(int var_id, const Scalar& value) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var_id);
    Monomial rest;
    for (const auto& f : m.factors)
      if (f.var != var_id) rest.factors.push_back(f);
    r.add_term(rest, c * value.pow(e));
  }
  return r;
}

Scalar Poly::eval(const std::map<int, Scalar>& point) const {
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (const auto& f : m.factors) {
      auto it = point.find(f.var);
      if (it == point.end())
        throw Alt1Error("Poly::eval: unassigned variable " + Vars::name(f.var));
      v *= it->second.pow(f.exp);
    }
    total += v;
  }
  return total;
}

int Poly::degree(int var_id) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var_id);
    if (first || e > d) d = e;
    first = false;
  }
  return terms_.empty() ? 0 : d;
}

int Poly::low_degree(int var_id) const {
  int d = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var_id);
    if (first || e < d) d = e;
    first = false;
  }
  return terms_.empty() ? 0 : d;
}

int Poly::max_total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

bool Poly::depends_on(int var_id) const {
  for (const auto& [m, c] : terms_)
    if (m.exponent(var_id) != 0) return true;
  return false;
}

Poly Poly::coefficient_of(int var_id, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(var_id) != k) continue;
    Monomial rest;
    for (const auto& f : m.factors)
      if (f.var != var_id) rest.factors.push_back(f);
    r.add_term(rest, c);
  }
  return r;
}

namespace {

// graded-lex monomial order (a genuine multiplicative order, required for
// exact division); exponent vectors compared by variable id
bool graded_less(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ia = a.factors.begin(), ib = b.factors.begin();
  while (ia != a.factors.end() || ib != b.factors.end()) {
    int va = ia != a.factors.end() ? ia->var : INT32_MAX;
    int vb = ib != b.factors.end() ? ib->var : INT32_MAX;
    if (va < vb) {
      // a has a positive exponent on an earlier variable
      if (ia->exp != 0) return ia->exp < 0;
      ++ia;
    } else if (vb < va) {
      if (ib->exp != 0) return ib->exp > 0;
      ++ib;
    } else {
      if (ia->exp != ib->exp) return ia->exp < ib->exp;
      ++ia;
      ++ib;
    }
  }
  return false;
}

const std::pair<const Monomial, Scalar>& leading(const std::map<Monomial, Scalar>& t) {
  auto best = t.begin();
  for (auto it = std::next(t.begin()); it != t.end(); ++it)
    if (graded_less(best->first, it->first)) best = it;
  return *best;
}

// monomial quotient a / b, nullopt if some exponent would go negative
std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
  Monomial q = a;
  for (const auto& f : b.factors) {
    bool found = false;
    for (auto& g : q.factors) {
      if (g.var == f.var) {
        g.exp -= f.exp;
        found = true;
        break;
      }
    }
    if (!found) q.factors.push_back({f.var, -f.exp});
  }
  std::erase_if(q.factors, [](const VarPow& f) { return f.exp == 0; });
  std::sort(q.factors.begin(), q.factors.end());
  for (const auto& f : q.factors)
    if (f.exp < 0) return std::nullopt;
  return q;
}

}  // namespace

std::optional<Poly> Poly::divide_exact(const Poly& o) const {
  if (o.is_zero()) throw Alt1Error("Poly: division by zero polynomial");
  if (is_zero()) return zero();

  // shift laurent variables so both operands have nonnegative exponents
  Monomial shift_num, shift_den;  // *this *= shift_num ; o *= shift_den
  Poly f = *this, g = o;
  auto normalize = [](Poly& p, Monomial& shift) {
    std::map<int, int> lows;
    for (const auto& [m, c] : p.terms())
      for (const auto& fac : m.factors)
        if (fac.exp < 0) {
          auto [it, fresh] = lows.emplace(fac.var, fac.exp);
          if (!fresh) it->second = std::min(it->second, fac.exp);
        }
    for (const auto& [v, lo] : lows) shift.factors.push_back({v, -lo});
    std::sort(shift.factors.begin(), shift.factors.end());
    if (!shift.factors.empty()) p = p * Poly::monomial(shift, Scalar(1));
  };
  normalize(f, shift_num);
  normalize(g, shift_den);

  Poly q;
  const auto& [lg, cg] = leading(g.terms());
  while (!f.is_zero()) {
    const auto& [lf, cf] = leading(f.terms());
    auto mq = mono_div(lf, lg);
    if (!mq) return std::nullopt;
    Poly t = Poly::monomial(*mq, cf / cg);
    q += t;
    f -= t * g;
  }

  // undo shifts: result = q * shift_den / shift_num
  Monomial corr = shift_den;
  for (const auto& fpow : shift_num.factors) {
    bool merged = false;
    for (auto& gpow : corr.factors)
      if (gpow.var == fpow.var) {
        gpow.exp -= fpow.exp;
        merged = true;
        break;
      }
    if (!merged) corr.factors.push_back({fpow.var, -fpow.exp});
  }
  std::erase_if(corr.factors, [](const VarPow& f) { return f.exp == 0; });
  std::sort(corr.factors.begin(), corr.factors.end());
  Poly result;
  for (const auto& [m, c] : q.terms()) {
    Monomial mm = m.times(corr);
    for (const auto& fac : mm.factors)
      if (fac.exp < 0 && !Vars::laurent(fac.var)) return std::nullopt;
    result += Poly::monomial(mm, c);
  }
  return result;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    for (const auto& f : m.factors) {
      os << "*" << Vars::name(f.var);
      if (f.exp != 1) os << "^" << f.exp;
    }
  }
  return os.str();
}

Poly binomial_poly(const Poly& e, int k) {
  Poly r = Poly::one();
  for (int j = 0; j < k; ++j) r *= (e - Poly(j));
  return r.scaled(Scalar(Rational(1) / factorial(k)));
}

Rational factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return Rational(r);
}

}  // namespace alt1
