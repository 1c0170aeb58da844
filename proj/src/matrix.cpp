#include "alt1/matrix.hpp"

#include <sstream>

namespace alt1 {

// ---------------------------------------------------------------- RFn

namespace {

// strip the common monomial factor and make the denominator's first
// coefficient 1, so printed forms are stable
void cancel_content(Poly& num, Poly& den) {
  if (num.is_zero()) {
    den = Poly::one();
    return;
  }
  std::map<int, int> lo;
  bool first = true;
  auto scan = [&](const Poly& p) {
    for (const auto& [m, c] : p.terms()) {
      std::map<int, int> cur;
      for (const auto& f : m.factors) cur[f.var] = f.exp;
      if (first) {
        lo = cur;
        first = false;
      } else {
        for (auto it = lo.begin(); it != lo.end();) {
          auto jt = cur.find(it->first);
          int e = (jt == cur.end()) ? 0 : jt->second;
          it->second = std::min(it->second, e);
          if (it->second == 0)
            it = lo.erase(it);
          else
            ++it;
        }
      }
      if (lo.empty()) break;
    }
  };
  scan(num);
  if (!lo.empty()) scan(den);
  std::erase_if(lo, [](const auto& kv) { return kv.second == 0; });
  if (!lo.empty()) {
    // divide both polynomials by the common monomial: subtract exponents
    auto strip = [&](const Poly& p) {
      Poly r;
      for (const auto& [m, c] : p.terms()) {
        Monomial out = m;
        for (const auto& [v, e] : lo) {
          bool found = false;
          for (auto& f : out.factors)
            if (f.var == v) {
              f.exp -= e;
              found = true;
              break;
            }
          if (!found) out.factors.push_back({v, -e});
        }
        std::erase_if(out.factors, [](const VarPow& f) { return f.exp == 0; });
        std::sort(out.factors.begin(), out.factors.end());
        r += Poly::monomial(out, c);
      }
      return r;
    };
    num = strip(num);
    den = strip(den);
  }
  Scalar lead = den.terms().begin()->second;
  if (!lead.is_one()) {
    Scalar inv = lead.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
}

}  // namespace

RFn::RFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Alt1Error("RFn: zero denominator");
  normalize();
}

void RFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  if (den_ == Poly::one()) return;
  if (auto q = num_.divide_exact(den_)) {
    num_ = *q;
    den_ = Poly::one();
    return;
  }
  cancel_content(num_, den_);
}

RFn RFn::operator-() const {
  RFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RFn operator+(const RFn& a, const RFn& b) {
  if (a.den_ == b.den_) return RFn(a.num_ + b.num_, a.den_);
  return RFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RFn operator-(const RFn& a, const RFn& b) { return a + (-b); }

RFn operator*(const RFn& a, const RFn& b) {
  if (a.is_zero() || b.is_zero()) return RFn::zero();
  return RFn(a.num_ * b.num_, a.den_ * b.den_);
}

RFn operator/(const RFn& a, const RFn& b) { return a * b.inverse(); }

RFn RFn::inverse() const {
  if (num_.is_zero()) throw Alt1Error("RFn: division by zero");
  return RFn(den_, num_);
}

RFn RFn::derivative(int var_id) const {
  // (n/d)' = (n'd - nd')/d^2
  if (den_ == Poly::one()) return RFn(num_.derivative(var_id));
  return RFn(num_.derivative(var_id) * den_ - num_ * den_.derivative(var_id), den_ * den_);
}

Scalar RFn::eval(const std::map<int, Scalar>& point) const {
  Scalar d = den_.eval(point);
  if (d.is_zero()) throw Alt1Error("RFn::eval: pole at evaluation point");
  return num_.eval(point) / d;
}

std::string RFn::str() const {
  if (den_ == Poly::one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

// ---------------------------------------------------------------- dense solve

LinearSolveResult solve_linear(const MatQ& a, const std::vector<RFn>& rhs) {
  const bool with_rhs = !rhs.empty();
  if (with_rhs && static_cast<int>(rhs.size()) != a.rows())
    throw Alt1Error("solve_linear: rhs size mismatch");
  int m = a.rows(), n = a.cols();
  MatQ w = a;
  std::vector<RFn> b = with_rhs ? rhs : std::vector<RFn>(m, RFn::zero());

  LinearSolveResult res;
  std::vector<int> pivot_row_of_col(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < m; ++col) {
    int piv = -1;
    size_t best = 0;
    for (int i = row; i < m; ++i) {
      if (w(i, col).is_zero()) continue;
      size_t sz = w(i, col).num().term_count() + w(i, col).den().term_count();
      if (piv < 0 || sz < best) {
        piv = i;
        best = sz;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(w(piv, j), w(row, j));
    std::swap(b[piv], b[row]);
    RFn inv = w(row, col).inverse();
    for (int j = col; j < n; ++j) w(row, j) = w(row, j) * inv;
    b[row] = b[row] * inv;
    for (int i = 0; i < m; ++i) {
      if (i == row || w(i, col).is_zero()) continue;
      RFn f = w(i, col);
      for (int j = col; j < n; ++j) w(i, j) = w(i, j) - f * w(row, j);
      b[i] = b[i] - f * b[row];
    }
    pivot_row_of_col[col] = row;
    res.pivot_cols.push_back(col);
    ++row;
  }
  res.rank = row;

  if (with_rhs) {
    for (int i = row; i < m; ++i)
      if (!b[i].is_zero()) {
        res.status = SolveStatus::infeasible;
        res.infeasible_row = i;
        return res;
      }
    res.solution.assign(n, RFn::zero());
    for (int col = 0; col < n; ++col)
      if (pivot_row_of_col[col] >= 0) res.solution[col] = b[pivot_row_of_col[col]];
  }

  for (int col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    std::vector<RFn> k(n, RFn::zero());
    k[col] = RFn::one();
    for (int c2 = 0; c2 < n; ++c2)
      if (pivot_row_of_col[c2] >= 0) k[c2] = -w(pivot_row_of_col[c2], col);
    res.kernel.push_back(std::move(k));
  }
  res.status = res.kernel.empty() ? SolveStatus::unique : SolveStatus::parametric;
  return res;
}

int rank_of(const MatQ& a) { return solve_linear(a, {}).rank; }

// ---------------------------------------------------------------- sparse solve

void SparseSystemQ::add_row(std::map<int, Rational> row, Rational r, std::string tag) {
  std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
  rows.push_back(std::move(row));
  rhs.push_back(std::move(r));
  row_tags.push_back(std::move(tag));
}

SparseSolveResult solve_sparse(const SparseSystemQ& sys) {
  auto rows = sys.rows;
  auto rhs = sys.rhs;
  std::vector<std::string> tags = sys.row_tags;
  tags.resize(rows.size());
  const int n = sys.cols;

  SparseSolveResult res;
  std::map<int, int> pivot_row_of_col;
  std::vector<bool> used(rows.size(), false);

  for (int col = 0; col < n; ++col) {
    int piv = -1;
    size_t best = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end() || it->second == 0) continue;
      if (piv < 0 || rows[i].size() < best) {
        piv = static_cast<int>(i);
        best = rows[i].size();
      }
    }
    if (piv < 0) continue;
    used[piv] = true;
    pivot_row_of_col[col] = piv;
    Rational inv = 1 / rows[piv][col];
    for (auto& [c, v] : rows[piv]) v *= inv;
    rhs[piv] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == piv) continue;
      auto it = rows[i].find(col);
      if (it == rows[i].end() || it->second == 0) continue;
      Rational f = it->second;
      for (const auto& [c, v] : rows[piv]) {
        auto jt = rows[i].find(c);
        if (jt == rows[i].end()) {
          rows[i][c] = -f * v;
        } else {
          jt->second -= f * v;
          if (jt->second == 0) rows[i].erase(jt);
        }
      }
      rhs[i] -= f * rhs[piv];
      if (!tags[piv].empty())
        tags[i] = tags[i].empty() ? tags[piv] : tags[i] + "; " + tags[piv];
    }
  }
  res.rank = static_cast<int>(pivot_row_of_col.size());

  for (size_t i = 0; i < rows.size(); ++i) {
    if (used[i] || rhs[i] == 0) continue;
    bool zero = true;
    for (const auto& [c, v] : rows[i])
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero) {
      res.status = SolveStatus::infeasible;
      res.infeasible_tag = tags[i];
      return res;
    }
  }

  res.n_free = n - res.rank;
  res.solution.assign(n, Rational(0));
  for (const auto& [col, row] : pivot_row_of_col) res.solution[col] = rhs[row];
  res.status = res.n_free == 0 ? SolveStatus::unique : SolveStatus::parametric;
  return res;
}

}  // namespace alt1
