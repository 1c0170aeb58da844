#pragma once

#include <functional>
#include <vector>

#include "alt1/rational.hpp"

namespace alt1 {

/// Dense matrix over an exact ring (Scalar, Poly, or RFn entries).
template <class T>
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] + b.data_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = a.data_[k] - b.data_[k];
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  Mat scaled(const T& c) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * c;
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }
  Mat map(const std::function<T(const T&)>& f) const {
    Mat r(rows_, cols_);
    for (size_t k = 0; k < data_.size(); ++k) r.data_[k] = f(data_[k]);
    return r;
  }

private:
  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using MatQ = Mat<RFn>;
using MatPoly = Mat<Poly>;

enum class SolveStatus { unique, parametric, infeasible };

struct LinearSolveResult {
  SolveStatus status = SolveStatus::unique;
  int rank = 0;
  std::vector<RFn> solution;               // a particular solution (if feasible)
  std::vector<std::vector<RFn>> kernel;    // basis of the homogeneous kernel
  int infeasible_row = -1;                 // RREF row exhibiting 0 = nonzero
  std::vector<int> pivot_cols;
};

/// Exact reduced row echelon solve of A x = rhs over the fraction field.
/// Pass an empty rhs for a pure kernel/rank computation.
LinearSolveResult solve_linear(const MatQ& a, const std::vector<RFn>& rhs);

int rank_of(const MatQ& a);

/// Sparse exact solver over the rationals for large structured systems.
/// Rows are (column -> coefficient) maps with a rational right-hand side.
struct SparseSystemQ {
  int cols = 0;
  std::vector<std::map<int, Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<std::string> row_tags;  // provenance, for witnesses

  void add_row(std::map<int, Rational> row, Rational r, std::string tag = {});
};

struct SparseSolveResult {
  SolveStatus status = SolveStatus::unique;
  int rank = 0;
  std::vector<Rational> solution;
  int n_free = 0;
  std::string infeasible_tag;  // tag list of rows combined into 0 = nonzero
};

SparseSolveResult solve_sparse(const SparseSystemQ& sys);

}  // namespace alt1
