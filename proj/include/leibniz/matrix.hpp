#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n, const FieldDescriptor& f) {
  return Vec(static_cast<size_t>(n), Scalar::zero(f));
}

inline Vec unit_vec(int n, int i, const FieldDescriptor& f) {
  Vec v = zero_vec(n, f);
  v[static_cast<size_t>(i)] = Scalar::one(f);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw precondition_error("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw precondition_error("vector length mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vec_scale(const Scalar& c, const Vec& a) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

inline Vec vec_neg(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

/// Dense rectangular matrix over one exact field, row-major.
class Matrix {
 public:
  Matrix(int rows, int cols, const FieldDescriptor& f)
      : rows_(rows), cols_(cols), f_(f), e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
    if (rows < 0 || cols < 0) throw precondition_error("negative matrix dimension");
  }

  static Matrix identity(int n, const FieldDescriptor& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, int cols, const FieldDescriptor& f) {
    Matrix m(static_cast<int>(rows.size()), cols, f);
    for (int i = 0; i < m.rows_; ++i) {
      const Vec& r = rows[static_cast<size_t>(i)];
      if (static_cast<int>(r.size()) != cols) throw precondition_error("row length mismatch");
      for (int j = 0; j < cols; ++j) {
        check_same_field(r[static_cast<size_t>(j)].field(), f);
        m.at(i, j) = r[static_cast<size_t>(j)];
      }
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldDescriptor& field() const { return f_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Vec row(int i) const {
    Vec r;
    r.reserve(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
  }
  Vec col(int j) const {
    Vec c;
    c.reserve(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
  }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  bool operator==(const Matrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && f_ == b.f_ && e_ == b.e_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(a.f_, b.f_);
    if (a.cols_ != b.rows_) throw precondition_error("matmul shape mismatch");
    Matrix r(a.rows_, b.cols_, a.f_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    return r;
  }
  friend Vec operator*(const Matrix& a, const Vec& v) {
    check_same_field(a.f_, v.empty() ? a.f_ : v[0].field());
    if (a.cols_ != static_cast<int>(v.size())) throw precondition_error("matvec shape mismatch");
    Vec r = zero_vec(a.rows_, a.f_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j)
        if (!a.at(i, j).is_zero()) r[static_cast<size_t>(i)] += a.at(i, j) * v[static_cast<size_t>(j)];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_, f_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  Matrix pow(int k) const {
    if (rows_ != cols_) throw precondition_error("pow of non-square matrix");
    Matrix r = identity(rows_, f_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Scalar trace() const {
    if (rows_ != cols_) throw precondition_error("trace of non-square matrix");
    Scalar t = Scalar::zero(f_);
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  /// Stacks rows of `b` below `this`.
  Matrix vstack(const Matrix& b) const {
    check_same_field(f_, b.f_);
    if (cols_ != b.cols_) throw precondition_error("vstack column mismatch");
    Matrix r(rows_ + b.rows_, cols_, f_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = b.at(i, j);
    return r;
  }

  Matrix hstack(const Matrix& b) const {
    check_same_field(f_, b.f_);
    if (rows_ != b.rows_) throw precondition_error("hstack row mismatch");
    Matrix r(rows_, cols_ + b.cols_, f_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (int j = 0; j < b.cols_; ++j) r.at(i, cols_ + j) = b.at(i, j);
    }
    return r;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      for (int j = 0; j < cols_; ++j) s += (j ? " " : "[") + at(i, j).str();
      s += "]";
      s += i + 1 == rows_ ? "]" : "\n";
    }
    if (rows_ == 0) s = "[]";
    return s;
  }

 private:
  void check_same_shape(const Matrix& b) const {
    check_same_field(f_, b.f_);
    if (rows_ != b.rows_ || cols_ != b.cols_) throw precondition_error("matrix shape mismatch");
  }

  int rows_, cols_;
  FieldDescriptor f_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row, strictly increasing
};

/// Reduced row-echelon form: pivot entries 1, pivot columns otherwise zero,
/// zero rows at the bottom. The result is the unique canonical form of the
/// row space.
inline RrefResult rref(Matrix m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

/// Inverse of a square matrix via [M | I] elimination; empty when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw precondition_error("inverse of a non-square matrix");
  int n = m.rows();
  RrefResult r = rref(m.hstack(Matrix::identity(n, m.field())));
  for (int i = 0; i < n; ++i)
    if (i >= static_cast<int>(r.pivots.size()) || r.pivots[static_cast<size_t>(i)] != i)
      return std::nullopt;
  Matrix inv(n, n, m.field());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

}  // namespace leibniz
