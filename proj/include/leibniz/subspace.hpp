#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/matrix.hpp"

namespace leibniz {

/// Subspace of F^n in canonical form: the basis matrix is in RREF with no
/// zero rows. Two subspaces are equal iff their basis matrices are identical,
/// which makes subalgebra equality decidable by structural comparison.
class Subspace {
 public:
  static Subspace zero(int ambient, const FieldDescriptor& f) {
    return Subspace(ambient, Matrix(0, ambient, f), {});
  }
  static Subspace full(int ambient, const FieldDescriptor& f) {
    std::vector<int> piv(static_cast<size_t>(ambient));
    for (int i = 0; i < ambient; ++i) piv[static_cast<size_t>(i)] = i;
    return Subspace(ambient, Matrix::identity(ambient, f), std::move(piv));
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const FieldDescriptor& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Vec basis_row(int i) const { return basis_.row(i); }
  std::vector<Vec> basis_rows() const {
    std::vector<Vec> rows;
    for (int i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    return rows;
  }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  bool operator==(const Subspace& b) const {
    return ambient_ == b.ambient_ && basis_ == b.basis_;
  }

  /// v with all pivot coordinates eliminated against the basis; zero iff
  /// v lies in the subspace. Linear in v.
  Vec reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw precondition_error("vector/ambient mismatch");
    Vec r = v;
    for (int i = 0; i < dim(); ++i) {
      const Scalar& c = r[static_cast<size_t>(pivots_[static_cast<size_t>(i)])];
      if (c.is_zero()) continue;
      Scalar factor = c;
      for (int j = 0; j < ambient_; ++j) r[static_cast<size_t>(j)] -= factor * basis_.at(i, j);
    }
    return r;
  }

  bool member(const Vec& v) const { return is_zero_vec(reduce(v)); }

  bool contains(const Subspace& b) const {
    if (ambient_ != b.ambient_) throw precondition_error("ambient mismatch");
    for (int i = 0; i < b.dim(); ++i)
      if (!member(b.basis_row(i))) return false;
    return true;
  }

  /// Coordinates of a member vector in the canonical basis (read off the
  /// pivot positions; valid because pivot columns are unit).
  Vec coords(const Vec& v) const {
    if (!member(v)) throw precondition_error("coords of non-member vector");
    Vec c;
    c.reserve(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) c.push_back(v[static_cast<size_t>(pivots_[static_cast<size_t>(i)])]);
    return c;
  }

  /// ambient x dim matrix whose columns are the basis rows; maps internal
  /// coordinates to ambient vectors.
  Matrix embedding() const {
    Matrix e(ambient_, dim(), field());
    for (int i = 0; i < dim(); ++i)
      for (int j = 0; j < ambient_; ++j) e.at(j, i) = basis_.at(i, j);
    return e;
  }

  /// dim x ambient matrix extracting canonical coordinates of members.
  Matrix coord_map() const {
    Matrix c(dim(), ambient_, field());
    for (int i = 0; i < dim(); ++i) c.at(i, pivots_[static_cast<size_t>(i)]) = Scalar::one(field());
    return c;
  }

  /// (ambient - dim) x ambient matrix of the quotient map F^n -> F^n / this,
  /// in the coordinates of the non-pivot positions. Kernel is exactly this
  /// subspace.
  Matrix quotient_map() const {
    std::vector<int> free_cols;
    size_t pi = 0;
    for (int j = 0; j < ambient_; ++j) {
      if (pi < pivots_.size() && pivots_[pi] == j) {
        ++pi;
        continue;
      }
      free_cols.push_back(j);
    }
    // Row r of the map: j-th entry is (reduce(e_j))[free_cols[r]].
    Matrix qq(static_cast<int>(free_cols.size()), ambient_, field());
    for (int j = 0; j < ambient_; ++j) {
      Vec red = reduce(unit_vec(ambient_, j, field()));
      for (int r = 0; r < qq.rows(); ++r)
        qq.at(r, j) = red[static_cast<size_t>(free_cols[static_cast<size_t>(r)])];
    }
    return qq;
  }

  std::string str() const {
    std::string s = "span{";
    for (int i = 0; i < dim(); ++i) {
      if (i) s += ", ";
      s += "(";
      for (int j = 0; j < ambient_; ++j) s += (j ? "," : "") + basis_.at(i, j).str();
      s += ")";
    }
    return s + "}";
  }

  /// Internal: trusts that `basis` is already canonical.
  static Subspace from_rref(int ambient, Matrix basis, std::vector<int> pivots) {
    return Subspace(ambient, std::move(basis), std::move(pivots));
  }

 private:
  Subspace(int ambient, Matrix basis, std::vector<int> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  int ambient_;
  Matrix basis_;
  std::vector<int> pivots_;
};

/// Canonical span of arbitrary vectors: RREF with zero rows dropped.
inline Subspace canonical_span(const std::vector<Vec>& vectors, int ambient,
                               const FieldDescriptor& f) {
  for (const Vec& v : vectors) {
    if (static_cast<int>(v.size()) != ambient) throw precondition_error("vector/ambient mismatch");
    for (const Scalar& s : v) check_same_field(s.field(), f);
  }
  RrefResult r = rref(Matrix::from_rows(vectors, ambient, f));
  int d = static_cast<int>(r.pivots.size());
  Matrix basis(d, ambient, f);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < ambient; ++j) basis.at(i, j) = r.reduced.at(i, j);
  return Subspace::from_rref(ambient, std::move(basis), std::move(r.pivots));
}

/// Span of the rows of a matrix.
inline Subspace row_space(const Matrix& m) {
  std::vector<Vec> rows;
  for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return canonical_span(rows, m.cols(), m.field());
}

/// Span of the columns of a matrix.
inline Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

inline Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw precondition_error("ambient mismatch in sum");
  check_same_field(u.field(), v.field());
  std::vector<Vec> rows = u.basis_rows();
  for (auto& r : v.basis_rows()) rows.push_back(r);
  return canonical_span(rows, u.ambient(), u.field());
}

inline Subspace kernel(const Matrix& m) {
  RrefResult r = rref(m);
  const FieldDescriptor& f = m.field();
  int n = m.cols();
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int p : r.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    Vec v = zero_vec(n, f);
    v[static_cast<size_t>(c)] = Scalar::one(f);
    for (size_t i = 0; i < r.pivots.size(); ++i)
      v[static_cast<size_t>(r.pivots[i])] = -r.reduced.at(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return canonical_span(basis, n, f);
}

inline Subspace image(const Matrix& m) { return column_space(m); }

inline Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw precondition_error("ambient mismatch in intersect");
  check_same_field(u.field(), v.field());
  // x in both iff x = a.U = b.V; kernel of [U^T | -V^T] gives the (a, b).
  int n = u.ambient();
  Matrix m(n, u.dim() + v.dim(), u.field());
  for (int j = 0; j < u.dim(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, j) = u.basis().at(j, i);
  for (int j = 0; j < v.dim(); ++j)
    for (int i = 0; i < n; ++i) m.at(i, u.dim() + j) = -v.basis().at(j, i);
  Subspace ker = kernel(m);
  std::vector<Vec> vectors;
  for (int k = 0; k < ker.dim(); ++k) {
    Vec ab = ker.basis_row(k);
    Vec x = zero_vec(n, u.field());
    for (int j = 0; j < u.dim(); ++j)
      if (!ab[static_cast<size_t>(j)].is_zero())
        x = vec_add(x, vec_scale(ab[static_cast<size_t>(j)], u.basis_row(j)));
    vectors.push_back(std::move(x));
  }
  return canonical_span(vectors, n, u.field());
}

struct AffineSolution {
  Vec particular;
  Subspace homogeneous;
};

/// Full solution set of A x = b, or nullopt when inconsistent.
inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw precondition_error("solve_affine shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  RrefResult r = rref(aug);
  for (int p : r.pivots)
    if (p == a.cols()) return std::nullopt;  // pivot in the constants column
  Vec x = zero_vec(a.cols(), a.field());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    x[static_cast<size_t>(r.pivots[i])] = r.reduced.at(static_cast<int>(i), a.cols());
  return AffineSolution{std::move(x), kernel(a)};
}

/// Image of a subspace under a linear map (canonicalized).
inline Subspace apply(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient()) throw precondition_error("apply shape mismatch");
  std::vector<Vec> rows;
  for (int i = 0; i < u.dim(); ++i) rows.push_back(m * u.basis_row(i));
  return canonical_span(rows, m.rows(), m.field());
}

/// Deterministic total order: by dimension, then lexicographic canonical
/// basis entries. Shared by every "first ideal in canonical order" rule.
inline bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient(); ++j) {
      int c = Scalar::compare(a.basis().at(i, j), b.basis().at(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

}  // namespace leibniz
