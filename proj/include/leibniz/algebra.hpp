#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// Finite-dimensional left Leibniz algebra given by structure constants:
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Left convention: every left
/// multiplication operator is a derivation. Immutable after construction.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra(int n, const FieldDescriptor& f, std::string name = "")
      : n_(n), f_(f), name_(std::move(name)),
        c_(static_cast<size_t>(n) * n * n, Scalar::zero(f)) {
    if (n < 0) throw precondition_error("negative dimension");
  }

  int dim() const { return n_; }
  const FieldDescriptor& field() const { return f_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  const Scalar& c(int i, int j, int k) const {
    return c_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
  }
  void set_c(int i, int j, int k, const Scalar& v) {
    check_same_field(v.field(), f_);
    c_[(static_cast<size_t>(i) * n_ + j) * n_ + k] = v;
  }
  /// Sets [e_i, e_j] = v.
  void set_bracket(int i, int j, const Vec& v) {
    if (static_cast<int>(v.size()) != n_) throw precondition_error("bracket value length");
    for (int k = 0; k < n_; ++k) set_c(i, j, k, v[static_cast<size_t>(k)]);
  }

  Subspace zero_subspace() const { return Subspace::zero(n_, f_); }
  Subspace full_subspace() const { return Subspace::full(n_, f_); }

  /// Bilinear extension of the structure tensor.
  Vec bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
      throw precondition_error("bracket operand length");
    Vec r = zero_vec(n_, f_);
    for (int i = 0; i < n_; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        if (y[static_cast<size_t>(j)].is_zero()) continue;
        Scalar xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
        for (int k = 0; k < n_; ++k)
          if (!c(i, j, k).is_zero()) r[static_cast<size_t>(k)] += xy * c(i, j, k);
      }
    }
    return r;
  }

  /// Matrix of y -> [x, y] in the standard basis.
  Matrix left_mult(const Vec& x) const {
    if (static_cast<int>(x.size()) != n_) throw precondition_error("left_mult operand length");
    Matrix m(n_, n_, f_);
    for (int i = 0; i < n_; ++i) {
      if (x[static_cast<size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k)
          if (!c(i, j, k).is_zero()) m.at(k, j) += x[static_cast<size_t>(i)] * c(i, j, k);
    }
    return m;
  }

  /// Matrix of x -> [x, y] in the standard basis.
  Matrix right_mult(const Vec& y) const {
    if (static_cast<int>(y.size()) != n_) throw precondition_error("right_mult operand length");
    Matrix m(n_, n_, f_);
    for (int j = 0; j < n_; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k)
          if (!c(i, j, k).is_zero()) m.at(k, i) += y[static_cast<size_t>(j)] * c(i, j, k);
    }
    return m;
  }

  std::string fingerprint() const {
    return name_ + "#" + std::to_string(n_) + "#" + f_.str();
  }

 private:
  int n_;
  FieldDescriptor f_;
  std::string name_;
  std::vector<Scalar> c_;
};

/// Basis triples (i,j,k) violating [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]].
/// Empty iff the left Leibniz identity holds (sufficient by trilinearity).
inline std::vector<std::array<int, 3>> check_leibniz(const LeibnizAlgebra& L) {
  std::vector<std::array<int, 3>> bad;
  int n = L.dim();
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, L.field());
    for (int j = 0; j < n; ++j) {
      Vec ej = unit_vec(n, j, L.field());
      Vec eij = L.bracket(ei, ej);
      for (int k = 0; k < n; ++k) {
        Vec ek = unit_vec(n, k, L.field());
        Vec lhs = L.bracket(ei, L.bracket(ej, ek));
        Vec rhs = vec_add(L.bracket(eij, ek), L.bracket(ej, L.bracket(ei, ek)));
        if (lhs != rhs) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

/// Span of all [u, v] with u, v running over the bases of U and V.
inline Subspace product_space(const LeibnizAlgebra& L, const Subspace& u, const Subspace& v) {
  if (u.ambient() != L.dim() || v.ambient() != L.dim())
    throw precondition_error("product_space ambient mismatch");
  std::vector<Vec> products;
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < v.dim(); ++j) products.push_back(L.bracket(u.basis_row(i), v.basis_row(j)));
  return canonical_span(products, L.dim(), L.field());
}

inline Subspace derived_subalgebra(const LeibnizAlgebra& L) {
  return product_space(L, L.full_subspace(), L.full_subspace());
}

struct BracketClosedSubspace {
  Subspace space;
  bool is_subalgebra = false;
  bool is_left_ideal = false;   // [L, U] <= U
  bool is_right_ideal = false;  // [U, L] <= U
  bool is_ideal = false;
};

inline BracketClosedSubspace classify_subspace(const LeibnizAlgebra& L, const Subspace& u) {
  if (u.ambient() != L.dim()) throw precondition_error("classify ambient mismatch");
  BracketClosedSubspace r{u};
  Subspace full = L.full_subspace();
  r.is_subalgebra = u.contains(product_space(L, u, u));
  r.is_left_ideal = u.contains(product_space(L, full, u));
  r.is_right_ideal = u.contains(product_space(L, u, full));
  r.is_ideal = r.is_left_ideal && r.is_right_ideal;
  if (r.is_ideal) r.is_subalgebra = true;
  return r;
}

inline bool is_subalgebra(const LeibnizAlgebra& L, const Subspace& u) {
  return u.contains(product_space(L, u, u));
}

inline bool is_ideal(const LeibnizAlgebra& L, const Subspace& u) {
  Subspace full = L.full_subspace();
  return u.contains(product_space(L, full, u)) && u.contains(product_space(L, u, full));
}

/// {x : [x,a] = 0 and [a,x] = 0 for all a in A}; intersection of kernels of
/// the left and right multiplication operators of A's basis.
inline Subspace centralizer(const LeibnizAlgebra& L, const Subspace& a) {
  if (a.ambient() != L.dim()) throw precondition_error("centralizer ambient mismatch");
  Matrix stacked(0, L.dim(), L.field());
  for (int i = 0; i < a.dim(); ++i) {
    Vec ai = a.basis_row(i);
    stacked = stacked.vstack(L.left_mult(ai));   // [a, x] = 0
    stacked = stacked.vstack(L.right_mult(ai));  // [x, a] = 0
  }
  if (stacked.rows() == 0) return L.full_subspace();
  return kernel(stacked);
}

/// Two-sided normalizer {x : [x,U] <= U and [U,x] <= U}.
inline Subspace normalizer(const LeibnizAlgebra& L, const Subspace& u) {
  if (u.ambient() != L.dim()) throw precondition_error("normalizer ambient mismatch");
  if (u.is_full()) return u;
  Matrix q = u.quotient_map();
  Matrix stacked(0, L.dim(), L.field());
  for (int i = 0; i < u.dim(); ++i) {
    Vec ui = u.basis_row(i);
    stacked = stacked.vstack(q * L.right_mult(ui));  // [x, u] in U
    stacked = stacked.vstack(q * L.left_mult(ui));   // [u, x] in U
  }
  if (stacked.rows() == 0) return L.full_subspace();
  return kernel(stacked);
}

/// Least ideal containing U: fixed point of U -> U + [L,U] + [U,L].
inline Subspace ideal_closure(const LeibnizAlgebra& L, const Subspace& u) {
  Subspace cur = u;
  Subspace full = L.full_subspace();
  for (;;) {
    Subspace next = sum(cur, sum(product_space(L, full, cur), product_space(L, cur, full)));
    if (next == cur) return cur;
    cur = next;
  }
}

namespace detail {

/// Greatest fixed point of V -> {v in V : [L,v] <= V and [v,L] <= V};
/// the largest ideal of L inside an arbitrary subspace U.
inline Subspace largest_ideal_in(const LeibnizAlgebra& L, const Subspace& u) {
  Subspace cur = u;
  for (;;) {
    if (cur.is_full()) return cur;
    Matrix q = cur.quotient_map();
    Matrix stacked(0, L.dim(), L.field());
    for (int i = 0; i < L.dim(); ++i) {
      Vec ei = unit_vec(L.dim(), i, L.field());
      stacked = stacked.vstack(q * L.left_mult(ei));
      stacked = stacked.vstack(q * L.right_mult(ei));
    }
    Subspace next = intersect(cur, stacked.rows() == 0 ? cur : kernel(stacked));
    if (next == cur) return cur;
    cur = next;
  }
}

}  // namespace detail

/// Largest ideal of L contained in the subalgebra U (the core U_L).
inline Subspace core(const LeibnizAlgebra& L, const Subspace& u) {
  if (!is_subalgebra(L, u)) throw precondition_error("core of a non-subalgebra");
  return detail::largest_ideal_in(L, u);
}

struct QuotientResult {
  LeibnizAlgebra algebra;   // structure on the non-pivot coordinates of A
  Matrix projection;        // (n - dim A) x n
  Matrix section;           // n x (n - dim A); projection * section = id
};

/// Quotient algebra L/A for an ideal A, on the coordinate system of the
/// non-pivot positions of A's canonical basis.
inline QuotientResult quotient(const LeibnizAlgebra& L, const Subspace& a) {
  if (!is_ideal(L, a)) throw precondition_error("quotient by a non-ideal");
  int n = L.dim(), m = n - a.dim();
  Matrix proj = a.quotient_map();
  // section: unit vectors at the free coordinates
  std::vector<int> free_cols;
  {
    size_t pi = 0;
    const auto& piv = a.pivots();
    for (int j = 0; j < n; ++j) {
      if (pi < piv.size() && piv[pi] == j) {
        ++pi;
        continue;
      }
      free_cols.push_back(j);
    }
  }
  Matrix section(n, m, L.field());
  for (int j = 0; j < m; ++j) section.at(free_cols[static_cast<size_t>(j)], j) = Scalar::one(L.field());
  LeibnizAlgebra q(m, L.field(), L.name().empty() ? "" : L.name() + "/A");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      q.set_bracket(i, j, proj * L.bracket(section.col(i), section.col(j)));
  return {std::move(q), std::move(proj), std::move(section)};
}

struct RestrictResult {
  LeibnizAlgebra algebra;  // structure constants of U in its canonical basis
  Matrix embedding;        // n x dim U, maps U-coordinates to ambient
};

/// Subalgebra U as an algebra in its own canonical basis.
inline RestrictResult restrict_algebra(const LeibnizAlgebra& L, const Subspace& u) {
  if (!is_subalgebra(L, u)) throw precondition_error("restrict of a non-subalgebra");
  int d = u.dim();
  LeibnizAlgebra r(d, L.field(), L.name().empty() ? "" : L.name() + "|U");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec b = L.bracket(u.basis_row(i), u.basis_row(j));
      r.set_bracket(i, j, u.coords(b));
    }
  return {std::move(r), u.embedding()};
}

/// Map a subspace of L expressed in ambient coordinates to the coordinates
/// of the subalgebra U (requires containment).
inline Subspace to_subalgebra_coords(const Subspace& u, const Subspace& w) {
  std::vector<Vec> rows;
  for (int i = 0; i < w.dim(); ++i) rows.push_back(u.coords(w.basis_row(i)));
  return canonical_span(rows, u.dim(), u.field());
}

/// Map a subspace expressed in subalgebra coordinates back to ambient.
inline Subspace from_subalgebra_coords(const Subspace& u, const Subspace& w) {
  Matrix emb = u.embedding();
  std::vector<Vec> rows;
  for (int i = 0; i < w.dim(); ++i) rows.push_back(emb * w.basis_row(i));
  return canonical_span(rows, u.ambient(), u.field());
}

/// Preimage of a subspace of the quotient under the projection: span of the
/// section images together with A.
inline Subspace quotient_preimage(const QuotientResult& q, const Subspace& a, const Subspace& w) {
  std::vector<Vec> rows = a.basis_rows();
  for (int i = 0; i < w.dim(); ++i) rows.push_back(q.section * w.basis_row(i));
  return canonical_span(rows, a.ambient(), a.field());
}

/// Leib(L): span of squares [e_i,e_i] and polarizations [e_i,e_j]+[e_j,e_i].
/// An ideal with [Leib(L), L] = 0 whose quotient is a Lie algebra.
inline Subspace leib_ideal(const LeibnizAlgebra& L) {
  std::vector<Vec> gens;
  int n = L.dim();
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, L.field());
    gens.push_back(L.bracket(ei, ei));
    for (int j = i + 1; j < n; ++j) {
      Vec ej = unit_vec(n, j, L.field());
      gens.push_back(vec_add(L.bracket(ei, ej), L.bracket(ej, ei)));
    }
  }
  return canonical_span(gens, n, L.field());
}

}  // namespace leibniz
