#pragma once

#include <random>
#include <string>
#include <vector>

#include "leibniz/io.hpp"
#include "leibniz/series.hpp"

namespace leibniz {

enum class Family { nilpotent_catalog, nilpotent_plus_derivations, length };

struct GeneratorSpec {
  uint64_t seed = 1;
  int dim_min = 2;
  int dim_max = 5;
  FieldDescriptor field = FieldDescriptor::rationals();
  Family family = Family::nilpotent_plus_derivations;
  int length_target = 2;  // meaningful for Family::length
  int count = 10;
};

inline Family family_from_string(const std::string& s) {
  if (s == "nilpotent_catalog") return Family::nilpotent_catalog;
  if (s == "nilpotent_plus_derivations") return Family::nilpotent_plus_derivations;
  if (s.rfind("length", 0) == 0) return Family::length;
  throw precondition_error("unknown generator family '" + s + "'");
}

/// Nilpotent base tables are versioned data, not code; this loads one
/// catalog file (a JSON array of algebra objects) and validates each table.
inline std::vector<LeibnizAlgebra> load_catalog(const std::string& path,
                                                const FieldDescriptor& f) {
  json j = load_json_file(path);
  if (!j.is_array()) throw precondition_error("catalog must be a JSON array");
  std::vector<LeibnizAlgebra> out;
  for (const json& entry : j) {
    json over = entry;
    over["field"] = f.is_rationals() ? json("Q") : json{{"p", f.p}};
    LeibnizAlgebra L = algebra_from_json(over);
    auto bad = check_leibniz(L);
    if (!bad.empty())
      throw precondition_error("catalog entry '" + L.name() + "' violates the Leibniz identity");
    out.push_back(std::move(L));
  }
  return out;
}

inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  check_same_field(a.field(), b.field());
  LeibnizAlgebra L(a.dim() + b.dim(), a.field(), a.name() + "+" + b.name());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) L.set_c(i, j, k, a.c(i, j, k));
  int o = a.dim();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      for (int k = 0; k < b.dim(); ++k) L.set_c(o + i, o + j, o + k, b.c(i, j, k));
  return L;
}

/// Structure constants in the basis given by the columns of S (invertible).
inline LeibnizAlgebra change_basis(const LeibnizAlgebra& L, const Matrix& s) {
  auto sinv = inverse(s);
  if (!sinv) throw precondition_error("change_basis: singular matrix");
  LeibnizAlgebra out(L.dim(), L.field(), L.name());
  for (int i = 0; i < L.dim(); ++i)
    for (int j = 0; j < L.dim(); ++j)
      out.set_bracket(i, j, *sinv * L.bracket(s.col(i), s.col(j)));
  return out;
}

namespace detail {

/// Basis of the derivation algebra of N, optionally constrained so that the
/// image left-annihilates N (required for one-sided extensions).
inline std::vector<Matrix> derivation_space(const LeibnizAlgebra& N, bool image_in_left_annihilator) {
  int n = N.dim();
  const FieldDescriptor& f = N.field();
  int unknowns = n * n;  // D[r][c]
  std::vector<Vec> rows;
  auto row_of = [&](int r, int c) { return r * n + c; };
  // derivation: for all i,j,k: sum_r D[k][r] c_ij^r - sum_r D[r][i] c_rj^k - sum_r D[r][j] c_ir^k = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec eq = zero_vec(unknowns, f);
        for (int r = 0; r < n; ++r) {
          eq[static_cast<size_t>(row_of(k, r))] += N.c(i, j, r);
          eq[static_cast<size_t>(row_of(r, i))] -= N.c(r, j, k);
          eq[static_cast<size_t>(row_of(r, j))] -= N.c(i, r, k);
        }
        rows.push_back(std::move(eq));
      }
  if (image_in_left_annihilator) {
    // Ann = {z : [z, N] = 0}; require D e_i in Ann for every i
    Matrix stacked(0, n, f);
    for (int j = 0; j < n; ++j) stacked = stacked.vstack(N.right_mult(unit_vec(n, j, f)));
    Subspace ann = stacked.rows() == 0 ? Subspace::full(n, f) : kernel(stacked);
    Matrix q = ann.quotient_map();
    for (int i = 0; i < n; ++i)
      for (int r = 0; r < q.rows(); ++r) {
        Vec eq = zero_vec(unknowns, f);
        for (int k = 0; k < n; ++k) eq[static_cast<size_t>(row_of(k, i))] = q.at(r, k);
        rows.push_back(std::move(eq));
      }
  }
  Subspace sol = rows.empty() ? Subspace::full(unknowns, f)
                              : kernel(Matrix::from_rows(rows, unknowns, f));
  std::vector<Matrix> basis;
  for (int b = 0; b < sol.dim(); ++b) {
    Vec v = sol.basis_row(b);
    Matrix d(n, n, f);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) d.at(r, c) = v[static_cast<size_t>(row_of(r, c))];
    basis.push_back(std::move(d));
  }
  return basis;
}

inline Scalar random_scalar(std::mt19937_64& rng, const FieldDescriptor& f) {
  long v = f.is_prime_field() ? static_cast<long>(rng() % static_cast<uint64_t>(f.p))
                              : static_cast<long>(rng() % 5) - 2;
  return Scalar::of(f, v);
}

inline Matrix random_combination(std::mt19937_64& rng, const std::vector<Matrix>& basis, int n,
                                 const FieldDescriptor& f) {
  Matrix d(n, n, f);
  for (const Matrix& b : basis) {
    Scalar c = random_scalar(rng, f);
    if (c.is_zero()) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d.at(i, j) += c * b.at(i, j);
  }
  return d;
}

/// One or two outer generators acting on the nilpotent base N by derivations;
/// right action zero (general N) or antisymmetric (abelian N, Lie-style).
inline LeibnizAlgebra adjoin_derivations(const LeibnizAlgebra& N, const std::vector<Matrix>& ds,
                                         bool lie_style, const std::string& name) {
  int n = N.dim(), k = static_cast<int>(ds.size());
  const FieldDescriptor& f = N.field();
  LeibnizAlgebra L(n + k, f, name);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < n; ++c) L.set_c(i, j, c, N.c(i, j, c));
  for (int t = 0; t < k; ++t)
    for (int j = 0; j < n; ++j) {
      Vec img = ds[static_cast<size_t>(t)] * unit_vec(n, j, f);
      for (int c = 0; c < n; ++c) {
        L.set_c(n + t, j, c, img[static_cast<size_t>(c)]);
        if (lie_style) L.set_c(j, n + t, c, -img[static_cast<size_t>(c)]);
      }
    }
  return L;
}

inline Matrix random_invertible(std::mt19937_64& rng, int n, const FieldDescriptor& f) {
  for (;;) {
    Matrix s(n, n, f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.at(i, j) = random_scalar(rng, f);
    if (inverse(s)) return s;
  }
}

/// Length-3 scaffold over GF(2): outer pair [t,n] = [n,t] = n with n acting
/// non-nilpotently on an abelian module V, [P,Q] = Q linking the actions.
inline std::optional<LeibnizAlgebra> length3_scaffold(std::mt19937_64& rng, int module_dim) {
  FieldDescriptor f = FieldDescriptor::gf(2);
  int k = module_dim;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Matrix q(k, k, f);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) q.at(i, j) = random_scalar(rng, f);
    if (nilpotency_index(q)) continue;  // need a non-nilpotent action
    // solve PQ + QP = Q for P (linear in P's entries)
    int unknowns = k * k;
    std::vector<Vec> rows;
    Vec rhs;
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        Vec eq = zero_vec(unknowns, f);
        for (int m = 0; m < k; ++m) {
          eq[static_cast<size_t>(r * k + m)] += q.at(m, c);  // (PQ)[r][c]
          eq[static_cast<size_t>(m * k + c)] += q.at(r, m);  // (QP)[r][c]
        }
        rows.push_back(std::move(eq));
        rhs.push_back(q.at(r, c));
      }
    auto sol = solve_affine(Matrix::from_rows(rows, unknowns, f), rhs);
    if (!sol) continue;
    Matrix p(k, k, f);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) p.at(r, c) = sol->particular[static_cast<size_t>(r * k + c)];
    LeibnizAlgebra L(2 + k, f, "len3");
    Scalar one = Scalar::one(f);
    L.set_c(0, 1, 1, one);  // [t, n] = n
    L.set_c(1, 0, 1, one);  // [n, t] = n
    for (int j = 0; j < k; ++j) {
      Vec pj = p * unit_vec(k, j, f), qj = q * unit_vec(k, j, f);
      for (int c = 0; c < k; ++c) {
        L.set_c(0, 2 + j, 2 + c, pj[static_cast<size_t>(c)]);
        L.set_c(1, 2 + j, 2 + c, qj[static_cast<size_t>(c)]);
      }
    }
    if (!check_leibniz(L).empty()) continue;
    return L;
  }
  return std::nullopt;
}

}  // namespace detail

/// Deterministic stream of validated solvable instances. Every emitted
/// algebra passes check_leibniz and is_solvable; rejected samples are simply
/// skipped, so identical (seed, spec) pairs give identical streams.
inline std::vector<LeibnizAlgebra> gen_solvable(const GeneratorSpec& spec,
                                                const std::vector<LeibnizAlgebra>& catalog) {
  if (catalog.empty()) throw precondition_error("gen_solvable: empty catalog");
  for (const LeibnizAlgebra& N : catalog) {
    check_same_field(N.field(), spec.field);
    if (!is_nilpotent(N).nilpotent)
      throw precondition_error("gen_solvable: catalog entry '" + N.name() + "' is not nilpotent");
  }
  std::mt19937_64 rng(spec.seed);
  std::vector<LeibnizAlgebra> out;
  int guard = 0;
  while (static_cast<int>(out.size()) < spec.count && guard++ < spec.count * 400) {
    // pick a base: one catalog entry, or a direct sum of two
    const LeibnizAlgebra& first = catalog[rng() % catalog.size()];
    LeibnizAlgebra base = first;
    if (rng() % 3 == 0) base = direct_sum(first, catalog[rng() % catalog.size()]);

    LeibnizAlgebra candidate = base;
    std::string tag = "gen" + std::to_string(out.size());
    if (spec.family == Family::length && spec.length_target >= 3) {
      if (!(spec.field == FieldDescriptor::gf(2))) throw precondition_error("length >= 3 needs GF(2)");
      int module_dim = 2 + static_cast<int>(rng() % 2);
      if (4 + (module_dim - 2) > spec.dim_max) module_dim = 2;
      auto scaffold = detail::length3_scaffold(rng, module_dim);
      if (!scaffold) continue;
      candidate = *scaffold;
      if (rng() % 2 == 0 && candidate.dim() + catalog[0].dim() <= spec.dim_max)
        candidate = direct_sum(candidate, catalog[0]);
      if (rng() % 2 == 0)
        candidate = change_basis(candidate,
                                 detail::random_invertible(rng, candidate.dim(), spec.field));
    } else if (spec.family == Family::nilpotent_catalog ||
               (spec.family == Family::length && spec.length_target == 1)) {
      if (rng() % 2 == 0)
        candidate = change_basis(candidate,
                                 detail::random_invertible(rng, candidate.dim(), spec.field));
    } else {
      int adjoin = 1 + static_cast<int>(rng() % 2);
      if (base.dim() + adjoin > spec.dim_max) adjoin = spec.dim_max - base.dim();
      if (adjoin <= 0) {
        candidate = base;
      } else {
        bool abelian_base = derived_subalgebra(base).is_zero();
        bool lie_style = abelian_base && (rng() % 2 == 0);
        std::vector<Matrix> space = detail::derivation_space(base, !lie_style);
        if (space.empty()) continue;
        std::vector<Matrix> ds;
        Matrix d1 = detail::random_combination(rng, space, base.dim(), spec.field);
        if (d1.is_zero()) continue;
        ds.push_back(d1);
        if (adjoin == 2) {
          // second derivation commuting with the first, from the same space
          std::vector<Matrix> comm;
          for (const Matrix& b : space)
            if (b * d1 == d1 * b) comm.push_back(b);
          if (!comm.empty()) {
            Matrix d2 = detail::random_combination(rng, comm, base.dim(), spec.field);
            if (!d2.is_zero()) ds.push_back(d2);
          }
        }
        candidate = detail::adjoin_derivations(base, ds, lie_style, tag);
      }
    }
    candidate.set_name(tag);
    if (candidate.dim() < spec.dim_min || candidate.dim() > spec.dim_max) continue;
    if (!check_leibniz(candidate).empty()) continue;
    if (!is_solvable(candidate)) continue;
    if (spec.family == Family::length) {
      auto len = nilpotent_length(candidate);
      if (!len.certified || len.length != spec.length_target) continue;
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace leibniz
