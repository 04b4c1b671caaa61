#pragma once

#include <vector>

#include "leibniz/subspace.hpp"

namespace leibniz {

/// Gaussian binomial [n choose k]_p: the number of k-dim subspaces of GF(p)^n.
inline mpz_class gaussian_binomial(int n, int k, long p) {
  if (k < 0 || k > n) return 0;
  mpz_class num = 1, den = 1, q(p);
  for (int i = 0; i < k; ++i) {
    mpz_class qn, qi;
    mpz_pow_ui(qn.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - i));
    mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k - i));
    num *= qn - 1;
    den *= qi - 1;
  }
  return num / den;
}

/// All vectors of GF(p)^n in counter order: the vector of code c has the
/// base-p digits of c, most significant digit first. Code 0 is the zero
/// vector.
inline Vec vector_of_code(long code, int n, const FieldDescriptor& f) {
  Vec v = zero_vec(n, f);
  for (int i = n - 1; i >= 0; --i) {
    v[static_cast<size_t>(i)] = Scalar::of(f, code % f.p);
    code /= f.p;
  }
  return v;
}

inline long vector_space_size(int n, long p) {
  long total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  return total;
}

/// All k-dimensional subspaces of GF(p)^n, each constructed directly in
/// canonical RREF form; the count is the Gaussian binomial.
inline std::vector<Subspace> enum_subspaces_dim(int n, int k, const FieldDescriptor& f) {
  if (!f.is_prime_field()) throw precondition_error("subspace enumeration needs a prime field");
  std::vector<Subspace> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(Subspace::zero(n, f));
    return out;
  }
  // iterate pivot-column combinations
  std::vector<int> piv(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
  auto next_comb = [&]() -> bool {
    int i = k - 1;
    while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++piv[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    return true;
  };
  do {
    // free cells: (row i, col c) with c > piv[i] and c not a pivot column
    std::vector<std::pair<int, int>> free_cells;
    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (int c : piv) is_piv[static_cast<size_t>(c)] = true;
    for (int i = 0; i < k; ++i)
      for (int c = piv[static_cast<size_t>(i)] + 1; c < n; ++c)
        if (!is_piv[static_cast<size_t>(c)]) free_cells.push_back({i, c});
    std::vector<long> vals(free_cells.size(), 0);
    for (;;) {
      Matrix basis(k, n, f);
      for (int i = 0; i < k; ++i) basis.at(i, piv[static_cast<size_t>(i)]) = Scalar::one(f);
      for (size_t t = 0; t < free_cells.size(); ++t)
        basis.at(free_cells[t].first, free_cells[t].second) = Scalar::of(f, vals[t]);
      out.push_back(Subspace::from_rref(n, std::move(basis), piv));
      // odometer
      size_t t = 0;
      while (t < vals.size() && ++vals[t] == f.p) vals[t++] = 0;
      if (t == vals.size()) break;
    }
  } while (next_comb());
  return out;
}

/// All subspaces of GF(p)^n, ordered by (dimension, canonical basis).
inline std::vector<Subspace> enum_all_subspaces(int n, const FieldDescriptor& f) {
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<Subspace> layer = enum_subspaces_dim(n, k, f);
    std::sort(layer.begin(), layer.end(), subspace_less);
    for (auto& s : layer) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace leibniz
