#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

enum class SeriesKind { derived, lower_central, upper_central };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool stabilized = false;  // last listed term repeats forever

  const Subspace& last() const { return terms.back(); }
};

/// L^(0) = L, L^(k+1) = [L^(k), L^(k)].
inline SeriesReport derived_series(const LeibnizAlgebra& L) {
  SeriesReport r{SeriesKind::derived, {L.full_subspace()}, false};
  for (;;) {
    Subspace next = product_space(L, r.terms.back(), r.terms.back());
    if (next == r.terms.back()) {
      r.stabilized = true;
      return r;
    }
    r.terms.push_back(next);
    if (next.is_zero()) {
      r.stabilized = true;
      return r;
    }
  }
}

/// L^1 = L, L^{k+1} = [L, L^k] (left-normed).
inline SeriesReport lower_central_series(const LeibnizAlgebra& L) {
  SeriesReport r{SeriesKind::lower_central, {L.full_subspace()}, false};
  for (;;) {
    Subspace next = product_space(L, L.full_subspace(), r.terms.back());
    if (next == r.terms.back()) {
      r.stabilized = true;
      return r;
    }
    r.terms.push_back(next);
    if (next.is_zero()) {
      r.stabilized = true;
      return r;
    }
  }
}

/// Z_0 = 0, Z_{k+1}/Z_k = two-sided center of L/Z_k.
inline SeriesReport upper_central_series(const LeibnizAlgebra& L) {
  SeriesReport r{SeriesKind::upper_central, {L.zero_subspace()}, false};
  for (;;) {
    const Subspace& z = r.terms.back();
    Subspace next(z);
    if (z.is_full()) {
      r.stabilized = true;
      return r;
    }
    Matrix q = z.quotient_map();
    Matrix stacked(0, L.dim(), L.field());
    for (int i = 0; i < L.dim(); ++i) {
      Vec ei = unit_vec(L.dim(), i, L.field());
      stacked = stacked.vstack(q * L.left_mult(ei));   // [e_i, x] in Z_k
      stacked = stacked.vstack(q * L.right_mult(ei));  // [x, e_i] in Z_k
    }
    next = stacked.rows() == 0 ? L.full_subspace() : kernel(stacked);
    if (next == z) {
      r.stabilized = true;
      return r;
    }
    r.terms.push_back(next);
  }
}

struct NilpotencyResult {
  bool nilpotent = false;
  int cls = 0;  // smallest c with L^{c+1} = 0 (0 for the zero algebra)
};

inline NilpotencyResult is_nilpotent(const LeibnizAlgebra& L) {
  SeriesReport s = lower_central_series(L);
  if (!s.last().is_zero()) return {false, 0};
  return {true, static_cast<int>(s.terms.size()) - 1};
}

inline bool is_solvable(const LeibnizAlgebra& L) {
  return derived_series(L).last().is_zero();
}

struct JInfinityResult {
  Subspace j;
  bool abelian = false;
};

/// Stable term of the lower central series; J = [L, J].
inline JInfinityResult j_infinity(const LeibnizAlgebra& L) {
  Subspace j = lower_central_series(L).last();
  return {j, product_space(L, j, j).is_zero()};
}

struct CharPGuard {
  bool ok = false;
  int cls = 0;            // nilpotency class of L^2 when nilpotent
  bool infinite = false;  // L^2 not nilpotent (hypothesis fails outright)

  std::string reason() const {
    if (ok) return "ok";
    if (infinite) return "L^2 not nilpotent";
    return "class(L^2) = " + std::to_string(cls) + " >= p";
  }
};

/// Characteristic-p hypothesis: over GF(p), L^2 must have nilpotency class
/// less than p. Always ok over Q.
inline CharPGuard char_p_guard(const LeibnizAlgebra& L) {
  Subspace l2 = derived_subalgebra(L);
  auto r2 = restrict_algebra(L, l2);
  NilpotencyResult nil = is_nilpotent(r2.algebra);
  if (L.field().is_rationals()) {
    CharPGuard g;
    g.ok = true;
    g.cls = nil.nilpotent ? nil.cls : 0;
    g.infinite = !nil.nilpotent;
    return g;
  }
  if (!nil.nilpotent) return {false, 0, true};
  return {nil.cls < L.field().p, nil.cls, false};
}

struct NilradicalResult {
  Subspace nilradical;
  bool certified = false;
  std::string note;
};

namespace detail {

/// Bilinear form x,y -> tr(L_x L_y) restricted row matrix over chosen ops.
inline Matrix left_trace_form_rows(const LeibnizAlgebra& L) {
  int n = L.dim();
  std::vector<Matrix> lm;
  for (int i = 0; i < n; ++i) lm.push_back(L.left_mult(unit_vec(n, i, L.field())));
  // row y: entries tr(L_{e_i} L_{e_y}); plus one row for tr(L_x) itself
  Matrix rows(n + 1, n, L.field());
  for (int y = 0; y < n; ++y)
    for (int i = 0; i < n; ++i) rows.at(y, i) = (lm[static_cast<size_t>(i)] * lm[static_cast<size_t>(y)]).trace();
  for (int i = 0; i < n; ++i) rows.at(n, i) = lm[static_cast<size_t>(i)].trace();
  return rows;
}

inline bool left_mult_nilpotent(const LeibnizAlgebra& L, const Vec& x) {
  Matrix m = L.left_mult(x);
  Matrix p = Matrix::identity(L.dim(), L.field());
  for (int k = 0; k < L.dim(); ++k) {
    p = p * m;
    if (p.is_zero()) return true;
  }
  return p.is_zero();
}

/// Verified-nilpotent-ideal check used by the nilradical certification.
inline bool is_nilpotent_ideal(const LeibnizAlgebra& L, const Subspace& k) {
  if (!is_ideal(L, k)) return false;
  return is_nilpotent(restrict_algebra(L, k).algebra).nilpotent;
}

}  // namespace detail

/// Largest nilpotent ideal. Candidate-and-certify: the candidate always
/// contains N(L), so a candidate verified to be a nilpotent ideal equals it.
/// Over Q the candidate is the core of the left-trace-form kernel; over GF(p)
/// (within budget) the core of the span of {x : L_x nilpotent}.
inline NilradicalResult nilradical(const LeibnizAlgebra& L,
                                   long gf_vector_budget = 1 << 20) {
  if (L.dim() == 0) return {L.zero_subspace(), true, "zero algebra"};
  Subspace candidate = L.full_subspace();
  if (L.field().is_rationals()) {
    // {x : tr(L_x L_y) = 0 for all y, tr(L_x) = 0} contains every x with
    // L_x nilpotent, hence contains N(L).
    candidate = kernel(detail::left_trace_form_rows(L));
  } else {
    // enumerate all vectors; N(L) is inside the span of the nilpotent set
    long p = L.field().p, total = 1;
    for (int i = 0; i < L.dim(); ++i) {
      total *= p;
      if (total > gf_vector_budget) return {L.zero_subspace(), false, "vector budget exceeded"};
    }
    std::vector<Vec> nil_set;
    for (long code = 1; code < total; ++code) {
      long c = code;
      Vec v = zero_vec(L.dim(), L.field());
      for (int i = L.dim() - 1; i >= 0; --i) {
        v[static_cast<size_t>(i)] = Scalar::of(L.field(), c % p);
        c /= p;
      }
      if (detail::left_mult_nilpotent(L, v)) nil_set.push_back(std::move(v));
    }
    candidate = canonical_span(nil_set, L.dim(), L.field());
  }
  for (;;) {
    Subspace k = detail::largest_ideal_in(L, candidate);
    if (detail::is_nilpotent_ideal(L, k)) return {k, true, ""};
    // refine: intersect with the kernels of the trace forms of the left
    // multiplications restricted to each derived term, then retry.
    Subspace refined = candidate;
    for (const Subspace& d : derived_series(L).terms) {
      if (d.is_zero() || d.is_full()) continue;
      Matrix emb = d.embedding(), cm = d.coord_map();
      std::vector<Matrix> restr;
      for (int i = 0; i < L.dim(); ++i)
        restr.push_back(cm * (L.left_mult(unit_vec(L.dim(), i, L.field())) * emb));
      Matrix rows(L.dim(), L.dim(), L.field());
      for (int y = 0; y < L.dim(); ++y)
        for (int i = 0; i < L.dim(); ++i)
          rows.at(y, i) = (restr[static_cast<size_t>(i)] * restr[static_cast<size_t>(y)]).trace();
      refined = intersect(refined, kernel(rows));
    }
    if (refined == candidate)
      return {L.zero_subspace(), false, "nilradical candidate failed certification"};
    candidate = refined;
  }
}

struct NilpotentLengthCertificate {
  int length = 0;
  std::vector<Subspace> chain;               // 0 = L_0 <= L_1 <= ... <= L_t = L
  std::vector<SeriesReport> factor_witness;  // lower central series of each factor
  bool certified = false;
  std::string note;
};

/// Shortest ideal chain with nilpotent factors, realized by iterated
/// nilradicals; each factor's lower central series is kept as the witness.
inline NilpotentLengthCertificate nilpotent_length(const LeibnizAlgebra& L) {
  NilpotentLengthCertificate cert;
  cert.chain.push_back(L.zero_subspace());
  if (!is_solvable(L)) {
    cert.note = "not solvable";
    return cert;
  }
  Subspace cur = L.zero_subspace();
  // ambient-coordinates chain; factor witnesses computed on quotient algebras
  while (!cur.is_full()) {
    auto qr = quotient(L, cur);
    NilradicalResult nr = nilradical(qr.algebra);
    if (!nr.certified) {
      cert.note = "nilradical indeterminate: " + nr.note;
      return cert;
    }
    if (nr.nilradical.is_zero()) {
      cert.note = "nonzero solvable algebra with zero nilradical (impossible)";
      return cert;
    }
    cert.factor_witness.push_back(lower_central_series(restrict_algebra(qr.algebra, nr.nilradical).algebra));
    cur = quotient_preimage(qr, cur, nr.nilradical);
    cert.chain.push_back(cur);
    ++cert.length;
  }
  cert.certified = true;
  return cert;
}

/// Largest solvable ideal, char-0 path: preimage of the Lie radical of
/// L/Leib(L) computed by the trace-form criterion. Unsupported over GF(p).
inline Subspace radical(const LeibnizAlgebra& L) {
  if (L.field().is_prime_field())
    throw precondition_error("radical: unsupported over GF(p); use oracle ideal enumeration");
  Subspace leib = leib_ideal(L);
  auto q = quotient(L, leib);
  const LeibnizAlgebra& lie = q.algebra;
  int m = lie.dim();
  // kappa(x, d) = tr(ad_x ad_d) for d in a basis of [lie, lie]
  Subspace der = derived_subalgebra(lie);
  std::vector<Matrix> ad;
  for (int i = 0; i < m; ++i) ad.push_back(lie.left_mult(unit_vec(m, i, lie.field())));
  Matrix rows(der.dim(), m, lie.field());
  for (int r = 0; r < der.dim(); ++r) {
    Matrix add = lie.left_mult(der.basis_row(r));
    for (int i = 0; i < m; ++i) rows.at(r, i) = (ad[static_cast<size_t>(i)] * add).trace();
  }
  Subspace rbar = rows.rows() == 0 ? lie.full_subspace() : kernel(rows);
  Subspace rad = quotient_preimage(q, leib, rbar);
  if (!is_ideal(L, rad) || !is_solvable(restrict_algebra(L, rad).algebra) || !rad.contains(leib))
    throw std::logic_error("radical certification failed");
  return rad;
}

}  // namespace leibniz
