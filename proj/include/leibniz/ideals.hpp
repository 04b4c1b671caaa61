#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/series.hpp"
#include "leibniz/subspace_enum.hpp"

namespace leibniz {

struct MinimalIdealsResult {
  std::vector<Subspace> ideals;  // canonically ordered
  bool members_certified = false;  // each listed subspace is provably a minimal ideal
  bool complete = false;           // provably the whole (finite) set
  std::string note;
};

namespace detail {

inline Matrix restrict_operator(const Matrix& m, const Subspace& w) {
  // w must be invariant under m; callers guarantee it
  return w.coord_map() * (m * w.embedding());
}

/// Coefficients of the minimal polynomial of T, lowest degree first, monic.
inline std::vector<Scalar> minimal_polynomial(const Matrix& t) {
  int d = t.rows();
  const FieldDescriptor& f = t.field();
  std::vector<Matrix> powers{Matrix::identity(d, f)};
  for (int k = 1; k <= d; ++k) {
    powers.push_back(powers.back() * t);
    // is powers[k] a combination of the lower powers?
    Matrix sys(d * d, k, f);
    Vec rhs;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        int row = i * d + j;
        for (int c = 0; c < k; ++c) sys.at(row, c) = powers[static_cast<size_t>(c)].at(i, j);
        rhs.push_back(powers.back().at(i, j));
      }
    if (auto sol = solve_affine(sys, rhs)) {
      std::vector<Scalar> coeffs;  // T^k = sum c_i T^i  ->  p(x) = x^k - sum c_i x^i
      for (int c = 0; c < k; ++c) coeffs.push_back(-sol->particular[static_cast<size_t>(c)]);
      coeffs.push_back(Scalar::one(f));
      return coeffs;
    }
  }
  throw std::logic_error("minimal polynomial not found within dimension bound");
}

/// Divisors of |v| up to its square-root cofactors, via trial division.
/// Returns empty and sets ok=false when a cofactor above the bound remains.
inline std::vector<mpz_class> all_divisors(mpz_class v, bool& ok, long bound = 100000) {
  ok = true;
  v = abs(v);
  std::vector<std::pair<mpz_class, int>> fact;
  for (long d = 2; d <= bound && mpz_class(d) * d <= v; ++d) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      fact.push_back({mpz_class(d), e});
    }
  }
  if (v > 1) {
    if (v > bound * static_cast<long>(bound)) {
      // v could still be prime; accept it as a prime factor if small enough
      if (!mpz_probab_prime_p(v.get_mpz_t(), 25)) {
        ok = false;
        return {};
      }
    }
    fact.push_back({v, 1});
  }
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : fact) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t t = 0; t < base; ++t) divs.push_back(divs[t] * pk);
    }
  }
  return divs;
}

/// Rational roots of a monic Q-polynomial (lowest degree first).
/// `complete` reports whether every rational root was provably found.
inline std::vector<Scalar> rational_roots(const std::vector<Scalar>& poly, bool& complete) {
  const FieldDescriptor Q = FieldDescriptor::rationals();
  complete = true;
  // clear denominators to integers
  mpz_class lcm = 1;
  for (const Scalar& c : poly) {
    mpz_class den = c.value().get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<mpz_class> a;
  for (const Scalar& c : poly) {
    mpq_class scaled = c.value() * mpq_class(lcm);
    a.push_back(scaled.get_num());
  }
  // strip trailing zero constant coefficients: x = 0 is a root
  std::vector<Scalar> roots;
  size_t low = 0;
  while (low + 1 < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar::zero(Q));
  if (low + 1 == a.size()) return roots;
  bool ok0 = true, okd = true;
  std::vector<mpz_class> nums = all_divisors(a[low], ok0);
  std::vector<mpz_class> dens = all_divisors(a.back(), okd);
  if (!ok0 || !okd) complete = false;
  auto eval_zero = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (size_t i = a.size(); i-- > low;) acc = acc * x + mpq_class(a[i]);
    return acc == 0;
  };
  for (const mpz_class& num : nums)
    for (const mpz_class& den : dens)
      for (int sign : {1, -1}) {
        mpq_class x(num * sign, den);
        x.canonicalize();
        if (eval_zero(x)) {
          Scalar r = Scalar::parse(Q, x.get_str());
          if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
      }
  return roots;
}

/// Basis of the unital matrix algebra generated by `gens`.
inline std::vector<Matrix> generated_matrix_algebra(const std::vector<Matrix>& gens, int d,
                                                    const FieldDescriptor& f) {
  auto flatten = [&](const Matrix& m) {
    Vec v;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) v.push_back(m.at(i, j));
    return v;
  };
  std::vector<Matrix> basis;
  Subspace span = Subspace::zero(d * d, f);
  auto add = [&](const Matrix& m) {
    Vec v = flatten(m);
    if (span.member(v)) return false;
    span = sum(span, canonical_span({v}, d * d, f));
    basis.push_back(m);
    return true;
  };
  add(Matrix::identity(d, f));
  for (const Matrix& g : gens) add(g);
  for (size_t i = 0; i < basis.size(); ++i)
    for (const Matrix& g : gens) {
      add(basis[i] * g);
      add(g * basis[i]);
    }
  return basis;
}

struct MinimalityCertificate {
  bool certified = false;
  std::string how;
};

/// Sound (possibly incomplete) certificate that the ideal W has no proper
/// nonzero L-invariant subspace. Restrictions of all left/right basis
/// multiplications are the acting operators.
inline MinimalityCertificate certify_minimal(const LeibnizAlgebra& L, const Subspace& w) {
  int d = w.dim();
  if (d == 0) return {false, "zero space"};
  if (d == 1) return {true, "dimension 1"};
  const FieldDescriptor& f = L.field();
  std::vector<Matrix> gens;
  for (int i = 0; i < L.dim(); ++i) {
    Vec ei = unit_vec(L.dim(), i, f);
    gens.push_back(restrict_operator(L.left_mult(ei), w));
    gens.push_back(restrict_operator(L.right_mult(ei), w));
  }
  std::vector<Matrix> alg = generated_matrix_algebra(gens, d, f);
  if (static_cast<int>(alg.size()) == d * d) return {true, "acting algebra is full End(W)"};
  // commutative-field route: algebra a field acting on a cyclic module of
  // matching dimension leaves only the trivial invariant subspaces
  bool comm = true;
  for (size_t i = 0; i < alg.size() && comm; ++i)
    for (size_t j = i + 1; j < alg.size() && comm; ++j)
      comm = alg[i] * alg[j] == alg[j] * alg[i];
  if (!comm || static_cast<int>(alg.size()) != d) return {false, "no certificate"};
  // cyclic?
  bool cyclic = false;
  for (int i = 0; i < d && !cyclic; ++i) {
    std::vector<Vec> orbit;
    Vec wi = unit_vec(d, i, f);
    for (const Matrix& b : alg) orbit.push_back(b * wi);
    cyclic = canonical_span(orbit, d, f).is_full();
  }
  if (!cyclic) return {false, "no certificate"};
  // primitive element with irreducible minimal polynomial of degree d
  for (const Matrix& t : alg) {
    std::vector<Scalar> mp = minimal_polynomial(t);
    if (static_cast<int>(mp.size()) != d + 1) continue;
    if (d > 3) continue;  // degree-d irreducibility certified only for d <= 3
    bool complete = true;
    std::vector<Scalar> roots = rational_roots(mp, complete);
    if (complete && roots.empty())
      return {true, "acting algebra is a field of degree " + std::to_string(d)};
  }
  return {false, "no certificate"};
}

/// Invariant-subspace descent: returns a (hopefully minimal) nonzero ideal
/// inside the nonzero ideal W.
inline Subspace descend_to_minimal(const LeibnizAlgebra& L, Subspace w) {
  const FieldDescriptor& f = L.field();
  for (;;) {
    bool shrunk = false;
    // closures of basis vectors
    for (int i = 0; i < w.dim() && !shrunk; ++i) {
      Subspace c = ideal_closure(L, canonical_span({w.basis_row(i)}, L.dim(), f));
      if (!c.is_zero() && c.dim() < w.dim()) {
        w = c;
        shrunk = true;
      }
    }
    if (shrunk) continue;
    if (w.dim() == 1) return w;
    // eigen-descent on restricted operators
    std::vector<Matrix> ops;
    for (int i = 0; i < L.dim(); ++i) {
      Vec ei = unit_vec(L.dim(), i, f);
      ops.push_back(restrict_operator(L.left_mult(ei), w));
      ops.push_back(restrict_operator(L.right_mult(ei), w));
    }
    Matrix emb = w.embedding();
    for (const Matrix& t : ops) {
      std::vector<Scalar> lambdas{Scalar::zero(f)};
      if (f.is_rationals()) {
        bool complete = true;
        for (const Scalar& r : rational_roots(minimal_polynomial(t), complete)) lambdas.push_back(r);
      } else {
        for (long v = 1; v < f.p; ++v) lambdas.push_back(Scalar::of(f, v));
      }
      for (const Scalar& lam : lambdas) {
        Matrix shifted = t;
        for (int i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= lam;
        Subspace ker = kernel(shifted);
        if (ker.is_zero() || ker.dim() == w.dim()) continue;
        for (int i = 0; i < ker.dim(); ++i) {
          Subspace c = ideal_closure(L, canonical_span({emb * ker.basis_row(i)}, L.dim(), f));
          if (!c.is_zero() && c.dim() < w.dim()) {
            w = c;
            shrunk = true;
            break;
          }
        }
        if (shrunk) break;
      }
      if (shrunk) break;
    }
    if (!shrunk) return w;
  }
}

/// Zero iff the two L-modules admit no nonzero intertwiner for both actions.
inline bool hom_space_is_zero(const LeibnizAlgebra& L, const Subspace& w1, const Subspace& w2) {
  const FieldDescriptor& f = L.field();
  int d1 = w1.dim(), d2 = w2.dim();
  // unknown Phi (d2 x d1), conditions Phi A_g - B_g Phi = 0
  int unknowns = d1 * d2;
  Matrix sys(0, unknowns, f);
  for (int i = 0; i < L.dim(); ++i) {
    Vec ei = unit_vec(L.dim(), i, f);
    for (bool left : {true, false}) {
      Matrix a = restrict_operator(left ? L.left_mult(ei) : L.right_mult(ei), w1);
      Matrix b = restrict_operator(left ? L.left_mult(ei) : L.right_mult(ei), w2);
      Matrix block(d2 * d1, unknowns, f);
      // row (r, c): coefficient of Phi[u][v] in (Phi A - B Phi)[r][c]
      for (int r = 0; r < d2; ++r)
        for (int c = 0; c < d1; ++c) {
          int row = r * d1 + c;
          for (int v = 0; v < d1; ++v) block.at(row, r * d1 + v) += a.at(v, c);
          for (int u = 0; u < d2; ++u) block.at(row, u * d1 + c) -= b.at(r, u);
        }
      sys = sys.vstack(block);
    }
  }
  return kernel(sys).is_zero();
}

}  // namespace detail

/// All minimal nonzero ideals. Exact and total over GF(p) within the vector
/// budget (every minimal ideal is the ideal closure of each of its nonzero
/// vectors); over Q a certified descent that reports honestly when it cannot
/// prove membership or completeness.
inline MinimalIdealsResult minimal_ideals(const LeibnizAlgebra& L, long gf_vector_budget = 1 << 21) {
  MinimalIdealsResult res;
  if (L.dim() == 0) {
    res.members_certified = res.complete = true;
    return res;
  }
  const FieldDescriptor& f = L.field();
  if (f.is_prime_field()) {
    // Every minimal ideal is the ideal closure of each of its nonzero
    // vectors, so scanning a region containing all minimal ideals is exact.
    // For solvable L with nilpotent L^2 they all lie in the two-sided
    // centralizer of L^2, which is usually far smaller than L.
    Subspace region = L.full_subspace();
    Subspace l2 = derived_subalgebra(L);
    if (is_solvable(L) && is_nilpotent(restrict_algebra(L, l2).algebra).nilpotent)
      region = centralizer(L, l2);
    if (vector_space_size(region.dim(), f.p) > gf_vector_budget) {
      res.note = "vector budget exceeded";
      return res;
    }
    std::vector<Subspace> closures;
    long total = vector_space_size(region.dim(), f.p);
    Matrix emb = region.embedding();
    for (long code = 1; code < total; ++code) {
      Vec coeff = vector_of_code(code, region.dim(), f);
      // projective representative: first nonzero coefficient = 1
      bool canonical = false;
      for (const Scalar& s : coeff) {
        if (s.is_zero()) continue;
        canonical = s.is_one();
        break;
      }
      if (!canonical) continue;
      closures.push_back(ideal_closure(L, canonical_span({emb * coeff}, L.dim(), f)));
    }
    // minimal elements of the closure family are exactly the minimal ideals
    for (const Subspace& c : closures) {
      bool minimal = true;
      for (const Subspace& d : closures)
        if (d.dim() < c.dim() && c.contains(d)) {
          minimal = false;
          break;
        }
      if (minimal && std::find(res.ideals.begin(), res.ideals.end(), c) == res.ideals.end())
        res.ideals.push_back(c);
    }
    std::sort(res.ideals.begin(), res.ideals.end(), subspace_less);
    res.members_certified = res.complete = true;
    return res;
  }

  // Q path: abelian minimal ideals live in Z_N = {x in N : [N,x] = [x,N] = 0}.
  bool region_exact = false;
  Subspace region = L.zero_subspace();
  NilradicalResult nr = nilradical(L);
  if (nr.certified) {
    region = intersect(nr.nilradical, centralizer(L, nr.nilradical));
    region_exact = true;
  }
  std::vector<Subspace> seeds;
  for (int i = 0; i < region.dim(); ++i)
    seeds.push_back(ideal_closure(L, canonical_span({region.basis_row(i)}, L.dim(), f)));
  for (int i = 0; i < L.dim(); ++i)  // catches non-abelian minimal ideals too
    seeds.push_back(ideal_closure(L, canonical_span({unit_vec(L.dim(), i, f)}, L.dim(), f)));
  bool all_certified = true;
  for (const Subspace& s : seeds) {
    if (s.is_zero()) continue;
    Subspace m = detail::descend_to_minimal(L, s);
    auto cert = detail::certify_minimal(L, m);
    if (!cert.certified) {
      all_certified = false;
      continue;
    }
    if (std::find(res.ideals.begin(), res.ideals.end(), m) == res.ideals.end())
      res.ideals.push_back(m);
  }
  std::sort(res.ideals.begin(), res.ideals.end(), subspace_less);
  res.members_certified = true;  // only certified members were kept
  if (!all_certified) {
    res.complete = false;
    res.note = "some descent candidates could not be certified minimal";
    return res;
  }
  if (!is_solvable(L) || !region_exact) {
    res.complete = false;
    res.note = region_exact ? "completeness argument needs solvability"
                            : "nilradical indeterminate: " + nr.note;
    return res;
  }
  // complete iff the certified minimal ideals exhaust Z_N multiplicity-free
  Subspace total = L.zero_subspace();
  for (const Subspace& m : res.ideals) total = sum(total, m);
  if (!(total == region)) {
    res.complete = false;
    res.note = "minimal ideals found do not span the candidate region";
    return res;
  }
  for (size_t i = 0; i < res.ideals.size(); ++i)
    for (size_t j = i + 1; j < res.ideals.size(); ++j)
      if (!detail::hom_space_is_zero(L, res.ideals[i], res.ideals[j])) {
        res.complete = false;
        res.note = "isomorphic minimal ideals: infinitely many over Q";
        return res;
      }
  res.complete = true;
  return res;
}

/// First minimal ideal in the canonical (dimension, basis) order; this is
/// the deterministic pick used by every conjugacy solver.
inline std::optional<Subspace> first_minimal_ideal(const LeibnizAlgebra& L) {
  MinimalIdealsResult r = minimal_ideals(L);
  if (!r.members_certified || r.ideals.empty()) return std::nullopt;
  return r.ideals.front();
}

struct SocleResult {
  Subspace socle;
  bool complete = false;
  std::string note;
};

/// Sum of all minimal ideals; `complete` mirrors the enumeration status.
inline SocleResult socle(const LeibnizAlgebra& L) {
  MinimalIdealsResult r = minimal_ideals(L);
  Subspace s = L.zero_subspace();
  for (const Subspace& m : r.ideals) s = sum(s, m);
  return {s, r.complete, r.note};
}

}  // namespace leibniz
