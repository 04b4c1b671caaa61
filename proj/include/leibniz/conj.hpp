#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leibniz/cartan.hpp"

namespace leibniz {

/// Raised when a solver reaches a state the paper's theorems rule out; the
/// message carries the full instance so the case can be replayed. Never
/// swallowed: such a state falsifies either the implementation or a
/// hypothesis check.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an exact procedure reports indeterminate (for instance
/// minimal-ideal search over Q) and a solver cannot proceed.
struct SolverUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WordEntry {
  Vec generator;    // the a_i of exp(L_{a_i})
  Subspace source;  // the ideal/subspace the generator was drawn from
};

/// Invertible matrix together with the generator word certifying how it was
/// assembled from exponentials. matrix = exp(L_{a_1}) ... exp(L_{a_k}) in
/// word order; bracket preservation is verified at construction.
struct InnerAutomorphism {
  Matrix matrix;
  std::vector<WordEntry> word;
  std::string algebra_tag;

  static InnerAutomorphism identity(const LeibnizAlgebra& L) {
    return {Matrix::identity(L.dim(), L.field()), {}, L.fingerprint()};
  }
};

/// Exact automorphism check: M[x,y] = [Mx, My] on all basis pairs.
inline bool preserves_bracket(const LeibnizAlgebra& L, const Matrix& m) {
  int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec ei = unit_vec(n, i, L.field()), ej = unit_vec(n, j, L.field());
      if (m * L.bracket(ei, ej) != L.bracket(m * ei, m * ej)) return false;
    }
  return true;
}

/// Nilpotency index of a matrix (smallest k with T^k = 0), or nullopt.
inline std::optional<int> nilpotency_index(const Matrix& t) {
  Matrix p = Matrix::identity(t.rows(), t.field());
  for (int k = 0; k <= t.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * t;
  }
  return p.is_zero() ? std::optional<int>(t.rows() + 1) : std::nullopt;
}

/// exp(L_a) as a finite sum; requires L_a nilpotent, and over GF(p) an index
/// at most p so every factorial 1/r! exists.
inline InnerAutomorphism exp_left(const LeibnizAlgebra& L, const Vec& a,
                                  std::optional<Subspace> source = std::nullopt) {
  Matrix t = L.left_mult(a);
  std::optional<int> idx = nilpotency_index(t);
  if (!idx) throw precondition_error("exp_left: left multiplication is not nilpotent");
  if (L.field().is_prime_field() && *idx > L.field().p)
    throw precondition_error("exp_left: nilpotency index " + std::to_string(*idx) +
                             " exceeds p = " + std::to_string(L.field().p) +
                             " (char-p guard)");
  Matrix m = Matrix::identity(L.dim(), L.field());
  Matrix power = Matrix::identity(L.dim(), L.field());
  Scalar fact = Scalar::one(L.field());
  for (int r = 1; r < *idx; ++r) {
    power = power * t;
    fact = fact * Scalar::of(L.field(), r);
    Matrix term = power;
    Scalar inv = fact.inverse();
    for (int i = 0; i < L.dim(); ++i)
      for (int j = 0; j < L.dim(); ++j) term.at(i, j) *= inv;
    m = m + term;
  }
  if (!preserves_bracket(L, m))
    throw std::logic_error("exp_left: exponential is not an automorphism");
  InnerAutomorphism f{std::move(m), {}, L.fingerprint()};
  f.word.push_back({a, source ? *source : L.full_subspace()});
  return f;
}

/// (f . g)(x) = f(g(x)); words concatenate so the matrix stays the product
/// of the word's exponentials in order.
inline InnerAutomorphism compose(const InnerAutomorphism& f, const InnerAutomorphism& g) {
  if (f.algebra_tag != g.algebra_tag)
    throw precondition_error("compose: mismatched algebra tags '" + f.algebra_tag + "' vs '" +
                             g.algebra_tag + "'");
  InnerAutomorphism r{f.matrix * g.matrix, f.word, f.algebra_tag};
  r.word.insert(r.word.end(), g.word.begin(), g.word.end());
  return r;
}

/// Conjugacy certificate: an inner automorphism, its claimed group, and the
/// mapped pair. Construction verifies membership of every word generator in
/// the group ideal and that the matrix maps source exactly onto target, so
/// an unsound certificate cannot exist.
struct ConjugacyCertificate {
  InnerAutomorphism automorphism;
  Subspace source, target;
  Subspace group_ideal;
  std::string group_tag;
};

inline ConjugacyCertificate make_certificate(const LeibnizAlgebra& L, InnerAutomorphism w,
                                             const Subspace& source, const Subspace& target,
                                             const Subspace& group_ideal, std::string group_tag) {
  for (const WordEntry& e : w.word)
    if (!group_ideal.member(e.generator))
      throw std::logic_error("certificate: word generator outside " + group_tag);
  if (!(apply(w.matrix, source) == target))
    throw std::logic_error("certificate: automorphism does not map source onto target");
  if (!preserves_bracket(L, w.matrix))
    throw std::logic_error("certificate: matrix does not preserve the bracket");
  return {std::move(w), source, target, group_ideal, std::move(group_tag)};
}

/// Lemma 1(ii): an inner automorphism of the subalgebra U with generators in
/// U^2 extends to L by exponentiating the same generators there.
inline InnerAutomorphism extend_inner(const LeibnizAlgebra& L, const Subspace& u,
                                      const InnerAutomorphism& w_on_u) {
  auto ru = restrict_algebra(L, u);
  if (w_on_u.algebra_tag != ru.algebra.fingerprint())
    throw precondition_error("extend_inner: word lives on a different algebra");
  Subspace u2_local = derived_subalgebra(ru.algebra);
  InnerAutomorphism ext = InnerAutomorphism::identity(L);
  Subspace u2_ambient = product_space(L, u, u);
  for (const WordEntry& e : w_on_u.word) {
    if (!u2_local.member(e.generator))
      throw precondition_error("extend_inner: generator outside U^2");
    ext = compose(ext, exp_left(L, ru.embedding * e.generator, u2_ambient));
  }
  // restriction of the extension reproduces w (exactly)
  if (!(ext.matrix * ru.embedding == ru.embedding * w_on_u.matrix))
    throw std::logic_error("extend_inner: extension does not restrict to the given word");
  return ext;
}

/// Lemma 1(iii): an inner automorphism of L/A with generators in (L/A)^2 is
/// induced by exponentials of representatives chosen inside L^2.
inline InnerAutomorphism lift_inner(const LeibnizAlgebra& L, const Subspace& a,
                                    const QuotientResult& q, const InnerAutomorphism& w_on_q) {
  if (w_on_q.algebra_tag != q.algebra.fingerprint())
    throw precondition_error("lift_inner: word lives on a different algebra");
  if (!(kernel(q.projection) == a))
    throw precondition_error("lift_inner: quotient data does not match the ideal A");
  Subspace q2 = derived_subalgebra(q.algebra);
  Subspace l2 = derived_subalgebra(L);
  Matrix proj_l2 = q.projection * l2.embedding();  // (L/A)-coords of L^2 basis
  InnerAutomorphism lift = InnerAutomorphism::identity(L);
  for (const WordEntry& e : w_on_q.word) {
    if (!q2.member(e.generator))
      throw precondition_error("lift_inner: generator outside (L/A)^2");
    // find x in L^2 with proj(x) = generator; solvable since (L/A)^2 = (L^2+A)/A
    auto sol = solve_affine(proj_l2, e.generator);
    if (!sol) throw std::logic_error("lift_inner: (L/A)^2 = (L^2+A)/A failed");
    Vec x = l2.embedding() * sol->particular;
    lift = compose(lift, exp_left(L, x, l2));
  }
  // projection . lift = w . projection
  if (!(q.projection * lift.matrix == w_on_q.matrix * q.projection))
    throw std::logic_error("lift_inner: lift does not induce the given word");
  return lift;
}

struct NotConjugate {
  Subspace source_invariant, target_invariant;  // the distinct M cap C_L(A), N cap C_L(A)
};

using ComplementVerdict = std::variant<ConjugacyCertificate, NotConjugate>;

namespace detail {

inline std::string instance_dump(const LeibnizAlgebra& L, std::initializer_list<const Subspace*> spaces) {
  std::string s = "algebra " + L.fingerprint() + " dim " + std::to_string(L.dim());
  for (const Subspace* sp : spaces) s += "; " + sp->str();
  return s;
}

}  // namespace detail

/// Theorem 2 / Corollary 1 solver: complements M, N to an abelian minimal
/// ideal A are conjugate under I(L,A) iff M cap C_L(A) = N cap C_L(A); in
/// the positive case one generator a in A suffices and exp(L_a) = I + L_a.
inline ComplementVerdict conjugate_complements(const LeibnizAlgebra& L, const Subspace& a,
                                               const Subspace& m, const Subspace& n) {
  if (!is_ideal(L, a) || !product_space(L, a, a).is_zero())
    throw precondition_error("conjugate_complements: A must be an abelian ideal");
  for (const Subspace* comp : {&m, &n}) {
    if (!is_subalgebra(L, *comp)) throw precondition_error("complement is not a subalgebra");
    if (!intersect(*comp, a).is_zero() || !sum(*comp, a).is_full())
      throw precondition_error("not a complement to A");
  }
  Subspace cent = centralizer(L, a);
  Subspace mc = intersect(m, cent), nc = intersect(n, cent);
  if (!(mc == nc)) return NotConjugate{mc, nc};

  // solve over a in A: for each basis m_i, (I + L_a)(m_i) in N
  Matrix qn = n.quotient_map();
  int cols = a.dim();
  Matrix sys(0, cols, L.field());
  Vec rhs;
  for (int i = 0; i < m.dim(); ++i) {
    Vec mi = m.basis_row(i);
    Matrix block(qn.rows(), cols, L.field());
    for (int j = 0; j < cols; ++j) {
      Vec col = qn * L.bracket(a.basis_row(j), mi);
      for (int r = 0; r < qn.rows(); ++r) block.at(r, j) = col[static_cast<size_t>(r)];
    }
    sys = sys.vstack(block);
    Vec c = qn * mi;
    for (const Scalar& s : c) rhs.push_back(-s);
  }
  auto sol = solve_affine(sys, rhs);
  if (!sol)
    throw TheoremViolation("conjugate_complements: equal centralizer intersections but no "
                           "conjugator (Corollary 1 violated): " +
                           detail::instance_dump(L, {&a, &m, &n}));
  Vec conj = a.embedding() * sol->particular;
  InnerAutomorphism w = exp_left(L, conj, a);
  return make_certificate(L, std::move(w), m, n, a, "I(L, A)");
}

namespace detail {

inline InnerAutomorphism conjugate_cartans_rec(const LeibnizAlgebra& L, const Subspace& h1,
                                               const Subspace& h2) {
  if (h1 == h2) return InnerAutomorphism::identity(L);
  if (is_nilpotent(L).nilpotent)
    throw TheoremViolation("distinct Cartan subalgebras in a nilpotent algebra: " +
                           instance_dump(L, {&h1, &h2}));
  auto a_opt = first_minimal_ideal(L);
  if (!a_opt)
    throw SolverUnavailable("minimal ideal search indeterminate on " + L.fingerprint());
  Subspace a = *a_opt;
  QuotientResult q = quotient(L, a);
  Subspace h1q = apply(q.projection, h1), h2q = apply(q.projection, h2);
  if (!is_cartan(q.algebra, h1q) || !is_cartan(q.algebra, h2q))
    throw TheoremViolation("image of a Cartan subalgebra is not Cartan in the quotient: " +
                           instance_dump(L, {&h1, &h2, &a}));
  InnerAutomorphism lift = lift_inner(L, a, q, conjugate_cartans_rec(q.algebra, h1q, h2q));
  Subspace h1m = apply(lift.matrix, h1);
  Subspace u = sum(h1m, a);
  if (!(u == sum(h2, a)))
    throw TheoremViolation("lift failed to align H1 + A with H2 + A: " +
                           instance_dump(L, {&h1m, &h2, &a}));
  if (u.is_full()) {
    if (h1m == h2) return lift;
    ComplementVerdict v = conjugate_complements(L, a, h1m, h2);
    if (std::holds_alternative<NotConjugate>(v))
      throw TheoremViolation("complement Cartans with distinct centralizer intersections "
                             "(Theorem 4 violated): " + instance_dump(L, {&h1m, &h2, &a}));
    // Theorem 5 step: A = LA here, so the generator lies in L^2; the final
    // certificate re-verifies that membership.
    if (!(product_space(L, L.full_subspace(), a) == a))
      throw TheoremViolation("minimal ideal with LA != A in the complement case: " +
                             instance_dump(L, {&a}));
    return compose(std::get<ConjugacyCertificate>(v).automorphism, lift);
  }
  auto ru = restrict_algebra(L, u);
  Subspace h1u = to_subalgebra_coords(u, h1m), h2u = to_subalgebra_coords(u, h2);
  InnerAutomorphism wu = conjugate_cartans_rec(ru.algebra, h1u, h2u);
  return compose(extend_inner(L, u, wu), lift);
}

}  // namespace detail

/// Theorem 5: Cartan subalgebras of a solvable Leibniz algebra (char-p guard
/// permitting) are conjugate under I(L, L^2). Returns a certificate whose
/// word generators all lie in L^2.
inline ConjugacyCertificate conjugate_cartans(const LeibnizAlgebra& L, const Subspace& h1,
                                              const Subspace& h2) {
  if (!is_solvable(L)) throw precondition_error("conjugate_cartans: L must be solvable");
  if (!char_p_guard(L).ok) throw precondition_error("conjugate_cartans: char-p guard violated");
  if (!is_cartan(L, h1) || !is_cartan(L, h2))
    throw precondition_error("conjugate_cartans: inputs must be Cartan subalgebras");
  InnerAutomorphism w = detail::conjugate_cartans_rec(L, h1, h2);
  return make_certificate(L, std::move(w), h1, h2, derived_subalgebra(L), "I(L, L^2)");
}

namespace detail {

/// Ideals of L maximal among the ideals properly contained in J, via
/// exhaustive subspace enumeration (prime fields only).
inline std::vector<Subspace> maximal_ideals_in(const LeibnizAlgebra& L, const Subspace& j) {
  std::vector<Subspace> inside;
  for (int k = 0; k < j.dim(); ++k)
    for (const Subspace& s : enum_subspaces_dim(j.dim(), k, L.field())) {
      Subspace cand = from_subalgebra_coords(j, s);
      if (is_ideal(L, cand)) inside.push_back(cand);
    }
  std::vector<Subspace> maximal;
  for (const Subspace& b : inside) {
    bool is_max = true;
    for (const Subspace& c : inside)
      if (c.dim() > b.dim() && c.contains(b)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(b);
  }
  std::sort(maximal.begin(), maximal.end(), subspace_less);
  return maximal;
}

inline Vec theorem7_conjugator(const LeibnizAlgebra& L, const Subspace& j, const Subspace& h,
                               const Subspace& k);

/// Descent of Theorem 7's proof through an ideal B maximal in J; prime
/// fields only (enumeration), and reached only if the one-shot solve fails.
inline Vec theorem7_descent(const LeibnizAlgebra& L, const Subspace& j, const Subspace& h,
                            const Subspace& k) {
  if (L.field().is_rationals())
    throw TheoremViolation("Theorem 7 one-shot solve infeasible over Q: " +
                           instance_dump(L, {&h, &k, &j}));
  std::vector<Subspace> bs = maximal_ideals_in(L, j);
  if (bs.empty())
    throw TheoremViolation("Theorem 7 descent found no ideal maximal in J: " +
                           instance_dump(L, {&h, &k, &j}));
  const Subspace& b = bs.front();  // first in canonical order
  QuotientResult q = quotient(L, b);
  Subspace hq = apply(q.projection, h), kq = apply(q.projection, k);
  Subspace jq = j_infinity(q.algebra).j;
  Vec zq = theorem7_conjugator(q.algebra, jq, hq, kq);
  // representative in J over the quotient generator
  Matrix proj_j = q.projection * j.embedding();
  auto sol = solve_affine(proj_j, zq);
  if (!sol) throw std::logic_error("theorem7 descent: J does not surject onto J(L/B)");
  Vec x = j.embedding() * sol->particular;
  InnerAutomorphism ex = exp_left(L, x, j);
  Subspace hstar = apply(ex.matrix, h);
  Subspace kb = sum(k, b);
  if (!(sum(hstar, b) == kb))
    throw TheoremViolation("Theorem 7 descent: H* + B != K + B: " + instance_dump(L, {&h, &k, &b}));
  auto rkb = restrict_algebra(L, kb);
  Subspace hs_u = to_subalgebra_coords(kb, hstar), k_u = to_subalgebra_coords(kb, k);
  Subspace j_u = j_infinity(rkb.algebra).j;
  Vec b_Vec = rkb.embedding * theorem7_conjugator(rkb.algebra, j_u, hs_u, k_u);
  if (!j.member(b_Vec))
    throw TheoremViolation("Theorem 7 descent: inner conjugator escaped J: " +
                           instance_dump(L, {&j}));
  return vec_add(x, b_Vec);
}

/// z in J with (I + L_z)(H) = K, or throws.
inline Vec theorem7_conjugator(const LeibnizAlgebra& L, const Subspace& j, const Subspace& h,
                               const Subspace& k) {
  if (h == k) return zero_vec(L.dim(), L.field());
  Matrix qk = k.quotient_map();
  Matrix sys(0, j.dim(), L.field());
  Vec rhs;
  for (int i = 0; i < h.dim(); ++i) {
    Vec hi = h.basis_row(i);
    Matrix block(qk.rows(), j.dim(), L.field());
    for (int c = 0; c < j.dim(); ++c) {
      Vec col = qk * L.bracket(j.basis_row(c), hi);
      for (int r = 0; r < qk.rows(); ++r) block.at(r, c) = col[static_cast<size_t>(r)];
    }
    sys = sys.vstack(block);
    Vec v = qk * hi;
    for (const Scalar& s : v) rhs.push_back(-s);
  }
  if (auto sol = solve_affine(sys, rhs)) return j.embedding() * sol->particular;
  return theorem7_descent(L, j, h, k);
}

}  // namespace detail

/// Theorem 7: when the stable lower-central term J is abelian, Cartan
/// subalgebras are conjugate under a single exp(L_z) with z in J, found by
/// one affine solve.
inline ConjugacyCertificate conjugate_cartans_abelian_J(const LeibnizAlgebra& L,
                                                        const Subspace& h, const Subspace& k) {
  JInfinityResult j = j_infinity(L);
  if (!j.abelian) throw precondition_error("conjugate_cartans_abelian_J: J is not abelian");
  if (!is_cartan(L, h) || !is_cartan(L, k))
    throw precondition_error("conjugate_cartans_abelian_J: inputs must be Cartan subalgebras");
  Vec z = detail::theorem7_conjugator(L, j.j, h, k);
  // with J abelian, L_z^2 = 0, so exp(L_z) = I + L_z exactly
  Matrix lz = L.left_mult(z);
  if (!(lz * lz).is_zero())
    throw std::logic_error("conjugate_cartans_abelian_J: L_z^2 != 0 despite abelian J");
  InnerAutomorphism w = exp_left(L, z, j.j);
  return make_certificate(L, std::move(w), h, k, j.j, "exp(L_z), z in J");
}

struct MaximalClass {
  Subspace core;
  std::vector<Subspace> members;
  // certificates member[0] -> member[i] for i >= 1 under I(L, L^2)
  std::vector<ConjugacyCertificate> certificates;
};

struct ClassifyMaximalResult {
  std::vector<MaximalClass> classes;
  bool complete = false;  // whether the supplied maximal list was exhaustive
  std::string note;
};

/// Hyperplane subalgebras over Q found by a bounded functional sweep.
/// Deliberately partial: maximal subalgebras over Q can form infinite
/// families; callers must treat the listing as representatives.
inline std::vector<Subspace> hyperplane_subalgebras(const LeibnizAlgebra& L, int max_height = 3) {
  std::vector<Subspace> out;
  RegularCandidates phis(L.dim(), L.field(), max_height);
  while (auto phi = phis.next()) {
    Matrix row(1, L.dim(), L.field());
    for (int i = 0; i < L.dim(); ++i) row.at(0, i) = (*phi)[static_cast<size_t>(i)];
    Subspace u = kernel(row);
    if (!is_subalgebra(L, u)) continue;
    if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

/// Theorem 3 solver: partition maximal subalgebras by core; within a class
/// route the certificate through the core-free quotient (Lemma 2 plus
/// Theorem 1/Corollary 1), lift by Lemma 1(iii); across classes the core is
/// a complete invariant.
inline ClassifyMaximalResult classify_maximal(const LeibnizAlgebra& L,
                                              const std::vector<Subspace>& maximals,
                                              bool list_is_complete) {
  if (!is_solvable(L)) throw precondition_error("classify_maximal: L must be solvable");
  if (!char_p_guard(L).ok) throw precondition_error("classify_maximal: char-p guard violated");
  ClassifyMaximalResult res;
  res.complete = list_is_complete;
  for (const Subspace& m : maximals) {
    Subspace c = core(L, m);
    bool placed = false;
    for (MaximalClass& cls : res.classes)
      if (cls.core == c) {
        cls.members.push_back(m);
        placed = true;
        break;
      }
    if (!placed) res.classes.push_back({c, {m}, {}});
  }
  for (MaximalClass& cls : res.classes) {
    std::sort(cls.members.begin(), cls.members.end(), subspace_less);
    if (cls.members.size() < 2) continue;
    QuotientResult q = quotient(L, cls.core);
    auto a_opt = first_minimal_ideal(q.algebra);
    if (!a_opt) throw SolverUnavailable("minimal ideal of core quotient indeterminate");
    const Subspace& abar = *a_opt;
    if (!product_space(q.algebra, abar, abar).is_zero())
      throw TheoremViolation("minimal ideal of a solvable algebra is not abelian: " +
                             detail::instance_dump(q.algebra, {&abar}));
    Subspace l2 = derived_subalgebra(L);
    for (size_t i = 1; i < cls.members.size(); ++i) {
      Subspace mbar = apply(q.projection, cls.members[0]);
      Subspace kbar = apply(q.projection, cls.members[i]);
      ComplementVerdict v = conjugate_complements(q.algebra, abar, mbar, kbar);
      if (std::holds_alternative<NotConjugate>(v))
        throw TheoremViolation("core-free maximal subalgebras not conjugate (Lemma 2 violated): " +
                               detail::instance_dump(q.algebra, {&mbar, &kbar}));
      InnerAutomorphism wbar = std::get<ConjugacyCertificate>(v).automorphism;
      // Lemma 2's generator lies in [L/C, Abar] = Abar inside (L/C)^2
      Subspace q2 = derived_subalgebra(q.algebra);
      for (const WordEntry& e : wbar.word)
        if (!q2.member(e.generator))
          throw TheoremViolation("Lemma 2 generator outside (L/C)^2: " +
                                 detail::instance_dump(q.algebra, {&abar}));
      InnerAutomorphism lifted = lift_inner(L, cls.core, q, wbar);
      cls.certificates.push_back(make_certificate(L, std::move(lifted), cls.members[0],
                                                  cls.members[i], l2, "I(L, L^2)"));
    }
  }
  return res;
}

}  // namespace leibniz
