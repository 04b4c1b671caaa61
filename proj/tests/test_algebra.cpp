#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas.hpp"

using namespace leibniz;
using namespace atlas;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
}

TEST_CASE("check_leibniz accepts the atlas and rejects a bad table") {
  for (auto& L : {ab2(), n2(), r2(), aff2()}) CHECK(check_leibniz(L).empty());
  CHECK(check_leibniz(h3()).empty());
  CHECK(check_leibniz(so3()).empty());

  // dim 2 with only [e1,e2] = e1 violates the identity at (1,2,2) (0-based (0,1,1))
  LeibnizAlgebra bad(2, Q, "bad");
  bad.set_c(0, 1, 0, Scalar::one(Q));
  auto v = check_leibniz(bad);
  REQUIRE(!v.empty());
  bool found = false;
  for (auto& t : v) found = found || (t == std::array<int, 3>{0, 1, 1});
  CHECK(found);
}

TEST_CASE("bracket examples") {
  LeibnizAlgebra A = aff2();
  CHECK(A.bracket(basis_vec(A, 1), basis_vec(A, 0)) == basis_vec(A, 0));
  CHECK(is_zero_vec(A.bracket(basis_vec(A, 1), zero_vec(2, Q))));
  LeibnizAlgebra N = n2();
  CHECK(N.bracket(basis_vec(N, 0), basis_vec(N, 0)) == basis_vec(N, 1));
}

TEST_CASE("left_mult examples and linearity") {
  LeibnizAlgebra R = r2();
  CHECK(R.left_mult(zero_vec(2, Q)).is_zero());
  Matrix m = R.left_mult(basis_vec(R, 1));
  CHECK(m * basis_vec(R, 0) == basis_vec(R, 0));
  CHECK(is_zero_vec(m * basis_vec(R, 1)));

  LeibnizAlgebra N = n2();
  Matrix a = N.left_mult(basis_vec(N, 0));
  CHECK(a * basis_vec(N, 0) == basis_vec(N, 1));
  CHECK(is_zero_vec(a * basis_vec(N, 1)));
  CHECK((a * a).is_zero());

  // linear in x
  Vec x = vec_add(basis_vec(R, 0), basis_vec(R, 1));
  CHECK(R.left_mult(x) == R.left_mult(basis_vec(R, 0)) + R.left_mult(basis_vec(R, 1)));
}

TEST_CASE("left multiplications are derivations; squares left-annihilate") {
  for (auto& L : {ab2(), n2(), r2(), aff2(), h3(), so3()}) {
    int n = L.dim();
    for (int i = 0; i < n; ++i) {
      Vec x = unit_vec(n, i, L.field());
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Vec y = unit_vec(n, j, L.field());
          Vec z = unit_vec(n, k, L.field());
          Vec lhs = L.bracket(x, L.bracket(y, z));
          Vec rhs = vec_add(L.bracket(L.bracket(x, y), z), L.bracket(y, L.bracket(x, z)));
          CHECK(lhs == rhs);
          // [[y,y],z] = 0
          CHECK(is_zero_vec(L.bracket(L.bracket(y, y), z)));
        }
    }
  }
}

TEST_CASE("product_space examples") {
  CHECK(derived_subalgebra(ab2()).is_zero());
  LeibnizAlgebra R = r2();
  CHECK(derived_subalgebra(R) == span_of(R, {basis_vec(R, 0)}));
  LeibnizAlgebra H = h3();
  CHECK(derived_subalgebra(H) == span_of(H, {basis_vec(H, 2)}));
}

TEST_CASE("classify_subspace examples") {
  LeibnizAlgebra R = r2();
  auto full = classify_subspace(R, R.full_subspace());
  CHECK(full.is_subalgebra);
  CHECK(full.is_ideal);

  auto e1 = classify_subspace(R, span_of(R, {basis_vec(R, 0)}));
  CHECK(e1.is_ideal);

  LeibnizAlgebra A = aff2();
  auto e2 = classify_subspace(A, span_of(A, {basis_vec(A, 1)}));
  CHECK(e2.is_subalgebra);
  CHECK_FALSE(e2.is_ideal);
}

TEST_CASE("centralizer examples") {
  LeibnizAlgebra B = ab2();
  CHECK(centralizer(B, span_of(B, {basis_vec(B, 0)})) == B.full_subspace());

  LeibnizAlgebra R = r2();
  Subspace e1 = span_of(R, {basis_vec(R, 0)});
  CHECK(centralizer(R, e1) == e1);

  LeibnizAlgebra H = h3();
  CHECK(centralizer(H, span_of(H, {basis_vec(H, 2)})) == H.full_subspace());
}

TEST_CASE("normalizer examples") {
  LeibnizAlgebra R = r2();
  // ideals have full normalizer
  CHECK(normalizer(R, span_of(R, {basis_vec(R, 0)})) == R.full_subspace());
  Subspace e2r = span_of(R, {basis_vec(R, 1)});
  CHECK(normalizer(R, e2r) == e2r);

  LeibnizAlgebra A = aff2();
  Subspace e2 = span_of(A, {basis_vec(A, 1)});
  CHECK(normalizer(A, e2) == e2);
}

TEST_CASE("centralizer and normalizer of subalgebras are subalgebras") {
  for (auto& L : {r2(), aff2(), h3(), so3()}) {
    for (int i = 0; i < L.dim(); ++i) {
      Subspace u = span_of(L, {basis_vec(L, i)});
      if (!is_subalgebra(L, u)) continue;
      CHECK(is_subalgebra(L, centralizer(L, u)));
      CHECK(is_subalgebra(L, normalizer(L, u)));
      CHECK(normalizer(L, u).contains(u));
    }
  }
}

TEST_CASE("ideal_closure examples") {
  LeibnizAlgebra A = aff2();
  Subspace e1 = span_of(A, {basis_vec(A, 0)});
  CHECK(ideal_closure(A, e1) == e1);
  CHECK(ideal_closure(A, span_of(A, {basis_vec(A, 1)})) == A.full_subspace());
}

TEST_CASE("core examples") {
  LeibnizAlgebra A = aff2();
  CHECK(core(A, A.full_subspace()) == A.full_subspace());
  CHECK(core(A, span_of(A, {basis_vec(A, 1)})).is_zero());
  LeibnizAlgebra R = r2();
  Subspace e1 = span_of(R, {basis_vec(R, 0)});
  CHECK(core(R, e1) == e1);
  LeibnizAlgebra S = so3();
  CHECK_THROWS_AS(core(S, span_of(S, {basis_vec(S, 0), basis_vec(S, 1)})), precondition_error);
}

TEST_CASE("quotient examples") {
  LeibnizAlgebra R = r2();
  auto q0 = quotient(R, R.zero_subspace());
  CHECK(q0.algebra.dim() == 2);
  CHECK(q0.algebra.c(1, 0, 0) == Scalar::one(Q));

  auto q = quotient(R, span_of(R, {basis_vec(R, 0)}));
  CHECK(q.algebra.dim() == 1);
  CHECK(q.algebra.c(0, 0, 0).is_zero());
  CHECK(check_leibniz(q.algebra).empty());
  CHECK(q.projection * q.section == Matrix::identity(1, Q));

  LeibnizAlgebra H = h3();
  auto qh = quotient(H, span_of(H, {basis_vec(H, 2)}));
  CHECK(qh.algebra.dim() == 2);
  CHECK(derived_subalgebra(qh.algebra).is_zero());

  CHECK_THROWS_AS(quotient(r2(), span_of(R, {basis_vec(R, 1)})), precondition_error);

  // (L/A)^2 = (L^2 + A)/A
  for (auto& L : {r2(), aff2(), h3()}) {
    Subspace a = ideal_closure(L, span_of(L, {basis_vec(L, 0)}));
    auto qq = quotient(L, a);
    Subspace lhs = derived_subalgebra(qq.algebra);
    Subspace rhs = apply(qq.projection, sum(derived_subalgebra(L), a));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("restrict examples") {
  LeibnizAlgebra A = aff2();
  auto rl = restrict_algebra(A, A.full_subspace());
  CHECK(rl.algebra.dim() == 2);
  CHECK(rl.algebra.c(1, 0, 0) == Scalar::one(Q));

  auto r1 = restrict_algebra(A, span_of(A, {basis_vec(A, 1)}));
  CHECK(r1.algebra.dim() == 1);
  CHECK(r1.algebra.c(0, 0, 0).is_zero());
  CHECK(check_leibniz(r1.algebra).empty());

  LeibnizAlgebra N = n2();
  auto rb = restrict_algebra(N, span_of(N, {basis_vec(N, 1)}));
  CHECK(rb.algebra.dim() == 1);
  CHECK(rb.algebra.c(0, 0, 0).is_zero());
}

TEST_CASE("leib_ideal examples") {
  CHECK(leib_ideal(aff2()).is_zero());
  CHECK(leib_ideal(h3()).is_zero());
  LeibnizAlgebra N = n2();
  CHECK(leib_ideal(N) == span_of(N, {basis_vec(N, 1)}));
  LeibnizAlgebra R = r2();
  CHECK(leib_ideal(R) == span_of(R, {basis_vec(R, 0)}));

  // Leib is an ideal, left-annihilates L, and the quotient is Lie
  for (auto& L : {n2(), r2(), h3()}) {
    Subspace leib = leib_ideal(L);
    CHECK(is_ideal(L, leib));
    CHECK(product_space(L, leib, L.full_subspace()).is_zero());
    auto q = quotient(L, leib);
    for (int i = 0; i < q.algebra.dim(); ++i)
      for (int j = 0; j < q.algebra.dim(); ++j) {
        Vec ij = q.algebra.bracket(unit_vec(q.algebra.dim(), i, Q), unit_vec(q.algebra.dim(), j, Q));
        Vec ji = q.algebra.bracket(unit_vec(q.algebra.dim(), j, Q), unit_vec(q.algebra.dim(), i, Q));
        CHECK(ij == vec_neg(ji));
      }
  }
}

TEST_CASE("quotient then restrict round-trip on a split extension") {
  // R2 = span(e1) + span(e2), A = span(e1) ideal, M = span(e2) complement
  LeibnizAlgebra R = r2();
  Subspace a = span_of(R, {basis_vec(R, 0)});
  Subspace m = span_of(R, {basis_vec(R, 1)});
  auto q = quotient(R, a);
  auto rm = restrict_algebra(R, m);
  REQUIRE(q.algebra.dim() == rm.algebra.dim());
  // projection maps M isomorphically; structure constants agree under it
  for (int i = 0; i < rm.algebra.dim(); ++i)
    for (int j = 0; j < rm.algebra.dim(); ++j) {
      Vec mi = rm.embedding.col(i), mj = rm.embedding.col(j);
      Vec lhs = q.projection * R.bracket(mi, mj);
      Vec rhs = q.algebra.bracket(q.projection * mi, q.projection * mj);
      CHECK(lhs == rhs);
    }
}
