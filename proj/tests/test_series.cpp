#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas.hpp"
#include "leibniz/series.hpp"

using namespace leibniz;
using namespace atlas;

namespace {
const FieldDescriptor Q = FieldDescriptor::rationals();
}

TEST_CASE("derived series examples") {
  auto ab = derived_series(ab2());
  REQUIRE(ab.terms.size() == 2);
  CHECK(ab.terms[1].is_zero());
  CHECK(ab.stabilized);

  LeibnizAlgebra A = aff2();
  auto da = derived_series(A);
  REQUIRE(da.terms.size() == 3);
  CHECK(da.terms[1] == span_of(A, {basis_vec(A, 0)}));
  CHECK(da.terms[2].is_zero());

  LeibnizAlgebra H = h3();
  auto dh = derived_series(H);
  REQUIRE(dh.terms.size() == 3);
  CHECK(dh.terms[1] == span_of(H, {basis_vec(H, 2)}));
  CHECK(dh.terms[2].is_zero());
}

TEST_CASE("lower central series examples") {
  LeibnizAlgebra H = h3();
  auto lh = lower_central_series(H);
  REQUIRE(lh.terms.size() == 3);
  CHECK(lh.terms[1] == span_of(H, {basis_vec(H, 2)}));
  CHECK(lh.terms[2].is_zero());

  LeibnizAlgebra R = r2();
  auto lr = lower_central_series(R);
  CHECK(lr.last() == span_of(R, {basis_vec(R, 0)}));
  CHECK(lr.stabilized);

  CHECK(lower_central_series(ab2()).last().is_zero());
}

TEST_CASE("upper central series examples") {
  auto ab = upper_central_series(ab2());
  CHECK(ab.last().is_full());
  REQUIRE(ab.terms.size() == 2);

  LeibnizAlgebra H = h3();
  auto uh = upper_central_series(H);
  REQUIRE(uh.terms.size() == 3);
  CHECK(uh.terms[1] == span_of(H, {basis_vec(H, 2)}));
  CHECK(uh.terms[2].is_full());

  auto ur = upper_central_series(r2());
  CHECK(ur.last().is_zero());
}

TEST_CASE("nilpotency and solvability examples") {
  auto ab = is_nilpotent(ab2());
  CHECK(ab.nilpotent);
  CHECK(ab.cls == 1);
  auto h = is_nilpotent(h3());
  CHECK(h.nilpotent);
  CHECK(h.cls == 2);
  CHECK_FALSE(is_nilpotent(r2()).nilpotent);

  for (auto& L : {ab2(), n2(), r2(), aff2(), h3()}) CHECK(is_solvable(L));
  CHECK(is_solvable(LeibnizAlgebra(0, Q, "zero")));
  CHECK_FALSE(is_solvable(so3()));

  // nilpotent iff upper central series reaches L; classes agree
  for (auto& L : {ab2(), n2(), h3(), r2(), aff2()}) {
    auto nil = is_nilpotent(L);
    auto ucs = upper_central_series(L);
    CHECK(nil.nilpotent == ucs.last().is_full());
    if (nil.nilpotent) CHECK(static_cast<int>(ucs.terms.size()) - 1 == nil.cls);
  }
}

TEST_CASE("j_infinity examples") {
  auto jh = j_infinity(h3());
  CHECK(jh.j.is_zero());

  LeibnizAlgebra R = r2();
  auto jr = j_infinity(R);
  CHECK(jr.j == span_of(R, {basis_vec(R, 0)}));
  CHECK(jr.abelian);

  LeibnizAlgebra A = aff2();
  auto ja = j_infinity(A);
  CHECK(ja.j == span_of(A, {basis_vec(A, 0)}));
  CHECK(ja.abelian);

  // J = [L, J]
  for (auto& L : {r2(), aff2()}) {
    auto j = j_infinity(L);
    CHECK(product_space(L, L.full_subspace(), j.j) == j.j);
  }
}

TEST_CASE("char_p_guard examples") {
  CHECK(char_p_guard(r2()).ok);
  CHECK(char_p_guard(aff2()).ok);
  CHECK(char_p_guard(r2(FieldDescriptor::gf(3))).ok);

  // an algebra over GF(2) whose L^2 is H3-like (class 2) violates the guard
  FieldDescriptor f2 = FieldDescriptor::gf(2);
  LeibnizAlgebra L(4, f2, "t+h3");
  // t acts diagonally on x,y; {x,y,z} is a Heisenberg copy: [x,y]=z=[y,x] (char 2)
  L.set_c(1, 2, 3, Scalar::one(f2));
  L.set_c(2, 1, 3, Scalar::one(f2));
  L.set_c(0, 1, 1, Scalar::one(f2));
  L.set_c(1, 0, 1, Scalar::one(f2));
  L.set_c(0, 2, 2, Scalar::one(f2));
  L.set_c(2, 0, 2, Scalar::one(f2));
  REQUIRE(check_leibniz(L).empty());
  Subspace l2 = derived_subalgebra(L);
  REQUIRE(l2.dim() == 3);
  auto g = char_p_guard(L);
  CHECK_FALSE(g.ok);
  CHECK(g.cls == 2);
  CHECK_FALSE(g.infinite);
}

TEST_CASE("nilradical examples") {
  LeibnizAlgebra H = h3();
  auto nh = nilradical(H);
  CHECK(nh.certified);
  CHECK(nh.nilradical.is_full());

  LeibnizAlgebra R = r2();
  auto nr = nilradical(R);
  CHECK(nr.certified);
  CHECK(nr.nilradical == span_of(R, {basis_vec(R, 0)}));

  LeibnizAlgebra A = aff2();
  auto na = nilradical(A);
  CHECK(na.certified);
  CHECK(na.nilradical == span_of(A, {basis_vec(A, 0)}));

  // GF(p) path
  LeibnizAlgebra R3 = r2(FieldDescriptor::gf(3));
  auto nr3 = nilradical(R3);
  CHECK(nr3.certified);
  CHECK(nr3.nilradical == span_of(R3, {basis_vec(R3, 0)}));

  // L/N(L) is nilpotent for solvable L
  for (auto& L : {r2(), aff2(), n2()}) {
    auto n = nilradical(L);
    REQUIRE(n.certified);
    CHECK(is_nilpotent(quotient(L, n.nilradical).algebra).nilpotent);
  }
}

TEST_CASE("nilpotent_length examples") {
  auto ch = nilpotent_length(h3());
  CHECK(ch.certified);
  CHECK(ch.length == 1);

  LeibnizAlgebra R = r2();
  auto cr = nilpotent_length(R);
  CHECK(cr.certified);
  CHECK(cr.length == 2);
  REQUIRE(cr.chain.size() == 3);
  CHECK(cr.chain[1] == span_of(R, {basis_vec(R, 0)}));
  CHECK(cr.chain[2].is_full());
  for (auto& w : cr.factor_witness) CHECK(w.last().is_zero());

  auto ca = nilpotent_length(aff2());
  CHECK(ca.certified);
  CHECK(ca.length == 2);

  // every chain term is an ideal
  for (auto& s : cr.chain) CHECK(is_ideal(R, s));
}

TEST_CASE("radical examples") {
  for (auto& L : {r2(), aff2(), h3()}) CHECK(radical(L).is_full());

  CHECK(radical(so3()).is_zero());

  LeibnizAlgebra D = direct_sum(so3(), r2());
  Subspace rad = radical(D);
  CHECK(rad.dim() == 2);
  CHECK(rad == span_of(D, {basis_vec(D, 3), basis_vec(D, 4)}));

  CHECK_THROWS_AS(radical(r2(FieldDescriptor::gf(3))), precondition_error);
}

TEST_CASE("lower central series products and Lemma-1-style nilpotency") {
  // [L^a, L^b] <= L^{a+b}
  for (auto& L : {r2(), aff2(), h3(), n2()}) {
    auto lcs = lower_central_series(L);
    auto term = [&](size_t k) -> const Subspace& {
      return lcs.terms[std::min(k - 1, lcs.terms.size() - 1)];
    };
    for (size_t a = 1; a <= 3; ++a)
      for (size_t b = 1; b <= 3; ++b)
        CHECK(term(a + b).contains(product_space(L, term(a), term(b))));
  }
  // for solvable L and x in L^2, left_mult(x) is nilpotent
  for (auto& L : {r2(), aff2(), h3(), n2()}) {
    Subspace l2 = derived_subalgebra(L);
    for (int i = 0; i < l2.dim(); ++i) {
      Matrix m = L.left_mult(l2.basis_row(i));
      CHECK(m.pow(L.dim()).is_zero());
    }
  }
}
