#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "atlas.hpp"
#include "leibniz/oracle.hpp"

using namespace leibniz;
using namespace atlas;

namespace {
const FieldDescriptor F2 = FieldDescriptor::gf(2);
const FieldDescriptor F3 = FieldDescriptor::gf(3);
}  // namespace

TEST_CASE("enum_subspaces counts match Gaussian binomials") {
  CHECK(enum_subspaces(2, 1, F2).size() == 3);
  CHECK(enum_subspaces(3, 1, F3).size() == 13);
  CHECK(enum_subspaces(3, 0, F3).size() == 1);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(mpz_class(enum_subspaces(n, k, F3).size()) == gaussian_binomial(n, k, 3));
  CHECK_THROWS_AS(enum_subspaces(6, 2, F2), budget_error);
  CHECK_THROWS_AS(enum_subspaces(2, 1, FieldDescriptor::rationals()), budget_error);
}

TEST_CASE("subalgebra and ideal enumeration examples") {
  LeibnizAlgebra B = ab2(F2);
  CHECK(enum_subalgebras(B).size() == 5);  // all subspaces of GF(2)^2

  LeibnizAlgebra R3 = r2(F3);
  auto subs = enum_subalgebras(R3);
  // 0, span(e1), span(e2), L
  REQUIRE(subs.size() == 4);
  auto ideals = enum_ideals(R3);
  REQUIRE(ideals.size() == 3);
  CHECK(ideals[0].is_zero());
  CHECK(ideals[1] == span_of(R3, {basis_vec(R3, 0)}));
  CHECK(ideals[2].is_full());

  CHECK_THROWS_AS(enum_subalgebras(r2(FieldDescriptor::gf(5))), budget_error);
}

TEST_CASE("oracle cross-checks: core and minimal ideals agree with enumeration") {
  for (auto& L : {r2(F3), aff2(F3), h3(F2), n2(F2)}) {
    auto ideals = enum_ideals(L);
    // core(L,U) is the largest enumerated ideal inside U, for subalgebras U
    for (const Subspace& u : enum_subalgebras(L)) {
      Subspace c = core(L, u);
      Subspace best = L.zero_subspace();
      for (const Subspace& i : ideals)
        if (u.contains(i) && i.dim() >= best.dim()) best = i;
      CHECK(c == best);
      CHECK(is_ideal(L, c));
    }
    // minimal_ideals = minimal elements of enum_ideals
    auto mi = minimal_ideals(L);
    REQUIRE(mi.complete);
    std::vector<Subspace> expected;
    for (const Subspace& i : ideals) {
      if (i.is_zero()) continue;
      bool minimal = true;
      for (const Subspace& j : ideals)
        if (!j.is_zero() && j.dim() < i.dim() && i.contains(j)) minimal = false;
      if (minimal) expected.push_back(i);
    }
    std::sort(expected.begin(), expected.end(), subspace_less);
    CHECK(mi.ideals == expected);
  }
}

TEST_CASE("enum_complements examples") {
  LeibnizAlgebra A3 = aff2(F3);
  auto comps = enum_complements(A3, span_of(A3, {basis_vec(A3, 0)}));
  CHECK(comps.size() == 3);  // span(e2 + t e1), t in GF(3)

  LeibnizAlgebra R2f = r2(F2);
  auto rcomps = enum_complements(R2f, span_of(R2f, {basis_vec(R2f, 0)}));
  REQUIRE(rcomps.size() == 1);
  CHECK(rcomps[0] == span_of(R2f, {basis_vec(R2f, 1)}));
}

TEST_CASE("enum_cartans examples") {
  LeibnizAlgebra H = h3(F2);
  auto ch = enum_cartans(H);
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].is_full());

  LeibnizAlgebra A3 = aff2(F3);
  CHECK(enum_cartans(A3).size() == 3);

  LeibnizAlgebra R3 = r2(F3);
  auto cr = enum_cartans(R3);
  REQUIRE(cr.size() == 1);
  CHECK(cr[0] == span_of(R3, {basis_vec(R3, 1)}));
}

TEST_CASE("inner_group examples") {
  // [A, L] = 0: group is trivial
  LeibnizAlgebra H = h3(F2);
  auto g0 = inner_group(H, span_of(H, {basis_vec(H, 2)}));
  CHECK(g0.size() == 1);

  LeibnizAlgebra A3 = aff2(F3);
  auto g = inner_group(A3, span_of(A3, {basis_vec(A3, 0)}));
  CHECK(g.size() == 3);  // {I + t L_{e1} : t in GF(3)}

  LeibnizAlgebra R2f = r2(F2);
  auto gr = inner_group(R2f, span_of(R2f, {basis_vec(R2f, 0)}));
  CHECK(gr.size() == 1);  // L_{e1} = 0
}

TEST_CASE("orbit_verdict examples") {
  LeibnizAlgebra A3 = aff2(F3);
  Subspace a = span_of(A3, {basis_vec(A3, 0)});
  Subspace u = span_of(A3, {basis_vec(A3, 1)});
  Subspace v = span_of(A3, {vec_add(basis_vec(A3, 1), basis_vec(A3, 0))});
  auto same = orbit_verdict(A3, a, u, u);
  CHECK(same.conjugate);
  CHECK(same.element->is_zero() == false);
  auto ov = orbit_verdict(A3, a, u, v);
  REQUIRE(ov.conjugate);
  CHECK(apply(*ov.element, u) == v);

  LeibnizAlgebra R2f = r2(F2);
  auto nv = orbit_verdict(R2f, R2f.full_subspace(), span_of(R2f, {basis_vec(R2f, 0)}),
                          span_of(R2f, {basis_vec(R2f, 1)}));
  CHECK_FALSE(nv.conjugate);
}

TEST_CASE("solver verdicts agree with oracle orbits on complements") {
  for (auto& L : {aff2(F3), aff2(F2), r2(F2), r2(F3)}) {
    auto mi = minimal_ideals(L);
    REQUIRE(mi.complete);
    for (const Subspace& a : mi.ideals) {
      if (!product_space(L, a, a).is_zero()) continue;
      auto group = inner_group(L, a);
      auto comps = enum_complements(L, a);
      for (size_t i = 0; i < comps.size(); ++i)
        for (size_t j = 0; j < comps.size(); ++j) {
          auto verdict = conjugate_complements(L, a, comps[i], comps[j]);
          auto oracle = orbit_verdict(group, comps[i], comps[j]);
          if (std::holds_alternative<ConjugacyCertificate>(verdict)) {
            CHECK(oracle.conjugate);
            auto& cert = std::get<ConjugacyCertificate>(verdict);
            CHECK(apply(cert.automorphism.matrix, comps[i]) == comps[j]);
          } else {
            CHECK_FALSE(oracle.conjugate);
          }
        }
    }
  }
}

TEST_CASE("Theorem 1 style check on a primitive instance") {
  // Aff2 over GF(3): socle span(e1) is self-centralizing; complements exist
  // and form a single orbit under I(L, Soc(L)).
  LeibnizAlgebra A3 = aff2(F3);
  auto soc = socle(A3);
  REQUIRE(soc.complete);
  CHECK(centralizer(A3, soc.socle) == soc.socle);
  auto comps = enum_complements(A3, soc.socle);
  REQUIRE(!comps.empty());
  auto group = inner_group(A3, soc.socle);
  for (size_t i = 1; i < comps.size(); ++i) CHECK(orbit_verdict(group, comps[0], comps[i]).conjugate);
}
