#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/conj.hpp"

namespace leibniz {

/// Oracle refuses over-budget inputs rather than degrading.
struct budget_error : precondition_error {
  using precondition_error::precondition_error;
};

struct EnumerationBudget {
  int max_dim = 5;
  std::vector<long> fields = {2, 3};
  long group_cap = 1000000;  // element-count limit for group closures

  void check(const LeibnizAlgebra& L) const {
    if (!L.field().is_prime_field())
      throw budget_error("oracle enumeration is defined over prime fields only");
    if (L.dim() > max_dim)
      throw budget_error("oracle: dimension " + std::to_string(L.dim()) + " over budget");
    bool ok = false;
    for (long p : fields) ok = ok || p == L.field().p;
    if (!ok) throw budget_error("oracle: field " + L.field().str() + " not in budget");
  }
};

inline std::vector<Subspace> enum_subspaces(int n, int k, const FieldDescriptor& f,
                                            const EnumerationBudget& budget = {}) {
  if (!f.is_prime_field()) throw budget_error("oracle enumeration needs a prime field");
  if (n > budget.max_dim) throw budget_error("oracle: ambient dimension over budget");
  std::vector<Subspace> out = enum_subspaces_dim(n, k, f);
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

inline std::vector<Subspace> enum_subalgebras(const LeibnizAlgebra& L,
                                              const EnumerationBudget& budget = {}) {
  budget.check(L);
  std::vector<Subspace> out;
  for (const Subspace& s : enum_all_subspaces(L.dim(), L.field()))
    if (is_subalgebra(L, s)) out.push_back(s);
  return out;
}

inline std::vector<Subspace> enum_ideals(const LeibnizAlgebra& L,
                                         const EnumerationBudget& budget = {}) {
  budget.check(L);
  std::vector<Subspace> out;
  for (const Subspace& s : enum_all_subspaces(L.dim(), L.field()))
    if (is_ideal(L, s)) out.push_back(s);
  return out;
}

/// Proper subalgebras not properly contained in any proper subalgebra.
inline std::vector<Subspace> enum_maximal_subalgebras(const LeibnizAlgebra& L,
                                                      const EnumerationBudget& budget = {}) {
  std::vector<Subspace> subs = enum_subalgebras(L, budget);
  std::vector<Subspace> out;
  for (const Subspace& s : subs) {
    if (s.is_full()) continue;
    bool maximal = true;
    for (const Subspace& t : subs) {
      if (t.is_full() || t.dim() <= s.dim()) continue;
      if (t.contains(s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

/// All subalgebras M with M + A = L and M cap A = 0.
inline std::vector<Subspace> enum_complements(const LeibnizAlgebra& L, const Subspace& a,
                                              const EnumerationBudget& budget = {}) {
  budget.check(L);
  if (!is_ideal(L, a)) throw precondition_error("enum_complements: A must be an ideal");
  std::vector<Subspace> out;
  for (const Subspace& s : enum_subspaces_dim(L.dim(), L.dim() - a.dim(), L.field()))
    if (is_subalgebra(L, s) && intersect(s, a).is_zero() && sum(s, a).is_full())
      out.push_back(s);
  std::sort(out.begin(), out.end(), subspace_less);
  return out;
}

inline std::vector<Subspace> enum_cartans(const LeibnizAlgebra& L,
                                          const EnumerationBudget& budget = {}) {
  budget.check(L);
  std::vector<Subspace> out;
  for (const Subspace& s : enum_all_subspaces(L.dim(), L.field()))
    if (is_cartan(L, s)) out.push_back(s);
  return out;
}

/// BFS closure of {exp(L_a) : a in A, exp L_a defined} under multiplication;
/// the whole finite group I(L, A) as matrices, identity first, deterministic
/// order. Vectors whose left multiplication is not nilpotent (or has index
/// above p) have no exponential and contribute no generator.
inline std::vector<Matrix> inner_group(const LeibnizAlgebra& L, const Subspace& a,
                                       const EnumerationBudget& budget = {}) {
  budget.check(L);
  std::vector<Matrix> gens;
  long total = vector_space_size(a.dim(), L.field().p);
  Matrix emb = a.embedding();
  for (long code = 1; code < total; ++code) {
    Vec v = emb * vector_of_code(code, a.dim(), L.field());
    std::optional<int> idx = nilpotency_index(L.left_mult(v));
    if (!idx || *idx > L.field().p) continue;
    gens.push_back(exp_left(L, v, a).matrix);
  }
  std::vector<Matrix> group{Matrix::identity(L.dim(), L.field())};
  std::map<std::string, bool> seen{{group[0].str(), true}};
  std::deque<size_t> queue{0};
  while (!queue.empty()) {
    size_t cur = queue.front();
    queue.pop_front();
    for (const Matrix& g : gens) {
      Matrix next = group[cur] * g;
      std::string key = next.str();
      if (seen.count(key)) continue;
      if (static_cast<long>(group.size()) >= budget.group_cap)
        throw budget_error("inner_group: closure cap exceeded");
      seen[key] = true;
      queue.push_back(group.size());
      group.push_back(std::move(next));
    }
  }
  return group;
}

struct OrbitVerdict {
  bool conjugate = false;
  std::optional<Matrix> element;  // a group element mapping U onto V when conjugate
};

/// Exhaustive conjugacy check under a precomputed group.
inline OrbitVerdict orbit_verdict(const std::vector<Matrix>& group, const Subspace& u,
                                  const Subspace& v) {
  for (const Matrix& g : group)
    if (apply(g, u) == v) return {true, g};
  return {false, std::nullopt};
}

inline OrbitVerdict orbit_verdict(const LeibnizAlgebra& L, const Subspace& a, const Subspace& u,
                                  const Subspace& v, const EnumerationBudget& budget = {}) {
  return orbit_verdict(inner_group(L, a, budget), u, v);
}

}  // namespace leibniz
