#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "leibniz/ideals.hpp"

namespace leibniz {

struct FittingPair {
  Subspace null_part;        // generalized kernel of the operator
  Subspace invertible_part;  // image of the n-th power
  Matrix op;
};

/// Fitting decomposition of a square matrix: null = ker(M^n),
/// invertible = im(M^n). Construction verifies every invariant.
inline FittingPair fitting(const Matrix& m) {
  if (m.rows() != m.cols()) throw precondition_error("fitting of a non-square matrix");
  int n = m.rows();
  Matrix mn = m.pow(n);
  FittingPair p{kernel(mn), image(mn), m};
  if (p.null_part.dim() + p.invertible_part.dim() != n)
    throw std::logic_error("fitting: dimensions do not add up");
  if (!intersect(p.null_part, p.invertible_part).is_zero())
    throw std::logic_error("fitting: parts intersect");
  if (!p.null_part.contains(apply(m, p.null_part)) ||
      !p.invertible_part.contains(apply(m, p.invertible_part)))
    throw std::logic_error("fitting: parts not invariant");
  if (!apply(detail::restrict_operator(m, p.null_part).pow(n), Subspace::full(p.null_part.dim(), m.field())).is_zero())
    throw std::logic_error("fitting: operator not nilpotent on null part");
  if (p.invertible_part.dim() > 0 &&
      rank(detail::restrict_operator(m, p.invertible_part)) != p.invertible_part.dim())
    throw std::logic_error("fitting: operator not invertible on invertible part");
  return p;
}

/// Fitting null component of left_mult(x) acting on an invariant subspace S.
inline Subspace fitting_null(const LeibnizAlgebra& L, const Vec& x, const Subspace& s) {
  Matrix lx = L.left_mult(x);
  if (!s.contains(apply(lx, s))) throw precondition_error("fitting_null: S not invariant under L_x");
  Matrix t = detail::restrict_operator(lx, s);
  Subspace null_coords = kernel(t.pow(s.dim()));
  return from_subalgebra_coords(s, null_coords);
}

/// Deterministic stream of regular-element candidates. Over GF(p): all
/// nonzero vectors in counter order. Over Q: integer vectors by increasing
/// max-norm height; within a height block by number of nonzero entries,
/// then position of the support, then per-position values ordered
/// h, h-1, ..., 1, -1, ..., -h (first support entry positive).
class RegularCandidates {
 public:
  RegularCandidates(int n, const FieldDescriptor& f, int max_height = 5)
      : n_(n), f_(f), max_height_(max_height) {
    if (f_.is_prime_field()) {
      total_codes_ = vector_space_size(n_, f_.p);
    } else {
      height_ = 1;
      support_size_ = 1;
      init_support();
    }
  }

  std::optional<Vec> next() {
    if (f_.is_prime_field()) {
      if (code_ + 1 >= total_codes_) return std::nullopt;
      ++code_;
      return vector_of_code(code_, n_, f_);
    }
    while (height_ <= max_height_) {
      if (auto v = next_in_block()) return v;
    }
    return std::nullopt;
  }

 private:
  // --- Q enumeration state ---
  void init_support() {
    support_.resize(static_cast<size_t>(support_size_));
    std::iota(support_.begin(), support_.end(), 0);
    init_values();
  }
  void init_values() {
    value_idx_.assign(static_cast<size_t>(support_size_), 0);
    exhausted_values_ = false;
  }
  // ordered value list for one support slot:
  // first slot h, h-1, ..., 1; others h, ..., 1, -1, ..., -h
  long value_at(int idx) const {
    if (idx < height_) return height_ - idx;
    return -(idx - height_ + 1);
  }
  int values_count(int slot) const { return slot == 0 ? height_ : 2 * height_; }

  std::optional<Vec> next_in_block() {
    while (!exhausted_values_ || advance_support()) {
      if (exhausted_values_) continue;  // support advanced, values reset
      // build candidate from current state, then advance the odometer
      std::vector<long> vals(static_cast<size_t>(support_size_));
      for (int i = 0; i < support_size_; ++i)
        vals[static_cast<size_t>(i)] = value_at(value_idx_[static_cast<size_t>(i)]);
      advance_values();
      long maxabs = 0, g = 0;
      for (long v : vals) {
        maxabs = std::max(maxabs, std::abs(v));
        g = std::gcd(g, std::abs(v));
      }
      if (maxabs != height_ || g != 1) continue;
      Vec out = zero_vec(n_, f_);
      for (int i = 0; i < support_size_; ++i)
        out[static_cast<size_t>(support_[static_cast<size_t>(i)])] =
            Scalar::of(f_, vals[static_cast<size_t>(i)]);
      return out;
    }
    // block finished: next support size or height
    if (support_size_ < n_) {
      ++support_size_;
      init_support();
    } else {
      ++height_;
      support_size_ = 1;
      if (height_ <= max_height_) init_support();
    }
    return std::nullopt;
  }

  void advance_values() {
    int slot = support_size_ - 1;
    while (slot >= 0) {
      if (++value_idx_[static_cast<size_t>(slot)] < values_count(slot)) return;
      value_idx_[static_cast<size_t>(slot)] = 0;
      --slot;
    }
    exhausted_values_ = true;
  }

  bool advance_support() {
    int i = support_size_ - 1;
    while (i >= 0 && support_[static_cast<size_t>(i)] == n_ - support_size_ + i) --i;
    if (i < 0) return false;
    ++support_[static_cast<size_t>(i)];
    for (int j = i + 1; j < support_size_; ++j)
      support_[static_cast<size_t>(j)] = support_[static_cast<size_t>(j - 1)] + 1;
    init_values();
    return true;
  }

  int n_;
  FieldDescriptor f_;
  int max_height_;
  // GF(p)
  long code_ = 0;
  long total_codes_ = 0;
  // Q
  int height_ = 0;
  int support_size_ = 0;
  std::vector<int> support_;
  std::vector<int> value_idx_;
  bool exhausted_values_ = true;
};

/// Randomized candidates for the harness's seeded mode.
inline std::vector<Vec> random_candidates(int n, const FieldDescriptor& f, uint64_t seed,
                                          int count) {
  std::mt19937_64 rng(seed);
  std::vector<Vec> out;
  while (static_cast<int>(out.size()) < count) {
    Vec v = zero_vec(n, f);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      long e = f.is_prime_field() ? static_cast<long>(rng() % static_cast<uint64_t>(f.p))
                                  : static_cast<long>(rng() % 5) - 2;
      v[static_cast<size_t>(i)] = Scalar::of(f, e);
      nonzero = nonzero || e != 0;
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

/// Cartan recognition: nilpotent subalgebra equal to its own normalizer.
inline bool is_cartan(const LeibnizAlgebra& L, const Subspace& h) {
  if (!is_subalgebra(L, h)) return false;
  if (!is_nilpotent(restrict_algebra(L, h).algebra).nilpotent) return false;
  return normalizer(L, h) == h;
}

struct FindCartanOptions {
  int max_height = 5;            // Q candidate budget
  long max_candidates = 200000;  // hard cap on candidates examined
};

/// Cartan subalgebra search: Fitting null components of deterministic
/// regular candidates, with Engel-style descent into the smallest Fitting
/// null subalgebra when the direct sweep fails. Never returns an unverified
/// subspace.
inline std::optional<Subspace> find_cartan(const LeibnizAlgebra& L,
                                           const FindCartanOptions& opt = {}) {
  if (L.dim() == 0) return L.full_subspace();
  if (is_nilpotent(L).nilpotent) return L.full_subspace();
  RegularCandidates cands(L.dim(), L.field(), opt.max_height);
  std::optional<Subspace> smallest;
  long seen = 0;
  while (auto x = cands.next()) {
    if (++seen > opt.max_candidates) break;
    Subspace h = fitting_null(L, *x, L.full_subspace());
    if (h.is_full()) continue;  // L_x nilpotent tells us nothing here
    if (is_cartan(L, h)) return h;
    if (is_subalgebra(L, h) && (!smallest || h.dim() < smallest->dim())) smallest = h;
  }
  if (smallest) {
    auto sub = restrict_algebra(L, *smallest);
    if (auto c = find_cartan(sub.algebra, opt)) {
      Subspace mapped = from_subalgebra_coords(*smallest, *c);
      if (is_cartan(L, mapped)) return mapped;
    }
  }
  return std::nullopt;
}

/// Seeded variant for the harness: random candidates first, deterministic
/// sweep as fallback; used to find a second, independently chosen Cartan.
inline std::optional<Subspace> find_cartan_seeded(const LeibnizAlgebra& L, uint64_t seed,
                                                  const FindCartanOptions& opt = {}) {
  if (L.dim() == 0 || is_nilpotent(L).nilpotent) return L.full_subspace();
  for (const Vec& x : random_candidates(L.dim(), L.field(), seed, 64)) {
    Subspace h = fitting_null(L, x, L.full_subspace());
    if (h.is_full()) continue;
    if (is_cartan(L, h)) return h;
  }
  return find_cartan(L, opt);
}

struct ChainCertificate {
  // chain[0] = A, each term maximal and self-normalizing in the next,
  // chain.back() = L
  std::vector<Subspace> chain;
};

enum class InMStatus { yes, no, indeterminate };

struct InMResult {
  InMStatus status = InMStatus::indeterminate;
  ChainCertificate cert;
  std::string note;
};

namespace detail {

/// normalizer of B computed inside the subalgebra C (ambient coordinates)
inline Subspace normalizer_in(const LeibnizAlgebra& L, const Subspace& c, const Subspace& b) {
  return intersect(c, normalizer(L, b));
}

inline bool chain_search_gf(const LeibnizAlgebra& L, const std::vector<Subspace>& subalgebras,
                            const Subspace& a, const Subspace& cur, std::vector<Subspace>& chain,
                            std::map<std::string, bool>& memo) {
  if (cur == a) return true;
  std::string key = cur.basis().str();
  auto it = memo.find(key);
  if (it != memo.end() && !it->second) return false;
  for (const Subspace& b : subalgebras) {
    if (!(b.dim() < cur.dim()) || !cur.contains(b) || !b.contains(a)) continue;
    // maximal in cur?
    bool maximal = true;
    for (const Subspace& d : subalgebras)
      if (d.dim() > b.dim() && d.dim() < cur.dim() && cur.contains(d) && d.contains(b)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    if (!(normalizer_in(L, cur, b) == b)) continue;
    if (chain_search_gf(L, subalgebras, a, b, chain, memo)) {
      chain.push_back(cur);
      return true;
    }
  }
  memo[key] = false;
  return false;
}

inline bool chain_search_q(const LeibnizAlgebra& L, const Subspace& cur,
                           std::vector<Subspace>& chain, int depth_left) {
  if (cur.is_full()) {
    chain.push_back(cur);
    return true;
  }
  if (depth_left <= 0) return false;
  // candidate one-dimension-up extensions: basis vectors and small integer
  // combinations, deduplicated modulo cur
  std::vector<Subspace> nexts;
  RegularCandidates cands(L.dim(), L.field(), 2);
  long budget = 4000;
  while (auto v = cands.next()) {
    if (--budget < 0) break;
    if (cur.member(*v)) continue;
    std::vector<Vec> rows = cur.basis_rows();
    rows.push_back(*v);
    Subspace ext = canonical_span(rows, L.dim(), L.field());
    if (std::find(nexts.begin(), nexts.end(), ext) != nexts.end()) continue;
    if (!is_subalgebra(L, ext)) continue;
    nexts.push_back(ext);
  }
  for (const Subspace& ext : nexts) {
    // codimension-1 step: maximality is automatic; need self-normalizing
    if (!(normalizer_in(L, ext, cur) == cur)) continue;
    if (chain_search_q(L, ext, chain, depth_left - 1)) {
      chain.push_back(cur);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Membership in M(L): nilpotent subalgebras joined to L by a chain, each
/// term maximal and self-normalizing in the next. Exhaustive over GF(p);
/// bounded one-dimension-up search over Q (indeterminate when inconclusive).
inline InMResult in_M(const LeibnizAlgebra& L, const Subspace& a,
                      long gf_budget = 30000) {
  if (!is_subalgebra(L, a)) throw precondition_error("in_M: A is not a subalgebra");
  InMResult res;
  if (!is_nilpotent(restrict_algebra(L, a).algebra).nilpotent) {
    res.status = InMStatus::no;
    res.note = "A is not nilpotent";
    return res;
  }
  if (a.is_full()) {
    res.status = InMStatus::yes;
    res.cert.chain = {a};
    return res;
  }
  if (normalizer(L, a) == L.full_subspace()) {
    // every candidate next term normalizes A, so no chain can start
    res.status = InMStatus::no;
    res.note = "normalizer of A is all of L";
    return res;
  }
  mpz_class lattice_size = 0;
  if (L.field().is_prime_field())
    for (int k = 0; k <= L.dim(); ++k)
      lattice_size += gaussian_binomial(L.dim(), k, L.field().p);
  if (L.field().is_prime_field() && lattice_size <= gf_budget) {
    std::vector<Subspace> subs;
    for (const Subspace& s : enum_all_subspaces(L.dim(), L.field()))
      if (is_subalgebra(L, s)) subs.push_back(s);
    std::vector<Subspace> chain{a};
    std::map<std::string, bool> memo;
    if (detail::chain_search_gf(L, subs, a, L.full_subspace(), chain, memo)) {
      res.status = InMStatus::yes;
      res.cert.chain = std::move(chain);
    } else {
      res.status = InMStatus::no;
      res.note = "exhaustive chain search failed";
    }
    return res;
  }
  std::vector<Subspace> chain;
  if (detail::chain_search_q(L, a, chain, L.dim())) {
    std::reverse(chain.begin(), chain.end());  // recursion pushed top-down
    res.status = InMStatus::yes;
    res.cert.chain = std::move(chain);
    return res;
  }
  res.status = InMStatus::indeterminate;
  res.note = "bounded chain search inconclusive";
  return res;
}

struct FittingCoreResult {
  Subspace core;
  bool self_normalizing = false;
};

/// K = intersection of the Fitting null components of L_x on S over a basis
/// of the nilpotent subalgebra D; contains D.
inline FittingCoreResult fitting_core(const LeibnizAlgebra& L, const Subspace& d,
                                      const Subspace& s) {
  if (!s.contains(d)) throw precondition_error("fitting_core: D not inside S");
  Subspace k = s;
  for (int i = 0; i < d.dim(); ++i) k = intersect(k, fitting_null(L, d.basis_row(i), s));
  if (!k.contains(d)) throw std::logic_error("fitting_core: K must contain D");
  return {k, normalizer(L, k) == k};
}

}  // namespace leibniz
