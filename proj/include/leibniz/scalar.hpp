#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace leibniz {

/// Thrown when an operation is called with arguments that violate its
/// preconditions (mixed fields, wrong dimensions, non-prime modulus, ...).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class FieldKind { rationals, prime_field };

inline bool is_prime(long p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Which exact field the scalars live in: Q, or GF(p) for a prime p.
struct FieldDescriptor {
  FieldKind kind = FieldKind::rationals;
  long p = 0;  // prime modulus, meaningful iff kind == prime_field

  static FieldDescriptor rationals() { return {FieldKind::rationals, 0}; }
  static FieldDescriptor gf(long p) {
    if (!is_prime(p)) throw precondition_error("GF(p) modulus must be prime, got " + std::to_string(p));
    return {FieldKind::prime_field, p};
  }

  bool is_rationals() const { return kind == FieldKind::rationals; }
  bool is_prime_field() const { return kind == FieldKind::prime_field; }
  long characteristic() const { return is_prime_field() ? p : 0; }

  bool operator==(const FieldDescriptor&) const = default;

  std::string str() const {
    return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p) + ")";
  }
};

inline void check_same_field(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (!(a == b))
    throw precondition_error("mixed fields: " + a.str() + " vs " + b.str());
}

/// Exact field element. Rationals are kept canonical (lowest terms, positive
/// denominator) by mpq; prime-field elements are residues in [0, p).
class Scalar {
 public:
  Scalar() : f_(FieldDescriptor::rationals()), v_(0) {}

  static Scalar zero(const FieldDescriptor& f) { return Scalar(f, mpq_class(0)); }
  static Scalar one(const FieldDescriptor& f) { return Scalar(f, mpq_class(1)); }

  static Scalar of(const FieldDescriptor& f, long value) {
    Scalar s(f, mpq_class(value));
    s.reduce();
    return s;
  }

  /// Accepts "int" or "num/den" over Q, a decimal integer over GF(p).
  static Scalar parse(const FieldDescriptor& f, const std::string& text) {
    if (text.empty()) throw precondition_error("empty scalar literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw precondition_error("bad scalar literal '" + text + "'");
    if (q.get_den() == 0) throw precondition_error("zero denominator in '" + text + "'");
    q.canonicalize();
    if (f.is_prime_field() && q.get_den() != 1)
      throw precondition_error("fractional literal '" + text + "' over " + f.str());
    Scalar s(f, q);
    s.reduce();
    return s;
  }

  const FieldDescriptor& field() const { return f_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// Underlying canonical rational (for GF(p): the residue as an integer).
  const mpq_class& value() const { return v_; }

  long to_long() const {
    if (f_.is_prime_field()) return static_cast<long>(v_.get_num().get_si());
    if (v_.get_den() != 1) throw precondition_error("non-integer scalar");
    return static_cast<long>(v_.get_num().get_si());
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    Scalar r(a.f_, a.v_ + b.v_);
    r.reduce();
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    Scalar r(a.f_, a.v_ - b.v_);
    r.reduce();
    return r;
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    Scalar r(a.f_, a.v_ * b.v_);
    r.reduce();
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    if (b.is_zero()) throw precondition_error("division by zero in " + a.f_.str());
    if (a.f_.is_rationals()) return Scalar(a.f_, a.v_ / b.v_);
    return a * b.inverse();
  }
  Scalar operator-() const {
    Scalar r(f_, -v_);
    r.reduce();
    return r;
  }
  Scalar inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero in " + f_.str());
    if (f_.is_rationals()) return Scalar(f_, 1 / v_);
    mpz_class inv;
    mpz_class mod(f_.p);
    if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), mod.get_mpz_t()) == 0)
      throw precondition_error("no inverse mod " + std::to_string(f_.p));
    return Scalar(f_, mpq_class(inv));
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  bool operator==(const Scalar& b) const { return f_ == b.f_ && v_ == b.v_; }

  /// Total order for deterministic canonical output; no algebraic meaning
  /// over GF(p).
  static int compare(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    return cmp(a.v_, b.v_);
  }

  std::string str() const {
    if (f_.is_prime_field() || v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  Scalar(FieldDescriptor f, mpq_class v) : f_(f), v_(std::move(v)) {}

  void reduce() {
    if (f_.is_prime_field()) {
      mpz_class r = v_.get_num() % f_.p;
      if (r < 0) r += f_.p;
      v_ = mpq_class(r);
    } else {
      v_.canonicalize();
    }
  }

  FieldDescriptor f_;
  mpq_class v_;
};

}  // namespace leibniz
