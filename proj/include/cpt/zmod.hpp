#pragma once

/**
 * @file zmod.hpp
 * Residue arithmetic over Z_n and the affine maps used throughout:
 * plain affine maps e^u.v on Z_n and dual-number affine maps on
 * Z_n[e] = { a + e.b : e^2 = 0 }.
 */

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cpt {

/** A modulus n >= 2. */
class Modulus {
 public:
  explicit Modulus(std::int64_t n) : n_(n) {
    if (n < 2) throw std::invalid_argument("Modulus: n must be >= 2");
  }

  std::int64_t value() const { return n_; }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.n_ == b.n_; }
  friend bool operator!=(const Modulus& a, const Modulus& b) { return a.n_ != b.n_; }

 private:
  std::int64_t n_;
};

// Canonical representative of v mod n in [0, n).
std::int64_t mod_reduce(std::int64_t v, std::int64_t n);

// Inverse of v mod n; throws std::domain_error when gcd(v, n) != 1.
std::int64_t mod_inverse(std::int64_t v, std::int64_t n);

/** An element of Z_n, stored as its canonical representative in [0, n). */
class Residue {
 public:
  Residue(std::int64_t value, Modulus m) : v_(mod_reduce(value, m.value())), m_(m) {}

  std::int64_t value() const { return v_; }
  Modulus modulus() const { return m_; }
  std::int64_t mod() const { return m_.value(); }

  bool is_unit() const;
  Residue inverse() const;  // throws std::domain_error if not a unit

  Residue operator+(const Residue& o) const { return {v_ + same(o).v_, m_}; }
  Residue operator-(const Residue& o) const { return {v_ - same(o).v_, m_}; }
  Residue operator*(const Residue& o) const { return {v_ * same(o).v_, m_}; }
  Residue operator-() const { return {-v_, m_}; }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }
  // Ordering assumes equal moduli; used for canonical sorting only.
  friend bool operator<(const Residue& a, const Residue& b) { return a.v_ < b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  const Residue& same(const Residue& o) const {
    if (!(m_ == o.m_)) throw std::invalid_argument("Residue: modulus mismatch");
    return o;
  }

  std::int64_t v_;
  Modulus m_;
};

/** A dual number a + e.b over Z_n, with e^2 = 0. */
class DualNumber {
 public:
  DualNumber(Residue a, Residue b) : a_(a), b_(b) {
    if (!(a.modulus() == b.modulus()))
      throw std::invalid_argument("DualNumber: modulus mismatch");
  }
  static DualNumber of(std::int64_t a, std::int64_t b, Modulus m) {
    return {Residue(a, m), Residue(b, m)};
  }

  Residue a() const { return a_; }
  Residue b() const { return b_; }
  Modulus modulus() const { return a_.modulus(); }

  DualNumber operator+(const DualNumber& o) const { return {a_ + o.a_, b_ + o.b_}; }
  DualNumber operator-(const DualNumber& o) const { return {a_ - o.a_, b_ - o.b_}; }
  DualNumber operator-() const { return {-a_, -b_}; }
  // (a + e.b)(c + e.d) = ac + e.(ad + bc), since e^2 = 0.
  DualNumber operator*(const DualNumber& o) const {
    return {a_ * o.a_, a_ * o.b_ + b_ * o.a_};
  }

  // Invertible iff a is a unit; (a + e.b)^-1 = a^-1 - e.(a^-2 b).
  bool is_unit() const { return a_.is_unit(); }
  DualNumber inverse() const;

  friend bool operator==(const DualNumber& x, const DualNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const DualNumber& x, const DualNumber& y) { return !(x == y); }
  friend bool operator<(const DualNumber& x, const DualNumber& y) {
    if (x.a_.value() != y.a_.value()) return x.a_.value() < y.a_.value();
    return x.b_.value() < y.b_.value();
  }

  std::string to_string() const;

 private:
  Residue a_, b_;
};

/** The affine map e^u.v on Z_n: x -> v*x + u. */
class AffineMap {
 public:
  AffineMap(Residue translation, Residue linear) : u_(translation), v_(linear) {
    if (!(u_.modulus() == v_.modulus()))
      throw std::invalid_argument("AffineMap: modulus mismatch");
  }
  static AffineMap of(std::int64_t u, std::int64_t v, Modulus m) {
    return {Residue(u, m), Residue(v, m)};
  }
  static AffineMap identity(Modulus m) { return of(0, 1, m); }

  Residue translation() const { return u_; }
  Residue linear() const { return v_; }
  Modulus modulus() const { return u_.modulus(); }

  Residue apply(const Residue& x) const { return v_ * x + u_; }
  // compose(f, g) acts as x -> f(g(x)).
  AffineMap compose(const AffineMap& g) const {
    return {v_ * g.u_ + u_, v_ * g.v_};
  }
  bool is_symmetry() const { return v_.is_unit(); }
  AffineMap invert() const;  // throws std::domain_error if linear part is not a unit

  friend bool operator==(const AffineMap& f, const AffineMap& g) {
    return f.u_ == g.u_ && f.v_ == g.v_;
  }
  friend bool operator!=(const AffineMap& f, const AffineMap& g) { return !(f == g); }
  friend bool operator<(const AffineMap& f, const AffineMap& g) {
    if (f.u_.value() != g.u_.value()) return f.u_.value() < g.u_.value();
    return f.v_.value() < g.v_.value();
  }

  // "e^u.v" with zero translation and unit linear part elided: "e^8", "5", "1".
  std::string to_string() const;

 private:
  Residue u_, v_;
};

/** An affine map on Z_n[e]: x -> linear * x + translation, both dual numbers. */
class DualAffineMap {
 public:
  DualAffineMap(DualNumber translation, DualNumber linear)
      : t_(translation), w_(linear) {
    if (!(t_.modulus() == w_.modulus()))
      throw std::invalid_argument("DualAffineMap: modulus mismatch");
  }
  static DualAffineMap of(std::int64_t ta, std::int64_t tb, std::int64_t va,
                          std::int64_t vb, Modulus m) {
    return {DualNumber::of(ta, tb, m), DualNumber::of(va, vb, m)};
  }
  static DualAffineMap identity(Modulus m) { return of(0, 0, 1, 0, m); }

  DualNumber translation() const { return t_; }
  DualNumber linear() const { return w_; }
  Modulus modulus() const { return t_.modulus(); }

  DualNumber apply(const DualNumber& x) const { return w_ * x + t_; }
  DualAffineMap compose(const DualAffineMap& g) const {
    return {w_ * g.t_ + t_, w_ * g.w_};
  }
  // Invertible iff the scalar part of the linear coefficient is a unit of Z_n.
  bool is_symmetry() const { return w_.is_unit(); }
  DualAffineMap invert() const;

  bool commutes_with(const DualAffineMap& g) const {
    return compose(g) == g.compose(*this);
  }

  friend bool operator==(const DualAffineMap& f, const DualAffineMap& g) {
    return f.t_ == g.t_ && f.w_ == g.w_;
  }
  friend bool operator!=(const DualAffineMap& f, const DualAffineMap& g) {
    return !(f == g);
  }
  // Canonical order: (ta, tb, va, vb).
  friend bool operator<(const DualAffineMap& f, const DualAffineMap& g) {
    if (f.t_ != g.t_) return f.t_ < g.t_;
    return f.w_ < g.w_;
  }

  // "e^(ta+e.tb).(va+e.vb)" with zero parts elided, e.g. "e^(e.3).(1+e.3)".
  std::string to_string() const;

 private:
  DualNumber t_, w_;
};

}  // namespace cpt
