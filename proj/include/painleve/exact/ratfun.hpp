#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "painleve/exact/poly.hpp"

namespace painleve::exact {

/// Reduced rational function num/den in w over Q.
///
/// Canonical form: value = factor * N / D with N, D primitive integer
/// polynomials of positive leading coefficient and gcd(N, D) = 1. Two values
/// are equal iff their canonical forms agree coefficient-wise. Every
/// operation returns a canonical result.
class RatFun {
 public:
  RatFun() : num_{Integer(1)}, den_{Integer(1)} {}
  RatFun(const Rational& c) : RatFun() { factor_ = c; }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RatFun(T c) : RatFun(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Poly& p) : RatFun() {  // NOLINT(google-explicit-constructor)
    if (!p.is_zero()) {
      factor_ = p.scale_;
      num_ = p.prim_;
    }
  }

  /// num/den brought to canonical reduced form.
  static RatFun reduce(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero rational function");
    if (num.is_zero()) return {};
    auto g = detail::gcd_primitive(num.prim_, den.prim_);
    RatFun r;
    r.factor_ = num.scale_ / den.scale_;
    r.num_ = std::move(g.cofactor_a);
    r.den_ = std::move(g.cofactor_b);
    return r;
  }

  static RatFun w() { return RatFun(Poly::w()); }

  bool is_zero() const { return factor_.is_zero(); }
  bool is_polynomial() const { return den_.size() == 1; }
  bool is_constant() const { return is_zero() || (num_.size() == 1 && den_.size() == 1); }

  /// Numerator, normalized so that den() is monic.
  Poly num() const {
    if (is_zero()) return {};
    Poly p;
    p.scale_ = factor_ / Rational(den_.back());
    p.prim_ = num_;
    return p;
  }

  /// Monic denominator.
  Poly den() const {
    Poly p;
    p.scale_ = Rational(1) / Rational(den_.back());
    p.prim_ = den_;
    return p;
  }

  int num_degree() const { return is_zero() ? -1 : detail::degree(num_); }
  int den_degree() const { return detail::degree(den_); }

  RatFun operator-() const {
    RatFun r = *this;
    r.factor_ = -r.factor_;
    return r;
  }

  RatFun inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    RatFun r;
    r.factor_ = factor_.inverse();
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Henrici: only the common part of the denominators can cancel.
    detail::ZPoly common;
    detail::ZPoly ea;
    detail::ZPoly eb;
    if (a.den_ == b.den_) {
      common = a.den_;
      ea = eb = detail::ZPoly{Integer(1)};
    } else {
      auto g = detail::gcd_primitive(a.den_, b.den_);
      common = std::move(g.gcd);
      ea = std::move(g.cofactor_a);
      eb = std::move(g.cofactor_b);
    }
    const Integer qa = a.factor_.den();
    const Integer qb = b.factor_.den();
    Integer l;
    mpz_lcm(l.get_mpz_t(), qa.get_mpz_t(), qb.get_mpz_t());
    const detail::ZPoly sum =
        detail::add(detail::scale(detail::mul(a.num_, eb), a.factor_.num() * (l / qa)),
                    detail::scale(detail::mul(b.num_, ea), b.factor_.num() * (l / qb)));
    if (sum.empty()) return {};
    auto [c, prim] = detail::primitive_part(sum);
    RatFun r;
    r.factor_ = Rational(c, l);
    if (common.size() > 1) {
      auto h = detail::gcd_primitive(prim, common);
      r.num_ = std::move(h.cofactor_a);
      common = std::move(h.cofactor_b);
    } else {
      r.num_ = std::move(prim);
    }
    r.den_ = detail::mul(detail::mul(common, ea), eb);
    return r;
  }

  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return {};
    RatFun r;
    r.factor_ = a.factor_ * b.factor_;
    auto g1 = detail::gcd_primitive(a.num_, b.den_);
    auto g2 = detail::gcd_primitive(b.num_, a.den_);
    r.num_ = detail::mul(g1.cofactor_a, g2.cofactor_a);
    r.den_ = detail::mul(g2.cofactor_b, g1.cofactor_b);
    return r;
  }

  friend RatFun operator*(const RatFun& a, const Rational& s) {
    if (s.is_zero() || a.is_zero()) return {};
    RatFun r = a;
    r.factor_ *= s;
    return r;
  }
  friend RatFun operator*(const Rational& s, const RatFun& a) { return a * s; }
  template <std::integral T>
  friend RatFun operator*(T s, const RatFun& a) { return a * Rational(s); }
  template <std::integral T>
  friend RatFun operator*(const RatFun& a, T s) { return a * Rational(s); }
  friend RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }
  friend RatFun operator/(const RatFun& a, const Rational& s) { return a * s.inverse(); }

  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  RatFun pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    if (is_zero()) return e == 0 ? RatFun(1) : RatFun();
    RatFun r;
    r.factor_ = factor_.pow(static_cast<unsigned>(e));
    r.num_ = detail::pow(num_, static_cast<unsigned>(e));
    r.den_ = detail::pow(den_, static_cast<unsigned>(e));
    return r;
  }

  /// d/dw by the quotient rule, reduced.
  RatFun derivative() const {
    if (is_constant()) return {};
    const detail::ZPoly top =
        detail::sub(detail::mul(detail::derivative(num_), den_), detail::mul(num_, detail::derivative(den_)));
    if (top.empty()) return {};
    // (N'D - ND')/D^2: a factor of D divides the numerator only where D has
    // repeated roots, so reduce against D first, then against the rest.
    auto [c, prim] = detail::primitive_part(top);
    auto g = detail::gcd_primitive(prim, den_);
    auto h = detail::gcd_primitive(g.cofactor_a, den_);
    RatFun r;
    r.factor_ = factor_ * Rational(c);
    r.num_ = std::move(h.cofactor_a);
    r.den_ = detail::mul(g.cofactor_b, h.cofactor_b);
    return r;
  }

  Rational evaluate(const Rational& x) const {
    if (is_zero()) return Rational(0);
    const Rational d = Poly::from_integer(den_).evaluate(x);
    if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
    return factor_ * Poly::from_integer(num_).evaluate(x) / d;
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.factor_ == b.factor_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Largest coefficient bit length across numerator and denominator.
  std::size_t coefficient_bits() const {
    return std::max(detail::max_bits(num_), detail::max_bits(den_));
  }

  std::string str(const std::string& var = "w") const {
    if (is_zero()) return "0";
    const Poly n = num();
    if (is_polynomial()) return n.str(var);
    return "(" + n.str(var) + ")/(" + den().str(var) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.str(); }

 private:
  Rational factor_;
  detail::ZPoly num_;
  detail::ZPoly den_;
};

inline bool is_zero(const RatFun& r) { return r.is_zero(); }

/// Canonical reduced num/den; throws on a zero denominator.
inline RatFun ratfun_reduce(const Poly& num, const Poly& den) { return RatFun::reduce(num, den); }

}  // namespace painleve::exact
