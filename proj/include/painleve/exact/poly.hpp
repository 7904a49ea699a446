#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "painleve/exact/rational.hpp"
#include "painleve/exact/zpoly.hpp"

namespace painleve::exact {

class RatFun;

/// Dense univariate polynomial over the rationals in the indeterminate w.
///
/// Stored as scale * P where P is a primitive integer polynomial with
/// positive leading coefficient. Multiplication therefore never needs a
/// content computation (Gauss's lemma), and gcds run directly on P.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) {
      scale_ = c;
      prim_ = {Integer(1)};
    }
  }
  template <std::integral T>
  Poly(T c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  /// Little-endian coefficient list c[0] + c[1] w + ...
  static Poly from_coeffs(const std::vector<Rational>& c) {
    Integer den = 1;
    for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.den().get_mpz_t());
    detail::ZPoly z(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) z[i] = c[i].num() * (den / c[i].den());
    detail::trim(z);
    return from_integer(z, Rational(Integer(1), den));
  }

  /// scale * z for an arbitrary (not necessarily primitive) integer polynomial.
  static Poly from_integer(const detail::ZPoly& z, const Rational& scale = Rational(1)) {
    Poly p;
    if (z.empty() || scale.is_zero()) return p;
    auto [c, prim] = detail::primitive_part(z);
    p.scale_ = scale * Rational(c);
    p.prim_ = std::move(prim);
    return p;
  }

  static Poly monomial(const Rational& c, unsigned k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return from_coeffs(v);
  }

  static Poly w() { return monomial(Rational(1), 1); }

  int degree() const { return detail::degree(prim_); }
  bool is_zero() const { return prim_.empty(); }
  bool is_constant() const { return prim_.size() <= 1; }

  Rational coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return scale_ * Rational(prim_[static_cast<std::size_t>(k)]);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeff(degree()); }

  std::vector<Rational> coefficients() const {
    std::vector<Rational> r(prim_.size());
    for (std::size_t i = 0; i < prim_.size(); ++i) r[i] = scale_ * Rational(prim_[i]);
    return r;
  }

  const Rational& scale() const { return scale_; }
  const detail::ZPoly& primitive() const { return prim_; }

  Poly monic() const {
    if (is_zero()) return {};
    Poly p = *this;
    p.scale_ = Rational(1) / Rational(prim_.back());
    return p;
  }

  Rational evaluate(const Rational& x) const {
    // Horner on the integer part with x = n/d, scaled by d^deg.
    if (is_zero()) return Rational(0);
    const Integer n = x.num();
    const Integer d = x.den();
    Integer acc = 0;
    Integer dpow = 1;
    for (std::size_t i = prim_.size(); i-- > 0;) {
      acc = acc * n + prim_[i] * dpow;
      dpow *= d;
    }
    // acc = sum prim_i n^i d^(deg-i)
    Integer ddeg = 1;
    mpz_pow_ui(ddeg.get_mpz_t(), d.get_mpz_t(), prim_.size() - 1);
    return scale_ * Rational(acc, ddeg);
  }

  Poly derivative() const { return from_integer(detail::derivative(prim_), scale_); }

  Poly pow(unsigned e) const {
    Poly p;
    if (is_zero()) return e == 0 ? Poly(1) : p;
    p.scale_ = scale_.pow(e);
    p.prim_ = detail::pow(prim_, e);
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    p.scale_ = -p.scale_;
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Integer da = a.scale_.den();
    const Integer db = b.scale_.den();
    Integer l;
    mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    const detail::ZPoly sum = detail::add(detail::scale(a.prim_, a.scale_.num() * (l / da)),
                                          detail::scale(b.prim_, b.scale_.num() * (l / db)));
    return from_integer(sum, Rational(Integer(1), l));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.scale_ = a.scale_ * b.scale_;
    p.prim_ = detail::mul(a.prim_, b.prim_);
    return p;
  }
  friend Poly operator*(const Poly& a, const Rational& s) {
    if (s.is_zero() || a.is_zero()) return {};
    Poly p = a;
    p.scale_ *= s;
    return p;
  }
  friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }
  template <std::integral T>
  friend Poly operator*(T s, const Poly& a) { return a * Rational(s); }
  template <std::integral T>
  friend Poly operator*(const Poly& a, T s) { return a * Rational(s); }
  friend Poly operator/(const Poly& a, const Rational& s) { return a * s.inverse(); }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.scale_ == b.scale_ && a.prim_ == b.prim_;
  }

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Rational> r = a.coefficients();
    const std::vector<Rational> bc = b.coefficients();
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational lb_inv = bc.back().inverse();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Rational f = r[k + bc.size() - 1] * lb_inv;
      q[k] = f;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= f * bc[j];
    }
    r.resize(bc.size() - 1);
    return {from_coeffs(q), from_coeffs(r)};
  }

  /// Bit length of the largest integer coefficient of the primitive part.
  std::size_t coefficient_bits() const { return detail::max_bits(prim_); }

  std::string str(const std::string& var = "w") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = prim_.size(); i-- > 0;) {
      const Rational c = coeff(static_cast<int>(i));
      if (c.is_zero()) continue;
      Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      if (i == 0 || !mag.is_one()) {
        os << mag;
        if (i != 0) os << "*";
      }
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  friend class RatFun;
  Rational scale_;
  detail::ZPoly prim_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

/// Monic greatest common divisor over Q; gcd(0, 0) = 0.
inline Poly poly_gcd(const Poly& p, const Poly& q) {
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  const auto res = detail::gcd_primitive(p.primitive(), q.primitive());
  return Poly::from_integer(res.gcd).monic();
}

}  // namespace painleve::exact
