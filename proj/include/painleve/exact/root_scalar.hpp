#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "painleve/exact/rational.hpp"

namespace painleve::exact {

/// A real number of the form coeff * sqrt(radicand), radicand squarefree.
///
/// Canonical: radicand == 1 exactly when the value is rational, and zero is
/// 0 * sqrt(1). Only the nonnegative branch of the square root is used.
/// Addition is defined for equal radicands only.
class RootScalar {
 public:
  RootScalar() = default;
  RootScalar(const Rational& c) : coeff_(c) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RootScalar(T c) : coeff_(c) {}  // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(n) with square factors of n moved into the coefficient.
  static RootScalar sqrt_of(const Integer& n, const Rational& coeff = Rational(1)) {
    if (n < 0) throw std::domain_error("square root of a negative integer");
    if (n == 0 || coeff.is_zero()) return {};
    auto [outside, inside] = split_square(n);
    RootScalar r;
    r.coeff_ = coeff * Rational(outside);
    r.radicand_ = std::move(inside);
    return r;
  }

  /// sqrt of a nonnegative rational a/b, written as sqrt(a*b)/b.
  static RootScalar sqrt_of(const Rational& q) {
    if (q.sign() < 0) throw std::domain_error("square root of a negative rational");
    return sqrt_of(q.num() * q.den(), Rational(Integer(1), q.den()));
  }

  const Rational& coeff() const { return coeff_; }
  const Integer& radicand() const { return radicand_; }
  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return radicand_ == 1; }
  int sign() const { return coeff_.sign(); }

  /// The square, always rational.
  Rational square() const { return coeff_ * coeff_ * Rational(radicand_); }

  RootScalar operator-() const {
    RootScalar r = *this;
    r.coeff_ = -r.coeff_;
    return r;
  }

  friend RootScalar operator*(const RootScalar& a, const RootScalar& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return sqrt_of(a.radicand_ * b.radicand_, a.coeff_ * b.coeff_);
  }
  friend RootScalar operator*(const RootScalar& a, const Rational& s) {
    if (s.is_zero() || a.is_zero()) return {};
    RootScalar r = a;
    r.coeff_ *= s;
    return r;
  }
  friend RootScalar operator*(const Rational& s, const RootScalar& a) { return a * s; }

  RootScalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    // 1/(c sqrt n) = sqrt(n) / (c n)
    RootScalar r = *this;
    r.coeff_ = (coeff_ * Rational(radicand_)).inverse();
    return r;
  }
  friend RootScalar operator/(const RootScalar& a, const RootScalar& b) { return a * b.inverse(); }

  friend RootScalar operator+(const RootScalar& a, const RootScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.radicand_ != b.radicand_) {
      throw std::domain_error("addition of root scalars with different radicands");
    }
    RootScalar r = a;
    r.coeff_ += b.coeff_;
    if (r.coeff_.is_zero()) r.radicand_ = 1;
    return r;
  }
  friend RootScalar operator-(const RootScalar& a, const RootScalar& b) { return a + (-b); }

  friend bool operator==(const RootScalar& a, const RootScalar& b) {
    return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_;
  }

  std::string str() const {
    if (is_rational()) return coeff_.str();
    if (coeff_.is_one()) return "sqrt(" + radicand_.get_str() + ")";
    if (coeff_ == Rational(-1)) return "-sqrt(" + radicand_.get_str() + ")";
    return coeff_.str() + "*sqrt(" + radicand_.get_str() + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RootScalar& r) { return os << r.str(); }

 private:
  /// n = outside^2 * inside with inside squarefree.
  static std::pair<Integer, Integer> split_square(Integer n) {
    Integer outside = 1;
    Integer inside = 1;
    const auto pull = [&](const Integer& p) {
      int e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
        n /= p;
        ++e;
      }
      for (int k = 0; k < e / 2; ++k) outside *= p;
      if (e % 2 == 1) inside *= p;
    };
    pull(Integer(2));
    for (Integer p = 3; p * p <= n; p += 2) pull(p);
    if (n > 1) inside *= n;
    return {outside, inside};
  }

  Rational coeff_;
  Integer radicand_ = 1;
};

inline bool is_zero(const RootScalar& r) { return r.is_zero(); }

/// Product with the radicand renormalized to squarefree form.
inline RootScalar root_mul(const RootScalar& a, const RootScalar& b) { return a * b; }

}  // namespace painleve::exact
