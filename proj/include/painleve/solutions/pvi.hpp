#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "painleve/exact/ratfun.hpp"
#include "painleve/sign.hpp"

namespace painleve::solutions {

using exact::Poly;
using exact::RatFun;
using exact::Rational;

struct Theta {
  Rational t1;
  Rational t2;
  Rational t3;
  Rational t4;

  static Theta uniform(const Rational& c) { return {c, c, c, c}; }
  /// mu = (1/2, 1/2, 1/2, 1/2).
  static Theta mu() { return uniform(Rational(1, 2)); }

  Rational& operator[](std::size_t j) { return j == 0 ? t1 : j == 1 ? t2 : j == 2 ? t3 : t4; }
  const Rational& operator[](std::size_t j) const { return j == 0 ? t1 : j == 1 ? t2 : j == 2 ? t3 : t4; }

  friend Theta operator+(const Theta& a, const Theta& b) { return {a.t1 + b.t1, a.t2 + b.t2, a.t3 + b.t3, a.t4 + b.t4}; }
  friend Theta operator-(const Theta& a, const Theta& b) { return {a.t1 - b.t1, a.t2 - b.t2, a.t3 - b.t3, a.t4 - b.t4}; }
  friend Theta operator*(const Rational& c, const Theta& a) { return {c * a.t1, c * a.t2, c * a.t3, c * a.t4}; }
  friend Theta operator-(const Theta& a) { return {-a.t1, -a.t2, -a.t3, -a.t4}; }
  friend Rational dot(const Theta& a, const Theta& b) { return a.t1 * b.t1 + a.t2 * b.t2 + a.t3 * b.t3 + a.t4 * b.t4; }
  friend bool operator==(const Theta&, const Theta&) = default;

  std::string str() const { return "(" + t1.str() + ", " + t2.str() + ", " + t3.str() + ", " + t4.str() + ")"; }
};

struct Label {
  int m;
  Sign sign;
  friend bool operator==(const Label&, const Label&) = default;
};

inline std::string to_string(const Label& l) { return "m=" + std::to_string(l.m) + to_string(l.sign); }

/// [lambda(w); theta]. Equality ignores the label.
struct PviSolution {
  RatFun lambda;
  Theta theta;
  std::optional<Label> label;

  friend bool operator==(const PviSolution& a, const PviSolution& b) {
    return a.lambda == b.lambda && a.theta == b.theta;
  }
};

struct ClassicParams {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
  friend bool operator==(const ClassicParams&, const ClassicParams&) = default;
};

/// t(w) = (1+w)(w-3)^3 / ((w-1)(w+3)^3).
inline const RatFun& t_of_w() {
  static const RatFun t = [] {
    const Poly w = Poly::w();
    return exact::ratfun_reduce((w + 1) * (w - 3).pow(3), (w - 1) * (w + 3).pow(3));
  }();
  return t;
}

/// ((w-3)^2/((w-1)(w+3))) ((w^2-1) f + 8 g) / ((3+w^2) f - 24 g).
inline RatFun lambda_from_fg(const Poly& f, const Poly& g) {
  const Poly w = Poly::w();
  const Poly den = (w * w + 3) * f - 24 * g;
  if (den.is_zero()) throw std::domain_error("lambda_from_fg: (3+w^2) f - 24 g vanishes identically");
  return exact::ratfun_reduce((w - 3).pow(2) * ((w * w - 1) * f + 8 * g), (w - 1) * (w + 3) * den);
}

/// d/dt via dt/dw = 16 w^2 (w-3)^2 / ((w-1)^2 (w+3)^4).
inline RatFun d_dt(const RatFun& lambda) {
  static const RatFun factor = [] {
    const Poly w = Poly::w();
    return exact::ratfun_reduce((w - 1).pow(2) * (w + 3).pow(4), 16 * (w * w) * (w - 3).pow(2));
  }();
  return factor * lambda.derivative();
}

inline ClassicParams theta_to_classic(const Theta& th) {
  const Rational half(1, 2);
  const Rational a = th.t4 - Rational(1);
  return {half * a * a, -half * th.t1 * th.t1, half * th.t3 * th.t3, half * (Rational(1) - th.t2 * th.t2)};
}

namespace detail {

/// c * prod atoms[k]^e[k] with possibly negative exponents.
struct AtomTerm {
  Rational c;
  std::vector<int> e;
};

/// Sums AtomTerms over the common denominator prod atoms^(max negative exponent).
/// No gcd is taken; the caller reduces once.
inline std::pair<Poly, Poly> sum_over_common_denominator(const std::vector<Poly>& atoms,
                                                         const std::vector<AtomTerm>& terms) {
  const std::size_t n = atoms.size();
  std::vector<int> shift(n, 0);
  for (const auto& t : terms) {
    for (std::size_t k = 0; k < n; ++k) shift[k] = std::max(shift[k], -t.e[k]);
  }
  // Powers are shared between terms; cache them.
  std::vector<std::vector<Poly>> powers(n);
  const auto power = [&](std::size_t k, int e) -> const Poly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.emplace_back(Rational(1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * atoms[k]);
    return cache[static_cast<std::size_t>(e)];
  };
  Poly num;
  for (const auto& t : terms) {
    Poly p(t.c);
    for (std::size_t k = 0; k < n; ++k) {
      const int e = t.e[k] + shift[k];
      if (e > 0) p = p * power(k, e);
    }
    num = num + p;
  }
  Poly den(Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    if (shift[k] > 0) den = den * power(k, shift[k]);
  }
  return {num, den};
}

}  // namespace detail

/// lambda'' minus the right-hand side of P_VI(theta), with t = t(w) and ' = d/dt.
/// Zero exactly when s solves P_VI(theta). Terms are collected over an explicit
/// common denominator and reduced once at the end.
inline RatFun pvi_residual(const PviSolution& s) {
  const Poly N = s.lambda.num();
  const Poly D = s.lambda.den();
  const RatFun& t = t_of_w();
  const Poly T = t.num();
  const Poly S = t.den();
  const Poly NmD = N - D;
  const Poly E = N * S - T * D;  // (lambda - t) D S
  if (N.is_zero() || NmD.is_zero() || E.is_zero()) throw std::domain_error("degenerate solution candidate");
  const RatFun l1 = d_dt(s.lambda);
  const RatFun l2 = d_dt(l1);
  const Poly TmS = T - S;

  // Atom order.
  enum { kN, kNmD, kE, kD, kS, kT, kTmS, kN1, kD1, kN2, kD2, kCount };
  std::vector<Poly> atoms(kCount);
  atoms[kN] = N;
  atoms[kNmD] = NmD;
  atoms[kE] = E;
  atoms[kD] = D;
  atoms[kS] = S;
  atoms[kT] = T;
  atoms[kTmS] = TmS;
  atoms[kN1] = l1.num();
  atoms[kD1] = l1.den();
  atoms[kN2] = l2.num();
  atoms[kD2] = l2.den();

  std::vector<detail::AtomTerm> terms;
  const auto add = [&](const Rational& c, std::initializer_list<std::pair<int, int>> exps) {
    if (c.is_zero()) return;
    detail::AtomTerm a{c, std::vector<int>(kCount, 0)};
    for (const auto& [k, e] : exps) a.e[static_cast<std::size_t>(k)] += e;
    terms.push_back(std::move(a));
  };
  const Rational half(1, 2);
  const Theta& th = s.theta;

  // lambda''
  add(Rational(1), {{kN2, 1}, {kD2, -1}});
  // -(1/2)(1/lambda + 1/(lambda-1) + 1/(lambda-t)) lambda'^2
  if (!atoms[kN1].is_zero()) {
    add(-half, {{kN1, 2}, {kD1, -2}, {kD, 1}, {kN, -1}});
    add(-half, {{kN1, 2}, {kD1, -2}, {kD, 1}, {kNmD, -1}});
    add(-half, {{kN1, 2}, {kD1, -2}, {kD, 1}, {kS, 1}, {kE, -1}});
    // +(1/t + 1/(t-1) + 1/(lambda-t)) lambda'
    add(Rational(1), {{kN1, 1}, {kD1, -1}, {kS, 1}, {kT, -1}});
    add(Rational(1), {{kN1, 1}, {kD1, -1}, {kS, 1}, {kTmS, -1}});
    add(Rational(1), {{kN1, 1}, {kD1, -1}, {kD, 1}, {kS, 1}, {kE, -1}});
  }
  // lambda(lambda-1)(lambda-t) / (2 t^2 (t-1)^2) = (1/2) N (N-D) E S^3 / (D^3 T^2 (T-S)^2)
  const Rational a4 = (th.t4 - Rational(1)) * (th.t4 - Rational(1));
  add(-half * a4, {{kN, 1}, {kNmD, 1}, {kE, 1}, {kS, 3}, {kD, -3}, {kT, -2}, {kTmS, -2}});
  // times -theta1^2 t / lambda^2
  add(half * th.t1 * th.t1, {{kNmD, 1}, {kE, 1}, {kS, 2}, {kD, -1}, {kN, -1}, {kT, -1}, {kTmS, -2}});
  // times theta3^2 (t-1)/(lambda-1)^2
  add(-half * th.t3 * th.t3, {{kN, 1}, {kE, 1}, {kS, 2}, {kD, -1}, {kNmD, -1}, {kT, -2}, {kTmS, -1}});
  // times (1-theta2^2) t(t-1)/(lambda-t)^2
  add(-half * (Rational(1) - th.t2 * th.t2), {{kN, 1}, {kNmD, 1}, {kS, 3}, {kD, -1}, {kE, -1}, {kT, -1}, {kTmS, -1}});

  const auto [num, den] = detail::sum_over_common_denominator(atoms, terms);
  if (num.is_zero()) return {};
  return exact::ratfun_reduce(num, den);
}

}  // namespace painleve::solutions
