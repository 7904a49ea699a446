#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/connection/invariants.hpp"
#include "painleve/exact/poly_over.hpp"
#include "painleve/exact/ratfun.hpp"
#include "painleve/sign.hpp"

namespace painleve::connection {

using exact::PolyOver;
using exact::RatFun;
using forms::Sl2Elem;

template <exact::Scalar F>
struct FormPair {
  BiForm<F> u;
  BiForm<F> v;
};

/// The line z -> u~(w) + z v~ whose quartic vanishes at z = 0, 1, t(w).
/// w may be the indeterminate (default) or any specialization of it.
inline FormPair<RatFun> curve_family(const RatFun& w = RatFun::w()) {
  using Form = BiForm<RatFun>;
  const Form x = Form::x();
  const Form y = Form::y();
  const RatFun c = -(w + RatFun(1)) / (w + RatFun(3)).pow(3);
  const Form s = x + y;
  const Form u = (s * s * (x.scaled(RatFun(8)) + y.scaled(w * w - RatFun(1)))).scaled(c);
  return {u, x * x * y};
}

/// p(u + z v) as a polynomial in z.
template <exact::Scalar F>
PolyOver<F> line_quartic(const BiForm<F>& u, const BiForm<F>& v) {
  const auto z = PolyOver<F>::variable();
  const BiForm<PolyOver<F>> line = forms::lift(u) + forms::lift(v).scaled(z);
  return quartic_invariant(line);
}

/// h(u + z a^2 b, a^2 b) = h0(z) g0(a,b) + h+(z) g+(a,b) + h-(z) g-(a,b).
template <exact::Scalar F>
struct HCoeffs {
  PolyOver<F> h0;
  PolyOver<F> hplus;
  PolyOver<F> hminus;

  friend bool operator==(const HCoeffs&, const HCoeffs&) = default;
};

template <exact::Field F>
F frame_pairing(const BiForm<F>& a, const BiForm<F>& b) {
  if (!a.is_homogeneous(1) || !b.is_homogeneous(1)) throw std::invalid_argument("frame vectors must be linear forms");
  const F ab = forms::scalar_part(transvectant(a, b, 1));
  if (exact::is_zero_value(ab)) throw std::domain_error("degenerate frame");
  return ab;
}

/// Closed-form coefficients in terms of the pairings of u with a^3, a^2 b, a b^2, b^3.
template <exact::Field F>
HCoeffs<F> h_coeffs(const BiForm<F>& u, const BiForm<F>& a, const BiForm<F>& b) {
  require_cubic(u);
  const F ab = frame_pairing(a, b);
  const F ab3 = ab * ab * ab;
  const F p3 = pairing(u, a * a * a);
  const F p2 = pairing(u, a * a * b);
  const F p1 = pairing(u, a * b * b);
  const F p0 = pairing(u, b * b * b);
  const F inv = F(Rational(1)) / ab3;
  const auto poly = [&](std::vector<F> c) {
    for (auto& x : c) x = x * inv;
    return PolyOver<F>(std::move(c));
  };
  HCoeffs<F> h;
  h.h0 = poly({p2 * p2 * p1 * Rational(3) - p3 * p1 * p1 * Rational(2) - p3 * p2 * p0,
               ab3 * (p3 * p1 * Rational(4) - p2 * p2 * Rational(3)) * Rational(2), ab3 * ab3 * p3 * Rational(-8)});
  h.hplus = poly({p0 * (p2 * p2 - p3 * p1) * Rational(4), p0 * ab3 * p3 * Rational(8)});
  h.hminus = poly({p3 * (p3 * p0 - p2 * p1) * Rational(2), p3 * ab3 * p2 * Rational(4)});
  return h;
}

/// The same coefficients obtained by expanding h(u + z a^2 b, a^2 b) directly.
template <exact::Field F>
HCoeffs<F> h_coeffs_direct(const BiForm<F>& u, const BiForm<F>& a, const BiForm<F>& b) {
  require_cubic(u);
  (void)frame_pairing(a, b);
  const BiForm<F> v = a * a * b;
  const auto z = PolyOver<F>::variable();
  const auto h = h_form(forms::lift(u) + forms::lift(v).scaled(z), forms::lift(v));
  int deg = -1;
  for (const auto& [k, c] : h.terms()) deg = std::max(deg, c.degree());
  std::vector<F> c0;
  std::vector<F> cp;
  std::vector<F> cm;
  for (int k = 0; k <= deg; ++k) {
    const auto e = forms::decompose(forms::coefficient_form(h, k), a, b);
    c0.push_back(e.c0);
    cp.push_back(e.cplus);
    cm.push_back(e.cminus);
  }
  return {PolyOver<F>(c0), PolyOver<F>(cp), PolyOver<F>(cm)};
}

/// Residue at z = 0 of a(a^2 b + z v, v) dz, returned in the frame (a, b).
template <exact::Field F>
Sl2Elem<F> residue_at_zero(const BiForm<F>& a, const BiForm<F>& b, const BiForm<F>& v) {
  require_cubic(v);
  (void)frame_pairing(a, b);
  const BiForm<F> u0 = a * a * b;
  if (exact::is_zero_value(pairing(v, a * a * a))) throw std::domain_error("nongeneric configuration");
  const PolyOver<F> denom = line_quartic(u0, v);
  if (!exact::is_zero_value(denom.coeff(0))) throw std::logic_error("p(a^2 b) should vanish");
  const BiForm<F> numer = h_form(u0, v);
  return forms::decompose(numer.scaled(F(Rational(1)) / denom.coeff(1)), a, b);
}

/// E with A_inf = [E, .] for A(z) = -[a(u + z a^2 b, a^2 b), .].
template <exact::Field F>
Sl2Elem<F> residue_at_infinity(const BiForm<F>& u, const BiForm<F>& a, const BiForm<F>& b) {
  Sl2Elem<F> e = residue_at_zero(a, b, u);
  // In the coordinate s = 1/z the form reads a(a^2 b + s u, u) ds; A carries an extra minus sign.
  e.c0 = -e.c0;
  e.cplus = -e.cplus;
  e.cminus = -e.cminus;
  return e;
}

template <exact::Field F>
struct Lambda0Derivation {
  F f0;
  F g0;
  HCoeffs<F> h;
  PolyOver<F> eigencondition;  // h-(z) f0 - h+(z) g0
  F lambda;
};

/// Solves <r, [h(u + z a^2 b, a^2 b), r]> = 0 for z, where r is an eigenvector of [g0(a,b), .].
template <exact::Field F>
Lambda0Derivation<F> derive_lambda0(const BiForm<F>& u, const BiForm<F>& a, const BiForm<F>& b, const BiForm<F>& r) {
  const auto g = forms::sl2_forms(a, b);
  if (!exact::is_zero_value(pairing(r, forms::bracket(g[0], r)))) {
    throw std::domain_error("r is not an eigenvector of [g0, .]");
  }
  Lambda0Derivation<F> d;
  d.f0 = pairing(r, forms::bracket(g[2], r));
  d.g0 = -pairing(r, forms::bracket(g[1], r));
  d.h = h_coeffs(u, a, b);
  d.eigencondition = d.h.hminus * PolyOver<F>(d.f0) - d.h.hplus * PolyOver<F>(d.g0);
  if (d.eigencondition.degree() < 1) throw std::domain_error("degenerate eigencondition");
  d.lambda = -(d.eigencondition.coeff(0) / d.eigencondition.coeff(1));
  return d;
}

/// The full m = 0 derivation on the curve family with frame (x, y), r+ = x and r- = y.
/// Closed-form coefficients are cross-checked against direct expansion.
inline Lambda0Derivation<RatFun> derive_lambda0(Sign sign) {
  using Form = BiForm<RatFun>;
  const auto curve = curve_family();
  const Form a = Form::x();
  const Form b = Form::y();
  auto d = derive_lambda0(curve.u, a, b, sign == Sign::plus ? a : b);
  if (!(d.h == h_coeffs_direct(curve.u, a, b))) {
    throw std::logic_error("closed-form h coefficients disagree with direct expansion");
  }
  return d;
}

inline RatFun solve_lambda0(Sign sign) { return derive_lambda0(sign).lambda; }

}  // namespace painleve::connection
