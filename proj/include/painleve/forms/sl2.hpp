#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "painleve/exact/root_scalar.hpp"
#include "painleve/forms/binary_form.hpp"

namespace painleve::forms {

/// Basis forms (g0, g+, g-) of sl2 = V_2 attached to the frame (a, b).
template <exact::Field F>
std::array<BiForm<F>, 3> sl2_forms(const BiForm<F>& a, const BiForm<F>& b) {
  if (!a.is_homogeneous(1) || !b.is_homogeneous(1) || a.is_zero() || b.is_zero()) {
    throw std::invalid_argument("frame vectors must be nonzero linear forms");
  }
  const F ab = scalar_part(transvectant(a, b, 1));
  if (exact::is_zero_value(ab)) throw std::domain_error("degenerate frame");
  const F inv = F(Rational(1)) / ab;
  return {(a * b).scaled(-inv), (a * a).scaled(inv * Rational(1, 2)), (b * b).scaled(-inv * Rational(1, 2))};
}

/// Element c0 g0(a,b) + cplus g+(a,b) + cminus g-(a,b) of sl2.
template <exact::Field F>
struct Sl2Elem {
  F c0{Rational(0)};
  F cplus{Rational(0)};
  F cminus{Rational(0)};
  BiForm<F> a = BiForm<F>::x();
  BiForm<F> b = BiForm<F>::y();

  BiForm<F> form() const {
    const auto g = sl2_forms(a, b);
    return g[0].scaled(c0) + g[1].scaled(cplus) + g[2].scaled(cminus);
  }

  friend bool operator==(const Sl2Elem& l, const Sl2Elem& r) { return l.form() == r.form(); }
};

/// The basis elements as Sl2Elem values; throws "degenerate frame" when <a,b> = 0.
template <exact::Field F>
std::array<Sl2Elem<F>, 3> sl2_basis(const BiForm<F>& a, const BiForm<F>& b) {
  (void)sl2_forms(a, b);
  const F one(Rational(1));
  const F zero(Rational(0));
  return {Sl2Elem<F>{one, zero, zero, a, b}, Sl2Elem<F>{zero, one, zero, a, b}, Sl2Elem<F>{zero, zero, one, a, b}};
}

/// [g, v] := <g, v>_1 for g in V_2.
template <exact::Scalar F>
BiForm<F> bracket(const BiForm<F>& g, const BiForm<F>& v) {
  if (!g.is_homogeneous(2)) throw std::invalid_argument("bracket expects a degree-2 form");
  return transvectant(g, v, 1);
}

/// Coordinates of g in V_2 with respect to the frame (a, b), read off with the pairing.
template <exact::Field F>
Sl2Elem<F> decompose(const BiForm<F>& g, const BiForm<F>& a, const BiForm<F>& b) {
  if (!g.is_homogeneous(2)) throw std::invalid_argument("sl2 element must be a degree-2 form");
  (void)sl2_forms(a, b);
  const F ab = scalar_part(transvectant(a, b, 1));
  Sl2Elem<F> e;
  e.a = a;
  e.b = b;
  e.c0 = pairing(g, a * b) / ab;
  e.cplus = pairing(g, b * b) / ab;
  e.cminus = -(pairing(g, a * a) / ab);
  return e;
}

/// Matrix of v -> [g, v] on V_1 in the frame basis (a, b): column k is the image of the k-th frame vector.
template <exact::Field F>
std::array<std::array<F, 2>, 2> v1_action(const Sl2Elem<F>& g) {
  const BiForm<F> form = g.form();
  const F ab = scalar_part(transvectant(g.a, g.b, 1));
  // v = alpha a + beta b gives alpha = <v,b>/<a,b> and beta = -<v,a>/<a,b>.
  const auto coords = [&](const BiForm<F>& v) {
    return std::pair<F, F>{pairing(v, g.b) / ab, -(pairing(v, g.a) / ab)};
  };
  const auto [m00, m10] = coords(bracket(form, g.a));
  const auto [m01, m11] = coords(bracket(form, g.b));
  return {std::array<F, 2>{m00, m01}, std::array<F, 2>{m10, m11}};
}

/// Eigenvalues of a rational sl2 element acting on V_1. They are plus and
/// minus sqrt(c0^2 + cplus*cminus); the result carries that root exactly.
inline std::pair<exact::RootScalar, exact::RootScalar> v1_eigenvalues(const Sl2Elem<Rational>& g) {
  const auto m = v1_action(g);
  // Traceless 2x2: lambda^2 = -det.
  const Rational disc = -(m[0][0] * m[1][1] - m[0][1] * m[1][0]);
  if (disc.sign() < 0) throw std::domain_error("eigenvalues are not real");
  const auto r = exact::RootScalar::sqrt_of(disc);
  return {r, -r};
}

}  // namespace painleve::forms
