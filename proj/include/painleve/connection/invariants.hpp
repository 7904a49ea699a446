#pragma once

#include <array>
#include <stdexcept>

#include "painleve/forms/binary_form.hpp"
#include "painleve/forms/sl2.hpp"

namespace painleve::connection {

using exact::Rational;
using forms::BiForm;
using forms::pairing;
using forms::transvectant;

template <exact::Scalar F>
void require_cubic(const BiForm<F>& u) {
  if (!u.is_homogeneous(3)) throw std::invalid_argument("expected a binary cubic");
}

/// p(u) = <u^2, u^2>_6.
template <exact::Scalar F>
F quartic_invariant(const BiForm<F>& u) {
  require_cubic(u);
  const BiForm<F> u2 = u * u;
  return forms::scalar_part(transvectant(u2, u2, 6));
}

/// q(abc) = (<a,b><b,c><c,a>)^2 for linear forms a, b, c.
template <exact::Scalar F>
F q_from_factors(const BiForm<F>& a, const BiForm<F>& b, const BiForm<F>& c) {
  const F prod = forms::scalar_part(transvectant(a, b, 1)) * forms::scalar_part(transvectant(b, c, 1)) *
                 forms::scalar_part(transvectant(c, a, 1));
  return prod * prod;
}

namespace detail {

template <exact::Scalar F>
F det4(const std::array<std::array<F, 4>, 4>& m) {
  static constexpr int perms[24][4] = {
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1},
      {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 2, 0, 3}, {1, 2, 3, 0}, {1, 3, 0, 2}, {1, 3, 2, 0},
      {2, 0, 1, 3}, {2, 0, 3, 1}, {2, 1, 0, 3}, {2, 1, 3, 0}, {2, 3, 0, 1}, {2, 3, 1, 0},
      {3, 0, 1, 2}, {3, 0, 2, 1}, {3, 1, 0, 2}, {3, 1, 2, 0}, {3, 2, 0, 1}, {3, 2, 1, 0}};
  F acc(Rational(0));
  for (const auto& p : perms) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
    }
    F term = m[0][p[0]] * m[1][p[1]] * m[2][p[2]] * m[3][p[3]];
    acc = inversions % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

/// Basis of V_3 used to take coordinates in r_determinant.
/// monomial: (x^3, x^2 y, x y^2, y^3).
/// divided_powers: x^{3-k} y^k / ((3-k)! k!), the basis in which the pairing takes values +-1.
enum class V3Basis { monomial, divided_powers };

/// det([g0,u], [g+,u], [g-,u], u) in the chosen V_3 basis, sl2 basis from the frame (x, y).
/// r = K p with K = -6 for divided powers and K = -1/24 for monomials.
template <exact::Field F>
F r_determinant(const BiForm<F>& u, V3Basis basis = V3Basis::divided_powers) {
  require_cubic(u);
  const auto g = forms::sl2_forms(BiForm<F>::x(), BiForm<F>::y());
  static const Rational weight[4] = {Rational(6), Rational(2), Rational(2), Rational(6)};
  const auto row = [&](const BiForm<F>& f) {
    const auto c = f.homogeneous_coeffs(3);
    std::array<F, 4> out{c[0], c[1], c[2], c[3]};
    if (basis == V3Basis::divided_powers) {
      for (std::size_t k = 0; k < 4; ++k) out[k] = out[k] * weight[k];
    }
    return out;
  };
  std::array<std::array<F, 4>, 4> m;
  for (std::size_t k = 0; k < 3; ++k) m[k] = row(forms::bracket(g[k], u));
  m[3] = row(u);
  return detail::det4(m);
}

/// h(u,v) = (1/5)<<u^2,u>_3, v>_2 - (2/35)<<u^2,u>_2, v>_3, an element of V_2.
template <exact::Scalar F>
BiForm<F> h_form(const BiForm<F>& u, const BiForm<F>& v) {
  require_cubic(u);
  require_cubic(v);
  const BiForm<F> u2 = u * u;
  const BiForm<F> t3 = transvectant(u2, u, 3);
  const BiForm<F> t2 = transvectant(u2, u, 2);
  return transvectant(t3, v, 2).scaled(Rational(1, 5)) - transvectant(t2, v, 3).scaled(Rational(2, 35));
}

/// sigma(u,v) = <<u^2,u>_3, v>_3.
template <exact::Scalar F>
F sigma_form(const BiForm<F>& u, const BiForm<F>& v) {
  require_cubic(u);
  require_cubic(v);
  return forms::scalar_part(transvectant(transvectant(u * u, u, 3), v, 3));
}

/// a(u,v) = h(u,v)/p(u); requires p(u) != 0.
template <exact::Field F>
BiForm<F> a_form(const BiForm<F>& u, const BiForm<F>& v) {
  const F p = quartic_invariant(u);
  if (exact::is_zero_value(p)) throw std::domain_error("p(u) = 0: u has a repeated root");
  return h_form(u, v).scaled(F(Rational(1)) / p);
}

/// beta(u,v) = sigma(u,v)/p(u); requires p(u) != 0.
template <exact::Field F>
F beta_form(const BiForm<F>& u, const BiForm<F>& v) {
  const F p = quartic_invariant(u);
  if (exact::is_zero_value(p)) throw std::domain_error("p(u) = 0: u has a repeated root");
  return sigma_form(u, v) / p;
}

}  // namespace painleve::connection
