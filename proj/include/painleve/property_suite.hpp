#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "painleve/connection/pipeline.hpp"
#include "painleve/forms/sl2.hpp"
#include "painleve/report.hpp"

namespace painleve::properties {

using exact::Integer;
using exact::Rational;
using Form = forms::BiForm<Rational>;

inline constexpr std::uint64_t kDefaultSeed = 20240611;
inline constexpr int kDefaultCases = 100;

/// Small-integer random forms; coefficients are drawn from [-bound, bound].
class FormSampler {
 public:
  explicit FormSampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Form form(int deg, int bound = 5) {
    std::vector<Rational> c;
    for (int j = 0; j <= deg; ++j) c.emplace_back(uniform(-bound, bound));
    return Form::homogeneous(c);
  }

  /// Sum of two homogeneous pieces of independent random degrees.
  Form mixed(int max_deg) { return form(uniform(0, max_deg)) + form(uniform(0, max_deg)); }

  /// A pair of linear forms with <a,b> != 0.
  std::pair<Form, Form> frame() {
    for (;;) {
      Form a = form(1);
      Form b = form(1);
      if (!forms::scalar_part(forms::transvectant(a, b, 1)).is_zero()) return {a, b};
    }
  }

  /// A cubic with p(u) != 0.
  Form generic_cubic() {
    for (;;) {
      Form u = form(3);
      if (!connection::quartic_invariant(u).is_zero()) return u;
    }
  }

 private:
  std::mt19937_64 rng_;
};

/// One randomized property: check returns an empty string on success, else a description.
struct Property {
  std::string name;
  std::function<std::string(FormSampler&)> check;
};

inline Rational signed_factorial_product(int j, int p) {
  Rational r(Integer(exact::factorial(static_cast<unsigned>(j)) * exact::factorial(static_cast<unsigned>(p - j))));
  return j % 2 == 1 ? -r : r;
}

inline std::vector<Property> properties() {
  using forms::bracket;
  using forms::scalar_part;
  using forms::sl2_forms;
  using forms::transvectant;
  std::vector<Property> ps;

  ps.push_back({"transvectant symmetry <u,v>_p = (-1)^p <v,u>_p", [](FormSampler& s) {
                  const Form u = s.mixed(6);
                  const Form v = s.mixed(6);
                  for (int p = 0; p <= 6; ++p) {
                    const Form l = transvectant(u, v, p);
                    const Form r = transvectant(v, u, p);
                    if (!(l == (p % 2 == 0 ? r : -r))) return "fails at p=" + std::to_string(p) + " for u=" + u.str();
                  }
                  return std::string();
                }});

  ps.push_back({"pairing values on a^(p-j) b^j", [](FormSampler& s) {
                  const auto [a, b] = s.frame();
                  const Rational ab = scalar_part(transvectant(a, b, 1));
                  const int p = s.uniform(0, 6);
                  const int j = s.uniform(0, p);
                  const int k = s.uniform(0, p);
                  const Rational got = forms::pairing(a.pow(p - j) * b.pow(j), a.pow(k) * b.pow(p - k));
                  const Rational want = k == j ? signed_factorial_product(j, p) * ab.pow(static_cast<unsigned>(p)) : Rational(0);
                  if (got == want) return std::string();
                  return "p=" + std::to_string(p) + " j=" + std::to_string(j) + " k=" + std::to_string(k) +
                         ": got " + got.str() + ", want " + want.str();
                }});

  ps.push_back({"sl2 bracket relations", [](FormSampler& s) {
                  const auto [a, b] = s.frame();
                  const auto g = sl2_forms(a, b);
                  if (!(bracket(g[0], g[1]) == g[1].scaled(Rational(2)))) return std::string("[g0,g+] != 2 g+");
                  if (!(bracket(g[0], g[2]) == g[2].scaled(Rational(-2)))) return std::string("[g0,g-] != -2 g-");
                  if (!(bracket(g[1], g[2]) == g[0])) return std::string("[g+,g-] != g0");
                  return std::string();
                }});

  ps.push_back({"sl2 action on monomials a^i b^j", [](FormSampler& s) {
                  const auto [a, b] = s.frame();
                  const auto g = sl2_forms(a, b);
                  const int i = s.uniform(0, 5);
                  const int j = s.uniform(0, 5);
                  const Form m = a.pow(i) * b.pow(j);
                  const Form up = j > 0 ? (a.pow(i + 1) * b.pow(j - 1)).scaled(Rational(j)) : Form();
                  const Form down = i > 0 ? (a.pow(i - 1) * b.pow(j + 1)).scaled(Rational(i)) : Form();
                  const std::string at = " at i=" + std::to_string(i) + " j=" + std::to_string(j);
                  if (!(bracket(g[0], m) == m.scaled(Rational(i - j)))) return "g0" + at;
                  if (!(bracket(g[1], m) == up)) return "g+" + at;
                  if (!(bracket(g[2], m) == down)) return "g-" + at;
                  return std::string();
                }});

  ps.push_back({"h(u + z a^2 b, a^2 b) degree bounds", [](FormSampler& s) {
                  const Form u = s.form(3);
                  const auto [a, b] = s.frame();
                  const Rational ab = scalar_part(transvectant(a, b, 1));
                  const auto h = connection::h_coeffs_direct(u, a, b);
                  using P = exact::PolyOver<Rational>;
                  const P z2(std::vector<Rational>{Rational(0), Rational(0), Rational(1)});
                  const P k0 = h.h0 + z2 * P(Rational(8) * ab.pow(3) * forms::pairing(u, a.pow(3)));
                  if (k0.degree() > 1) return "g0 part of k(z) has degree " + std::to_string(k0.degree());
                  if (h.hplus.degree() > 1) return std::string("h+ has degree > 1");
                  if (h.hminus.degree() > 1) return std::string("h- has degree > 1");
                  return std::string();
                }});

  ps.push_back({"reconstruction [a(u,v), u] + beta(u,v) u = v", [](FormSampler& s) {
                  const Form u = s.generic_cubic();
                  const Form v = s.form(3);
                  const Form lhs = bracket(connection::a_form(u, v), u) + u.scaled(connection::beta_form(u, v));
                  if (lhs == v) return std::string();
                  return "u=" + u.str() + " v=" + v.str();
                }});
  return ps;
}

/// Runs every property for `cases` random draws. Suite k uses seed + k, so
/// equal seeds give equal reports up to elapsed_ms.
inline VerificationReport run_property_suite(std::uint64_t seed = kDefaultSeed, int cases = kDefaultCases) {
  VerificationReport rep;
  rep.command = "selftest --seed " + std::to_string(seed);
  const auto ps = properties();
  for (std::size_t k = 0; k < ps.size(); ++k) {
    rep.run(ps[k].name, [&] {
      FormSampler sampler(seed + k);
      for (int n = 0; n < cases; ++n) {
        const std::string why = ps[k].check(sampler);
        if (!why.empty()) return std::pair{false, "case " + std::to_string(n) + ": " + why};
      }
      return std::pair{true, std::to_string(cases) + "/" + std::to_string(cases) + " cases"};
    });
  }
  return rep;
}

}  // namespace painleve::properties
