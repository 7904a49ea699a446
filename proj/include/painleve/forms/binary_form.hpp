#pragma once

#include <algorithm>
#include <concepts>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "painleve/exact/poly_over.hpp"
#include "painleve/exact/rational.hpp"
#include "painleve/exact/scalar.hpp"

namespace painleve::forms {

using exact::Integer;
using exact::Rational;

/// Polynomial in (x, y) over a scalar domain F, stored sparsely by exponent
/// pair (i, j) of x^i y^j. Stored coefficients are never zero.
template <exact::Scalar F>
class BiForm {
 public:
  using Key = std::pair<int, int>;

  BiForm() = default;
  explicit BiForm(const F& c) { set(0, 0, c); }

  static BiForm monomial(int i, int j, const F& c = F(Rational(1))) {
    BiForm r;
    r.set(i, j, c);
    return r;
  }
  static BiForm x() { return monomial(1, 0); }
  static BiForm y() { return monomial(0, 1); }

  /// Linear form c_x x + c_y y.
  static BiForm linear(const F& cx, const F& cy) {
    BiForm r;
    r.set(1, 0, cx);
    r.set(0, 1, cy);
    return r;
  }

  /// Homogeneous form of degree coeffs.size() - 1; coeffs[j] multiplies x^{d-j} y^j.
  static BiForm homogeneous(const std::vector<F>& coeffs) {
    BiForm r;
    const int d = static_cast<int>(coeffs.size()) - 1;
    for (int j = 0; j <= d; ++j) r.set(d - j, j, coeffs[static_cast<std::size_t>(j)]);
    return r;
  }

  const std::map<Key, F>& terms() const { return c_; }

  F coeff(int i, int j) const {
    auto it = c_.find({i, j});
    return it == c_.end() ? F(Rational(0)) : it->second;
  }

  bool is_zero() const { return c_.empty(); }

  /// Largest total degree present; -1 for the zero form.
  int max_degree() const {
    int d = -1;
    for (const auto& [k, v] : c_) d = std::max(d, k.first + k.second);
    return d;
  }

  /// True when every monomial has total degree d (the zero form is homogeneous of every degree).
  bool is_homogeneous(int d) const {
    for (const auto& [k, v] : c_) {
      if (k.first + k.second != d) return false;
    }
    return true;
  }

  BiForm component(int d) const {
    BiForm r;
    for (const auto& [k, v] : c_) {
      if (k.first + k.second == d) r.c_.emplace(k, v);
    }
    return r;
  }

  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [k, v] : c_) {
      const int d = k.first + k.second;
      if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  /// Coefficients of a homogeneous degree-d form ordered x^d, x^{d-1}y, ..., y^d.
  std::vector<F> homogeneous_coeffs(int d) const {
    std::vector<F> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) out.push_back(coeff(d - j, j));
    return out;
  }

  BiForm operator-() const {
    BiForm r = *this;
    for (auto& [k, v] : r.c_) v = -v;
    return r;
  }

  friend BiForm operator+(const BiForm& a, const BiForm& b) {
    BiForm r = a;
    for (const auto& [k, v] : b.c_) r.add(k.first, k.second, v);
    return r;
  }
  friend BiForm operator-(const BiForm& a, const BiForm& b) { return a + (-b); }

  friend BiForm operator*(const BiForm& a, const BiForm& b) {
    BiForm r;
    for (const auto& [ka, va] : a.c_) {
      for (const auto& [kb, vb] : b.c_) r.add(ka.first + kb.first, ka.second + kb.second, va * vb);
    }
    return r;
  }

  BiForm scaled(const F& s) const {
    BiForm r;
    if (exact::is_zero_value(s)) return r;
    for (const auto& [k, v] : c_) r.set(k.first, k.second, v * s);
    return r;
  }
  BiForm scaled(const Rational& s) const
    requires(!std::same_as<F, Rational>)
  {
    BiForm r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : c_) r.set(k.first, k.second, v * s);
    return r;
  }

  friend BiForm operator*(const BiForm& a, const F& s) { return a.scaled(s); }
  friend BiForm operator*(const F& s, const BiForm& a) { return a.scaled(s); }
  friend BiForm operator*(const BiForm& a, const Rational& s)
    requires(!std::same_as<F, Rational>)
  {
    return a.scaled(s);
  }
  friend BiForm operator*(const Rational& s, const BiForm& a)
    requires(!std::same_as<F, Rational>)
  {
    return a.scaled(s);
  }

  BiForm& operator+=(const BiForm& o) { return *this = *this + o; }
  BiForm& operator-=(const BiForm& o) { return *this = *this - o; }

  BiForm pow(unsigned e) const {
    BiForm r(F(Rational(1)));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

  /// Applies fn to every coefficient, producing a form over G.
  template <class Fn>
  auto map_coeffs(Fn fn) const {
    using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
    BiForm<G> r;
    for (const auto& [k, v] : c_) r.add(k.first, k.second, fn(v));
    return r;
  }

  friend bool operator==(const BiForm& a, const BiForm& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second << ")";
      const auto [i, j] = it->first;
      if (i > 0) os << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) os << "*y" << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const BiForm& f) { return os << f.str(); }

  void add(int i, int j, const F& v) {
    if (exact::is_zero_value(v)) return;
    auto [it, inserted] = c_.try_emplace({i, j}, v);
    if (!inserted) {
      it->second = it->second + v;
      if (exact::is_zero_value(it->second)) c_.erase(it);
    }
  }

 private:
  void set(int i, int j, const F& v) {
    if (exact::is_zero_value(v)) {
      c_.erase({i, j});
    } else {
      c_.insert_or_assign({i, j}, v);
    }
  }

  std::map<Key, F> c_;
};

template <exact::Scalar F>
bool is_zero(const BiForm<F>& f) {
  return f.is_zero();
}

namespace detail {

inline Integer falling(int n, int k) {
  Integer r = 1;
  for (int s = 0; s < k; ++s) r *= n - s;
  return r;
}

/// Integer weight of x^i y^j (x) x^k y^l in the p-th transvectant, before 1/p!.
inline Integer transvectant_weight(int i, int j, int k, int l, int p) {
  Integer c = 0;
  for (int s = 0; s <= p; ++s) {
    if (i < p - s || j < s || k < s || l < p - s) continue;
    Integer term = exact::binomial(static_cast<unsigned>(p), static_cast<unsigned>(s)) * falling(i, p - s) *
                   falling(j, s) * falling(k, s) * falling(l, p - s);
    if (s % 2 == 1) term = -term;
    c += term;
  }
  return c;
}

}  // namespace detail

/// The p-th transvectant <u, v>_p. Bilinear, so mixed-degree inputs are handled
/// monomial by monomial; V_i x V_j -> V_{i+j-2p}, zero once p > min(i, j).
template <exact::Scalar F>
BiForm<F> transvectant(const BiForm<F>& u, const BiForm<F>& v, int p) {
  if (p < 0) throw std::invalid_argument("negative transvectant index");
  const Rational inv_pf(Integer(1), exact::factorial(static_cast<unsigned>(p)));
  BiForm<F> r;
  for (const auto& [ku, cu] : u.terms()) {
    const auto [i, j] = ku;
    if (i + j < p) continue;
    for (const auto& [kv, cv] : v.terms()) {
      const auto [k, l] = kv;
      if (k + l < p) continue;
      const Integer wgt = detail::transvectant_weight(i, j, k, l, p);
      if (sgn(wgt) == 0) continue;
      r.add(i + k - p, j + l - p, (cu * cv) * (Rational(wgt) * inv_pf));
    }
  }
  return r;
}

/// The blank-index pairing: sum over d of <u_d, v_d>_d, a scalar.
template <exact::Scalar F>
F pairing(const BiForm<F>& u, const BiForm<F>& v) {
  F acc(Rational(0));
  for (int d : u.degrees()) {
    const BiForm<F> vd = v.component(d);
    if (vd.is_zero()) continue;
    acc = acc + transvectant(u.component(d), vd, d).coeff(0, 0);
  }
  return acc;
}

/// The constant term of a form known to lie in V_0.
template <exact::Scalar F>
F scalar_part(const BiForm<F>& f) {
  return f.coeff(0, 0);
}

/// Degrees of the irreducible summands of V_i (x) V_j.
inline std::vector<int> cg_components(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative degree");
  std::vector<int> out;
  for (int d = i + j; d >= std::abs(i - j); d -= 2) out.push_back(d);
  return out;
}

/// The z^k coefficient of a form whose coefficients are polynomials in z.
template <exact::Scalar F>
BiForm<F> coefficient_form(const BiForm<exact::PolyOver<F>>& f, int k) {
  BiForm<F> r;
  for (const auto& [key, c] : f.terms()) r.add(key.first, key.second, c.coeff(k));
  return r;
}

/// Lifts a form over F to a form over F[z] with constant coefficients.
template <exact::Scalar F>
BiForm<exact::PolyOver<F>> lift(const BiForm<F>& f) {
  return f.map_coeffs([](const F& c) { return exact::PolyOver<F>(c); });
}

}  // namespace painleve::forms
