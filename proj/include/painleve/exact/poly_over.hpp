#pragma once

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "painleve/exact/scalar.hpp"

namespace painleve::exact {

/// Dense univariate polynomial over an arbitrary scalar domain F.
/// Used for the auxiliary indeterminate z with coefficients in Q or Q(w).
template <Scalar F>
class PolyOver {
 public:
  PolyOver() = default;
  PolyOver(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) c_.push_back(c);
  }
  PolyOver(const Rational& c)  // NOLINT(google-explicit-constructor)
    requires(!std::same_as<F, Rational>)
      : PolyOver(F(c)) {}
  explicit PolyOver(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static PolyOver variable() { return PolyOver(std::vector<F>{F(Rational(0)), F(Rational(1))}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }

  F coeff(int k) const {
    if (k < 0 || k > degree()) return F(Rational(0));
    return c_[static_cast<std::size_t>(k)];
  }
  const std::vector<F>& coefficients() const { return c_; }

  F evaluate(const F& x) const {
    F acc(Rational(0));
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  PolyOver operator-() const {
    PolyOver r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend PolyOver operator+(const PolyOver& a, const PolyOver& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
    return PolyOver(std::move(r));
  }
  friend PolyOver operator-(const PolyOver& a, const PolyOver& b) { return a + (-b); }
  friend PolyOver operator*(const PolyOver& a, const PolyOver& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(Rational(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return PolyOver(std::move(r));
  }
  friend PolyOver operator*(const PolyOver& a, const Rational& s) {
    std::vector<F> r = a.c_;
    for (auto& c : r) c = c * s;
    return PolyOver(std::move(r));
  }

  /// Division by a constant polynomial; any other divisor is an error.
  friend PolyOver operator/(const PolyOver& a, const PolyOver& b)
    requires Field<F>
  {
    if (b.degree() != 0) throw std::domain_error("division by a non-constant polynomial");
    std::vector<F> r = a.c_;
    for (auto& c : r) c = c / b.c_[0];
    return PolyOver(std::move(r));
  }

  friend bool operator==(const PolyOver& a, const PolyOver& b) { return a.c_ == b.c_; }

  std::string str(const std::string& var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const PolyOver& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <Scalar F>
bool is_zero(const PolyOver<F>& p) {
  return p.is_zero_poly();
}

}  // namespace painleve::exact
