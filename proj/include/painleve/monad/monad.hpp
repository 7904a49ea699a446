#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "painleve/exact/root_scalar.hpp"
#include "painleve/report.hpp"

namespace painleve::monad {

using exact::Integer;
using exact::Rational;
using exact::RootScalar;

/// Summand degrees 2l of W(m): 0 <= l <= m-1 with l = m-1 mod 2, ascending.
inline std::vector<int> w_indices(int m) {
  std::vector<int> ls;
  for (int l = (m - 1) % 2; l <= m - 1; l += 2) {
    if (l >= 0) ls.push_back(l);
  }
  return ls;
}

inline int max_p(int l) { return std::min(2 * l, 3); }

struct MonadCoeffs {
  int m = 0;
  std::map<std::pair<int, int>, RootScalar> entries;

  bool has(int l, int p) const { return entries.count({l, p}) != 0; }
  const RootScalar& at(int l, int p) const {
    auto it = entries.find({l, p});
    if (it == entries.end()) {
      throw std::out_of_range("no coefficient a_{" + std::to_string(l) + "," + std::to_string(p) + "}");
    }
    return it->second;
  }
};

/// The closed-form coefficient set for W(m) (x) V_3 -> V-hat(m).
inline MonadCoeffs generate_coeffs(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  const Integer n = Integer(2 * m + 1) * (2 * m + 1);
  MonadCoeffs c;
  c.m = m;
  for (int l : w_indices(m)) {
    const Integer lo = 2 * l - 1;
    const Integer hi = 2 * l + 3;
    const RootScalar vals[4] = {
        RootScalar::sqrt_of(9 * n - hi * hi, Rational(lo)),
        RootScalar::sqrt_of(n - hi * hi, Rational(lo)),
        RootScalar::sqrt_of(n - lo * lo, Rational(hi)),
        RootScalar::sqrt_of(9 * n - lo * lo, Rational(hi)),
    };
    for (int p = 0; p <= max_p(l); ++p) c.entries.emplace(std::pair{l, p}, vals[p]);
  }
  return c;
}

/// Injectivity and diagonal/off-diagonal isotropy, one report case per instance.
inline VerificationReport verify_monad(const MonadCoeffs& c) {
  VerificationReport rep;
  rep.command = "monad verify --m " + std::to_string(c.m);
  const auto ls = w_indices(c.m);
  const auto sq = [&](int l, int p) { return c.at(l, p).square(); };
  const auto in_w = [&](int l) { return std::find(ls.begin(), ls.end(), l) != ls.end(); };

  for (int l : ls) {
    rep.run("injectivity l=" + std::to_string(l), [&] {
      const RootScalar& a = c.at(l, 0);
      return std::pair{!a.is_zero(), "a_{l,0} = " + a.str()};
    });
  }
  for (int l : ls) {
    if (l < 1) continue;
    rep.run("diagonal-1 l=" + std::to_string(l), [&] {
      const Rational lhs = Rational((2 * l - 1) * (2 * l - 1)) * sq(l, 2);
      const Rational rhs = Rational(2 * l + 1) * sq(l, 0) + Rational(2 * l * (2 * l - 3)) * sq(l, 1);
      return std::pair{lhs == rhs, "lhs=" + lhs.str() + " rhs=" + rhs.str()};
    });
  }
  for (int l : ls) {
    if (l < 2) continue;
    rep.run("diagonal-2 l=" + std::to_string(l), [&] {
      const Rational lhs = Rational((2 * l - 1) * (2 * l - 1)) * sq(l, 3);
      const Rational rhs = Rational((2 * l + 2) * (2 * l + 5)) * sq(l, 0) - Rational(9 * (2 * l + 1)) * sq(l, 1);
      return std::pair{lhs == rhs, "lhs=" + lhs.str() + " rhs=" + rhs.str()};
    });
  }
  for (int l : ls) {
    if (l < 1 || !in_w(l + 2)) continue;
    rep.run("off-diagonal l=" + std::to_string(l) + ",l+2=" + std::to_string(l + 2), [&] {
      const RootScalar lhs = exact::root_mul(c.at(l, 0), c.at(l + 2, 2));
      const RootScalar rhs = exact::root_mul(c.at(l, 1), c.at(l + 2, 3));
      return std::pair{lhs == rhs, "lhs=" + lhs.str() + " rhs=" + rhs.str()};
    });
  }
  if (c.m >= 1) {
    rep.run("a_{m-1,1} = 0", [&] {
      const int l = c.m - 1;
      if (!c.has(l, 1)) return std::pair{true, std::string("absent (2l < 1)")};
      return std::pair{c.at(l, 1).is_zero(), "a_{m-1,1} = " + c.at(l, 1).str()};
    });
  }
  return rep;
}

struct SpaceDims {
  int m = 0;
  long dimW = 0;
  long dimVhat = 0;
  long dimV = 0;
  long rank = 0;
  long c2 = 0;
};

/// Dimension bookkeeping for W(m), V-hat(m) = V_1 + V_3 + ... + V_{2m+1} and V(m) = V-hat(m) minus V_{2m-1}.
inline SpaceDims space_dims(int m) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  SpaceDims d;
  d.m = m;
  for (int l : w_indices(m)) d.dimW += 2 * l + 1;
  for (int j = 0; j <= m; ++j) d.dimVhat += 2 * j + 2;
  const long cancelled = 2L * m;  // dim V_{2m-1}, zero for m = 0
  d.dimV = d.dimVhat - cancelled;
  d.rank = d.dimVhat - 2 * d.dimW - cancelled;
  d.c2 = d.dimW;
  return d;
}

}  // namespace painleve::monad
