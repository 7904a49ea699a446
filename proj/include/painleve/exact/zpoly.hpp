#pragma once

// Dense univariate polynomials over the integers. Internal representation
// behind Poly and RatFun; not part of the public surface.

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "painleve/exact/rational.hpp"

namespace painleve::exact::detail {

/// Little-endian coefficient vector without trailing zeros; empty means zero.
using ZPoly = std::vector<Integer>;

inline void trim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

inline int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline ZPoly neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

inline ZPoly scale(const ZPoly& a, const Integer& s) {
  if (s == 0) return {};
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline ZPoly divexact(const ZPoly& a, const Integer& s) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), s.get_mpz_t());
  }
  return r;
}

/// Nonnegative gcd of the coefficients; zero for the zero polynomial.
inline Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline std::size_t max_bits(const ZPoly& a) {
  std::size_t b = 0;
  for (const auto& c : a) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
  return b;
}

inline ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

inline ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

// Kronecker substitution: evaluate at 2^(64*limbs), multiply big integers,
// read the balanced base-2^(64*limbs) digits back off.
namespace kron {

inline Integer pack(const ZPoly& a, std::size_t limbs) {
  std::vector<mp_limb_t> pos(a.size() * limbs, 0);
  std::vector<mp_limb_t> negv(a.size() * limbs, 0);
  bool any_neg = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const mpz_srcptr z = a[i].get_mpz_t();
    const std::size_t n = mpz_size(z);
    if (n > limbs) throw std::logic_error("kronecker slot too small");
    auto& dst = mpz_sgn(z) < 0 ? negv : pos;
    if (mpz_sgn(z) < 0) any_neg = true;
    for (std::size_t k = 0; k < n; ++k) dst[i * limbs + k] = mpz_getlimbn(z, static_cast<mp_size_t>(k));
  }
  Integer p;
  mpz_import(p.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0, 0, pos.data());
  if (any_neg) {
    Integer n;
    mpz_import(n.get_mpz_t(), negv.size(), -1, sizeof(mp_limb_t), 0, 0, negv.data());
    p -= n;
  }
  return p;
}

/// Inverse of pack for a value whose balanced digits all fit the slot.
inline ZPoly unpack(const Integer& value, std::size_t limbs, std::size_t count) {
  const int s = sgn(value);
  ZPoly out(count);
  if (s == 0) return {};
  const std::size_t n = mpz_size(value.get_mpz_t());
  std::vector<mp_limb_t> buf(std::max(n, count * limbs) + limbs, 0);
  for (std::size_t k = 0; k < n; ++k) buf[k] = mpz_getlimbn(value.get_mpz_t(), static_cast<mp_size_t>(k));
  Integer half;
  mpz_setbit(half.get_mpz_t(), 64 * limbs - 1);
  Integer full;
  mpz_setbit(full.get_mpz_t(), 64 * limbs);
  int carry = 0;
  for (std::size_t i = 0; i < count; ++i) {
    Integer d;
    mpz_import(d.get_mpz_t(), limbs, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs);
    d += carry;
    if (d >= half) {
      d -= full;
      carry = 1;
    } else {
      carry = 0;
    }
    out[i] = s < 0 ? Integer(-d) : d;
  }
  for (std::size_t k = count * limbs; k < buf.size(); ++k) {
    if (buf[k] != 0) throw std::logic_error("kronecker unpack overflow");
  }
  if (carry != 0) throw std::logic_error("kronecker unpack overflow");
  trim(out);
  return out;
}

inline std::size_t limbs_for_bits(std::size_t bits) { return bits / 64 + 1; }

}  // namespace kron

inline ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t terms = std::min(a.size(), b.size());
  const std::size_t bits = max_bits(a) + max_bits(b) + mpz_sizeinbase(Integer(terms).get_mpz_t(), 2) + 1;
  const std::size_t limbs = kron::limbs_for_bits(bits);
  const Integer prod = kron::pack(a, limbs) * kron::pack(b, limbs);
  return kron::unpack(prod, limbs, a.size() + b.size() - 1);
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= 6) return mul_schoolbook(a, b);
  return mul_kronecker(a, b);
}

inline ZPoly pow(const ZPoly& a, unsigned e) {
  ZPoly r{Integer(1)};
  ZPoly base = a;
  while (e != 0) {
    if (e & 1U) r = mul(r, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return r;
}

/// Quotient a / b when b divides a in Z[w], otherwise nullopt.
inline std::optional<ZPoly> divide_schoolbook(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = rem[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (const auto& c : rem) {
    if (sgn(c) != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

/// Same contract as divide_schoolbook. Uses a single big-integer division at
/// a point large enough to separate any true quotient's coefficients (bounded
/// via Mignotte), then confirms by multiplying back.
inline std::optional<ZPoly> divide_kronecker(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t qsize = a.size() - b.size() + 1;
  // ||q||_inf <= 2^deg(q) * ||a||_2 <= 2^deg(q) * sqrt(len a) * ||a||_inf
  const std::size_t bits = max_bits(a) + qsize + mpz_sizeinbase(Integer(a.size()).get_mpz_t(), 2) + 2;
  const std::size_t limbs = std::max(kron::limbs_for_bits(bits),
                                     kron::limbs_for_bits(max_bits(b) + 1));
  const Integer na = kron::pack(a, limbs);
  const Integer nb = kron::pack(b, limbs);
  if (!mpz_divisible_p(na.get_mpz_t(), nb.get_mpz_t())) return std::nullopt;
  Integer nq;
  mpz_divexact(nq.get_mpz_t(), na.get_mpz_t(), nb.get_mpz_t());
  ZPoly q;
  try {
    q = kron::unpack(nq, limbs, qsize);
  } catch (const std::logic_error&) {
    return std::nullopt;
  }
  if (mul(q, b) != a) return std::nullopt;
  return q;
}

inline std::optional<ZPoly> divide(const ZPoly& a, const ZPoly& b) {
  if (b.size() <= 4 || a.size() - std::min(a.size(), b.size()) <= 4) return divide_schoolbook(a, b);
  return divide_kronecker(a, b);
}

/// Primitive part with positive leading coefficient, and the signed content
/// factored out (a = content * primitive).
inline std::pair<Integer, ZPoly> primitive_part(const ZPoly& a) {
  if (a.empty()) return {Integer(0), {}};
  Integer c = content(a);
  if (sgn(a.back()) < 0) c = -c;
  if (c == 1) return {c, a};
  return {c, divexact(a, c)};
}

// --- arithmetic modulo word-size primes -----------------------------------

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }
inline u64 addmod(u64 a, u64 b, u64 p) { const u64 s = a + b; return s >= p ? s - p : s; }
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 powmod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1U;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

/// Descending primes below 2^62, generated on demand.
inline u64 prime_at(std::size_t i) {
  static std::mutex mu;
  static std::vector<u64> primes;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= i) {
    u64 c = primes.empty() ? (u64{1} << 62U) - 1 : primes.back() - 2;
    for (;; c -= 2) {
      Integer z(static_cast<unsigned long>(c));
      if (mpz_probab_prime_p(z.get_mpz_t(), 30) != 0) break;
    }
    primes.push_back(c);
  }
  return primes[i];
}

inline void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ModPoly reduce(const ZPoly& a, u64 p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  trim(r);
  return r;
}

/// In-place remainder a mod b, b nonzero.
inline void rem_mod(ModPoly& a, const ModPoly& b, u64 p) {
  const u64 inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = submod(a[shift + j], mulmod(f, b[j], p), p);
    }
    trim(a);
  }
}

/// Monic gcd over F_p.
inline ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    rem_mod(a, b, p);
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

inline Integer symmetric(u64 r, u64 p) {
  Integer z(static_cast<unsigned long>(r));
  if (r > p / 2) z -= Integer(static_cast<unsigned long>(p));
  return z;
}

/// Greatest common divisor of two primitive nonzero integer polynomials,
/// returned primitive with positive leading coefficient, together with the
/// cofactors a/g and b/g. Small-prime modular algorithm with CRT lifting and
/// trial division.
struct GcdResult {
  ZPoly gcd;
  ZPoly cofactor_a;
  ZPoly cofactor_b;
};

inline GcdResult gcd_primitive(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("gcd_primitive: zero input");
  const ZPoly one{Integer(1)};
  if (a.size() == 1 || b.size() == 1) return {one, a, b};
  if (a == b) return {a, one, one};
  const Integer g = exact::gcd(a.back(), b.back());
  const int bound = std::min(degree(a), degree(b));
  int d = bound + 1;
  ZPoly h;
  Integer modulus;
  for (std::size_t i = 0;; ++i) {
    const u64 p = prime_at(i);
    if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
    ModPoly gp = gcd_mod(reduce(a, p), reduce(b, p), p);
    const int e = static_cast<int>(gp.size()) - 1;
    if (e == 0) return {one, a, b};
    if (e > d) continue;
    const u64 gm = mpz_fdiv_ui(g.get_mpz_t(), p);
    for (auto& c : gp) c = mulmod(c, gm, p);
    if (e < d) {
      d = e;
      h.assign(gp.size(), Integer(0));
      for (std::size_t k = 0; k < gp.size(); ++k) h[k] = symmetric(gp[k], p);
      modulus = Integer(static_cast<unsigned long>(p));
      continue;
    }
    const u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    const Integer pz(static_cast<unsigned long>(p));
    const Integer next_modulus = modulus * pz;
    Integer half = next_modulus / 2;
    ZPoly lifted(gp.size());
    for (std::size_t k = 0; k < gp.size(); ++k) {
      const u64 hk = mpz_fdiv_ui(h[k].get_mpz_t(), p);
      const u64 t = mulmod(submod(gp[k], hk, p), minv, p);
      Integer x = h[k] + modulus * Integer(static_cast<unsigned long>(t));
      if (x > half) x -= next_modulus;
      lifted[k] = std::move(x);
    }
    modulus = next_modulus;
    const bool stable = lifted == h;
    h = std::move(lifted);
    if (!stable) continue;
    ZPoly cand = primitive_part(h).second;
    auto qa = divide(a, cand);
    if (!qa) continue;
    auto qb = divide(b, cand);
    if (!qb) continue;
    return {std::move(cand), std::move(*qa), std::move(*qb)};
  }
}

}  // namespace painleve::exact::detail
