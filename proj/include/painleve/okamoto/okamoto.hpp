#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/report.hpp"
#include "painleve/solutions/catalog.hpp"

namespace painleve::okamoto {

using solutions::Catalog;
using solutions::PviSolution;
using solutions::RatFun;
using solutions::Rational;
using solutions::Theta;

/// The generators R1..R5; a word is applied rightmost-first.
enum class Gen { R1 = 1, R2, R3, R4, R5 };

struct OkamotoOp {
  std::vector<Gen> word;  // word[0] is the leftmost letter

  std::string str() const {
    std::string s;
    for (const Gen g : word) s += (s.empty() ? "R" : " R") + std::to_string(static_cast<int>(g));
    return s;
  }

  friend OkamotoOp operator*(const OkamotoOp& a, const OkamotoOp& b) {
    OkamotoOp r = a;
    r.word.insert(r.word.end(), b.word.begin(), b.word.end());
    return r;
  }
  friend bool operator==(const OkamotoOp&, const OkamotoOp&) = default;
};

/// B = (R1 R2 R3 R5) R4 (R5 R3 R2 R1).
inline OkamotoOp op_b() {
  return {{Gen::R1, Gen::R2, Gen::R3, Gen::R5, Gen::R4, Gen::R5, Gen::R3, Gen::R2, Gen::R1}};
}
/// Q = B R5.
inline OkamotoOp op_q() { return op_b() * OkamotoOp{{Gen::R5}}; }
/// Q^{-1} = R5 B.
inline OkamotoOp op_qinv() { return OkamotoOp{{Gen::R5}} * op_b(); }

/// Parses a word over {R1..R5, B, Q, Qinv}; letters may be separated by spaces,
/// commas or '*', or run together ("R5R4"). "Q^-1" is accepted for Qinv.
inline OkamotoOp parse_word(const std::string& text) {
  OkamotoOp op;
  std::size_t i = 0;
  const auto starts = [&](const char* tok) { return text.compare(i, std::char_traits<char>::length(tok), tok) == 0; };
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == ',' || c == '*' || c == '\t') {
      ++i;
    } else if ((c == 'R' || c == 'r') && i + 1 < text.size() && text[i + 1] >= '1' && text[i + 1] <= '5') {
      op.word.push_back(static_cast<Gen>(text[i + 1] - '0'));
      i += 2;
    } else if (c == 'B' || c == 'b') {
      op = op * op_b();
      ++i;
    } else if (starts("Qinv") || starts("qinv")) {
      op = op * op_qinv();
      i += 4;
    } else if (starts("Q^-1") || starts("q^-1")) {
      op = op * op_qinv();
      i += 4;
    } else if (c == 'Q' || c == 'q') {
      op = op * op_q();
      ++i;
    } else {
      throw std::invalid_argument("bad Okamoto word '" + text + "' at position " + std::to_string(i));
    }
  }
  if (op.word.empty()) throw std::invalid_argument("empty Okamoto word");
  return op;
}

/// R1..R3 negate theta_j; R4 maps theta4 to 2 - theta4. lambda is unchanged.
inline PviSolution r_reflect(int j, const PviSolution& s) {
  if (j < 1 || j > 4) throw std::invalid_argument("reflection index must be 1..4");
  PviSolution r{s.lambda, s.theta, std::nullopt};
  auto& th = r.theta[static_cast<std::size_t>(j - 1)];
  th = j == 4 ? Rational(2) - th : -th;
  return r;
}

/// [lambda + 2(mu.theta)/D; theta - 2(mu.theta) mu] with
/// D = ((t-1)lambda' - theta1)/lambda + (lambda' - 1 - theta2)/(lambda - t) - (t lambda' + theta3)/(lambda - 1).
/// On mu.theta = 0 the correction vanishes and s is returned unchanged.
inline PviSolution r5(const PviSolution& s) {
  const Rational mt = dot(Theta::mu(), s.theta);
  if (mt.is_zero()) return {s.lambda, s.theta, std::nullopt};
  const RatFun& t = solutions::t_of_w();
  const RatFun& l = s.lambda;
  const RatFun one(1);
  if (l.is_zero() || l == one || l == t) throw std::domain_error("R5 undefined (lambda is identically 0, 1 or t)");
  const RatFun lp = solutions::d_dt(l);
  const RatFun d = ((t - one) * lp - RatFun(s.theta.t1)) / l + (lp - one - RatFun(s.theta.t2)) / (l - t) -
                   (t * lp + RatFun(s.theta.t3)) / (l - one);
  if (d.is_zero()) throw std::domain_error("R5 undefined (Riccati-type degeneracy)");
  return {l + RatFun(Rational(2) * mt) / d, s.theta - (Rational(2) * mt) * Theta::mu(), std::nullopt};
}

inline PviSolution apply_gen(Gen g, const PviSolution& s) {
  return g == Gen::R5 ? r5(s) : r_reflect(static_cast<int>(g), s);
}

/// Rightmost letter first.
inline PviSolution apply_word(const OkamotoOp& op, const PviSolution& s) {
  PviSolution cur{s.lambda, s.theta, std::nullopt};
  for (auto it = op.word.rbegin(); it != op.word.rend(); ++it) cur = apply_gen(*it, cur);
  return cur;
}

/// Theta-only action; agrees with the theta part of apply_word and never fails.
inline Theta apply_word_theta(const OkamotoOp& op, Theta th) {
  for (auto it = op.word.rbegin(); it != op.word.rend(); ++it) {
    if (*it == Gen::R5) {
      th = th - (Rational(2) * dot(Theta::mu(), th)) * Theta::mu();
    } else {
      auto& x = th[static_cast<std::size_t>(static_cast<int>(*it) - 1)];
      x = *it == Gen::R4 ? Rational(2) - x : -x;
    }
  }
  return th;
}

/// Why two solutions differ, or empty when equal.
inline std::string mismatch(const PviSolution& got, const PviSolution& want) {
  std::string why;
  if (!(got.theta == want.theta)) why += "theta " + got.theta.str() + " != " + want.theta.str();
  if (!(got.lambda == want.lambda)) {
    if (!why.empty()) why += "; ";
    why += "lambda differs";
  }
  return why;
}

struct HierarchyOptions {
  int max_m = 4;
  const Catalog* catalog = &Catalog::builtin();
  /// Called with each Q^k output for k beyond the catalog; no comparison is made there.
  std::function<void(int, Sign, const PviSolution&)> on_unverified;
};

namespace detail {

inline std::int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

/// Iterates op from the m = 0 entry of the given sign, comparing against the catalog.
inline VerificationReport chain(const HierarchyOptions& opt, Sign sign) {
  VerificationReport rep;
  const OkamotoOp op = sign == Sign::plus ? op_q() : op_qinv();
  const std::string name = sign == Sign::plus ? "Q^" : "Q^-";
  const std::string side = sign == Sign::plus ? "+" : "-";
  PviSolution cur;
  try {
    cur = opt.catalog->solution(0, sign);
  } catch (const std::exception& e) {
    rep.add_error("chain" + side + " start", e.what());
    return rep;
  }
  for (int m = 1; m <= opt.max_m; ++m) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string label = name + std::to_string(m) + " Lambda_0^" + side + " = Lambda_" + std::to_string(m) + "^" + side;
    try {
      cur = apply_word(op, cur);
    } catch (const std::exception& e) {
      rep.add_error(label, e.what(), ms_since(t0));
      return rep;  // later steps depend on this one
    }
    if (!opt.catalog->contains(m, sign)) {
      if (opt.on_unverified) opt.on_unverified(m, sign, cur);
      continue;
    }
    const std::string why = mismatch(cur, opt.catalog->solution(m, sign));
    rep.add(label, why.empty(), why.empty() ? "exact match" : why, ms_since(t0));
  }
  return rep;
}

}  // namespace detail

/// Q chain from Lambda_0^+ and Q^{-1} chain from Lambda_0^- (run concurrently),
/// then R5 links for every m with both signs cataloged and B links m^- -> (m+1)^+.
inline VerificationReport hierarchy_check(const HierarchyOptions& opt) {
  VerificationReport rep;
  rep.command = "hierarchy --max-m " + std::to_string(opt.max_m);
  auto plus = std::async(std::launch::async, detail::chain, std::cref(opt), Sign::plus);
  auto minus = std::async(std::launch::async, detail::chain, std::cref(opt), Sign::minus);
  rep.append(plus.get());
  rep.append(minus.get());
  const Catalog& cat = *opt.catalog;
  const OkamotoOp b = op_b();
  for (int m = 0; m <= opt.max_m; ++m) {
    if (cat.contains(m, Sign::plus) && cat.contains(m, Sign::minus)) {
      rep.run("R5 Lambda_" + std::to_string(m) + "^+ = Lambda_" + std::to_string(m) + "^-", [&] {
        const std::string why = mismatch(r5(cat.solution(m, Sign::plus)), cat.solution(m, Sign::minus));
        return std::pair{why.empty(), why.empty() ? std::string("exact match") : why};
      });
    }
    if (m + 1 <= opt.max_m && cat.contains(m, Sign::minus) && cat.contains(m + 1, Sign::plus)) {
      rep.run("B Lambda_" + std::to_string(m) + "^- = Lambda_" + std::to_string(m + 1) + "^+", [&] {
        const std::string why =
            mismatch(apply_word(b, cat.solution(m, Sign::minus)), cat.solution(m + 1, Sign::plus));
        return std::pair{why.empty(), why.empty() ? std::string("exact match") : why};
      });
    }
  }
  return rep;
}

inline VerificationReport hierarchy_check(int max_m) {
  HierarchyOptions opt;
  opt.max_m = max_m;
  return hierarchy_check(opt);
}

}  // namespace painleve::okamoto
