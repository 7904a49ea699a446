#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "painleve/connection/pipeline.hpp"
#include "painleve/monad/monad.hpp"
#include "painleve/okamoto/okamoto.hpp"
#include "painleve/property_suite.hpp"
#include "painleve/report.hpp"
#include "painleve/solutions/catalog.hpp"

namespace painleve::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

using json = nlohmann::ordered_json;

/// 64-bit FNV-1a, rendered as 16 hex digits; names output files by content.
inline std::string content_hash(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

/// Writes data to <dir>/<stem>-<hash>.json and returns the path.
inline std::string write_hashed(const std::string& dir, const std::string& stem, const std::string& data) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / (stem + "-" + content_hash(data) + ".json");
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << data;
  return path.string();
}

inline json rationals_json(const std::vector<exact::Rational>& v) {
  auto a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

/// Any solution, not only cataloged ones: lambda as coefficient lists, lowest degree first.
inline json solution_json(const solutions::PviSolution& s) {
  json j;
  if (s.label) {
    j["m"] = s.label->m;
    j["sign"] = to_string(s.label->sign);
  }
  j["theta"] = {s.theta.t1.str(), s.theta.t2.str(), s.theta.t3.str(), s.theta.t4.str()};
  j["lambda_num"] = rationals_json(s.lambda.num().coefficients());
  j["lambda_den"] = rationals_json(s.lambda.den().coefficients());
  return j;
}

/// Label of the catalog entry equal to s, if any.
inline std::string identify(const solutions::PviSolution& s) {
  for (const auto& e : solutions::Catalog::builtin().entries()) {
    if (e.solution() == s) return "Lambda_" + std::to_string(e.m) + "^" + to_string(e.sign);
  }
  return "";
}

inline std::string abbreviate(const std::string& s, std::size_t n = 200) {
  return s.size() <= n ? s : s.substr(0, n) + "... (" + std::to_string(s.size()) + " chars)";
}

struct Options {
  int m = 0;
  std::string sign = "plus";
  int max_m = 4;
  std::string word;
  std::uint64_t seed = properties::kDefaultSeed;
  std::string out;
  std::string file;
};

inline VerificationReport verify_pvi(const Options& o) {
  const Sign sign = parse_sign(o.sign);
  const auto& cat = solutions::Catalog::builtin();
  const auto s = cat.solution(o.m, sign);  // throws NotInCatalog
  VerificationReport rep;
  rep.command = "verify pvi --m " + std::to_string(o.m) + " --sign " + o.sign;
  rep.run("pvi_residual Lambda_" + std::to_string(o.m) + "^" + to_string(sign) + " at theta=" + s.theta.str(), [&] {
    const auto r = solutions::pvi_residual(s);
    return std::pair{r.is_zero(), r.is_zero() ? std::string("residual = 0") : "residual = " + abbreviate(r.str())};
  });
  if (!o.out.empty()) write_hashed(o.out, "pvi-m" + std::to_string(o.m) + o.sign, solutions::Catalog::entry_to_json(cat.entry(o.m, sign)).dump(2));
  return rep;
}

inline VerificationReport monad_verify(const Options& o) {
  if (o.m < 0) throw std::invalid_argument("--m must be nonnegative");
  VerificationReport rep = monad::verify_monad(monad::generate_coeffs(o.m));
  rep.run("dimW(m) = m(m+1)/2", [&] {
    const auto d = monad::space_dims(o.m);
    const long want = static_cast<long>(o.m) * (o.m + 1) / 2;
    return std::pair{d.dimW == want, "dimW=" + std::to_string(d.dimW) + " dimVhat=" + std::to_string(d.dimVhat) +
                                         " dimV=" + std::to_string(d.dimV) + " rank=" + std::to_string(d.rank)};
  });
  return rep;
}

inline VerificationReport derive_m0(const Options& o) {
  const Sign sign = parse_sign(o.sign);
  VerificationReport rep;
  rep.command = "derive-m0 --sign " + o.sign;
  rep.run("lambda_0^" + to_string(sign) + " from the connection pipeline matches the catalog", [&] {
    const auto lambda = connection::solve_lambda0(sign);
    const bool ok = lambda == solutions::Catalog::builtin().solution(0, sign).lambda;
    return std::pair{ok, "lambda = " + lambda.str()};
  });
  return rep;
}

inline VerificationReport okamoto_apply(const Options& o) {
  const Sign sign = parse_sign(o.sign);
  const auto op = okamoto::parse_word(o.word);
  const auto start = solutions::Catalog::builtin().solution(o.m, sign);
  VerificationReport rep;
  rep.command = "okamoto apply --word \"" + o.word + "\" --m " + std::to_string(o.m) + " --sign " + o.sign;
  solutions::PviSolution image;
  rep.run("apply " + op.str(), [&] {
    image = okamoto::apply_word(op, start);
    const std::string id = identify(image);
    return std::pair{true, "theta=" + image.theta.str() + (id.empty() ? "" : "; equals " + id)};
  });
  if (rep.passed()) {
    rep.run("image solves P_VI at its theta", [&] {
      const auto r = solutions::pvi_residual(image);
      return std::pair{r.is_zero(), r.is_zero() ? std::string("residual = 0") : "residual = " + abbreviate(r.str())};
    });
    if (!o.out.empty()) write_hashed(o.out, "okamoto", solution_json(image).dump(2));
  }
  return rep;
}

inline VerificationReport hierarchy(const Options& o, std::ostream& err) {
  if (o.max_m < 0) throw std::invalid_argument("--max-m must be nonnegative");
  okamoto::HierarchyOptions ho;
  ho.max_m = o.max_m;
  std::mutex mu;
  ho.on_unverified = [&](int m, Sign s, const solutions::PviSolution& sol) {
    std::lock_guard<std::mutex> lock(mu);
    std::string where;
    if (!o.out.empty()) where = " -> " + write_hashed(o.out, "unverified-m" + std::to_string(m) + sign_word(s), solution_json(sol).dump(2));
    err << "unverified (no reference data): m=" << m << to_string(s) << where << "\n";
  };
  return okamoto::hierarchy_check(ho);
}

inline VerificationReport catalog_export(const Options& o) {
  VerificationReport rep;
  rep.command = "catalog export";
  const std::string data = solutions::Catalog::builtin().to_json().dump(2);
  rep.run("export", [&] { return std::pair{true, write_hashed(o.out, "catalog", data)}; });
  return rep;
}

inline VerificationReport catalog_check(const Options& o) {
  std::ifstream f(o.file);
  if (!f) throw std::invalid_argument("cannot read " + o.file);
  const auto cat = solutions::Catalog::from_json(nlohmann::json::parse(f));
  VerificationReport rep;
  rep.command = "catalog check " + o.file;
  for (const auto& e : cat.entries()) {
    const std::string tag = "Lambda_" + std::to_string(e.m) + "^" + to_string(e.sign);
    rep.run("pvi_residual " + tag, [&] {
      const auto r = solutions::pvi_residual(e.solution());
      return std::pair{r.is_zero(), r.is_zero() ? std::string("residual = 0") : "residual = " + abbreviate(r.str())};
    });
    const auto& builtin = solutions::Catalog::builtin();
    if (builtin.contains(e.m, e.sign)) {
      rep.run("matches builtin " + tag, [&] {
        const auto& b = builtin.entry(e.m, e.sign);
        const bool ok = b.f == e.f && b.g == e.g;
        return std::pair{ok, std::string(ok ? "identical f, g" : "f or g differs")};
      });
    }
  }
  return rep;
}

/// Parses args (without the program name) and runs one subcommand.
/// The report goes to out as JSON; usage errors go to err with exit code 2.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of algebraic Painleve VI solutions and their Okamoto hierarchy", "pvi-verify"};
  app.require_subcommand(1);
  Options o;
  const auto sign_opt = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus", "+", "-"}));
    if (required) opt->required();
  };

  auto* verify = app.add_subcommand("verify", "verify a cataloged solution");
  verify->require_subcommand(1);
  auto* verify_pvi_cmd = verify->add_subcommand("pvi", "exact P_VI residual of a catalog entry");
  verify_pvi_cmd->add_option("--m", o.m, "catalog index")->required();
  sign_opt(verify_pvi_cmd, true);
  verify_pvi_cmd->add_option("--out", o.out, "directory for content-hashed outputs");

  auto* monad_cmd = app.add_subcommand("monad", "monad coefficients");
  monad_cmd->require_subcommand(1);
  auto* monad_verify_cmd = monad_cmd->add_subcommand("verify", "injectivity and isotropy of the closed-form coefficients");
  monad_verify_cmd->add_option("--m", o.m, "instanton index")->required();

  auto* derive = app.add_subcommand("derive-m0", "lambda_0 from the m = 0 logarithmic connection");
  sign_opt(derive, true);

  auto* oka = app.add_subcommand("okamoto", "Okamoto transformations");
  oka->require_subcommand(1);
  auto* oka_apply = oka->add_subcommand("apply", "apply a word in R1..R5, B, Q, Qinv to a catalog entry");
  oka_apply->add_option("--word", o.word, "word, rightmost letter applied first")->required();
  oka_apply->add_option("--m", o.m, "catalog index")->required();
  sign_opt(oka_apply, true);
  oka_apply->add_option("--out", o.out, "directory for content-hashed outputs");

  auto* hier = app.add_subcommand("hierarchy", "Q and Q^-1 chains against the catalog");
  hier->add_option("--max-m", o.max_m, "last chain index")->capture_default_str();
  hier->add_option("--out", o.out, "directory for content-hashed outputs");

  auto* cat = app.add_subcommand("catalog", "catalog import and export");
  cat->require_subcommand(1);
  auto* cat_export = cat->add_subcommand("export", "write the catalog as JSON");
  cat_export->add_option("--out", o.out, "directory; without it the catalog is printed");
  auto* cat_check = cat->add_subcommand("check", "verify a catalog JSON file");
  cat_check->add_option("file", o.file, "catalog JSON")->required();

  auto* selftest = app.add_subcommand("selftest", "randomized property suite");
  selftest->add_option("--seed", o.seed, "random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  VerificationReport rep;
  try {
    if (*verify_pvi_cmd) {
      rep = verify_pvi(o);
    } else if (*monad_verify_cmd) {
      rep = monad_verify(o);
    } else if (*derive) {
      rep = derive_m0(o);
    } else if (*oka_apply) {
      rep = okamoto_apply(o);
    } else if (*hier) {
      rep = hierarchy(o, err);
    } else if (*cat_export) {
      if (o.out.empty()) {
        out << solutions::Catalog::builtin().to_json().dump(2) << "\n";
        return kPass;
      }
      rep = catalog_export(o);
    } else if (*cat_check) {
      rep = catalog_check(o);
    } else if (*selftest) {
      rep = properties::run_property_suite(o.seed);
    }
  } catch (const solutions::NotInCatalog& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  out << rep.to_json().dump(2) << "\n";
  return rep.passed() ? kPass : kFail;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace painleve::cli
