#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "painleve/solutions/pvi.hpp"

namespace painleve::solutions {

/// Raised for (m, sign) pairs outside the catalog; the CLI maps it to a usage error.
class NotInCatalog : public std::out_of_range {
 public:
  NotInCatalog() : std::out_of_range("not in catalog") {}
};

/// Polynomial in w^2 given as decimal coefficients of w^0, w^2, w^4, ...
inline Poly even_poly(const std::vector<std::string>& coeffs) {
  std::vector<Rational> dense;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    dense.emplace_back(exact::parse_integer(coeffs[k]));
    if (k + 1 < coeffs.size()) dense.emplace_back(0);
  }
  return Poly::from_coeffs(dense);
}

/// Inverse of even_poly; throws if p has an odd-degree term.
inline std::vector<std::string> even_coeffs(const Poly& p) {
  std::vector<std::string> out;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational c = p.coeff(k);
    if (k % 2 == 1) {
      if (!c.is_zero()) throw std::invalid_argument("polynomial is not even");
      continue;
    }
    if (!c.is_integer()) throw std::invalid_argument("catalog coefficients must be integers");
    out.push_back(exact::to_decimal(c.num()));
  }
  return out;
}

struct CatalogEntry {
  int m;
  Sign sign;
  Poly f;
  Poly g;

  Theta theta() const { return Rational(sign_value(sign) * (2 * m + 1)) * Theta::mu(); }
  PviSolution solution() const { return {lambda_from_fg(f, g), theta(), Label{m, sign}}; }
};

namespace detail {

/// content * prod factor^power, each factor an even polynomial.
struct Factored {
  const char* content;
  std::vector<std::pair<std::vector<std::string>, unsigned>> factors;

  Poly expand() const {
    Poly p(Rational(exact::parse_integer(content)));
    for (const auto& [c, e] : factors) p = p * even_poly(c).pow(e);
    return p;
  }
};

// Frequently repeated factors.
inline const std::vector<std::string> kThreePlusW2{"3", "1"};
inline const std::vector<std::string> kW2MinusOne{"-1", "1"};

struct FactoredEntry {
  int m;
  Sign sign;
  Factored f;
  Factored g;
};

inline const std::vector<FactoredEntry>& factored_table() {
  static const std::vector<FactoredEntry> table = {
      {0, Sign::plus, {"1", {}}, {"0", {}}},
      {0, Sign::minus, {"0", {}}, {"1", {}}},
      {1, Sign::plus, {"1", {}}, {"0", {}}},
      {1, Sign::minus, {"4", {}}, {"1", {{kThreePlusW2, 1}}}},
      {2, Sign::plus, {"12", {{kThreePlusW2, 2}}}, {"1", {{kW2MinusOne, 2}}}},
      {2, Sign::minus,
       {"16", {{{"7", "1"}, 1}, {{"4", "3", "1"}, 1}}},
       {"1", {{kThreePlusW2, 1}, {{"77", "89", "23", "3"}, 1}}}},
      {3, Sign::plus,
       {"8", {{{"3381", "7536", "6291", "2576", "611", "80", "5"}, 1}}},
       {"1", {{kW2MinusOne, 2}, {kThreePlusW2, 1}, {{"147", "111", "57", "5"}, 1}}}},
      {3, Sign::minus,
       {"12", {{kThreePlusW2, 2}, {{"3528", "7272", "6453", "2460", "678", "84", "5"}, 1}}},
       {"1",
        {{{"164052", "590328", "831465", "631260", "294435", "88938", "18207", "2520", "225", "10"}, 1}}}},
      {4, Sign::plus,
       {"4",
        {{{"14619528", "69918552", "140631309", "159541866", "116463663", "58384152", "20911122", "5489100",
           "1072278", "154176", "15729", "1050", "35"},
          1}}},
       {"3",
        {{kW2MinusOne, 2},
         {kThreePlusW2, 1},
         {{"141372", "402732", "558819", "432297", "209331", "71361", "16497", "2403", "189", "7"}, 1}}}},
      {4, Sign::minus,
       {"8",
        {{{"326559519", "1822652766", "4648210677", "6998194368", "7025103459", "5035679226", "2678780673",
           "1084740444", "341288829", "84427122", "16389951", "2449224", "272257", "21430", "1099", "28"},
          1}}},
       {"1",
        {{kThreePlusW2, 1},
         {{"334968777", "2143174869", "5776302213", "8923510233", "8999893881", "6350646645", "3281293773",
           "1278719217", "383574771", "89689431", "16510551", "2388627", "267339", "22239", "1239", "35"},
          1}}}},
      {5, Sign::plus,
       {"6",
        {{kThreePlusW2, 2},
         {{"4921440381", "37977143490", "127613420649", "250673770776", "327148723176", "304141893048",
           "210622703024", "112091223944", "46894395098", "15666181052", "4231083002", "931314344", "167841056",
           "24669272", "2918360", "271032", "18849", "882", "21"},
          1}}},
       {"1",
        {{kW2MinusOne, 2},
         {{"6947915832", "44000040942", "133368411033", "248155844508", "316015211160", "294283529028",
           "208710837720", "115644336732", "50998415472", "18167192624", "5280068058", "1254027252", "241371320",
           "36993180", "4399008", "391700", "24840", "1026", "21"},
          1}}}},
  };
  return table;
}

}  // namespace detail

/// The cataloged (f, g) pairs: m <= 4 with both signs, plus (5, +).
class Catalog {
 public:
  static const Catalog& builtin() {
    static const Catalog c = [] {
      Catalog cat;
      for (const auto& e : detail::factored_table()) cat.set({e.m, e.sign, e.f.expand(), e.g.expand()});
      return cat;
    }();
    return c;
  }

  bool contains(int m, Sign s) const { return entries_.count({m, s}) != 0; }

  const CatalogEntry& entry(int m, Sign s) const {
    const auto it = entries_.find({m, s});
    if (it == entries_.end()) throw NotInCatalog();
    return it->second;
  }

  PviSolution solution(int m, Sign s) const { return entry(m, s).solution(); }

  void set(CatalogEntry e) {
    const std::pair<int, Sign> key{e.m, e.sign};
    entries_.insert_or_assign(key, std::move(e));
  }

  std::vector<CatalogEntry> entries() const {
    std::vector<CatalogEntry> out;
    for (const auto& [k, e] : entries_) out.push_back(e);
    return out;
  }

  nlohmann::ordered_json to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [k, e] : entries_) arr.push_back(entry_to_json(e));
    return arr;
  }

  static Catalog from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("catalog JSON must be an array of solutions");
    Catalog c;
    for (const auto& item : j) c.set(entry_from_json(item));
    return c;
  }

  static nlohmann::ordered_json entry_to_json(const CatalogEntry& e) {
    nlohmann::ordered_json j;
    j["m"] = e.m;
    j["sign"] = to_string(e.sign);
    const Theta th = e.theta();
    j["theta"] = {th.t1.str(), th.t2.str(), th.t3.str(), th.t4.str()};
    j["f"] = even_coeffs(e.f);
    j["g"] = even_coeffs(e.g);
    return j;
  }

  /// Parses one solution; theta must agree with sign*(2m+1)*mu.
  static CatalogEntry entry_from_json(const nlohmann::json& j) {
    CatalogEntry e{j.at("m").get<int>(), parse_sign(j.at("sign").get<std::string>()),
                   even_poly(j.at("f").get<std::vector<std::string>>()),
                   even_poly(j.at("g").get<std::vector<std::string>>())};
    const auto th = j.at("theta").get<std::vector<std::string>>();
    if (th.size() != 4) throw std::invalid_argument("theta must have four entries");
    const Theta parsed{Rational::parse(th[0]), Rational::parse(th[1]), Rational::parse(th[2]), Rational::parse(th[3])};
    if (!(parsed == e.theta())) throw std::invalid_argument("theta inconsistent with (m, sign)");
    return e;
  }

  friend bool operator==(const Catalog& a, const Catalog& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (const auto& [k, e] : a.entries_) {
      const auto it = b.entries_.find(k);
      if (it == b.entries_.end() || !(it->second.f == e.f) || !(it->second.g == e.g)) return false;
    }
    return true;
  }

 private:
  std::map<std::pair<int, Sign>, CatalogEntry> entries_;
};

}  // namespace painleve::solutions
