#pragma once

#include <stdexcept>
#include <string>

namespace painleve {

enum class Sign { plus, minus };

inline std::string to_string(Sign s) { return s == Sign::plus ? "+" : "-"; }
inline std::string sign_word(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

/// Accepts "plus", "minus", "+" and "-".
inline Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Sign::plus;
  if (s == "minus" || s == "-") return Sign::minus;
  throw std::invalid_argument("sign must be plus or minus, got '" + s + "'");
}

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }

}  // namespace painleve
