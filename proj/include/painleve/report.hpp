#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace painleve {

enum class Status { pass, fail, error };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

inline Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "error") return Status::error;
  throw std::invalid_argument("unknown status: " + s);
}

struct CaseResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const CaseResult&, const CaseResult&) = default;
};

/// Outcome of one verification command. overall() is pass iff every case passes.
struct VerificationReport {
  std::string command;
  std::vector<CaseResult> cases;

  bool passed() const {
    for (const auto& c : cases) {
      if (c.status != Status::pass) return false;
    }
    return true;
  }
  std::string overall() const { return passed() ? "pass" : "fail"; }

  void add(std::string name, bool ok, std::string detail, std::int64_t elapsed_ms = 0) {
    cases.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(detail), elapsed_ms});
  }

  void add_error(std::string name, std::string detail, std::int64_t elapsed_ms = 0) {
    cases.push_back({std::move(name), Status::error, std::move(detail), elapsed_ms});
  }

  /// Runs check, timing it; exceptions become error entries carrying the message.
  void run(std::string name, const std::function<std::pair<bool, std::string>()>& check) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult c;
    c.name = std::move(name);
    try {
      auto [ok, detail] = check();
      c.status = ok ? Status::pass : Status::fail;
      c.detail = std::move(detail);
    } catch (const std::exception& e) {
      c.status = Status::error;
      c.detail = e.what();
    }
    c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    cases.push_back(std::move(c));
  }

  void append(const VerificationReport& other) { cases.insert(cases.end(), other.cases.begin(), other.cases.end()); }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
      j["cases"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}, {"elapsed_ms", c.elapsed_ms}});
    }
    j["overall"] = overall();
    return j;
  }

  static VerificationReport from_json(const nlohmann::ordered_json& j) {
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    for (const auto& c : j.at("cases")) {
      r.cases.push_back({c.at("name").get<std::string>(), status_from_string(c.at("status").get<std::string>()),
                         c.at("detail").get<std::string>(), c.at("elapsed_ms").get<std::int64_t>()});
    }
    if (j.at("overall").get<std::string>() != r.overall()) throw std::invalid_argument("inconsistent overall status");
    return r;
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace painleve
