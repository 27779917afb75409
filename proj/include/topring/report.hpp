#pragma once

// Structured verdicts produced by theorem checks and searches.

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace topring {

using json = nlohmann::ordered_json;

enum class Verdict {
  holds,             // hypothesis met (or unconditional) and conclusion verified
  hypothesis_unmet,  // implication not applicable on this instance; nothing asserted
  degenerate,        // conclusion is constant-true at finite scale
  violation,         // hypothesis met, conclusion false
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::hypothesis_unmet:
      return "hypothesis-unmet";
    case Verdict::degenerate:
      return "degenerate-finite";
    case Verdict::violation:
      return "VIOLATION";
  }
  return "?";
}

struct Check {
  std::string theorem;
  std::string claim;
  Verdict verdict = Verdict::holds;
  json detail = json::object();
};

struct Report {
  std::string subject;
  std::vector<Check> checks;
  json data = json::object();

  /// Records an asserted conclusion. Returns `ok` so callers can chain.
  bool expect(std::string theorem, std::string claim, bool ok, json detail = json::object()) {
    checks.push_back({std::move(theorem), std::move(claim), ok ? Verdict::holds : Verdict::violation,
                      std::move(detail)});
    return ok;
  }

  void unmet(std::string theorem, std::string claim, json detail = json::object()) {
    checks.push_back({std::move(theorem), std::move(claim), Verdict::hypothesis_unmet, std::move(detail)});
  }

  void degenerate(std::string theorem, std::string claim, json detail = json::object()) {
    checks.push_back({std::move(theorem), std::move(claim), Verdict::degenerate, std::move(detail)});
  }

  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  [[nodiscard]] bool ok() const { return first_violation() == nullptr; }

  [[nodiscard]] const Check* first_violation() const {
    for (const auto& c : checks)
      if (c.verdict == Verdict::violation) return &c;
    return nullptr;
  }

  [[nodiscard]] std::size_t count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.verdict == v ? 1 : 0;
    return n;
  }

  [[nodiscard]] json to_json() const {
    json j;
    j["subject"] = subject;
    j["ok"] = ok();
    j["data"] = data;
    json arr = json::array();
    for (const auto& c : checks) {
      json cj;
      cj["theorem"] = c.theorem;
      cj["claim"] = c.claim;
      cj["verdict"] = to_string(c.verdict);
      if (!c.detail.empty()) cj["detail"] = c.detail;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
  }

  [[nodiscard]] std::string to_text() const {
    std::string out = subject + (ok() ? "  [ok]\n" : "  [VIOLATION]\n");
    for (const auto& [key, value] : data.items()) out += "  " + key + ": " + value.dump() + "\n";
    for (const auto& c : checks) {
      out += "  - [" + std::string(to_string(c.verdict)) + "] " + c.theorem + ": " + c.claim;
      if (c.verdict == Verdict::violation && !c.detail.empty()) out += "  witness=" + c.detail.dump();
      out += "\n";
    }
    return out;
  }
};

}  // namespace topring
