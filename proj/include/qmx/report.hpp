#ifndef QMX_REPORT_HPP
#define QMX_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qmx {

struct Check {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;  // present on failure
};

/// Verification report: ordered checks with an aggregate status.
struct Report {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;  // insertion-ordered
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    Check c;
    c.name = name;
    c.pass = pass;
    if (!pass && !witness.empty()) c.witness = witness;
    checks.push_back(std::move(c));
  }

  void param(const std::string& key, const std::string& value) { params.emplace_back(key, value); }

  std::string json() const;
  std::string text() const;  // one line per check plus a summary
};

}  // namespace qmx

#endif
