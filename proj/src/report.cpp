#include "qmx/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qmx {

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    if (c.witness) jc["witness"] = *c.witness;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  j["status"] = all_pass() ? "pass" : "fail";
  return j.dump(2);
}

std::string Report::text() const {
  std::ostringstream os;
  os << "suite " << suite;
  if (!params.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : params) {
      if (!first) os << ", ";
      os << k << "=" << v;
      first = false;
    }
    os << ")";
  }
  os << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (c.witness) os << "  witness: " << *c.witness;
    os << "\n";
  }
  os << (all_pass() ? "status: pass" : "status: fail") << "\n";
  return os.str();
}

}  // namespace qmx
