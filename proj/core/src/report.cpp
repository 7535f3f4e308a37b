#include "hha/report.hpp"

#include <ostream>

#include <json.hpp>

namespace hha {

void Report::verdict(const std::string& name, bool pass, const std::string& detail) {
  verdicts.push_back({name, pass, detail});
}

void Report::certificate(const std::string& name, const std::string& payload) {
  certificates.emplace_back(name, payload);
}

void Report::dim(const std::string& name, long value) { dims.emplace_back(name, value); }

bool Report::all_pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

std::string Report::to_json_text() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["command"] = command;
  j["verdicts"] = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json jv;
    jv["name"] = v.name;
    jv["pass"] = v.pass;
    if (!v.detail.empty()) jv["detail"] = v.detail;
    j["verdicts"].push_back(jv);
  }
  j["certificates"] = nlohmann::ordered_json::array();
  for (const auto& [name, payload] : certificates) {
    nlohmann::ordered_json jc;
    jc["name"] = name;
    jc["payload"] = payload;
    j["certificates"].push_back(jc);
  }
  j["dims"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : dims) j["dims"][name] = value;
  j["timing_ms"] = timing_ms;
  return j.dump(2) + "\n";
}

void Report::print_summary(std::ostream& os) const {
  os << "[" << scenario << "] " << command << "\n";
  for (const auto& v : verdicts) {
    os << "  " << (v.pass ? "PASS" : "FAIL") << "  " << v.name;
    if (!v.detail.empty()) os << "  (" << v.detail << ")";
    os << "\n";
  }
  for (const auto& [name, value] : dims) os << "  dim " << name << " = " << value << "\n";
}

}  // namespace hha
