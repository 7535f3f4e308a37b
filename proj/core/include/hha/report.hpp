#pragma once

#include <string>
#include <vector>

#include "hha/ext_scalar.hpp"

namespace hha {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Structured result of one CLI command. Serialization is deterministic:
/// two runs differ at most in the timing field.
struct Report {
  std::string scenario;
  std::string command;
  std::vector<Verdict> verdicts;
  std::vector<std::pair<std::string, std::string>> certificates;  // name -> payload
  std::vector<std::pair<std::string, long>> dims;
  long timing_ms = 0;

  void verdict(const std::string& name, bool pass, const std::string& detail = "");
  void certificate(const std::string& name, const std::string& payload);
  void dim(const std::string& name, long value);
  bool all_pass() const;

  std::string to_json_text() const;
  void print_summary(std::ostream& os) const;
};

}  // namespace hha
