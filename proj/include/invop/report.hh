#ifndef INVOP_REPORT_HH
#define INVOP_REPORT_HH

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace invop {

enum class CheckStatus { pass, fail, flag };

std::string to_string(CheckStatus s);
CheckStatus check_status_from_string(const std::string& s);

struct CheckRecord {
  std::string name;
  CheckStatus status;
  std::string detail;
};

// Structured command result: the command echo, one record per check, and a
// free-form values object (exact quantities are carried as strings). Output
// is deterministic for identical inputs; elapsed_ms is only populated on
// request so that default reports stay byte-identical across runs.
struct Report {
  std::string command;
  std::optional<std::string> space;
  std::vector<CheckRecord> checks;
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  std::optional<std::int64_t> elapsed_ms;

  void add(std::string name, bool ok, std::string detail = "");
  void add_flag(std::string name, std::string detail);

  bool all_passed() const;
  std::size_t count(CheckStatus s) const;
  // 0 when every check passed (flags do not fail a run), 1 otherwise.
  int exit_code() const { return all_passed() ? 0 : 1; }

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
  static Report from_json(const nlohmann::ordered_json& j);
};

}  // namespace invop

#endif
