#include "invop/report.hh"

#include "invop/errors.hh"

namespace invop {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::flag: return "flag";
  }
  return "?";
}

CheckStatus check_status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "flag") return CheckStatus::flag;
  throw usage_error("unknown check status '" + s + "'");
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                    std::move(detail)});
}

void Report::add_flag(std::string name, std::string detail) {
  checks.push_back({std::move(name), CheckStatus::flag, std::move(detail)});
}

bool Report::all_passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

std::size_t Report::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == s) ++n;
  return n;
}

std::string Report::to_text() const {
  std::string out = "command: " + command + "\n";
  if (space) out += "space: " + *space + "\n";
  for (const auto& [key, val] : values.items()) {
    if (val.is_string())
      out += key + " = " + val.get<std::string>() + "\n";
    else
      out += key + " = " + val.dump() + "\n";
  }
  for (const auto& c : checks) {
    out += "[" + to_string(c.status) + "] " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  if (!checks.empty()) {
    out += "result: " + std::string(all_passed() ? "PASS" : "FAIL") + " (" +
           std::to_string(count(CheckStatus::pass)) + " pass, " +
           std::to_string(count(CheckStatus::fail)) + " fail, " +
           std::to_string(count(CheckStatus::flag)) + " flag)\n";
  }
  if (elapsed_ms) out += "elapsed_ms: " + std::to_string(*elapsed_ms) + "\n";
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  if (space) j["space"] = *space;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)},
                           {"detail", c.detail}});
  if (!values.empty()) j["values"] = values;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

Report Report::from_json(const nlohmann::ordered_json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  if (j.contains("space")) r.space = j.at("space").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(),
                        check_status_from_string(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
  }
  if (j.contains("values")) r.values = j.at("values");
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

}  // namespace invop
