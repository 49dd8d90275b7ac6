#include "wittlab/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace wittlab {

using nlohmann::json;

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  throw std::logic_error("status_name: bad enum value");
}

namespace {

CheckStatus parse_status(std::string_view text) {
  if (text == "pass") return CheckStatus::pass;
  if (text == "fail") return CheckStatus::fail;
  if (text == "skipped") return CheckStatus::skipped;
  throw std::invalid_argument("ReportDocument: unknown status '" + std::string(text) + "'");
}

}  // namespace

bool ReportDocument::all_pass() const {
  for (const auto& row : results) {
    if (row.status == CheckStatus::fail) return false;
  }
  return true;
}

void ReportDocument::add(std::string name, std::string expected, std::string computed,
                         bool pass) {
  results.push_back(ResultRow{std::move(name), std::move(expected), std::move(computed),
                              pass ? CheckStatus::pass : CheckStatus::fail});
}

std::string ReportDocument::to_json() const {
  json rows = json::array();
  for (const auto& row : results) {
    rows.push_back(json{{"name", row.name},
                        {"expected", row.expected},
                        {"computed", row.computed},
                        {"status", std::string(status_name(row.status))}});
  }
  json doc{{"schema", 1},
           {"command", command},
           {"algebra", algebra},
           {"window", window},
           {"results", std::move(rows)},
           {"elapsed_ms", elapsed_ms}};
  return doc.dump(2);
}

ReportDocument ReportDocument::from_json(std::string_view text) {
  json doc = json::parse(text);
  if (!doc.contains("schema") || doc["schema"].get<int>() != 1) {
    throw std::invalid_argument("ReportDocument: unsupported schema");
  }
  ReportDocument out;
  out.command = doc.at("command").get<std::string>();
  out.algebra = doc.at("algebra").get<std::string>();
  out.window = doc.at("window").get<int>();
  out.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
  for (const auto& row : doc.at("results")) {
    out.results.push_back(ResultRow{row.at("name").get<std::string>(),
                                    row.at("expected").get<std::string>(),
                                    row.at("computed").get<std::string>(),
                                    parse_status(row.at("status").get<std::string>())});
  }
  return out;
}

std::string ReportDocument::to_text() const {
  std::string out = command + " (algebra " + algebra + ", window " +
                    std::to_string(window) + ")\n";
  for (const auto& row : results) {
    out += "  [" + std::string(status_name(row.status)) + "] " + row.name +
           ": " + row.computed;
    if (!row.expected.empty()) out += "  -- expected " + row.expected;
    out += "\n";
  }
  out += all_pass() ? "all checks passed" : "FAILURES present";
  out += " (" + std::to_string(elapsed_ms) + " ms)\n";
  return out;
}

}  // namespace wittlab
