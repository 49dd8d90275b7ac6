#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wittlab {

enum class CheckStatus { pass, fail, skipped };

std::string_view status_name(CheckStatus s);

struct ResultRow {
  std::string name;
  std::string expected;  // states the mathematical fact or oracle checked
  std::string computed;
  CheckStatus status{CheckStatus::pass};

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// The document every CLI command emits. Numeric values inside rows are
/// exact rational strings ("p" or "p/q"), never floats.
struct ReportDocument {
  std::string command;
  std::string algebra;  // "w", "wtilde", "w22" or "-" when not applicable
  int window = 0;
  std::vector<ResultRow> results;
  std::int64_t elapsed_ms = 0;

  bool all_pass() const;
  void add(std::string name, std::string expected, std::string computed, bool pass);

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;

  /// JSON with a top-level {"schema": 1}; round-trips through from_json.
  std::string to_json() const;
  static ReportDocument from_json(std::string_view text);

  /// Human-readable rendering, one line per result.
  std::string to_text() const;
};

}  // namespace wittlab
