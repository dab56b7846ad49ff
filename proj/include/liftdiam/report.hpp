#pragma once

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace liftdiam {

enum class RowStatus { pass, fail, error };
std::string to_string(RowStatus s);
RowStatus parse_status(const std::string& s);

using Cell = std::variant<std::monostate, bool, long long, double, std::string>;

struct ReportRow {
  std::string id;
  RowStatus status = RowStatus::pass;
  std::vector<Cell> values;  // aligned with Report::columns
  std::string repro;         // required on FAIL rows
  std::string message;
  nlohmann::json witness;    // JSON only

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int error = 0;
  double max_ratio = 0.0;  // over the "ratio" column, 0 if absent
  double wall_time = 0.0;  // seconds; emitted only when requested

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct Report {
  std::string command;
  std::vector<std::string> columns;
  std::vector<ReportRow> rows;
  ReportSummary summary;

  int column(const std::string& name) const;  // -1 if absent
  const Cell& at(std::size_t row, const std::string& name) const;

  /// Sorts rows by id, rounds floats to 12 significant digits and
  /// recomputes the counts. Throws std::logic_error on a FAIL row without a
  /// reproduction command.
  void finalize();

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { json, csv };
Format parse_format(const std::string& s);

std::string emit(const Report& r, Format f, bool with_timing = false);
Report parse_report_json(const std::string& text);

/// %.12g rounding, the precision every emitted float carries.
double round12(double x);
std::string format12(double x);

}  // namespace liftdiam
