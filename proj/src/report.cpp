#include "liftdiam/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace liftdiam {

using nlohmann::json;

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass:
      return "PASS";
    case RowStatus::fail:
      return "FAIL";
    case RowStatus::error:
      return "ERROR";
  }
  return "ERROR";
}

RowStatus parse_status(const std::string& s) {
  if (s == "PASS") return RowStatus::pass;
  if (s == "FAIL") return RowStatus::fail;
  if (s == "ERROR") return RowStatus::error;
  throw std::invalid_argument("unknown row status '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected json or csv)");
}

std::string format12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format12(x).c_str(), nullptr);
}

namespace {

void round_json(json& j) {
  if (j.is_number_float()) {
    j = round12(j.get<double>());
  } else if (j.is_structured()) {
    for (auto& x : j) round_json(x);
  }
}

json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          // Non-finite values have no JSON number form.
          if (!std::isfinite(v)) return format12(v);
          return v;
        } else {
          return v;
        }
      },
      c);
}

Cell cell_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "nan") return std::nan("");
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    return s;
  }
  throw std::invalid_argument("report cell must be a scalar");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return format12(v);
        } else {
          return v;
        }
      },
      c);
}

}  // namespace

int Report::column(const std::string& name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

const Cell& Report::at(std::size_t row, const std::string& name) const {
  int c = column(name);
  if (c < 0) throw std::out_of_range("no column '" + name + "'");
  return rows.at(row).values.at(static_cast<std::size_t>(c));
}

void Report::finalize() {
  std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) { return a.id < b.id; });
  const double wall = summary.wall_time;
  summary = {};
  summary.wall_time = wall;
  const int ratio = column("ratio");
  for (auto& r : rows) {
    if (r.values.size() != columns.size())
      throw std::logic_error("row '" + r.id + "' has " + std::to_string(r.values.size()) + " values for " +
                             std::to_string(columns.size()) + " columns");
    for (auto& c : r.values)
      if (auto* d = std::get_if<double>(&c)) *d = round12(*d);
    round_json(r.witness);
    if (r.status == RowStatus::fail && r.repro.empty())
      throw std::logic_error("FAIL row '" + r.id + "' has no reproduction command");
    switch (r.status) {
      case RowStatus::pass:
        ++summary.pass;
        break;
      case RowStatus::fail:
        ++summary.fail;
        break;
      case RowStatus::error:
        ++summary.error;
        break;
    }
    if (ratio >= 0)
      if (auto* d = std::get_if<double>(&r.values[static_cast<std::size_t>(ratio)]))
        summary.max_ratio = std::max(summary.max_ratio, *d);
  }
}

std::string emit(const Report& r, Format f, bool with_timing) {
  if (f == Format::csv) {
    std::string out = "id,status";
    for (const auto& c : r.columns) out += "," + csv_field(c);
    out += ",repro,message\n";
    for (const auto& row : r.rows) {
      out += csv_field(row.id) + "," + to_string(row.status);
      for (const auto& c : row.values) out += "," + csv_field(cell_text(c));
      out += "," + csv_field(row.repro) + "," + csv_field(row.message) + "\n";
    }
    return out;
  }

  json j;
  j["command"] = r.command;
  j["columns"] = r.columns;
  j["rows"] = json::array();
  for (const auto& row : r.rows) {
    json o;
    o["id"] = row.id;
    o["status"] = to_string(row.status);
    json vals = json::array();
    for (const auto& c : row.values) vals.push_back(cell_to_json(c));
    o["values"] = std::move(vals);
    o["repro"] = row.repro;
    o["message"] = row.message;
    o["witness"] = row.witness;
    j["rows"].push_back(std::move(o));
  }
  json s;
  s["pass"] = r.summary.pass;
  s["fail"] = r.summary.fail;
  s["error"] = r.summary.error;
  s["max_ratio"] = round12(r.summary.max_ratio);
  if (with_timing) s["wall_time"] = round12(r.summary.wall_time);
  j["summary"] = std::move(s);
  return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
  json j = json::parse(text);
  Report r;
  r.command = j.at("command").get<std::string>();
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& o : j.at("rows")) {
    ReportRow row;
    row.id = o.at("id").get<std::string>();
    row.status = parse_status(o.at("status").get<std::string>());
    for (const auto& c : o.at("values")) row.values.push_back(cell_from_json(c));
    row.repro = o.at("repro").get<std::string>();
    row.message = o.at("message").get<std::string>();
    row.witness = o.at("witness");
    r.rows.push_back(std::move(row));
  }
  const json& s = j.at("summary");
  r.summary.pass = s.at("pass").get<int>();
  r.summary.fail = s.at("fail").get<int>();
  r.summary.error = s.at("error").get<int>();
  r.summary.max_ratio = s.at("max_ratio").get<double>();
  if (s.contains("wall_time")) r.summary.wall_time = s.at("wall_time").get<double>();
  return r;
}

}  // namespace liftdiam
