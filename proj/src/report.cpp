#include "extschur/report.hpp"

#include <stdexcept>

#include <json.hpp>

namespace extschur {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "markdown" || text == "md") return OutputFormat::markdown;
  throw std::invalid_argument("unknown format '" + std::string(text) +
                              "' (expected json, csv or markdown)");
}

const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> columns{kOracleCatLie, kOracleUbCharacter,
                                                kOracleUbSymmetrizer};
  return columns;
}

namespace {

constexpr const char* kUnavailable = "unavailable";

Json record(const ExtReport& r) {
  Json oracles = Json::object();
  // Fixed report order rather than map order.
  for (const auto& name : oracle_names()) {
    auto it = r.oracles.find(name);
    if (it == r.oracles.end()) continue;
    if (it->second) {
      oracles[name] = *it->second;
    } else {
      oracles[name] = kUnavailable;
    }
  }
  return Json{{"lambda", r.query.lambda.parts()},
              {"mu", r.query.mu.parts()},
              {"closed", r.closed},
              {"oracles", std::move(oracles)},
              {"agree", r.agree}};
}

Partition partition_field(const Json& j, const char* name) {
  if (!j.contains(name) || !j[name].is_array())
    throw std::invalid_argument(std::string("record field '") + name + "' must be an array");
  try {
    return Partition(j[name].get<std::vector<int>>());
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("record field '") + name + "': " + e.what());
  }
}

}  // namespace

std::string reports_to_json(const std::vector<ExtReport>& reports) {
  Json doc{{"schema_version", kReportSchemaVersion}, {"reports", Json::array()}};
  for (const auto& r : reports) doc["reports"].push_back(record(r));
  return doc.dump(2) + "\n";
}

std::vector<ExtReport> reports_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") ||
      doc["schema_version"] != kReportSchemaVersion)
    throw std::invalid_argument("unsupported report schema version");
  if (!doc.contains("reports") || !doc["reports"].is_array())
    throw std::invalid_argument("missing reports array");

  std::vector<ExtReport> out;
  for (const auto& j : doc["reports"]) {
    if (!j.is_object()) throw std::invalid_argument("report record must be an object");
    ExtReport r;
    r.query = {partition_field(j, "lambda"), partition_field(j, "mu")};
    if (!j.contains("closed") || !j["closed"].is_number_unsigned())
      throw std::invalid_argument("record field 'closed' must be a non-negative integer");
    r.closed = j["closed"].get<std::uint64_t>();
    if (!j.contains("oracles") || !j["oracles"].is_object())
      throw std::invalid_argument("record field 'oracles' must be an object");
    for (const auto& [name, value] : j["oracles"].items()) {
      if (!is_oracle_name(name)) throw std::invalid_argument("unknown oracle name: " + name);
      if (value.is_number_unsigned()) {
        r.oracles[name] = value.get<std::uint64_t>();
      } else if (value == kUnavailable) {
        r.oracles[name] = std::nullopt;
      } else {
        throw std::invalid_argument("oracle '" + name + "' has an invalid value");
      }
    }
    if (!j.contains("agree") || !j["agree"].is_boolean())
      throw std::invalid_argument("record field 'agree' must be a boolean");
    r.agree = j["agree"].get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::string cell(const ExtReport& r, const std::string& name) {
  auto it = r.oracles.find(name);
  if (it == r.oracles.end() || !it->second) return kUnavailable;
  return std::to_string(*it->second);
}

}  // namespace

std::string reports_to_csv(const std::vector<ExtReport>& reports,
                           const std::vector<std::string>& oracle_columns) {
  std::string s = "lambda,mu,closed";
  for (const auto& name : oracle_columns) s += "," + name;
  s += ",agree\n";
  for (const auto& r : reports) {
    s += "\"" + r.query.lambda.str() + "\",\"" + r.query.mu.str() + "\"," +
         std::to_string(r.closed);
    for (const auto& name : oracle_columns) s += "," + cell(r, name);
    s += r.agree ? ",true\n" : ",false\n";
  }
  return s;
}

std::string reports_to_markdown(const std::vector<ExtReport>& reports,
                                const std::vector<std::string>& oracle_columns) {
  auto shape = [](const Partition& p) { return p.empty() ? std::string("∅") : "(" + p.str() + ")"; };
  std::string s = "| lambda | mu | closed |";
  std::string rule = "|---|---|---:|";
  for (const auto& name : oracle_columns) {
    s += " " + name + " |";
    rule += "---:|";
  }
  s += " agree |\n" + rule + "---|\n";
  for (const auto& r : reports) {
    s += "| " + shape(r.query.lambda) + " | " + shape(r.query.mu) + " | " +
         std::to_string(r.closed) + " |";
    for (const auto& name : oracle_columns) s += " " + cell(r, name) + " |";
    s += r.agree ? " yes |\n" : " **no** |\n";
  }
  return s;
}

std::string render_reports(const std::vector<ExtReport>& reports, OutputFormat format,
                           const std::vector<std::string>& oracle_columns) {
  switch (format) {
    case OutputFormat::json:
      return reports_to_json(reports);
    case OutputFormat::csv:
      return reports_to_csv(reports, oracle_columns);
    case OutputFormat::markdown:
      return reports_to_markdown(reports, oracle_columns);
  }
  return {};
}

}  // namespace extschur
