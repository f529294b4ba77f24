#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "extschur/ext.hpp"

namespace extschur {

enum class OutputFormat { json, csv, markdown };

/// Parses "json", "csv" or "markdown"; throws std::invalid_argument.
OutputFormat parse_format(std::string_view text);

inline constexpr int kReportSchemaVersion = 1;

/// {"schema_version": 1, "reports": [record, ...]} where each record is
/// {"lambda": [...], "mu": [...], "closed": n, "oracles": {name: n | "unavailable"},
///  "agree": bool}. Timing is not serialized so output is reproducible.
std::string reports_to_json(const std::vector<ExtReport>& reports);
/// Inverse of reports_to_json. Throws std::invalid_argument on a schema
/// version mismatch, an unknown oracle name or a malformed record.
std::vector<ExtReport> reports_from_json(std::string_view text);

/// CSV with header lambda,mu,<oracle columns>,agree. Partitions are quoted
/// ("2,1") and absent oracle values read "unavailable".
std::string reports_to_csv(const std::vector<ExtReport>& reports,
                           const std::vector<std::string>& oracle_columns);
std::string reports_to_markdown(const std::vector<ExtReport>& reports,
                                const std::vector<std::string>& oracle_columns);

/// The oracle columns of a bulk table.
const std::vector<std::string>& table_columns();

std::string render_reports(const std::vector<ExtReport>& reports, OutputFormat format,
                           const std::vector<std::string>& oracle_columns);

}  // namespace extschur
