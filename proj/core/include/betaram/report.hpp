#pragma once

#include "betaram/registry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace betaram {

enum class TableKind { lnb_coeffs, b_coeffs, conjecture_coeffs, hs_values };

/// Throws UsageError for an unknown name.
TableKind parse_table_kind(std::string_view name);
std::string to_string(TableKind kind);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// lnb_coeffs: n = 2..n_max; b_coeffs: k = 0..n_max (<= 200);
/// conjecture_coeffs: n = 0..n_max (<= 300); hs_values: s = 1..n_max (<= 13).
Table build_table(TableKind kind, int n_max);

/// %.15g, locale independent.
std::string format_number(double v);

std::string table_to_csv(const Table& t);
/// Doubles in shortest round-trip form.
std::string table_to_json(const Table& t);
Table table_from_json(std::string_view text);

std::string report_to_json(const ReportDocument& doc);
std::string report_to_csv(const ReportDocument& doc);
/// One line per claim plus an overall line.
std::string report_to_text(const ReportDocument& doc);

/// Writes text to path; IoError on failure.
void write_file(const std::string& path, std::string_view text);

}  // namespace betaram
