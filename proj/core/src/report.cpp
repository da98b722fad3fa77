#include "betaram/report.hpp"

#include "betaram/errors.hpp"
#include "betaram/identities.hpp"
#include "betaram/series.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace betaram {
namespace {

using nlohmann::json;

void check_n_max(const char* name, int n_max, int lo, int hi) {
  if (n_max < lo || n_max > hi) {
    throw UsageError(std::string(name) + ": --n-max must be in " + std::to_string(lo) + ".." + std::to_string(hi));
  }
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

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

TableKind parse_table_kind(std::string_view name) {
  if (name == "lnb_coeffs") return TableKind::lnb_coeffs;
  if (name == "b_coeffs") return TableKind::b_coeffs;
  if (name == "conjecture_coeffs") return TableKind::conjecture_coeffs;
  if (name == "hs_values") return TableKind::hs_values;
  throw UsageError("unknown table '" + std::string(name) +
                   "' (expected lnb_coeffs, b_coeffs, conjecture_coeffs or hs_values)");
}

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::lnb_coeffs: return "lnb_coeffs";
    case TableKind::b_coeffs: return "b_coeffs";
    case TableKind::conjecture_coeffs: return "conjecture_coeffs";
    case TableKind::hs_values: return "hs_values";
  }
  return "?";
}

Table build_table(TableKind kind, int n_max) {
  Table t;
  t.name = to_string(kind);
  switch (kind) {
    case TableKind::lnb_coeffs:
      check_n_max("lnb_coeffs", n_max, 2, 1000);
      t.columns = {"n", "l_n"};
      for (int n = 2; n <= n_max; ++n) t.rows.push_back({double(n), lnb_series_coeff(n)});
      break;
    case TableKind::b_coeffs:
      check_n_max("b_coeffs", n_max, 0, kMaxRecurrenceIndex);
      t.columns = {"k", "a_k", "a_k_closed"};
      for (int k = 0; k <= n_max; ++k) {
        t.rows.push_back({double(k), b_power_coeff_recurrence(k), b_power_coeff_closed(k)});
      }
      break;
    case TableKind::conjecture_coeffs: {
      check_n_max("conjecture_coeffs", n_max, 0, kMaxConjectureIndex);
      t.columns = {"n", "u_scaled", "v_scaled", "s_scaled"};
      for (const auto& c : conjecture_coeffs(n_max)) t.rows.push_back({double(c.n), c.u_scaled, c.v_scaled, c.s_scaled});
      break;
    }
    case TableKind::hs_values:
      check_n_max("hs_values", n_max, 1, kMaxDerivativeLimitIndex + 1);
      t.columns = {"s", "H", "enclosure_lo", "enclosure_hi"};
      for (int s = 1; s <= n_max; ++s) {
        const Enclosure e = hs_eval({double(s), 1e-10});
        t.rows.push_back({double(s), hs_derivative_limit(s - 1), e.lo(), e.hi()});
      }
      break;
  }
  return t;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  // snprintf honours LC_NUMERIC; force '.'.
  for (char& c : buf) {
    if (c == ',') c = '.';
  }
  return buf;
}

std::string table_to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += '\n';
  }
  return out;
}

std::string table_to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (double v : row) r.push_back(number_or_null(v));
    rows.push_back(std::move(r));
  }
  const json doc = {{"table", t.name}, {"columns", t.columns}, {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

Table table_from_json(std::string_view text) {
  const json doc = json::parse(text);
  Table t;
  t.name = doc.at("table").get<std::string>();
  t.columns = doc.at("columns").get<std::vector<std::string>>();
  for (const auto& r : doc.at("rows")) {
    std::vector<double> row;
    for (const auto& v : r) row.push_back(v.is_null() ? std::nan("") : v.get<double>());
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string report_to_json(const ReportDocument& doc) {
  json claims = json::array();
  for (const auto& c : doc.claims) {
    claims.push_back({{"label", c.label},
                      {"passed", c.passed},
                      {"worst_margin", number_or_null(c.worst_margin)},
                      {"grid", c.grid},
                      {"notes", c.notes}});
  }
  const json out = {{"tool_version", doc.tool_version},
                    {"generated_at", doc.generated_at},
                    {"overall_pass", doc.overall_pass},
                    {"claims", std::move(claims)}};
  return out.dump(2) + "\n";
}

std::string report_to_csv(const ReportDocument& doc) {
  std::string out = "label,passed,worst_margin,grid,notes\n";
  for (const auto& c : doc.claims) {
    out += csv_field(c.label) + ',' + (c.passed ? "true" : "false") + ',' + format_number(c.worst_margin) + ',' +
           csv_field(c.grid) + ',' + csv_field(c.notes) + '\n';
  }
  return out;
}

std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream os;
  for (const auto& c : doc.claims) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-18s", c.label.c_str());
    os << (c.passed ? "PASS " : "FAIL ") << buf << " margin " << format_number(c.worst_margin) << "  " << c.notes
       << '\n';
  }
  os << (doc.overall_pass ? "PASS" : "FAIL") << " overall (" << doc.claims.size() << " claims)\n";
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace betaram
