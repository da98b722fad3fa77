#pragma once

#include "betaram/monotonicity.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace betaram {

/// One registered claim: label, default grid, margin floor and the check.
struct ClaimEntry {
  std::string label;
  std::string summary;
  GridSpec grid;
  double margin_floor = 1e-9;
  std::function<VerificationRecord(const GridSpec& grid, double margin_floor)> run;
};

/// Static claim table in registry order.
const std::vector<ClaimEntry>& claim_registry();

/// Shell-style glob with '*' and '?'.
bool glob_match(std::string_view pattern, std::string_view text);

/// Entries whose label matches filter (empty filter: all). Throws
/// UsageError when nothing matches.
std::vector<const ClaimEntry*> select_claims(std::string_view filter);

struct ReportDocument {
  std::string tool_version;
  std::vector<VerificationRecord> claims;
  std::string generated_at;
  bool overall_pass = false;
};

/// Runs the selected claims (grid override applies to every claim). A claim
/// that throws is recorded as failed and the run continues.
ReportDocument verify_all(std::string_view filter = {}, const std::optional<GridSpec>& grid = std::nullopt);

/// Named functions with plain derivatives: B, R, Bl, RB, D, h1..h6, F,
/// boundary_R, boundary_B.
const std::vector<DerivativeFunction>& function_catalog();
const DerivativeFunction* find_function(std::string_view name);

/// R~_{theta,n} with plain derivatives up to order 8.
DerivativeFunction r_tilde_handle(double theta, int n);

}  // namespace betaram
