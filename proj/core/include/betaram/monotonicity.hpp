#pragma once

#include <functional>
#include <string>
#include <vector>

namespace betaram {

enum class Spacing { linear, logarithmic };

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  int points = 2;
  Spacing spacing = Spacing::linear;

  /// Throws DomainError unless lo < hi, points >= 2 and (log) lo > 0.
  void validate() const;
  [[nodiscard]] std::vector<double> nodes() const;
  /// "lo:hi:points:log|lin"
  [[nodiscard]] std::string str() const;
  static GridSpec parse(const std::string& text);
};

inline const GridSpec kGridHalfLine{0.01, 20.0, 64, Spacing::logarithmic};
inline const GridSpec kGridHalfInterval{0.01, 0.49, 49, Spacing::linear};
inline const GridSpec kGridUnitInterval{0.02, 0.98, 49, Spacing::linear};

/// A function of one variable with derivatives up to max_order.
struct DerivativeFunction {
  std::string name;
  int max_order = 0;
  std::function<double(double x, int order)> eval;
};

enum class ClaimKind { positive, negative, increasing, decreasing, convex, concave, sign_pattern };

struct MonotonicityClaim {
  ClaimKind kind = ClaimKind::positive;
  /// Highest order checked by sign_pattern.
  int order_max = 0;
  /// Expected sign (+1/-1) of the order-m derivative; 0 skips the order.
  std::function<int(int)> sign_rule;
  /// Accept |value| <= margin_floor (non-strict claims).
  bool allow_equality = false;

  /// Orders checked and their expected signs.
  [[nodiscard]] std::vector<std::pair<int, int>> checks() const;
};

MonotonicityClaim completely_monotone(int order_max, bool allow_equality = false);

struct PointResult {
  double x = 0.0;
  int order = 0;
  double value = 0.0;
  bool pass = false;
  std::string reason;
};

struct SignReport {
  std::string claim_id;
  GridSpec grid;
  std::vector<PointResult> per_point;
  double worst_margin = 0.0;
  /// Worst margin restricted to each checked order, indexed by order.
  std::vector<double> worst_margin_by_order;
  bool passed = false;
  std::string notes;
};

/// Outcome of one registered claim.
struct VerificationRecord {
  std::string label;
  bool passed = false;
  double worst_margin = 0.0;
  std::string grid;
  std::string notes;
};

VerificationRecord to_record(const SignReport& report);

/// Margin at a point is sign * value; a point passes when it exceeds
/// margin_floor, or when |value| <= margin_floor and equality is allowed.
SignReport verify_claim(const DerivativeFunction& f, const MonotonicityClaim& claim,
                        const GridSpec& grid, double margin_floor = 1e-9,
                        const std::string& claim_id = {});

/// Folds per-point results into a report (worst margins, pass flag).
SignReport summarize(std::string claim_id, const GridSpec& grid, std::vector<PointResult> points,
                     std::string notes = {});

enum class Anchor { at_a, at_b };

/// Checks one instance of the monotone form of l'Hospital's rule: order 1
/// entries are successive differences of f'/g', order 0 of f/g, signed by
/// the direction f'/g' shows.
SignReport lhospital_rule_check(const DerivativeFunction& f, const DerivativeFunction& g, double a,
                                double b, Anchor anchor, const GridSpec& grid);

enum class ProbePoint { zero_plus, infinity, one_minus };
enum class LimitStatus { pass, fail, inconclusive };

struct LimitProbeResult {
  LimitStatus status = LimitStatus::inconclusive;
  double extrapolated = 0.0;
  /// Difference of the last two extrapolation levels.
  double convergence = 0.0;
  std::vector<double> samples;
  std::string reason;

  [[nodiscard]] bool passed() const noexcept { return status == LimitStatus::pass; }
};

/// Polynomial (Neville) extrapolation of f along 1e-2..1e-6 (zero_plus,
/// one_minus) or 10, 100, 1000 in 1/x (infinity).
LimitProbeResult limit_probe(const std::function<double(double)>& f, ProbePoint point, double expected,
                             double tol);

const char* to_string(LimitStatus status);

}  // namespace betaram
