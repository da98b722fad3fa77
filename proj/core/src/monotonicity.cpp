#include "betaram/monotonicity.hpp"

#include "betaram/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace betaram {

void GridSpec::validate() const {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    detail::throw_domain("GridSpec", "requires finite lo < hi");
  }
  if (points < 2) detail::throw_domain("GridSpec", "requires at least 2 points");
  if (spacing == Spacing::logarithmic && !(lo > 0.0)) {
    detail::throw_domain("GridSpec", "logarithmic spacing requires lo > 0");
  }
}

std::vector<double> GridSpec::nodes() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  const double last = points - 1.0;
  for (int i = 0; i < points; ++i) {
    const double t = i / last;
    out[static_cast<std::size_t>(i)] = spacing == Spacing::linear
                                           ? lo + (hi - lo) * t
                                           : std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * t);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::string GridSpec::str() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.15g:%.15g:%d:%s", lo, hi, points,
                spacing == Spacing::linear ? "lin" : "log");
  return buf;
}

GridSpec GridSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4) detail::throw_domain("GridSpec::parse", "expected lo:hi:points:log|lin");
  GridSpec g;
  try {
    std::size_t used = 0;
    g.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    g.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    g.points = std::stoi(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::logic_error&) {
    detail::throw_domain("GridSpec::parse", "malformed number in '" + text + "'");
  }
  if (parts[3] == "lin") {
    g.spacing = Spacing::linear;
  } else if (parts[3] == "log") {
    g.spacing = Spacing::logarithmic;
  } else {
    detail::throw_domain("GridSpec::parse", "spacing must be log or lin");
  }
  g.validate();
  return g;
}

std::vector<std::pair<int, int>> MonotonicityClaim::checks() const {
  switch (kind) {
    case ClaimKind::positive: return {{0, +1}};
    case ClaimKind::negative: return {{0, -1}};
    case ClaimKind::increasing: return {{1, +1}};
    case ClaimKind::decreasing: return {{1, -1}};
    case ClaimKind::convex: return {{2, +1}};
    case ClaimKind::concave: return {{2, -1}};
    case ClaimKind::sign_pattern: break;
  }
  std::vector<std::pair<int, int>> out;
  for (int m = 0; m <= order_max; ++m) {
    const int s = sign_rule ? sign_rule(m) : 0;
    if (s != 0) out.emplace_back(m, s > 0 ? 1 : -1);
  }
  return out;
}

MonotonicityClaim completely_monotone(int order_max, bool allow_equality) {
  MonotonicityClaim c;
  c.kind = ClaimKind::sign_pattern;
  c.order_max = order_max;
  c.sign_rule = [](int m) { return m % 2 == 0 ? 1 : -1; };
  c.allow_equality = allow_equality;
  return c;
}

VerificationRecord to_record(const SignReport& report) {
  return {report.claim_id, report.passed, report.worst_margin, report.grid.str(), report.notes};
}

SignReport summarize(std::string claim_id, const GridSpec& grid, std::vector<PointResult> points,
                     std::string notes) {
  SignReport r;
  r.claim_id = std::move(claim_id);
  r.grid = grid;
  r.notes = std::move(notes);
  r.passed = !points.empty();
  r.worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    r.passed = r.passed && p.pass;
    const double m = std::isnan(p.value) ? -std::numeric_limits<double>::infinity() : p.value;
    r.worst_margin = std::min(r.worst_margin, m);
    if (p.order >= 0) {
      const auto idx = static_cast<std::size_t>(p.order);
      if (r.worst_margin_by_order.size() <= idx) {
        r.worst_margin_by_order.resize(idx + 1, std::numeric_limits<double>::infinity());
      }
      r.worst_margin_by_order[idx] = std::min(r.worst_margin_by_order[idx], m);
    }
  }
  if (points.empty()) r.worst_margin = 0.0;
  r.per_point = std::move(points);
  return r;
}

SignReport verify_claim(const DerivativeFunction& f, const MonotonicityClaim& claim, const GridSpec& grid,
                        double margin_floor, const std::string& claim_id) {
  const auto checks = claim.checks();
  const std::string id = claim_id.empty() ? f.name : claim_id;
  for (const auto& [order, sign] : checks) {
    if (order > f.max_order) {
      detail::throw_range("verify_claim", id + ": order " + std::to_string(order) +
                                              " exceeds derivative depth " + std::to_string(f.max_order));
    }
  }

  std::vector<PointResult> points;
  for (double x : grid.nodes()) {
    for (const auto& [order, sign] : checks) {
      PointResult p;
      p.x = x;
      p.order = order;
      try {
        const double v = f.eval(x, order);
        // Stored value is the signed margin sign * f^(order)(x).
        p.value = sign * v;
        if (!std::isfinite(v)) {
          p.pass = false;
          p.reason = "non-finite value";
        } else if (p.value > margin_floor) {
          p.pass = true;
        } else if (claim.allow_equality && std::abs(v) <= margin_floor) {
          p.pass = true;
          p.reason = "equality within margin floor";
        } else {
          p.pass = false;
          p.reason = "sign violation";
        }
      } catch (const std::exception& e) {
        p.value = std::numeric_limits<double>::quiet_NaN();
        p.pass = false;
        p.reason = e.what();
      }
      points.push_back(std::move(p));
    }
  }
  return summarize(id, grid, std::move(points));
}

SignReport lhospital_rule_check(const DerivativeFunction& f, const DerivativeFunction& g, double a, double b,
                                Anchor anchor, const GridSpec& grid) {
  if (f.max_order < 1 || g.max_order < 1) {
    detail::throw_range("lhospital_rule_check", "f and g need first derivatives");
  }
  if (!(grid.lo >= a && grid.hi <= b)) detail::throw_domain("lhospital_rule_check", "grid outside (a,b)");

  const auto at_anchor = [&](const DerivativeFunction& h) {
    const auto probe = anchor == Anchor::at_a
                           ? limit_probe([&](double t) { return h.eval(a + t, 0); }, ProbePoint::zero_plus,
                                         0.0, 1e-8)
                           : limit_probe([&](double t) { return h.eval(b - t, 0); }, ProbePoint::zero_plus,
                                         0.0, 1e-8);
    return probe.passed();
  };
  if (!at_anchor(f) || !at_anchor(g)) {
    detail::throw_domain("lhospital_rule_check", "f and g must vanish at the anchor");
  }

  const auto xs = grid.nodes();
  std::vector<double> ratio_d;
  std::vector<double> ratio;
  for (double x : xs) {
    const double gd = g.eval(x, 1);
    if (!(gd != 0.0)) detail::throw_domain("lhospital_rule_check", "g' vanishes on the grid");
    ratio_d.push_back(f.eval(x, 1) / gd);
    ratio.push_back(f.eval(x, 0) / g.eval(x, 0));
  }

  int direction = 0;
  for (std::size_t i = 1; i < xs.size() && direction == 0; ++i) {
    const double d = ratio_d[i] - ratio_d[i - 1];
    if (d != 0.0) direction = d > 0 ? 1 : -1;
  }

  std::vector<PointResult> points;
  bool premise = direction != 0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double dd = direction * (ratio_d[i] - ratio_d[i - 1]);
    premise = premise && dd > 0;
    points.push_back({xs[i], 1, dd, dd > 0, dd > 0 ? "" : "f'/g' not monotone"});
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double d = direction * (ratio[i] - ratio[i - 1]);
    PointResult p{xs[i], 0, d, d > 0, ""};
    if (!p.pass) p.reason = premise ? "counterexample to the monotone rule" : "f/g not monotone";
    points.push_back(std::move(p));
  }
  std::string notes = direction > 0 ? "increasing" : (direction < 0 ? "decreasing" : "constant f'/g'");
  return summarize(f.name + "/" + g.name, grid, std::move(points), notes);
}

const char* to_string(LimitStatus status) {
  switch (status) {
    case LimitStatus::pass: return "pass";
    case LimitStatus::fail: return "fail";
    case LimitStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

LimitProbeResult limit_probe(const std::function<double(double)>& f, ProbePoint point, double expected,
                             double tol) {
  LimitProbeResult r;
  std::vector<double> h;
  std::vector<double> xs;
  switch (point) {
    case ProbePoint::zero_plus:
      h = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
      xs = h;
      break;
    case ProbePoint::one_minus:
      h = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
      for (double t : h) xs.push_back(1.0 - t);
      break;
    case ProbePoint::infinity:
      xs = {10.0, 100.0, 1000.0};
      for (double x : xs) h.push_back(1.0 / x);
      break;
  }
  try {
    for (double x : xs) r.samples.push_back(f(x));
  } catch (const std::exception& e) {
    r.status = LimitStatus::inconclusive;
    r.reason = e.what();
    return r;
  }
  for (double v : r.samples) {
    if (!std::isfinite(v)) {
      r.status = LimitStatus::inconclusive;
      r.reason = "non-finite sample";
      return r;
    }
  }

  // Neville's scheme at h = 0; the diagonal holds successive extrapolants.
  std::vector<double> t = r.samples;
  std::vector<double> diagonal{t.back()};
  const std::size_t n = t.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      t[i] = (h[i] * t[i + 1] - h[i + level] * t[i]) / (h[i] - h[i + level]);
    }
    diagonal.push_back(t[0]);
  }
  r.extrapolated = diagonal.back();
  r.convergence = std::abs(diagonal.back() - diagonal[diagonal.size() - 2]);
  if (r.convergence > 10.0 * tol) {
    r.status = LimitStatus::inconclusive;
    r.reason = "extrapolation not converged";
  } else {
    r.status = std::abs(r.extrapolated - expected) <= tol ? LimitStatus::pass : LimitStatus::fail;
  }
  return r;
}

}  // namespace betaram
