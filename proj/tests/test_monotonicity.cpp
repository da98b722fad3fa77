#include <doctest.h>

#include "betaram/errors.hpp"
#include "betaram/functions.hpp"
#include "betaram/monotonicity.hpp"
#include "betaram/registry.hpp"
#include "betaram/working_real.hpp"
#include "fd.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

using namespace betaram;
using std::numbers::pi;

namespace {

DerivativeFunction constant_one() {
  return {"one", 2, [](double, int order) { return order == 0 ? 1.0 : 0.0; }};
}

DerivativeFunction power(std::string name, int p) {
  return {std::move(name), 2, [p](double x, int order) {
            double c = 1.0;
            for (int i = 0; i < order; ++i) c *= p - i;
            return order > p ? 0.0 : c * std::pow(x, p - order);
          }};
}

MonotonicityClaim claim_of(ClaimKind kind) {
  MonotonicityClaim c;
  c.kind = kind;
  return c;
}

}  // namespace

TEST_CASE("grid spec") {
  const GridSpec g = GridSpec::parse("0.01:20:64:log");
  CHECK(g.lo == 0.01);
  CHECK(g.hi == 20.0);
  CHECK(g.points == 64);
  CHECK(g.spacing == Spacing::logarithmic);
  CHECK(g.str() == "0.01:20:64:log");
  CHECK(GridSpec::parse(g.str()).str() == g.str());

  const auto nodes = g.nodes();
  REQUIRE(nodes.size() == 64);
  CHECK(nodes.front() == 0.01);
  CHECK(nodes.back() == 20.0);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    CHECK(nodes[i] / nodes[i - 1] == doctest::Approx(std::pow(2000.0, 1.0 / 63)).epsilon(1e-12));
  }
  const auto lin = GridSpec::parse("0:1:5:lin").nodes();
  CHECK(lin == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});

  for (const char* bad : {"1:0:5:lin", "0:1:1:lin", "0:1:5:log", "0:1:5", "a:1:5:lin", "0:1:5:cubic", "0:1:5x:lin"}) {
    CHECK_THROWS_AS(GridSpec::parse(bad), DomainError);
  }
  CHECK(kGridHalfLine.str() == "0.01:20:64:log");
  CHECK(kGridHalfInterval.str() == "0.01:0.49:49:lin");
  CHECK(kGridUnitInterval.str() == "0.02:0.98:49:lin");
}

TEST_CASE("claim checks") {
  CHECK(claim_of(ClaimKind::positive).checks() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(claim_of(ClaimKind::concave).checks() == std::vector<std::pair<int, int>>{{2, -1}});
  const auto cm = completely_monotone(3).checks();
  CHECK(cm == std::vector<std::pair<int, int>>{{0, 1}, {1, -1}, {2, 1}, {3, -1}});
  MonotonicityClaim odd;
  odd.kind = ClaimKind::sign_pattern;
  odd.order_max = 4;
  odd.sign_rule = [](int m) { return m % 2 == 1 ? 1 : 0; };
  CHECK(odd.checks() == std::vector<std::pair<int, int>>{{1, 1}, {3, 1}});
}

TEST_CASE("verify_claim on h1") {
  const auto* h1 = find_function("h1");
  REQUIRE(h1 != nullptr);
  auto claim = claim_of(ClaimKind::positive);
  const auto pos = verify_claim(*h1, claim, kGridHalfLine);
  const auto inc = verify_claim(*h1, claim_of(ClaimKind::increasing), kGridHalfLine);
  CHECK(pos.passed);
  CHECK(inc.passed);
  CHECK(pos.worst_margin >= 1.4);
  CHECK(pos.per_point.size() == 64);
  CHECK(h1->eval(1e-6, 0) == doctest::Approx(1.5).epsilon(1e-4));
}

TEST_CASE("constant fails strict increase") {
  const auto r = verify_claim(constant_one(), claim_of(ClaimKind::increasing), GridSpec{0.1, 1.0, 10});
  CHECK_FALSE(r.passed);
  CHECK(r.worst_margin == 0.0);
  for (const auto& p : r.per_point) {
    CHECK_FALSE(p.pass);
    CHECK(p.reason == "sign violation");
  }
  auto lenient = claim_of(ClaimKind::increasing);
  lenient.allow_equality = true;
  CHECK(verify_claim(constant_one(), lenient, GridSpec{0.1, 1.0, 10}).passed);
}

TEST_CASE("d_func decreasing") {
  const auto* d = find_function("D");
  REQUIRE(d != nullptr);
  const auto r = verify_claim(*d, claim_of(ClaimKind::decreasing), GridSpec{0.05, 10.0, 64, Spacing::logarithmic});
  CHECK(r.passed);
  CHECK(r.worst_margin > 0.0);
}

TEST_CASE("verify_claim failure modes") {
  const DerivativeFunction throws{"throws", 1, [](double x, int) -> double {
                                    if (x > 0.5) throw DomainError("out of range");
                                    return 1.0;
                                  }};
  const auto r = verify_claim(throws, claim_of(ClaimKind::positive), GridSpec{0.1, 0.9, 5});
  CHECK_FALSE(r.passed);
  REQUIRE(r.per_point.size() == 5);
  CHECK(r.per_point[0].pass);
  CHECK_FALSE(r.per_point[4].pass);
  CHECK(r.per_point[4].reason.find("out of range") != std::string::npos);
  CHECK(std::isinf(r.worst_margin));

  const DerivativeFunction nan_f{"nan", 0, [](double, int) { return std::nan(""); }};
  CHECK_FALSE(verify_claim(nan_f, claim_of(ClaimKind::positive), GridSpec{0.1, 0.9, 3}).passed);

  CHECK_THROWS_AS(verify_claim(nan_f, claim_of(ClaimKind::increasing), GridSpec{0.1, 0.9, 3}), RangeError);
}

TEST_CASE("verify_claim is deterministic") {
  const auto* h2 = find_function("h2");
  REQUIRE(h2 != nullptr);
  const auto a = verify_claim(*h2, completely_monotone(2), kGridHalfLine);
  const auto b = verify_claim(*h2, completely_monotone(2), kGridHalfLine);
  REQUIRE(a.per_point.size() == b.per_point.size());
  for (std::size_t i = 0; i < a.per_point.size(); ++i) {
    CHECK(a.per_point[i].x == b.per_point[i].x);
    CHECK(a.per_point[i].order == b.per_point[i].order);
    CHECK(std::memcmp(&a.per_point[i].value, &b.per_point[i].value, sizeof(double)) == 0);
  }
  CHECK(a.worst_margin == b.worst_margin);
}

TEST_CASE("worst margin by order") {
  const auto r = verify_claim(power("x2", 2), completely_monotone(2), GridSpec{1.0, 2.0, 3});
  CHECK_FALSE(r.passed);
  REQUIRE(r.worst_margin_by_order.size() == 3);
  CHECK(r.worst_margin_by_order[0] == 1.0);
  CHECK(r.worst_margin_by_order[1] == -4.0);
  CHECK(r.worst_margin_by_order[2] == 2.0);
  CHECK(r.worst_margin == -4.0);

  const auto rec = to_record(r);
  CHECK(rec.label == "x2");
  CHECK(rec.grid == "1:2:3:lin");
  CHECK_FALSE(rec.passed);
}

TEST_CASE("lhospital rule") {
  const GridSpec grid{0.05, 0.95, 19};
  const auto r = lhospital_rule_check(power("x2", 2), power("x", 1), 0.0, 1.0, Anchor::at_a, grid);
  CHECK(r.passed);
  CHECK(r.notes == "increasing");
  for (const auto& p : r.per_point) {
    if (p.order == 1) CHECK(p.value == doctest::Approx(2 * 0.05).epsilon(1e-12));
    if (p.order == 0) CHECK(p.value == doctest::Approx(0.05).epsilon(1e-12));
  }

  const auto same = lhospital_rule_check(power("x", 1), power("x", 1), 0.0, 1.0, Anchor::at_a, grid);
  CHECK_FALSE(same.passed);
  CHECK(same.notes == "constant f'/g'");
  CHECK(same.worst_margin == 0.0);

  // f = 1 - R G(2x)/G(x)^2, g = x^2 G(2x)/G(x)^2 vanish at 0.
  const DerivativeFunction f{"f", 1, [](double x, int order) {
                               return order == 0 ? 1.0 - r_over_b(x) : -r_over_b(x, 1);
                             }};
  const DerivativeFunction g{"g", 1, [](double x, int order) {
                               const double ib = reciprocal_big_b(x);
                               if (order == 0) return x * x * ib;
                               const double lb = 2 * boost::math::digamma(x) - 2 * boost::math::digamma(2 * x);
                               return 2 * x * ib - x * x * ib * lb;
                             }};
  const auto thm = lhospital_rule_check(f, g, 0.0, 10.0, Anchor::at_a, GridSpec{0.05, 8.0, 40, Spacing::logarithmic});
  CHECK(thm.passed);
  CHECK(thm.notes == "decreasing");

  CHECK_THROWS_AS(lhospital_rule_check(constant_one(), power("x", 1), 0.0, 1.0, Anchor::at_a, grid), DomainError);
  CHECK_THROWS_AS(lhospital_rule_check(power("x", 1), power("x", 1), 0.2, 1.0, Anchor::at_a, grid), DomainError);
}

TEST_CASE("limit probe") {
  const auto rb = limit_probe([](double x) { return r_over_b(x); }, ProbePoint::zero_plus, 1.0, 1e-4);
  CHECK(rb.passed());
  CHECK(rb.samples.size() == 5);

  const double two_zeta3 = 2 * boost::math::zeta(3.0);
  CHECK(limit_probe([](double x) { return d_func(x); }, ProbePoint::zero_plus, two_zeta3, 1e-6).passed());

  const auto rt = r_tilde_handle(1.0, 1);
  CHECK(limit_probe([&](double x) { return rt.eval(x, 0); }, ProbePoint::zero_plus, -pi * pi / 3, 1e-5).passed());

  CHECK(limit_probe([](double x) { return r_over_b(x); }, ProbePoint::one_minus, 0.0, 1e-6).passed());
  CHECK(limit_probe([](double x) { return 3.0 + 1.0 / x; }, ProbePoint::infinity, 3.0, 1e-10).passed());

  const auto wrong = limit_probe([](double x) { return r_over_b(x); }, ProbePoint::zero_plus, 1.1, 1e-4);
  CHECK(wrong.status == LimitStatus::fail);

  const auto osc = limit_probe([](double x) { return std::sin(1.0 / x); }, ProbePoint::zero_plus, 0.0, 1e-6);
  CHECK(osc.status == LimitStatus::inconclusive);
  const auto thrower = limit_probe([](double) -> double { throw DomainError("no"); }, ProbePoint::zero_plus, 0, 1);
  CHECK(thrower.status == LimitStatus::inconclusive);
  CHECK(std::string(to_string(LimitStatus::inconclusive)) == "inconclusive");
}

TEST_CASE("catalog derivatives agree with finite differences") {
  std::mt19937_64 rng(20261016);
  for (const auto& f : function_catalog()) {
    if (f.max_order < 1) continue;
    const GridSpec grid = (f.name == "F") ? GridSpec{0.05, 0.45, 41} : GridSpec{0.1, 5.0, 64, Spacing::logarithmic};
    const auto nodes = grid.nodes();
    std::uniform_int_distribution<std::size_t> pick(0, nodes.size() - 1);
    for (int trial = 0; trial < 5; ++trial) {
      const double x = nodes[pick(rng)];
      for (int k = 1; k <= f.max_order; ++k) {
        const double exact = f.eval(x, k);
        const double approx = fd5([&](double t) { return f.eval(t, k - 1); }, x);
        CHECK_MESSAGE(close(approx, exact, 1e-6, 1e-4),
                      f.name << " order " << k << " at x=" << x << ": " << exact << " vs " << approx);
      }
    }
  }
}
