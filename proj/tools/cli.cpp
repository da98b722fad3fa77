#include "cli.hpp"

#include "betaram/errors.hpp"
#include "betaram/functions.hpp"
#include "betaram/identities.hpp"
#include "betaram/kernels.hpp"
#include "betaram/registry.hpp"
#include "betaram/report.hpp"
#include "betaram/series.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <ostream>
#include <set>

namespace betaram::cli {
namespace {

struct Options {
  std::string verb;
  std::string target;
  double x = 0.0;
  double s = 1.0;
  int n = 0;
  int n_max = 0;
  double eps = 1e-10;
  double theta = 1.0;
  std::string grid;
  std::string format;
  std::string out;
};

const std::map<std::string, std::set<std::string>> kAllowed = {
    {"eval", {"--x", "--n", "--theta", "--grid", "--format", "--out"}},
    {"series", {"--x", "--n", "--eps"}},
    {"coeffs", {"--n-max", "--format", "--out"}},
    {"verify", {"--grid", "--format", "--out"}},
    {"conjecture", {"--n-max"}},
    {"hs", {"--s", "--eps"}},
    {"identities", {}},
    {"report", {"--grid", "--format", "--out"}},
};

using Num = std::string (*)(double);
constexpr Num num = format_number;

class Session {
 public:
  Session(const Options& o, const std::set<std::string>& given, std::ostream& out)
      : o_(o), given_(given), out_(out) {}

  bool has(const std::string& flag) const { return given_.count(flag) > 0; }

  void require(const std::string& flag) const {
    if (!has(flag)) throw UsageError(o_.verb + " requires " + flag);
  }

  std::string format(const std::string& fallback) const {
    const std::string f = o_.format.empty() ? fallback : o_.format;
    return f;
  }

  // Writes to --out when given, else to stdout.
  void emit(const std::string& text) const {
    if (o_.out.empty()) {
      out_ << text;
    } else {
      write_file(o_.out, text);
      out_ << "wrote " << o_.out << '\n';
    }
  }

  int eval() const {
    if (o_.target.empty()) throw UsageError("eval needs a function name");
    std::function<double(double)> f;
    if (o_.target == "Rtilde") {
      require("--n");
      const ThetaShiftParams p{o_.theta, o_.n};
      f = [p](double x) { return r_tilde_theta_n(p, x); };
    } else if (o_.target == "lgamma") {
      f = [](double x) { return ln_gamma(x); };
    } else if (o_.target == "psi") {
      const int m = o_.n;
      f = [m](double x) { return m == 0 ? psi(x) : polygamma(PolygammaOrder{m}, x); };
    } else if (o_.target == "zeta") {
      f = [](double x) { return zeta(x); };
    } else if (const DerivativeFunction* h = find_function(o_.target)) {
      if (o_.n < 0 || o_.n > h->max_order) {
        throw UsageError(o_.target + " supports derivative orders 0.." + std::to_string(h->max_order));
      }
      const int m = o_.n;
      f = [h, m](double x) { return h->eval(x, m); };
    } else {
      std::string names = "Rtilde, lgamma, psi, zeta";
      for (const auto& c : function_catalog()) names += ", " + c.name;
      throw UsageError("unknown function '" + o_.target + "' (known: " + names + ")");
    }
    if (has("--theta") && o_.target != "Rtilde") throw UsageError("--theta applies to Rtilde only");

    if (!has("--grid")) {
      require("--x");
      if (has("--format") || has("--out")) throw UsageError("--format/--out need --grid");
      out_ << num(f(o_.x)) << '\n';
      return kOk;
    }
    if (has("--x")) throw UsageError("--x and --grid are exclusive");
    const GridSpec g = GridSpec::parse(o_.grid);
    Table t{o_.target, {"x", o_.target}, {}};
    for (double x : g.nodes()) t.rows.push_back({x, f(x)});
    const std::string fm = format("csv");
    if (fm == "csv") {
      emit(table_to_csv(t));
    } else if (fm == "json") {
      emit(table_to_json(t));
    } else {
      throw UsageError("eval --format must be csv or json");
    }
    return kOk;
  }

  void print_enclosure(const Enclosure& e) const {
    out_ << "value  " << num(e.mid) << '\n' << "radius " << num(e.rad) << '\n';
  }

  int series() const {
    require("--x");
    const double x = o_.x;
    const auto terms = [&](int fallback) { return has("--n") ? o_.n : fallback; };
    const std::string& t = o_.target;
    if (t == "lnb") {
      print_enclosure(lnb_series().evaluate(x, terms(40)));
    } else if (t == "r_power") {
      print_enclosure(r_power_series(x, terms(20)));
    } else if (t == "b_power") {
      print_enclosure(b_power_series_sum(x, o_.eps));
    } else if (t == "b_hyper1") {
      print_enclosure(b_hyper_sum_1(x, o_.eps));
    } else if (t == "b_hyper2") {
      print_enclosure(b_hyper_sum_2(x, o_.eps));
    } else if (t == "remark2") {
      out_ << num(remark2_series(x, terms(20))) << '\n';
    } else if (t == "lnb_asymptotic") {
      out_ << "classic " << num(lnb_asymptotic(x, terms(5), AsymptoticVariant::classic)) << '\n'
           << "shifted " << num(lnb_asymptotic(x, terms(5), AsymptoticVariant::shifted)) << '\n';
    } else if (t == "reciprocal_b") {
      out_ << num(reciprocal_b_series(x, terms(40))) << '\n';
    } else {
      throw UsageError("unknown series '" + t +
                       "' (known: lnb, r_power, b_power, b_hyper1, b_hyper2, remark2, lnb_asymptotic, reciprocal_b)");
    }
    return kOk;
  }

  int coeffs() const {
    if (o_.target.empty()) throw UsageError("coeffs needs a table name");
    const TableKind kind = parse_table_kind(o_.target);
    require("--n-max");
    const Table t = build_table(kind, o_.n_max);
    const std::string fm = format("csv");
    if (fm == "csv") {
      emit(table_to_csv(t));
    } else if (fm == "json") {
      emit(table_to_json(t));
    } else {
      throw UsageError("coeffs --format must be csv or json");
    }
    return kOk;
  }

  int verify(const std::string& fallback_format) const {
    std::optional<GridSpec> grid;
    if (has("--grid")) grid = GridSpec::parse(o_.grid);
    const ReportDocument doc = verify_all(o_.target, grid);
    const std::string fm = format(fallback_format);
    if (fm == "text") {
      emit(report_to_text(doc));
    } else if (fm == "json") {
      emit(report_to_json(doc));
    } else if (fm == "csv") {
      emit(report_to_csv(doc));
    } else {
      throw UsageError("--format must be text, csv or json");
    }
    return doc.overall_pass ? kOk : kVerificationFailed;
  }

  int conjecture() const {
    if (!o_.target.empty()) throw UsageError("conjecture takes no target");
    const int n_max = has("--n-max") ? o_.n_max : 200;
    if (n_max < 1 || n_max > kMaxConjectureIndex) {
      throw UsageError("--n-max must be in 1.." + std::to_string(kMaxConjectureIndex));
    }
    const auto c = conjecture_coeffs(n_max);
    double worst = INFINITY;
    int at = 0;
    for (int n = 1; n <= n_max; ++n) {
      const double m = c[std::size_t(n)].s_scaled / (4.0 * std::pow(5.0, -n - 1.0)) - 1.0;
      if (m < worst) {
        worst = m;
        at = n;
      }
    }
    const bool ok = c[0].s_scaled > 0.0 && worst > 0.0;
    out_ << "s_0 " << num(c[0].s_scaled) << '\n'
         << "min scaled margin " << num(worst) << " at n=" << at << '\n'
         << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kOk : kVerificationFailed;
  }

  int hs() const {
    if (!o_.target.empty()) throw UsageError("hs takes no target");
    const double eps = has("--eps") ? o_.eps : 1e-8;
    const Enclosure e = hs_eval({o_.s, eps});
    out_ << "H(" << num(o_.s) << ") in [" << num(e.lo()) << ", " << num(e.hi()) << "]\n";
    print_enclosure(e);
    return kOk;
  }

  int identities() const {
    const std::string& t = o_.target;
    if (!t.empty() && t != "remark4" && t != "zeta-inequality" && t != "hs-limits") {
      throw UsageError("unknown identity '" + t + "' (known: remark4, zeta-inequality, hs-limits)");
    }
    bool ok = true;
    if (t.empty() || t == "remark4") {
      const Remark4Values v = remark4_values();
      const auto rec = verify_remark4();
      ok = ok && rec.passed;
      out_ << "alternating zeta series " << num(v.alternating_zeta_log) << "  ln(4/pi) " << num(v.expected_log) << '\n'
           << "halved zeta series      " << num(v.halved_zeta) << "  2-ln4 " << num(v.expected_halved) << '\n'
           << (rec.passed ? "PASS" : "FAIL") << " remark4\n";
    }
    if (t.empty() || t == "zeta-inequality") {
      const SignReport r = zeta_functional_inequality();
      ok = ok && r.passed;
      out_ << "(1-2^-x) zeta(x) > 1 on " << r.grid.str() << ", worst margin " << num(r.worst_margin) << '\n'
           << (r.passed ? "PASS" : "FAIL") << " zeta-inequality\n";
    }
    if (t.empty() || t == "hs-limits") {
      bool all = true;
      for (int k = 0; k <= 3; ++k) {
        const Enclosure e = hs_eval({k + 1.0, 1e-10});
        const double lim = hs_derivative_limit(k);
        const bool hit = e.contains(lim, 1e-10);
        all = all && hit;
        out_ << "H(" << k + 1 << ") " << num(e.mid) << "  derivative limit " << num(lim) << '\n';
      }
      ok = ok && all;
      out_ << (all ? "PASS" : "FAIL") << " hs-limits\n";
    }
    return ok ? kOk : kVerificationFailed;
  }

 private:
  const Options& o_;
  const std::set<std::string>& given_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"betaram: diagonal beta function B(x) = G(x)^2/G(2x), its series and inequality checks"};
  app.name("betaram");
  Options o;
  app.add_option("verb", o.verb, "eval | series | coeffs | verify | conjecture | hs | identities | report")
      ->required();
  app.add_option("target", o.target, "function, series, table, or claim-label glob");
  std::map<std::string, CLI::Option*> flags;
  flags["--x"] = app.add_option("--x", o.x, "argument");
  flags["--s"] = app.add_option("--s", o.s, "exponent for hs");
  flags["--n"] = app.add_option("--n", o.n, "derivative order, term count, or R~ index");
  flags["--n-max"] = app.add_option("--n-max", o.n_max, "last table index");
  flags["--eps"] = app.add_option("--eps", o.eps, "target enclosure radius");
  flags["--theta"] = app.add_option("--theta", o.theta, "theta for Rtilde");
  flags["--grid"] = app.add_option("--grid", o.grid, "lo:hi:points:log|lin");
  flags["--format"] = app.add_option("--format", o.format, "text | csv | json");
  flags["--out"] = app.add_option("--out", o.out, "output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const auto allowed = kAllowed.find(o.verb);
    if (allowed == kAllowed.end()) throw UsageError("unknown verb '" + o.verb + "'");
    std::set<std::string> given;
    for (const auto& [name, opt] : flags) {
      if (opt->count() == 0) continue;
      if (!allowed->second.count(name)) throw UsageError(name + " is not valid for " + o.verb);
      given.insert(name);
    }
    const Session session(o, given, out);
    if (o.verb == "eval") return session.eval();
    if (o.verb == "series") return session.series();
    if (o.verb == "coeffs") return session.coeffs();
    if (o.verb == "verify") return session.verify("text");
    if (o.verb == "report") return session.verify("json");
    if (o.verb == "conjecture") return session.conjecture();
    if (o.verb == "hs") return session.hs();
    return session.identities();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace betaram::cli
