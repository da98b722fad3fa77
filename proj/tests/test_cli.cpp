#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using betaram::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("eval") {
  const auto r = call({"eval", "B", "--x", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out == "3.14159265358979\n");
  CHECK(r.err.empty());

  CHECK(call({"eval", "B", "--x", "1"}).out == "1\n");
  CHECK(call({"eval", "R", "--x", "0.5"}).out == "2.77258872223978\n");
  CHECK(call({"eval", "lgamma", "--x", "0.5"}).out == "0.5723649429247\n");
  CHECK(call({"eval", "zeta", "--x", "2"}).out == "1.64493406684823\n");
  CHECK(call({"eval", "psi", "--x", "1"}).out == "-0.577215664901533\n");

  const auto grid = call({"eval", "B", "--grid", "0.5:1:3:lin"});
  CHECK(grid.code == 0);
  CHECK(grid.out == "x,B\n0.5,3.14159265358979\n0.75,1.69442616958796\n1,1\n");

  const auto js = call({"eval", "h1", "--grid", "1:2:2:lin", "--format", "json"});
  CHECK(js.code == 0);
  const json doc = json::parse(js.out);
  CHECK(doc.at("columns") == json::array({"x", "h1"}));
  CHECK(doc.at("rows").size() == 2);
}

TEST_CASE("eval usage errors") {
  CHECK(call({"eval", "nope", "--x", "1"}).code == 2);
  CHECK(call({"eval", "B"}).code == 2);
  CHECK(call({"eval", "B", "--x", "1", "--grid", "1:2:2:lin"}).code == 2);
  CHECK(call({"eval", "B", "--x", "1", "--format", "json"}).code == 2);
  CHECK(call({"eval", "B", "--x", "1", "--theta", "2"}).code == 2);
  CHECK(call({"eval", "B", "--x", "1", "--n", "5"}).code == 2);
  CHECK(call({"eval", "B", "--x", "-1"}).code == 2);
  CHECK(call({"eval", "B", "--grid", "1:0:3:lin"}).code == 2);
  CHECK(call({"eval", "B", "--x", "abc"}).code == 2);
  const auto bad = call({"eval", "B", "--x", "1", "--bogus", "3"});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "error:"));
  CHECK(bad.out.empty());
}

TEST_CASE("unknown verb and option scoping") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"hs", "--s", "1", "--x", "2"}).code == 2);
  CHECK(call({"identities", "--n", "2"}).code == 2);
  CHECK(call({"conjecture", "--eps", "1"}).code == 2);
  const auto help = call({"--help"});
  CHECK(help.code == 0);
  CHECK(contains(help.out, "--grid"));
}

TEST_CASE("series") {
  const auto r = call({"series", "r_power", "--x", "0.5", "--n", "30"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "value  2.77258872"));
  CHECK(call({"series", "b_hyper1", "--x", "0.5", "--eps", "1e-9"}).code == 0);
  CHECK(call({"series", "lnb_asymptotic", "--x", "3"}).code == 0);
  CHECK(call({"series", "nope", "--x", "0.5"}).code == 2);
  CHECK(call({"series", "b_hyper2", "--x", "1.5"}).code == 2);
  CHECK(call({"series", "lnb"}).code == 2);
}

TEST_CASE("coeffs") {
  const auto b = call({"coeffs", "b_coeffs", "--n-max", "4"});
  CHECK(b.code == 0);
  std::istringstream lines(b.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "k,a_k,a_k_closed");
  std::getline(lines, line);
  CHECK(line.rfind("0,1,", 0) == 0);
  std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line.rfind("2,-1.64493406684823,", 0) == 0);
  CHECK(!contains(b.out, "\r"));

  const auto c = call({"coeffs", "conjecture_coeffs", "--n-max", "0"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "0.259314599367"));

  const auto l = call({"coeffs", "lnb_coeffs", "--n-max", "2", "--format", "json"});
  CHECK(l.code == 0);
  const json j = json::parse(l.out);
  CHECK(j.at("rows").size() == 1);
  CHECK(j["rows"][0][1].get<double>() == doctest::Approx(-std::numbers::pi * std::numbers::pi / 6).epsilon(1e-15));

  CHECK(call({"coeffs", "b_coeffs"}).code == 2);
  CHECK(call({"coeffs", "b_coeffs", "--n-max", "500"}).code == 2);
  CHECK(call({"coeffs", "nope", "--n-max", "5"}).code == 2);
  CHECK(call({"coeffs", "b_coeffs", "--n-max", "4", "--format", "xml"}).code == 2);
}

TEST_CASE("output files") {
  const auto dir = std::filesystem::temp_directory_path() / "betaram_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "b.csv";
  const auto r = call({"coeffs", "b_coeffs", "--n-max", "3", "--out", path.string()});
  CHECK(r.code == 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "k,a_k,a_k_closed");
  std::filesystem::remove_all(dir);

  const auto bad = call({"coeffs", "b_coeffs", "--n-max", "3", "--out", (dir / "no" / "such" / "b.csv").string()});
  CHECK(bad.code == 3);
  CHECK(contains(bad.err, "cannot open"));
}

TEST_CASE("conjecture and hs") {
  const auto c = call({"conjecture", "--n-max", "200"});
  CHECK(c.code == 0);
  CHECK(contains(c.out, "min scaled margin"));
  CHECK(contains(c.out, "PASS"));
  CHECK(call({"conjecture", "--n-max", "0"}).code == 2);

  const auto h = call({"hs", "--s", "1", "--eps", "1e-8"});
  CHECK(h.code == 0);
  const auto lo_at = h.out.find('[');
  const auto comma = h.out.find(',', lo_at);
  const auto hi_end = h.out.find(']', comma);
  const double lo = std::stod(h.out.substr(lo_at + 1, comma - lo_at - 1));
  const double hi = std::stod(h.out.substr(comma + 2, hi_end - comma - 2));
  CHECK(lo <= 1.38629436);
  CHECK(1.38629436 <= hi);
  CHECK(lo <= 2 * std::numbers::ln2);
  CHECK(2 * std::numbers::ln2 <= hi);

  CHECK(call({"hs", "--s", "0.3"}).code == 2);
  CHECK(call({"hs", "--s", "0.6", "--eps", "1e-14"}).code == 3);
  CHECK(call({"hs", "extra"}).code == 2);
}

TEST_CASE("identities") {
  const auto r = call({"identities"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "PASS remark4"));
  CHECK(contains(r.out, "PASS zeta-inequality"));
  CHECK(contains(r.out, "PASS hs-limits"));
  CHECK(call({"identities", "remark4"}).code == 0);
  CHECK(call({"identities", "nope"}).code == 2);
}

TEST_CASE("verify and report") {
  const auto v = call({"verify", "lemma-4.*"});
  CHECK(v.code == 0);
  CHECK(contains(v.out, "PASS overall (3 claims)"));

  const auto rep = call({"report", "remark-4"});
  CHECK(rep.code == 0);
  const json j = json::parse(rep.out);
  CHECK(j.at("overall_pass") == true);
  CHECK(j.at("claims").size() == 1);
  CHECK(j["claims"][0]["label"] == "remark-4");

  const auto csv = call({"verify", "remark-4", "--format", "csv"});
  CHECK(csv.out.rfind("label,passed,worst_margin,grid,notes\n", 0) == 0);

  CHECK(call({"verify", "no-such-claim"}).code == 2);
  CHECK(call({"verify", "remark-4", "--format", "yaml"}).code == 2);
  CHECK(call({"verify", "--grid", "bad"}).code == 2);
}

TEST_CASE("failed verification exits 1") {
  // A grid outside the claim's domain makes the claim fail; the run still reports.
  const auto r = call({"verify", "zeta-inequality", "--grid", "0.5:2:4:lin"});
  CHECK(r.code == 1);
  CHECK(contains(r.out, "FAIL zeta-inequality"));
  CHECK(contains(r.out, "FAIL overall"));

  const auto rep = call({"report", "zeta-inequality", "--grid", "0.5:2:4:lin"});
  CHECK(rep.code == 1);
  CHECK(json::parse(rep.out).at("overall_pass") == false);
}
