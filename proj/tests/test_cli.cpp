#include <doctest.h>

#include <json.hpp>

#include "fibstat/cli.hpp"

using namespace fibstat;
using cli::run;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

cli::Result go(const std::string& s) { return run(split(s)); }

}  // namespace

TEST_CASE("parse_args") {
  auto c = cli::parse_args(split("qfib --family M' --n 7 --method recursion --format json"));
  CHECK(c.verb == cli::Verb::Qfib);
  CHECK(c.family == Family::MPrime);
  CHECK(c.n == 7);
  CHECK(c.method == cli::Method::Recursion);
  CHECK(c.format == cli::Format::Json);

  auto v = cli::parse_args(split("verify --identity T4.1 --identity CASSINI --max-n 6 --jobs 3"));
  CHECK(v.verb == cli::Verb::Verify);
  CHECK(v.identities == std::vector<std::string>{"T4.1", "CASSINI"});
  CHECK(v.max_n == 6);
  CHECK(v.jobs == 3);

  CHECK(cli::parse_args(split("verify --all")).identities.size() == 19);
  CHECK_THROWS_AS(cli::parse_args(split("qfib --family RB --n 3 --method recursion")), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(split("qfib --family M --n 3 --method closed-form")), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(split("qfib --family W1 --n 0")), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(split("verify")), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(split("frobnicate")), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(split("qfib --family I --n -1")), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_args(split("--help")), cli::HelpRequested);
}

TEST_CASE("qfib output") {
  auto r = go("qfib --family I --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x^4*q^6 + 3*x^2*y*q^5 + y^2*q^4\n");

  auto j = nlohmann::json::parse(go("qfib --family D --n 3 --format json").out);
  CHECK(j["polynomial"] == "x^3*q^2 + 2*x*y*q");
  CHECK(j["terms"].size() == 2);

  CHECK(go("qfib --family I --n 9 --method closed-form").out == go("qfib --family I --n 9").out);
  CHECK(go("qfib --family C --n 40 --method recursion").exit_code == 0);
  CHECK(go("qfib --family I --n 4 --format latex").exit_code == 2);
  auto latex = go("table --family I --max-n 4 --format latex");
  CHECK(latex.out.find("4 & $x^{4}q^{6}") != std::string::npos);
}

TEST_CASE("enumerate and distribution") {
  CHECK(go("enumerate --class RL --n 3").out == "231\n312\n321\n");
  CHECK(go("enumerate --class 132,213,123 --n 3").out == "231\n312\n321\n");
  CHECK(go("distribution --class W1 --stat inv --n 4").out == "q^6 + 3*q^5 + 5*q^4 + 4*q^3\n");
  CHECK(go("enumerate --objects partitions --class LM --n 3").out == "1/2/3\n1/23\n12/3\n");
  CHECK(go("distribution --objects partitions --class LM --stat rb --n 4").exit_code == 0);
  CHECK(go("distribution --class L --stat rb --n 4").exit_code == 2);
}

TEST_CASE("table") {
  auto r = go("table --family C --max-n 3 --format csv");
  CHECK(r.out == "n,polynomial\n0,\"1\"\n1,\"x\"\n2,\"y*q + x^2\"\n3,\"x*y*q^2 + x*y*q + x^3\"\n");
}

TEST_CASE("exit codes") {
  CHECK(go("verify --identity T2.1 --max-n 6").exit_code == 0);
  CHECK(go("verify --identity T6.1 --max-n 4").exit_code == 1);
  auto bad = go("verify --identity T0.0");
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("T4.3a") != std::string::npos);
  CHECK(go("qfib --family Z --n 2").exit_code == 2);
  auto big = go("qfib --family I --n 30");
  CHECK(big.exit_code == 3);
  CHECK(big.err.find("26") != std::string::npos);
  CHECK(go("enumerate --class W2 --n 13").exit_code == 3);
  CHECK(go("--help").exit_code == 0);
  CHECK_FALSE(go("--help").out.empty());
}
