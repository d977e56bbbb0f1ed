#include "doctest.h"

#include <json.hpp>

#include <sstream>

#include "pam/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pam::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("count") {
  const auto r = run({"count", "--pattern", "12312", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":3,\"pattern\":\"12312\",\"count\":\"12\"}\n");

  const auto both = run({"count", "--pattern", "12312", "--pattern", "121323", "--max-n", "4"});
  const auto rows = lines(both.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[4]["count"] == "45");
  CHECK(rows[4]["pattern"] == nlohmann::json::array({"12312", "121323"}));

  const auto refined = run({"count", "--pattern", "12312", "--n", "4", "--m", "2"});
  CHECK(lines(refined.out)[0]["count"] == "15");
  CHECK(run({"count", "--n", "3", "--format", "text"}).out == "15\n");
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":0,\"matching\":\"\",\"crossings\":0}\n");
  const auto two = run({"enumerate", "--n", "2", "--format", "text"});
  CHECK(two.out == "1122\n1212\n1221\n");
}

TEST_CASE("bijection") {
  const auto r = run({"bijection", "--map", "tau", "--input", "ENSW"});
  CHECK(r.code == 0);
  const auto row = lines(r.out).at(0);
  CHECK(row["output"] == "EEENEN");
  CHECK(row["roundtrip"] == true);
  CHECK(row["map"] == "tau");

  const auto phi = run({"bijection", "--map", "phi", "--input", "UUDDUUUDDHD"});
  CHECK(lines(phi.out).at(0)["output"] == "121343554662");

  const auto inv = run({"bijection", "--map", "rho", "--inverse", "--input", "1,2,3,2,1,3"});
  CHECK(lines(inv.out).at(0)["output"] == "[];[1];[2];[2,1];[1,1];[1];[]");

  const auto walk = run({"bijection", "--map", "walk", "--input", "[];[1];[2];[2,1];[1,1];[1];[]"});
  CHECK(lines(walk.out).at(0)["output"] == "EENWSW");

  const auto sweep = run({"bijection", "--map", "tau", "--n", "3"});
  CHECK(sweep.code == 0);
  CHECK(lines(sweep.out).size() == 12);
}

TEST_CASE("check") {
  const auto bad = run({"check", "--input", "123123", "--pattern", "12312"});
  CHECK(bad.code == 1);
  CHECK(lines(bad.out).at(0)["avoids"] == false);
  const auto good = run({"check", "--input", "1212", "--pattern", "12312"});
  CHECK(good.code == 0);

  const auto lemma = run({"check", "--pattern", "12213", "--n", "3"});
  CHECK(lemma.code == 0);
  const auto report = lines(lemma.out).at(0);
  CHECK(report["level_sizes"] == nlohmann::json::array({1, 3, 12, 55}));
  CHECK(report["rule_violations"].empty());
  CHECK(report["coverage_violations"].empty());
  CHECK(run({"check", "--pattern", "12345", "--n", "3"}).code == 2);
}

TEST_CASE("series") {
  const auto r = run({"series", "--formula", "super-catalan", "--n", "5"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[5]["formula"] == "super-catalan");
  CHECK(rows[5]["value"] == "197");
  CHECK(rows[5]["sqrt_form"] == "197");
  CHECK(rows[5]["binomial_sum"] == "197");

  const auto g = run({"series", "--formula", "crossings", "--n", "3", "--m", "1"});
  const auto grows = lines(g.out);
  CHECK(grows.back()["value"] == "5");
  CHECK(grows.back()["closed"] == "5");
  CHECK(grows.back()["alternating_sum"] == "5");
  CHECK(run({"series", "--formula", "gentree", "--n", "12"}).code == 0);
}

TEST_CASE("render") {
  const auto r = run({"render", "--input", "1122", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "+-+\n| | +-+\n1 2 3 4\n");
  std::string wide;
  for (int k = 1; k <= 21; ++k) wide += (k > 1 ? "," : "") + std::to_string(k) + "," + std::to_string(k);
  const auto big = run({"render", "--input", wide});
  CHECK(big.code == 2);
  CHECK(big.err.find("comma format") != std::string::npos);
}

TEST_CASE("verify-all") {
  const auto r = run({"verify-all", "--max-n", "3"});
  CHECK(r.code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) CHECK(row["passed"] == true);
  const auto one = run({"verify-all", "--criterion", "3", "--format", "text"});
  CHECK(one.out.rfind("PASS 3", 0) == 0);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--n", "-1"}).code == 2);
  CHECK(run({"count", "--n", "99"}).code == 2);
  CHECK(run({"count", "--n", "2", "--pattern", "21"}).code == 2);
  CHECK(run({"bijection", "--map", "xyz", "--input", "1"}).code == 2);
  CHECK(run({"bijection", "--map", "phi", "--input", "UD"}).code == 2);
  CHECK(run({"render", "--input", "121"}).code == 2);
  CHECK(run({"count", "--n", "2", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  const std::vector<std::string> args{"enumerate", "--n", "4", "--pattern", "12312"};
  CHECK(run(args).out == run(args).out);
}
