// End-to-end tests against the conekit binary: output formats, round-trips
// and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conekit/conekit.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace conekit;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CONEKIT_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "conekit_cli_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
  auto path = scratch_dir() / name;
  std::ofstream out(path);
  out << content;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: valuation") {
  auto r = run("val \"5*r^(2/3) + r^(2)\"");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2/3\n");
  CHECK(run("val \"0\"").out == "inf\n");
}

TEST_CASE("cli: compare") {
  CHECK(run("cmp \"r\" \"1/1000000\"").out == "LESS\n");
  CHECK(run("cmp \"(1+r)/(1+r)\" \"1\"").out == "EQUAL\n");
  CHECK(run("cmp \"1 - r^(2)\" \"1 - r\"").out == "GREATER\n");
}

TEST_CASE("cli: exit codes") {
  CHECK(run("val \"not a number\"").exit_code == 2);
  CHECK(run("val").exit_code == 2);             // missing argument
  CHECK(run("no-such-command").exit_code == 2);
  std::string notpd = write_file("notpd.json",
                                 R"({"m":2,"entries":[["0","1"],["1","0"]]})");
  CHECK(run("ldl " + notpd).exit_code == 3);
  CHECK(run("dist " + notpd + " " + notpd).exit_code == 3);
  CHECK(run("det missing-file.json").exit_code == 2);
  CHECK(run("finite-building --q 5 --m 3").exit_code == 3);
  CHECK(run("coxeter --rank 9").exit_code == 3);
}

TEST_CASE("cli: distance with float convenience") {
  std::string a = write_file("i3.json",
                             R"({"m":3,"entries":[["1","0","0"],["0","1","0"],["0","0","1"]]})");
  std::string b = write_file(
      "d3.json",
      "{\"m\":3,\"entries\":[[\"r^(-1)\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"r\"]]}");
  auto r = run("dist " + a + " " + b);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "d2 = 2"));
  CHECK(contains(r.out, "1.41421356"));

  auto rj = run("dist " + a + " " + b + " --json");
  auto j = json::parse(rj.out);
  CHECK(j["d2"] == "2");
  CHECK(j["d_approx"].get<double>() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("cli: ldl decomposition output re-parses") {
  std::string a = write_file("spd.json", R"({"m":2,"entries":[["2","1"],["1","2"]]})");
  auto r = run("ldl " + a + " --json");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["positive_definite"] == true);
  CHECK(parse_hahn(j["L"][1][0].get<std::string>()) == HahnNumber(make_rational(1, 2)));
  CHECK(parse_hahn(j["D"][1].get<std::string>()) == HahnNumber(make_rational(3, 2)));
}

TEST_CASE("cli: determinant") {
  std::string a = write_file("det.json",
                             "{\"m\":2,\"entries\":[[\"r\",\"0\"],[\"0\",\"r^(-1)\"]]}");
  CHECK(run("det " + a).out == "1\n");
}

TEST_CASE("cli: roots of a pencil polynomial") {
  std::string p = write_file("poly.json", "{\"coeffs\":[\"1\",\"0 - r^(-1) - r\",\"1\"]}");
  auto r = run("roots " + p);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-1\n1\n");
}

TEST_CASE("cli: cone-point output feeds dist") {
  std::string s = write_file(
      "seq.json",
      R"({"m":2,"diag":[[{"c":"1","q":"2"}],[{"c":"1","q":"-2"}]]})");
  auto r = run("cone-point " + s);
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  CHECK(j["m"] == 2);
  CHECK(parse_hahn(j["entries"][0][0].get<std::string>()) == parse_hahn("r^(-2)"));
  std::string point = write_file("point.json", r.out);
  std::string id = write_file("i2.json", R"({"m":2,"entries":[["1","0"],["0","1"]]})");
  auto d = run("dist " + id + " " + point);
  CHECK(contains(d.out, "d2 = 8"));
}

TEST_CASE("cli: relation rq tie cases") {
  std::string tie = write_file("tie.json",
                               R"({"m":4,"diag":[[{"c":"2","q":"1"}],[{"c":"1","q":"1"}],)"
                               R"([{"c":"1","q":"-1"}],[{"c":"1/2","q":"-1"}]]})");
  std::string base = write_file("base.json",
                                R"({"m":4,"diag":[[{"c":"1","q":"0"}],[{"c":"1","q":"0"}],)"
                                R"([{"c":"1","q":"0"}],[{"c":"1","q":"0"}]]})");
  CHECK(run("rq " + tie + " " + base + " 2").out == "EVENTUALLY_FALSE\n");
  CHECK(run("rq " + tie + " " + base + " 3").out == "EVENTUALLY_TRUE\n");
  CHECK(run("rq " + tie + " " + base + " 0").exit_code == 3);
}

TEST_CASE("cli: expcheck with polynomial exponents") {
  std::string lin = write_file("lin.json", R"({"m":1,"diag":[[{"c":"1","q":"2"}]]})");
  auto r = run("expcheck " + lin);
  CHECK(r.out == "admissible, k = 3\n");
  std::string quad = write_file("quad.json",
                                R"({"m":1,"diag":[[{"c":"1","p":["0","0","1"]}]]})");
  CHECK(run("expcheck " + quad).out == "inadmissible\n");
  std::string constant = write_file("const.json", R"({"m":1,"diag":[[{"c":"5","q":"0"}]]})");
  CHECK(run("expcheck " + constant).out == "admissible, k = 2\n");
}

TEST_CASE("cli: flag and common frame") {
  std::string fr = write_file("frame.json",
                              R"([["1","0","0"],["0","1","0"],["0","0","1"]])");
  auto r = run("flag --frame " + fr + " --direction \"1,0,-1\"");
  CHECK(r.exit_code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0].size() == 1);
  CHECK(j[1].size() == 2);

  std::string f1 = write_file("flag1.json", R"([[["1","0"]]])");
  std::string f2 = write_file("flag2.json", R"([[["1","r"]]])");
  auto fr2 = run("frame " + f1 + " " + f2);
  CHECK(fr2.exit_code == 0);
  auto jf = json::parse(fr2.out);
  CHECK(jf.size() == 2);
}

TEST_CASE("cli: coxeter and diamond") {
  auto r = run("coxeter --rank 2 --adjacency");
  CHECK(contains(r.out, "chambers: 6"));
  CHECK(contains(r.out, "thin: yes"));
  CHECK(contains(r.out, "neighbours: yes"));

  auto d = run("diamond --x \"0,0,0\" --y \"1,0,-1\" --member \"2/3,-1/3,-1/3\"");
  CHECK(contains(d.out, "member: yes"));
  CHECK(contains(d.out, "1/3,1/3,-2/3"));

  auto dj = run("diamond --x \"0,0,0\" --y \"1,0,-1\" --json");
  CHECK(json::parse(dj.out)["vertices"].size() == 4);
}

TEST_CASE("cli: sector check and finite building") {
  auto r = run("sector-check --x \"0,0,0\" --chamber \"0,1,2\" --v \"1,0,-1\" "
               "--radius 2 --samples 25 --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "PASS"));

  auto f = run("finite-building --q 2 --m 3 --check-axioms");
  CHECK(contains(f.out, "chambers: 21"));
  CHECK(contains(f.out, "apartments: 28"));
  CHECK(contains(f.out, "B2: holds"));

  auto fj = run("finite-building --q 2 --m 3 --check-axioms --json");
  auto j = json::parse(fj.out);
  CHECK(j["chambers"] == 21);
  for (const auto& ax : j["axioms"]) CHECK(ax["holds"] == true);
}
