#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "webs/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::vector<const char*> argv = {"webs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = webs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval emits the focal measures") {
  CliResult r = run({"eval", "--point", "1,1"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["f"].get<double>() == doctest::Approx(2.2360680).epsilon(1e-6));
  CHECK(j["g"].get<double>() == doctest::Approx(0.4472136).epsilon(1e-6));
  CHECK(j["h"].get<double>() == doctest::Approx(1.2360680).epsilon(1e-6));
  CHECK(j["e"].get<double>() == doctest::Approx(3.2360680).epsilon(1e-6));
  // Doubles round-trip through the JSON text.
  json again = json::parse(json::parse(r.out).dump());
  CHECK(again["f"].get<double>() == j["f"].get<double>());
}

TEST_CASE("map and invert") {
  CliResult r = run({"map", "--web", "w3", "--coords", "0.693147,-0.693147"});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["s"].get<double>() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(j["t"].get<double>() == doctest::Approx(1.5).epsilon(1e-5));

  CliResult inv = run({"invert", "--web", "w4", "--point",
                       "1.4142135623730951,1.224744871391589"});
  REQUIRE(inv.status == 0);
  json ji = json::parse(inv.out);
  CHECK(ji["x"].get<double>() == doctest::Approx(std::log(3.0)).epsilon(1e-9));
  CHECK(ji["y"].get<double>() == doctest::Approx(-std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("domain failures exit 1 with a JSON error object") {
  CliResult r = run({"map", "--web", "w2", "--coords", "1,0.5"});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  json e = json::parse(r.err);
  CHECK(e["error"] == "OutsideDomain");
  CHECK(e.contains("message"));

  CliResult r2 = run({"eval", "--point", "1,0"});
  CHECK(r2.status == 1);
  CHECK(json::parse(r2.err)["error"] == "OutsideQuadrant");

  CliResult r3 = run({"tangency", "--k1", "1.0"});
  CHECK(r3.status == 1);
  CHECK(json::parse(r3.err)["error"] == "InvalidScale");
}

TEST_CASE("usage failures exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"eval"}).status == 2);                                // missing --point
  CHECK(run({"eval", "--point", "1,1", "--bogus"}).status == 2);   // unknown flag
  CHECK(run({"eval", "--point", "banana"}).status == 2);
  CHECK(run({"map", "--web", "w9", "--coords", "1,1"}).status == 2);
  CHECK(run({"verify", "--suite", "some"}).status == 2);
  CHECK(run({"render", "--web", "w1", "--window", "1,0,0,1", "--out",
             "/tmp/x.svg"}).status == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("verify emits a report array and exits by pass state") {
  CliResult r = run({"verify", "--web", "w1", "--samples", "500", "--seed", "7"});
  REQUIRE(r.status == 0);
  json arr = json::parse(r.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 5);
  for (const auto& rep : arr) {
    CHECK(rep["passed"] == true);
    CHECK(rep["web"] == "w1");
    CHECK(rep["seed"] == 7);
  }

  CliResult all = run({"verify", "--suite", "all", "--samples", "300",
                       "--seed", "42"});
  CHECK(all.status == 0);
  CHECK(json::parse(all.out).size() == 26);

  CliResult pretty = run({"verify", "--web", "w2", "--samples", "300",
                          "--pretty"});
  CHECK(pretty.status == 0);
  CHECK(pretty.out.find("PASS") != std::string::npos);
}

TEST_CASE("render writes an SVG file") {
  std::string path = "cli_render_test.svg";
  CliResult r = run({"render", "--web", "w1", "--step", "0.6931471805599453",
                     "--shift", "0,0", "--window", "0.1,3,-3,3", "--out", path});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["out"] == path);
  CHECK(j["polylines"].get<int>() == 26);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first_line;
  std::getline(in, first_line);
  CHECK(first_line.rfind("<?xml", 0) == 0);
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("tangency emits a sweep report and optional figure") {
  std::string path = "cli_tangency_test.svg";
  CliResult r = run({"tangency", "--k1", "0.7071067811865476", "--members",
                     "20", "--out", path});
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["samples"] == 40);
  std::ifstream in(path);
  REQUIRE(in.good());
  in.close();
  std::remove(path.c_str());
}
