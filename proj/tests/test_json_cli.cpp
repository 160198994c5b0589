#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qaff/cli.hpp"
#include "qaff/json_io.hpp"
#include "qaff/sl2_eval.hpp"

using namespace qaff;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run qaff_run(std::vector<std::string> args) {
  args.insert(args.begin(), "qaff");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected = 0) {
  args.push_back("--json");
  const Run r = qaff_run(std::move(args));
  CHECK(r.code == expected);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("matrix and module JSON round trip") {
  const MatrixModule m = build_current_eval(2, Shift::RsInverse, 2).base;
  const Json j = to_json(m);
  CHECK(j["dim"] == 3);
  CHECK(j["type"] == "A1");
  CHECK(j["kmax"] == 2);
  const MatrixModule back = module_from_json(Json::parse(j.dump()));
  CHECK(back.dim == m.dim);
  CHECK(back.assign.size() == m.assign.size());
  for (const auto& [g, mat] : m.assign) CHECK(equal(back.at(g), mat));
  CHECK(to_json(back).dump() == j.dump());
  CHECK(equal(matrix_from_json(to_json(m.at(GenSymbol::E(1)))), m.at(GenSymbol::E(1))));
}

TEST_CASE("malformed module documents") {
  CHECK_THROWS_AS(module_from_json(Json::parse(R"j({"dim": 1})j")), ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"j({"dim": 1, "type": "A1", "generators": {"E(1)": [["x/"]]}})j")),
                  ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"j({"dim": 2, "type": "A1", "generators": {"E(1)": [["0"]]}})j")),
                  ParseError);
  CHECK_THROWS_AS(module_from_json(Json::parse(R"j({"dim": 1, "type": "A1", "generators": {"Q(1)": [["0"]]}})j")),
                  ParseError);
}

TEST_CASE("relation report layout") {
  RelationReport rep{"R3", 4, {{"i=1,j=1", "a", "b"}, {"i=0,j=0", "c", "d"}}, 1.5};
  const Json j = to_json(rep, {false, 1});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"relation_id", "instances_checked", "passed", "failure_count", "failures"});
  CHECK(j["failure_count"] == 2);
  CHECK(j["failures"].size() == 1);
  CHECK(j["failures"][0]["instance"] == "i=1,j=1");
  CHECK(to_json(rep, {true, 5}).contains("elapsed_ms"));
}

TEST_CASE("exit codes") {
  CHECK(qaff_run({"verify", "--n", "2", "--kmax", "4"}).code == 1);
  CHECK(qaff_run({"verify", "--suite", "chevalley"}).code == 0);
  CHECK(qaff_run({"verify", "--n", "13"}).code == 2);
  CHECK(qaff_run({"verify", "--type", "B3"}).code == 2);
  CHECK(qaff_run({"verify", "--kmax", "2", "--lmax", "3"}).code == 2);
  CHECK(qaff_run({"drinfeld", "--n", "1"}).code == 0);
  CHECK(qaff_run({"drinfeld", "--n", "3", "--order", "2"}).code == 2);
  CHECK(qaff_run({"drinfeld", "--order", "17"}).code == 2);
  CHECK(qaff_run({"table", "--type", "G2"}).code == 0);
  CHECK(qaff_run({"table", "--type", "A1", "--map", "r=s^6"}).code == 2);
  CHECK(qaff_run({"specialize", "--map", "s=r", "--n", "2"}).code == 0);
  CHECK(qaff_run({"specialize", "--map", "r=s^1"}).code == 2);
  CHECK(qaff_run({"tensor", "--left", "1", "--right", "1"}).code == 0);
  CHECK(qaff_run({"twist", "--aut", "gamma1"}).code == 0);
  CHECK(qaff_run({"twist", "--aut", "nope"}).code == 2);
  CHECK(qaff_run({}).code == 2);
  CHECK(qaff_run({"--bogus"}).code == 2);
  CHECK(qaff_run({"--help"}).code == 0);
  CHECK(qaff_run({"verify", "--help"}).code == 0);
}

TEST_CASE("text output") {
  CHECK(qaff_run({"drinfeld", "--n", "1"}).out.find("1 - r^(-2)*a*z") != std::string::npos);
  CHECK(qaff_run({"table", "--type", "G2"}).out.find("r^(1/3)*s^(-1/3)") != std::string::npos);
  const Run v = qaff_run({"verify", "--suite", "chevalley", "--n", "1"});
  CHECK(v.out.find("pass") != std::string::npos);
}

TEST_CASE("JSON output is deterministic and timing is opt-in") {
  const std::vector<std::string> args{"verify", "--n", "1", "--kmax", "2", "--lmax", "1", "--json"};
  const Run a = qaff_run(args), b = qaff_run(args);
  CHECK(a.out == b.out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
  std::vector<std::string> timed = args;
  timed.push_back("--timing");
  CHECK(qaff_run(timed).out.find("elapsed_ms") != std::string::npos);
  const Json j = Json::parse(a.out);
  REQUIRE(j.is_array());
  for (const auto& rep : j) CHECK(rep["failures"].size() <= 5);
}

TEST_CASE("drinfeld JSON") {
  const Json j = run_json({"drinfeld", "--n", "3", "--order", "8"});
  CHECK(j["order"] == 8);
  CHECK(j["P"] == j["closed_form"]);
  CHECK(j["checks"]["plus"] == true);
  CHECK(j["checks"]["minus"] == true);
  REQUIRE(j["checks"]["RQ"].size() == 4);
  for (const auto& x : j["checks"]["RQ"]) CHECK(x["passed"] == true);
  CHECK(j["passed"] == true);
}

TEST_CASE("series order from the environment") {
  ::setenv("QAFF_SERIES_ORDER", "5", 1);
  CHECK(run_json({"drinfeld", "--n", "2"})["order"] == 5);
  CHECK(run_json({"drinfeld", "--n", "2", "--order", "6"})["order"] == 6);
  ::unsetenv("QAFF_SERIES_ORDER");
  CHECK(run_json({"drinfeld", "--n", "2"})["order"] == default_series_order());
}

TEST_CASE("table, tensor, specialize and twist JSON") {
  const Json t = run_json({"table", "--type", "A1"});
  CHECK(t["size"] == 2);
  CHECK(t["entries"][0][0] == "r*s^(-1)");
  CHECK(run_json({"table", "--type", "A1", "--map", "s=r^-1"})["entries"][0][0] == "r^2");

  const Json x = run_json({"tensor", "--left", "1", "--right", "2"});
  CHECK(x["dim"] == 6);
  CHECK(x["closure_dim"] == 6);
  CHECK(x["checks"]["antipode"] == true);

  const Json s = run_json({"specialize", "--map", "s=r", "--n", "2"});
  CHECK(s["checks"]["centrality"] == true);
  CHECK(s["checks"]["closure_dimensions"] == Json::array({3, 3, 3}));

  for (const char* aut : {"gamma1", "gamma2", "asigma"}) {
    CAPTURE(aut);
    const Json w = run_json({"twist", "--aut", aut, "--n", "1"});
    CHECK(w["checks"]["suites_preserved"] == true);
    CHECK(w["passed"] == true);
  }
}

TEST_CASE("modules can be dumped and re-verified") {
  const Run d = qaff_run({"verify", "--n", "2", "--shift", "rs_inverse", "--dump-module"});
  REQUIRE(d.code == 0);
  const auto path = std::filesystem::temp_directory_path() / "qaff_module_roundtrip.json";
  std::ofstream(path) << d.out;
  const Run v = qaff_run({"verify", "--module", path.string(), "--suite", "chevalley"});
  CHECK(v.code == 0);
  std::ofstream(path) << "{not json";
  CHECK(qaff_run({"verify", "--module", path.string()}).code == 2);
  std::filesystem::remove(path);
}
