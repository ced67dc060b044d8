#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "grmds/cli.hpp"
#include "grmds/json_io.hpp"
#include "grmds/reproduce.hpp"

using namespace grmds;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("grmds_test_" + name);
}

}  // namespace

TEST_CASE("ring-info") {
  const Run r = run({"ring-info", "--p", "5", "--s", "2", "--m", "3", "--modulus", "3,3,0,1", "--e", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3 + 3Y + Y^3") != std::string::npos);
  const Run j = run({"--json", "ring-info", "--p", "2", "--m", "4"});
  CHECK(j.code == 0);
  CHECK(Json::parse(j.out).at("residue_field_size") == 16);
}

TEST_CASE("construct exit codes") {
  const Run ok = run({"construct", "--p", "2", "--m", "4", "--e", "1", "--k", "3", "--t", "4"});
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out).at("report").at("mds") == true);

  const Run involutory = run({"construct", "--p", "5", "--s", "2", "--m", "3", "--modulus", "3,3,0,1", "--e", "2",
                              "--family", "from-poly", "--g", "1,2,2,1", "--check-involutory"});
  CHECK(involutory.code == 0);
  CHECK(Json::parse(involutory.out).at("report").at("quasi_involutory") == true);

  const Run not_mds = run({"construct", "--p", "2", "--m", "3", "--family", "from-poly", "--g", "0,1,1"});
  CHECK(not_mds.code == 2);

  const Run bad = run({"construct", "--p", "2", "--s", "2", "--m", "4", "--family", "root-perturbed", "--k", "2",
                       "--eta", "1,0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("NotNilpotent") != std::string::npos);

  CHECK(run({"construct", "--p", "4", "--m", "2"}).code == 1);
  CHECK(run({"no-such-command"}).code == 1);
}

TEST_CASE("search output is deterministic under a fixed seed and timestamp") {
  const std::vector<std::string> args{"--timestamp", "1700000000", "--seed", "5", "search", "--p", "2", "--s", "2",
                                      "--m", "2", "--e", "1", "--family", "root-perturbed", "--k", "2",
                                      "--b-range", "0:3", "--eta-samples", "2"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json rec = Json::parse(line);
    CHECK(rec.at("timestamp") == 1700000000);
    ++count;
  }
  CHECK(count == 8);
  CHECK(run({"search", "--p", "2", "--m", "4", "--b-range", "3:2"}).code == 0);
}

TEST_CASE("catalog records re-verify") {
  const auto path = temp_file("catalog.jsonl");
  std::filesystem::remove(path);
  CHECK(run({"--catalog", path.string(), "--timestamp", "1", "search", "--p", "2", "--m", "4", "--e", "1", "--k", "2",
             "--b-range", "0:4"})
            .code == 0);
  const Run v = run({"verify", "--records", path.string()});
  CHECK(v.code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("verify and oracle") {
  const Run v = run({"verify", "--p", "5", "--s", "2", "--m", "3", "--modulus", "3,3,0,1", "--e", "2", "--g", "1,2,2,1",
                     "--t", "3", "--oracle", "--criterion"});
  CHECK(v.code == 0);
  const Json vj = Json::parse(v.out);
  CHECK(vj.at("min_distance") == 4);
  CHECK(vj.at("criterion_support") == true);
  CHECK(vj.at("criterion_ring") == "residue_field");
  const Run o = run({"--json", "oracle", "--p", "2", "--m", "3", "--g", "1,1,1", "--t", "2"});
  CHECK((o.code == 0 || o.code == 2));
  const Json j = Json::parse(o.out);
  CHECK(j.at("singleton_bound") == 3);
  CHECK((j.at("min_distance") == 3) == (j.at("mds") == true));
}

TEST_CASE("reproduce passes and flags a tampered golden file") {
  const Run ok = run({"reproduce"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  Json golden = Json::parse(embedded_golden());
  golden["examples"][0]["chain_squared_is_identity"] = false;
  const auto path = temp_file("golden.json");
  std::ofstream(path) << golden.dump();
  const Run bad = run({"reproduce", "--golden", path.string()});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
  CHECK(bad.out.find("chain_squared_is_identity") != std::string::npos);

  const Run js = run({"--json", "reproduce", "--golden", path.string()});
  CHECK(js.code == 1);
  CHECK(Json::parse(js.out).at("all_pass") == false);
  std::filesystem::remove(path);
}

TEST_CASE("emit recursion taps") {
  const Run e = run({"emit", "--p", "5", "--s", "2", "--m", "3", "--modulus", "3,3,0,1", "--e", "2", "--g", "1,2,2,1"});
  CHECK(e.code == 0);
  CHECK_FALSE(e.out.empty());
}
