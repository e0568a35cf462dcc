#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "moore/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = moore::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.push_back("--output");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports a verified witness") {
  const auto j = run_json({"check", "--q", "2", "--n", "4", "-I", "0,2", "--verify"});
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "check");
  CHECK(j["result"]["is_moore"] == false);
  CHECK(j["result"]["witness_check"]["ok"] == true);
  CHECK(j["result"]["witness"].size() == 2);
}

TEST_CASE("exponents are normalized modulo n") {
  const auto j = run_json({"check", "--q", "2", "--n", "4", "-I", "0,7"});
  CHECK(j["input"]["I"] == nlohmann::json::array({0, 3}));
  CHECK(j["classification"]["known_family"] == "gabidulin");
  CHECK(j["result"]["is_moore"] == true);
}

TEST_CASE("output does not depend on --jobs") {
  for (const char* I : {"0,1,3", "0,2,3", "0,1,2"}) {
    const Run a = run({"check", "--q", "2", "--n", "7", "-I", I, "--method", "both", "--jobs", "1", "--output", "json"});
    const Run b = run({"check", "--q", "2", "--n", "7", "-I", I, "--method", "both", "--jobs", "4", "--output", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes") {
  CHECK(run({"check", "--q", "6", "--n", "2", "-I", "0,1"}).code == 2);
  CHECK(run({"check", "--q", "2", "--n", "15", "-I", "0,1,2", "--budget", "10"}).code == 3);
  CHECK(run({}).code == 2);
  CHECK(run({"check", "--q", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"symbolic", "--q", "3", "-I", "0,1", "--output", "xml"}).code == 2);
}

TEST_CASE("text and csv renderings") {
  const Run t = run({"field", "--q", "2", "--n", "4", "--output", "text"});
  CHECK(t.code == 0);
  CHECK(t.out.find("schema_version: 1") != std::string::npos);
  const Run c = run({"bounds", "--q", "2", "--n", "15", "-I", "0,1,3", "--final", "--output", "csv"});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("q,n,I,", 0) == 0);
  CHECK(c.out.find("not_moore_by_theorem") != std::string::npos);
}

TEST_CASE("Moore verdicts are cached") {
  const auto dir = std::filesystem::temp_directory_path() / "moore_cli_cache_test";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args = {"check", "--q", "3", "--n", "4", "-I", "0,1", "--cache-dir", dir.string(),
                                         "--output", "json"};
  const Run first = run(args);
  const Run second = run(args);
  CHECK(first.code == 0);
  CHECK(second.out == first.out);
  CHECK(first.err.find("cache hit") == std::string::npos);
  CHECK(second.err.find("cache hit") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("other subcommands") {
  auto j = run_json({"mrd", "--q", "2", "--n", "5", "-I", "0,1"});
  CHECK(j["result"]["is_mrd"] == true);
  j = run_json({"count", "--q", "2", "--n", "4", "-I", "0,2"});
  CHECK(j["result"]["n_witness"] == 2);
  j = run_json({"symbolic", "--q", "2", "-I", "0,2"});
  CHECK(j.dump().find("X1^2 + X1*X2 + X2^2") != std::string::npos);
  j = run_json({"bezout-gap", "--q", "7", "--k", "4", "--i1", "1", "--ik2", "2", "--ik1", "4"});
  CHECK(j.dump().find("357685/4") != std::string::npos);
  j = run_json({"case2", "--q", "2", "--n", "5", "-I", "0,1,2,4"});
  CHECK(j["result"]["found"] == true);
  j = run_json({"search", "--q", "2", "--n", "5", "--k", "2"});
  CHECK(j["result"]["classes"].size() == 2);
}

}  // TEST_SUITE
