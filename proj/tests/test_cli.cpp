#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nullstrata/cli.hpp"
#include "support.hpp"

using namespace testing;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count A1 adjoint with evaluations") {
  const auto r = run_cli({"count", "--type", "A1", "--module", "adjoint", "--eval", "2,3"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["n"] == json::array({0, 0, 1}));
  CHECK(j["values"] == json::array({4, 9}));
}

TEST_CASE("output is byte identical across runs and thread counts") {
  const auto a = run_cli({"count", "--type", "B2", "--module", "hw:1,1"});
  const auto b = run_cli({"count", "--type", "B2", "--module", "hw:1,1"});
  const auto c = run_cli({"count", "--type", "B2", "--module", "hw:1,1", "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"count", "--type", "Z9"}).code == 2);
  CHECK(run_cli({"count", "--type", "A2", "--module", "hw:-1,0"}).code == 2);
  CHECK(run_cli({"count", "--type", "A2", "--module", "nonsense"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"count", "--type", "A1", "--format", "xml"}).code == 2);
  CHECK(run_cli({"unipotent", "--type", "A1", "--module", "hw:3"}).code == 2);
  CHECK(run_cli({"count", "--type", "E8", "--module", "hw:0,0,0,0,0,0,0,9"}).code == 3);
  CHECK(run_cli({"verify", "--suite", "sl2", "--q", "2,3"}).code == 0);
}

TEST_CASE("job spec round trip") {
  std::ostringstream sink;
  const std::vector<std::vector<std::string>> samples{
      {"count", "--type", "G2", "--eval", "2,3,5", "--no-memo"},
      {"strata", "--type", "B2xA1", "--module", "hw:1,0/2", "--format", "tsv", "--lattice", "adjoint"},
      {"blade", "--type", "A2", "--support", "0,1"},
      {"verify", "--suite", "binary", "--q", "2,5", "--subset-bound", "3"},
  };
  for (const auto& args : samples) {
    const auto spec = cli::parse_job(args, sink);
    CHECK(cli::parse_job(spec.to_args(), sink) == spec);
  }
}

TEST_CASE("module grammar") {
  const auto d = datum("B2xA1+T1");
  CHECK(cli::build_module(d, "hw:1,0/2/1").dim() == 15);
  CHECK(cli::build_module(d, "adjoint").dim() == 14);
  const auto a1 = datum("A1");
  CHECK(cli::build_module(a1, "weights:2;-2;0").dim() == 3);
  CHECK_THROWS_AS(cli::build_module(a1, "weights:2;0"), InputError);
  CHECK(cli::build_module(datum("A2"), "dual-hw:1,0") == cli::build_module(datum("A2"), "hw:0,1"));
}

TEST_CASE("verify reports a per-Jordan-type table") {
  const auto r = run_cli({"verify", "--suite", "sl3", "--q", "2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ok"] == true);
  bool seen = false;
  for (const auto& row : j["rows"])
    if (row["class"] == "[3]") {
      CHECK(row["oracle"] == 42);
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("blade of the lowest root") {
  const auto r = run_cli({"blade", "--type", "A2", "--support", "0"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["semistable"] == false);
  CHECK(j["dominant_blade"] == json::array({"1/2", "1/2"}));
}

TEST_CASE("memo directory persists sub-results") {
  const auto dir = std::filesystem::temp_directory_path() / "nullstrata-memo-test";
  std::filesystem::remove_all(dir);
  setenv("NULLSTRATA_MEMO_DIR", dir.c_str(), 1);
  const auto first = run_cli({"count", "--type", "A3"});
  const auto second = run_cli({"count", "--type", "A3"});
  unsetenv("NULLSTRATA_MEMO_DIR");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  std::ifstream in(dir / "nullstrata-memo.tsv");
  std::string header;
  std::getline(in, header);
  CHECK(header == "# nullstrata memo v1");
  std::filesystem::remove_all(dir);
}
