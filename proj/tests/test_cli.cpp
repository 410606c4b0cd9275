#include <filesystem>
#include <fstream>
#include <sstream>

#include "atlas/cli.hpp"
#include "doctest.h"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = atlas::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("element report") {
  const auto r = run({"element", "57"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "element  La (lanthanum)"));
  CHECK(contains(r.out, "address  n=4 l=3 j=5/2 m=-5/2"));
  CHECK(contains(r.out, "series   inner-transition (lanthanides), Z 57..70"));
  CHECK(contains(r.out, "f-sub    light (ceric)"));
  CHECK(contains(r.out, "config   [Xe] 6s2 4f1"));

  const auto unnamed = run({"element", "114"});
  CHECK(contains(unnamed.out, "status   observed-unnamed"));
  CHECK(contains(unnamed.out, "element  X?"));

  CHECK(run({"element", "0"}).code != 0);
}

TEST_CASE("address report") {
  const auto r = run({"address", "4", "3", "5", "-5"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Z        57"));

  const auto bad = run({"address", "2", "1", "5", "1"});
  CHECK(bad.code == 1);
  CHECK(contains(bad.err, "InvalidAddress"));
}

TEST_CASE("family listing") {
  const auto r = run({"family", "alkali", "--count", "4"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Z = 1, 3, 11, 19\n"));
  CHECK(contains(r.out, "H, Li, Na, K"));

  const auto noble = run({"family", "noble-gas", "--count", "6"});
  CHECK(contains(noble.out, "Z = 10, 18, 36, 54, 86, 118\n"));

  const auto by_column = run({"family", "1,3,1", "--count", "2"});
  CHECK(contains(by_column.out, "halogen"));
  CHECK(contains(by_column.out, "Z = 9, 17\n"));

  CHECK(run({"family", "pnictogen"}).code == 2);
  CHECK(run({"family", "0,3,1"}).code == 1);
}

TEST_CASE("walk") {
  const auto r = run({"walk", "1", "n+", "m+", "l+"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "start  (1,0,1/2,-1/2)  Z=1"));
  CHECK(contains(r.out, "n+  (2,0,1/2,-1/2)  Z=3"));
  CHECK(contains(r.out, "m+  (2,0,1/2,1/2)  Z=4"));
  CHECK(contains(r.out, "l+  (2,1,1/2,1/2)  Z=6"));

  const auto blocked = run({"walk", "1,0,1,1", "m+"});
  CHECK(blocked.code == 1);
  CHECK(contains(blocked.out, "error: OutOfBlock"));

  const auto ride = run({"walk", "1", "taxi:2,0,1,1"});
  CHECK(ride.code == 0);
  CHECK(contains(ride.out, "Z=4  via n+ m+"));

  CHECK(run({"walk", "1", "sideways"}).code == 2);
}

TEST_CASE("verify and config") {
  const auto v = run({"verify", "--max-sum", "12"});
  CHECK(v.code == 0);
  CHECK(v.out == "verify: all 364 houses agree (n+l <= 12)\n");

  CHECK(run({"config", "21"}).out == "1s2 2s2 2p6 3s2 3p6 4s2 3d1\n");
  CHECK(run({"config", "21", "--core"}).out == "[Ar] 4s2 3d1\n");
  CHECK(run({"config", "2", "--core"}).out == "1s2\n");
  CHECK(run({"config", "120", "--core"}).out == "[118] 8s2\n");
}

TEST_CASE("table subcommand") {
  const auto a = run({"table", "--rows", "4", "--format", "json"});
  const auto b = run({"table", "--rows", "4", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"table", "--format", "yaml"}).code == 2);
}

TEST_CASE("dataset option and usage errors") {
  const auto path = std::filesystem::temp_directory_path() / "mendeleev_cli_test.csv";
  {
    std::ofstream f(path);
    f << "# modern names\n113,Nh,nihonium\n";
  }
  const auto r = run({"element", "113", "--dataset", path.string(), "--named-max", "118",
                      "--observed-max", "118"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Nh (nihonium)"));
  CHECK(contains(r.out, "status   named"));
  std::filesystem::remove(path);

  {
    std::ofstream f(path);
    f << "1,H,hydrogen\n1,D,deuterium\n";
  }
  const auto dup = run({"element", "1", "--dataset", path.string()});
  CHECK(dup.code == 1);
  CHECK(contains(dup.err, "DuplicateZ at line 2"));
  std::filesystem::remove(path);

  CHECK(run({}).code != 0);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"bogus"}).code != 0);
}
