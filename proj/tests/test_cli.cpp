#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "handsaw/cli.hpp"
#include "handsaw/io.hpp"

using namespace handsaw;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pyramid info, text and json") {
  CliResult r = run({"pyramid", "info", "--columns", "1,1,3,4,2"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out ==
        "columns: (1,1,3,4,2)\n"
        "n: 4\n"
        "p: (1,2,3,5)\n"
        "N: 11\n"
        "pivot: 3\n"
        "shift matrix:\n"
        "0 0 1 1\n"
        "1 0 1 1\n"
        "1 0 0 0\n"
        "3 2 2 0\n"
        "gr generators: 31\n");

  // --json is a global flag; fallthrough lets it trail the subcommand
  CliResult j = run({"pyramid", "info", "--columns", "1,1,3,4,2", "--json"});
  CHECK(j.code == 0);
  Json doc = Json::parse(j.out);
  CHECK(doc["columns"].get<std::vector<int>>() == std::vector<int>{1, 1, 3, 4, 2});
  CHECK(doc["n"] == 4);
  CHECK(doc["p"].get<std::vector<int>>() == std::vector<int>{1, 2, 3, 5});
  CHECK(doc["N"] == 11);
  CHECK(doc["pivot"] == 3);
  CHECK(doc["level"] == 5);
  CHECK(doc["shift_matrix"].size() == 4);
  CHECK(doc["shift_matrix"][3].get<std::vector<int>>() == std::vector<int>{3, 2, 2, 0});
  CHECK(doc["gr_generators"] == 31);
}

TEST_CASE("fixed points in canonical order") {
  CliResult r = run({"fixed-points", "--n", "2", "--w", "2,0", "--v", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "count: 3\n"
        "1.2:[1,1]\n"
        "1.1:[1];1.2:[1]\n"
        "1.1:[1,1]\n");

  // the all-empty tuple prints as "-"; --v is omitted when n = 1
  CliResult e = run({"fixed-points", "--n", "1", "--w", "2"});
  CHECK(e.code == 0);
  CHECK(e.out == "count: 1\n-\n");

  CliResult j = run({"--json", "fixed-points", "--n", "2", "--w", "2,0", "--v", "2"});
  Json doc = Json::parse(j.out);
  CHECK(doc["count"] == 3);
  CHECK(doc["fixed_points"].size() == 3);
  CHECK(doc["fixed_points"][0][0]["tier"] == 1);
  CHECK(doc["fixed_points"][0][0]["line"] == 2);
  CHECK(doc["fixed_points"][0][0]["rows"].get<std::vector<int>>() == std::vector<int>{1, 1});
}

TEST_CASE("tangent character at a fixed point") {
  CliResult r = run({"tangent", "--n", "2", "--w", "1,1", "--fixed-point", "1.1:[1,1]"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "fixed point: 1.1:[1,1]\n"
        "v: (2)\n"
        "dimQ: 4  dimS: 4  dimU: 0\n"
        "1.1 -> 1.1: t\n"
        "1.1 -> 1.1: t^2\n"
        "1.1 -> 2.1: t\n"
        "1.1 -> 2.1: t^2\n");

  CliResult j = run({"tangent", "--n", "2", "--w", "1,1", "--fixed-point", "1.1:[1,1]", "--json"});
  Json doc = Json::parse(j.out);
  CHECK(doc["dimQ"] == 4);
  CHECK(doc["dimS"] == 4);
  CHECK(doc["dimU"] == 0);
  CHECK(doc["terms"].size() == 4);
  CHECK(doc["terms"][0]["src"].get<std::vector<int>>() == std::vector<int>{1, 1});
  CHECK(doc["terms"][0]["tpower"] == 1);
}

TEST_CASE("smallness report") {
  CliResult r = run({"smallness", "--n", "2", "--w", "1,1", "--vmax", "4"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "smallness: PASS\n"
        "checked vectors: 4\n"
        "checked strata: 11\n"
        "max dimU: 0 at v=(1) fixed point 1.1:[1]\n");

  CliResult j = run({"smallness", "--n", "2", "--w", "1,1", "--vmax", "4", "--json"});
  Json doc = Json::parse(j.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["checked_vectors"] == 4);
  CHECK(doc["max_dimU"] == 0);
  CHECK(doc["extremal_v"].get<std::vector<int>>() == std::vector<int>{1});
  CHECK(doc["extremal"] == "1.1:[1]");
  CHECK(doc["violations"].empty());
}

TEST_CASE("betti comparison, including n = 1 without vmax") {
  CliResult r = run({"betti", "--n", "1", "--w", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "betti: PASS\nv=(): 1\n");

  CliResult j = run({"betti", "--n", "3", "--w", "1,1,1", "--vmax", "2,2", "--json"});
  CHECK(j.code == 0);
  Json doc = Json::parse(j.out);
  CHECK(doc["equal"] == true);
  CHECK(doc["mismatches"].empty());
  bool found = false;
  for (const Json& term : doc["lhs"]) {
    if (term["v"].get<std::vector<int>>() == std::vector<int>{1, 1}) {
      found = true;
      CHECK(term["poly"] == "1 + t");
    }
  }
  CHECK(found);
}

TEST_CASE("strata, character and multiplicity for gl2") {
  CliResult r = run({"strata", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "count: 2\n"
        "[1] v=(0)  V: -  W: (1,2)=1 (2,0)=1\n"
        "    weight: (u-2)^1 ; (u)^1\n"
        "[2] v=(2)  V: (1,1)=1 (1,2)=1  W: (1,2)=1 (2,0)=1\n"
        "    weight: (u)^1 ; (u-2)^1\n");

  CliResult m = run({"multiplicity", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4"});
  CHECK(m.code == 0);
  CHECK(m.out ==
        "composition multiplicities: 2 strata\n"
        "[1] v=(0) weight: (u-2)^1 ; (u)^1\n"
        "[1] v=(2) weight: (u)^1 ; (u-2)^1\n");

  CliResult j =
      run({"multiplicity", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4", "--json"});
  Json doc = Json::parse(j.out);
  CHECK(doc["strata"].size() == 2);
  CHECK(doc["strata"][0]["multiplicity"] == 1);
  CHECK(doc["strata"][1]["multiplicity"] == 1);
  CHECK(doc["strata"][1]["v"].get<std::vector<int>>() == std::vector<int>{2});

  CliResult c =
      run({"character", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4", "--json"});
  Json cdoc = Json::parse(c.out);
  CHECK(cdoc["count"] == 5);
  for (const Json& entry : cdoc["entries"]) CHECK(entry["multiplicity"] == 1);
}

TEST_CASE("kl subcommand") {
  CliResult r = run({"kl", "--x", "1234", "--w", "3412"});
  CHECK(r.code == 0);
  CHECK(r.out == "P[1234, 3412] = 1 + q\n");

  CliResult j = run({"kl", "--x", "1234", "--w", "3412", "--json"});
  Json doc = Json::parse(j.out);
  CHECK(doc["comparable"] == true);
  CHECK(doc["polynomial"] == "1 + q");
  CHECK(doc["value_at_one"] == 2);

  CliResult zero = run({"kl", "--x", "213", "--w", "132"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "P[213, 132] = 0\n");

  CliResult refused = run({"kl", "--x", "123456789", "--w", "123456789"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("refused") != std::string::npos);

  CliResult mismatch = run({"kl", "--x", "12", "--w", "321"});
  CHECK(mismatch.code == 2);
  CHECK(mismatch.err.find("same size") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"fixed-points", "--n", "2"}).code == 2);  // --w is required

  CliResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("handsaw") != std::string::npos);

  CliResult bad = run({"strata", "--pyramid", "2", "--zeros", "1:2;2:0,5", "--vmax", "4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") != std::string::npos);

  CliResult negative = run({"fixed-points", "--n", "2", "--w", "1,-1", "--v", "1"});
  CHECK(negative.code == 2);
  CHECK(negative.err.find("nonnegative") != std::string::npos);
}

TEST_CASE("worker count never changes the bytes") {
  std::vector<std::string> base = {"character", "--pyramid", "2,3",    "--zeros",
                                   "1:0;2:2,4;3:1,3", "--vmax",  "2,2", "--json"};
  std::vector<std::string> one = base, three = base;
  one.insert(one.end(), {"--workers", "1"});
  three.insert(three.end(), {"--workers", "3"});
  CliResult a = run(one), b = run(three);
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}
