#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "handsaw/cli.hpp"
#include "handsaw/io.hpp"

using namespace handsaw;

namespace {

bool type_matches(const Json& value, const std::string& type) {
  if (type == "object") return value.is_object();
  if (type == "array") return value.is_array();
  if (type == "string") return value.is_string();
  if (type == "integer") return value.is_number_integer();
  if (type == "boolean") return value.is_boolean();
  FAIL("schema names an unsupported type: ", type);
  return false;
}

// The subset of JSON Schema the schemas/ directory uses: "type" (a name or a
// list of alternatives), "properties" + "required" + "additionalProperties"
// for objects, "items" for arrays. Returns "" or the first violation.
std::string validate(const Json& value, const Json& schema, const std::string& path) {
  if (schema.contains("type")) {
    const Json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(value, t.get<std::string>());
    } else {
      for (const Json& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
    }
    if (!ok) return path + ": expected " + t.dump() + ", got " + value.dump();
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const Json& key : schema["required"])
        if (!value.contains(key.get<std::string>()))
          return path + ": missing required key '" + key.get<std::string>() + "'";
    }
    const Json props = schema.contains("properties") ? schema["properties"] : Json::object();
    if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
      for (const auto& [key, sub] : value.items())
        if (!props.contains(key)) return path + ": unexpected key '" + key + "'";
    }
    for (const auto& [key, sub] : props.items()) {
      if (!value.contains(key)) continue;
      std::string msg = validate(value[key], sub, path + "." + key);
      if (!msg.empty()) return msg;
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      std::string msg = validate(value[i], schema["items"], path + "[" + std::to_string(i) + "]");
      if (!msg.empty()) return msg;
    }
  }
  return "";
}

Json load_schema(const std::string& name) {
  std::string file = std::string(HANDSAW_SOURCE_DIR) + "/schemas/" + name;
  std::ifstream in(file);
  REQUIRE_MESSAGE(in.good(), "cannot open ", file);
  return Json::parse(in);
}

Json cli_json(std::vector<std::string> args) {
  args.push_back("--json");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  REQUIRE_MESSAGE(code == 0, "stderr: ", err.str());
  return Json::parse(out.str());
}

}  // namespace

TEST_CASE("every json payload matches its schema") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"pyramid_info.json", {"pyramid", "info", "--columns", "1,1,3,4,2"}},
      {"fixed_points.json", {"fixed-points", "--n", "2", "--w", "2,0", "--v", "2"}},
      {"fixed_points.json", {"fixed-points", "--n", "1", "--w", "2"}},
      {"tangent.json", {"tangent", "--n", "2", "--w", "1,1", "--fixed-point", "1.1:[1,1]"}},
      {"tangent.json", {"tangent", "--n", "1", "--w", "2"}},
      {"smallness.json", {"smallness", "--n", "2", "--w", "1,1", "--vmax", "4"}},
      {"betti.json", {"betti", "--n", "3", "--w", "1,1,1", "--vmax", "2,2"}},
      {"strata.json", {"strata", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4"}},
      {"strata.json", {"strata", "--pyramid", "2,3", "--zeros", "1:0;2:2,4;3:1,3", "--vmax", "2,2"}},
      {"character.json", {"character", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4"}},
      {"multiplicity.json", {"multiplicity", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4"}},
      {"kl.json", {"kl", "--x", "1234", "--w", "3412"}},
      {"kl.json", {"kl", "--x", "213", "--w", "132"}},
      {"verify.json", {"verify", "--quick"}},
  };
  for (const auto& [schema_name, args] : cases) {
    CAPTURE(schema_name);
    CAPTURE(args.front());
    Json schema = load_schema(schema_name);
    Json payload = cli_json(args);
    CHECK(validate(payload, schema, "$") == "");
  }
}

TEST_CASE("the validator rejects malformed documents") {
  Json schema = load_schema("kl.json");
  Json good = cli_json({"kl", "--x", "1234", "--w", "3412"});
  REQUIRE(validate(good, schema, "$") == "");

  Json missing = good;
  missing.erase("polynomial");
  CHECK(validate(missing, schema, "$") != "");

  Json wrong_type = good;
  wrong_type["comparable"] = "yes";
  CHECK(validate(wrong_type, schema, "$") != "");

  Json extra = good;
  extra["surprise"] = 1;
  CHECK(validate(extra, schema, "$") != "");

  // value_at_one may be an integer or a decimal string (beyond int64)
  Json big = good;
  big["value_at_one"] = "123456789012345678901234567890";
  CHECK(validate(big, schema, "$") == "");
  big["value_at_one"] = true;
  CHECK(validate(big, schema, "$") != "");

  Json nested = load_schema("strata.json");
  Json strata = cli_json({"strata", "--pyramid", "2", "--zeros", "1:2;2:0", "--vmax", "4"});
  REQUIRE(validate(strata, nested, "$") == "");
  strata["strata"][0]["weight"][0][0].erase("root");
  std::string msg = validate(strata, nested, "$");
  CHECK(msg.find("weight[0][0]") != std::string::npos);
}
