#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "graphene_cp/io.hpp"
#include "json.hpp"

using namespace gcp;

namespace {

CurveTable sample_table() {
  CurveTable t;
  t.abscissa_name = "separation_um";
  t.abscissa = {1.0, 2.5};
  t.curve_names = {"phi[gap=0.1eV]"};
  t.curves = {{0.5, std::numeric_limits<double>::quiet_NaN()}};
  t.meta.temp_k = 300.0;
  t.meta.rel_tol = 1e-9;
  t.meta.version = "0.1.0";
  return t;
}

std::string render(const JsonValue& v) {
  std::ostringstream os;
  write_json(os, v);
  return os.str();
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("numbers print with twelve significant digits and no padding") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(format_number(12345678901234.0) == "1.23456789012e+13");
}

TEST_CASE("csv quoting") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("") == "");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_escape("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("json writer pretty prints in insertion order") {
  JsonObject o;
  o.emplace_back("name", "x\"y");
  o.emplace_back("count", 3);
  o.emplace_back("ratio", 0.25);
  o.emplace_back("bad", std::numeric_limits<double>::quiet_NaN());
  JsonArray vals;
  vals.emplace_back(1);
  vals.emplace_back(2.5);
  o.emplace_back("vals", std::move(vals));
  o.emplace_back("empty", JsonArray{});
  o.emplace_back("ok", true);
  o.emplace_back("missing", nullptr);

  const std::string expected =
      "{\n"
      "  \"name\": \"x\\\"y\",\n"
      "  \"count\": 3,\n"
      "  \"ratio\": 0.25,\n"
      "  \"bad\": null,\n"
      "  \"vals\": [\n"
      "    1,\n"
      "    2.5\n"
      "  ],\n"
      "  \"empty\": [],\n"
      "  \"ok\": true,\n"
      "  \"missing\": null\n"
      "}";
  CHECK(render(JsonValue(std::move(o))) == expected);
}

TEST_CASE("json string escapes") {
  CHECK(render(JsonValue("tab\there")) == "\"tab\\there\"");
  CHECK(render(JsonValue("a\\b")) == "\"a\\\\b\"");
  CHECK(render(JsonValue(std::string("ctrl\x01"))) == "\"ctrl\\u0001\"");
  CHECK(render(JsonValue("line\nfeed")) == "\"line\\nfeed\"");
}

TEST_CASE("csv table layout is crlf terminated with gaps left empty") {
  CurveTable t = sample_table();
  t.abscissa_name = "a,b";  // must force quoting in the header
  std::ostringstream os;
  write_table_csv(os, t);
  CHECK(os.str() ==
        "\"a,b\",phi[gap=0.1eV]\r\n"
        "1,0.5\r\n"
        "2.5,\r\n");
}

TEST_CASE("json table round trips through a conforming parser") {
  const CurveTable t = sample_table();
  const std::string text = render(table_to_json(t));
  const nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["version"] == "0.1.0");
  CHECK(doc["temp_k"] == 300.0);
  CHECK(doc["rel_tol"] == 1e-9);
  CHECK(doc["abscissa_name"] == "separation_um");
  CHECK(doc["abscissa"].size() == 2);
  CHECK(doc["abscissa"][1] == 2.5);
  REQUIRE(doc["curves"].size() == 1);
  CHECK(doc["curves"][0]["name"] == "phi[gap=0.1eV]");
  CHECK(doc["curves"][0]["values"][0] == 0.5);
  CHECK(doc["curves"][0]["values"][1].is_null());
  // insertion order is the wire order
  CHECK(text.find("\"version\"") < text.find("\"temp_k\""));
  CHECK(text.find("\"abscissa_name\"") < text.find("\"abscissa\""));
}

TEST_CASE("crossing list serialization") {
  std::vector<Crossing> cs;
  cs.push_back({"curve_a", 4.25, false, false});
  cs.push_back({"curve_b", std::numeric_limits<double>::quiet_NaN(), true,
                false});
  const std::string text = render(crossings_to_json(cs));
  const nlohmann::json doc = nlohmann::json::parse(text);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["curve"] == "curve_a");
  CHECK(doc[0]["a_um"] == 4.25);
  CHECK(doc[0]["always_within"] == false);
  CHECK(doc[1]["a_um"].is_null());
  CHECK(doc[1]["always_within"] == true);
  CHECK(doc[1]["never_within"] == false);
}

TEST_CASE("serialization is reproducible") {
  const CurveTable t = sample_table();
  std::ostringstream a, b;
  write_table_csv(a, t);
  write_table_csv(b, t);
  CHECK(a.str() == b.str());
  CHECK(render(table_to_json(t)) == render(table_to_json(t)));
}

}
