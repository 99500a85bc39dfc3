#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "graphene_cp/analysis.hpp"

namespace gcp {

// 12 significant digits, trailing zeros trimmed by %g. The same bits always
// print the same bytes, which is what the determinism guarantee rests on.
std::string format_number(double v);

// RFC 4180: quote when a field holds comma, quote or newline; double quotes.
std::string csv_escape(const std::string& field);

// Minimal ordered JSON document. Insertion order of object keys is the
// serialization order; NaN serializes as null.
struct JsonValue;
using JsonArray = std::vector<JsonValue>;
using JsonObject = std::vector<std::pair<std::string, JsonValue>>;

struct JsonValue {
  std::variant<std::nullptr_t, bool, long long, double, std::string, JsonArray,
               JsonObject>
      v;

  JsonValue() : v(nullptr) {}
  JsonValue(std::nullptr_t) : v(nullptr) {}
  JsonValue(bool b) : v(b) {}
  JsonValue(int i) : v(static_cast<long long>(i)) {}
  JsonValue(long long i) : v(i) {}
  JsonValue(double d) : v(d) {}
  JsonValue(const char* s) : v(std::string(s)) {}
  JsonValue(std::string s) : v(std::move(s)) {}
  JsonValue(JsonArray a) : v(std::move(a)) {}
  JsonValue(JsonObject o) : v(std::move(o)) {}
};

void write_json(std::ostream& os, const JsonValue& value, int indent = 0);

// Table as CSV: header row of column names (abscissa first), then one row
// per abscissa point. Empty field where a curve has a gap.
void write_table_csv(std::ostream& os, const CurveTable& table);

// Table plus metadata and optional crossing lists as a JSON document.
JsonValue table_to_json(const CurveTable& table);
JsonValue crossings_to_json(const std::vector<Crossing>& crossings);

}
