#include "graphene_cp/io.hpp"

#include <cmath>
#include <cstdio>

namespace gcp {

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

namespace {

void write_json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\b': os << "\\b"; break;
      case '\f': os << "\\f"; break;
      case '\n': os << "\\n"; break;
      case '\r': os << "\\r"; break;
      case '\t': os << "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          os << buf;
        } else {
          os << static_cast<char>(c);
        }
    }
  }
  os << '"';
}

void indent_to(std::ostream& os, int level) {
  for (int i = 0; i < level; ++i) os << "  ";
}

}  // namespace

void write_json(std::ostream& os, const JsonValue& value, int indent) {
  struct Visitor {
    std::ostream& os;
    int indent;
    void operator()(std::nullptr_t) { os << "null"; }
    void operator()(bool b) { os << (b ? "true" : "false"); }
    void operator()(long long i) { os << i; }
    void operator()(double d) {
      if (!std::isfinite(d)) {
        os << "null";  // JSON has no NaN or infinity
        return;
      }
      os << format_number(d);
    }
    void operator()(const std::string& s) { write_json_string(os, s); }
    void operator()(const JsonArray& a) {
      if (a.empty()) {
        os << "[]";
        return;
      }
      os << "[";
      for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << "\n";
        indent_to(os, indent + 1);
        write_json(os, a[i], indent + 1);
      }
      os << "\n";
      indent_to(os, indent);
      os << "]";
    }
    void operator()(const JsonObject& o) {
      if (o.empty()) {
        os << "{}";
        return;
      }
      os << "{";
      for (size_t i = 0; i < o.size(); ++i) {
        if (i) os << ",";
        os << "\n";
        indent_to(os, indent + 1);
        write_json_string(os, o[i].first);
        os << ": ";
        write_json(os, o[i].second, indent + 1);
      }
      os << "\n";
      indent_to(os, indent);
      os << "}";
    }
  };
  std::visit(Visitor{os, indent}, value.v);
}

void write_table_csv(std::ostream& os, const CurveTable& table) {
  os << csv_escape(table.abscissa_name);
  for (const auto& name : table.curve_names) os << ',' << csv_escape(name);
  os << "\r\n";
  for (size_t i = 0; i < table.abscissa.size(); ++i) {
    os << format_number(table.abscissa[i]);
    for (const auto& curve : table.curves) {
      os << ',';
      if (std::isfinite(curve[i])) os << format_number(curve[i]);
    }
    os << "\r\n";
  }
}

JsonValue table_to_json(const CurveTable& table) {
  JsonObject root;
  root.emplace_back("version", table.meta.version);
  root.emplace_back("temp_k", table.meta.temp_k);
  root.emplace_back("rel_tol", table.meta.rel_tol);
  root.emplace_back("abscissa_name", table.abscissa_name);
  JsonArray abscissa;
  for (double v : table.abscissa) abscissa.emplace_back(v);
  root.emplace_back("abscissa", std::move(abscissa));
  JsonArray curves;
  for (size_t c = 0; c < table.curves.size(); ++c) {
    JsonObject curve;
    curve.emplace_back("name", table.curve_names[c]);
    JsonArray values;
    for (double v : table.curves[c]) values.emplace_back(v);
    curve.emplace_back("values", std::move(values));
    curves.emplace_back(std::move(curve));
  }
  root.emplace_back("curves", std::move(curves));
  return JsonValue(std::move(root));
}

JsonValue crossings_to_json(const std::vector<Crossing>& crossings) {
  JsonArray arr;
  for (const auto& c : crossings) {
    JsonObject o;
    o.emplace_back("curve", c.curve);
    o.emplace_back("a_um", c.a_um);  // null when a flag tells the story
    o.emplace_back("always_within", c.always_within);
    o.emplace_back("never_within", c.never_within);
    arr.emplace_back(std::move(o));
  }
  return JsonValue(std::move(arr));
}

}
