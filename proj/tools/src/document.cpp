#include "lfball_cli/document.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lfball/errors.hpp"

namespace lfball::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw SchemaError("field '" + field + "': " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double real_value(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "not finite");
  return v;
}

// {"re": x, "im": y}; a bare number is read as a real value
cplx complex_value(const json& j, const std::string& path) {
  if (j.is_number()) return {real_value(j, path), 0.0};
  if (!j.is_object()) fail(path, "expected {\"re\": ..., \"im\": ...}");
  for (const auto& [key, _] : j.items()) {
    if (key != "re" && key != "im") fail(path + "." + key, "unknown key");
  }
  return {real_value(member(j, "re", path), path + ".re"),
          real_value(member(j, "im", path), path + ".im")};
}

ComplexVector vector_value(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != n) {
    fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
  }
  ComplexVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = complex_value(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

ComplexMatrix matrix_value(const json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rows");
  if (j.size() != n) {
    fail(path, "expected " + std::to_string(n) + " rows, found " + std::to_string(j.size()));
  }
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const ComplexVector row = vector_value(j[i], n, path + "[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < n; ++k) a(i, k) = row[k];
  }
  return a;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

MapDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("malformed JSON at line " + std::to_string(line_of(text, e.byte)) + ": " +
                      e.what());
  }
  if (!root.is_object()) fail("<root>", "expected an object");

  MapDocument doc{kDocumentVersion, 0, std::nullopt, LinearFractionalMap::identity(1)};
  const json& version = member(root, "version", "");
  if (!version.is_number_integer() || version.get<int>() != kDocumentVersion) {
    fail("version", "only version 1 is supported");
  }
  const json& m = member(root, "m", "");
  if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 63) {
    fail("m", "expected an integer between 1 and 63");
  }
  doc.m = m.get<std::size_t>();
  if (const auto it = root.find("label"); it != root.end()) {
    if (!it->is_string()) fail("label", "expected a string");
    doc.label = it->get<std::string>();
  }
  const json& kind = member(root, "kind", "");
  const json& payload = member(root, "payload", "");
  if (!payload.is_object()) fail("payload", "expected an object");

  try {
    if (kind == "lfm") {
      doc.map = LinearFractionalMap(matrix_value(member(payload, "T", "payload"), doc.m + 1,
                                                 "payload.T"));
    } else if (kind == "bcd") {
      const std::size_t k = doc.m - 1;
      doc.map = BCDMap(real_value(member(payload, "alpha", "payload"), "payload.alpha"),
                       complex_value(member(payload, "c", "payload"), "payload.c"),
                       vector_value(member(payload, "b", "payload"), k, "payload.b"),
                       vector_value(member(payload, "d", "payload"), k, "payload.d"),
                       matrix_value(member(payload, "A", "payload"), k, "payload.A"));
    } else {
      fail("kind", "expected \"lfm\" or \"bcd\"");
    }
  } catch (const DomainError& e) {
    throw SchemaError(std::string("payload: ") + e.what());
  } catch (const DimensionError& e) {
    throw SchemaError(std::string("payload: ") + e.what());
  }
  return doc;
}

json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const ComplexVector& v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const ComplexMatrix& a) {
  json out = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(to_json(a.row(i)));
  return out;
}

json to_json(const MapDocument& doc) {
  json out = {{"version", doc.version}, {"kind", doc.kind()}, {"m", doc.m}};
  if (doc.label) out["label"] = *doc.label;
  if (const auto* phi = std::get_if<LinearFractionalMap>(&doc.map)) {
    out["payload"] = {{"T", to_json(phi->matrix())}};
  } else {
    const BCDMap& map = std::get<BCDMap>(doc.map);
    out["payload"] = {{"alpha", map.alpha()}, {"c", to_json(map.c())}, {"b", to_json(map.b())},
                      {"d", to_json(map.d())}, {"A", to_json(map.a())}};
  }
  return out;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lfball::cli
