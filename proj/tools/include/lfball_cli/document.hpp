#pragma once

// Versioned JSON documents describing a map, either as a projective matrix
// ("lfm") or as half-space normal-form data ("bcd").

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "lfball/bcd.hpp"
#include "lfball/lfm.hpp"

namespace lfball::cli {

inline constexpr int kDocumentVersion = 1;

/// Malformed JSON or a document that does not match the schema. The message
/// names the line (for syntax errors) or the offending field.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapDocument {
  int version = kDocumentVersion;
  std::size_t m = 0;
  std::optional<std::string> label;
  std::variant<LinearFractionalMap, BCDMap> map;

  bool is_lfm() const { return std::holds_alternative<LinearFractionalMap>(map); }
  const char* kind() const { return is_lfm() ? "lfm" : "bcd"; }
};

MapDocument parse_document(const std::string& text);
nlohmann::json to_json(const MapDocument& doc);

nlohmann::json to_json(cplx z);
nlohmann::json to_json(const ComplexVector& v);
nlohmann::json to_json(const ComplexMatrix& a);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace lfball::cli
