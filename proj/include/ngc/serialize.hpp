#pragma once

// JSON encoding of field values, groups, monoidal data and braidings.
//
// Objects are emitted with sorted keys and rationals in lowest terms, so
// serialising a parsed document reproduces the input byte for byte. Parse
// errors are reported as SchemaError with a JSON pointer.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "ngc/braiding.hpp"

namespace ngc {

using Json = nlohmann::json;

Json to_json(const CycloNum& a);
/// {"conductor": M, "coeffs": ["p/q", ...]}; the conductor must match `field`.
CycloNum cyclo_from_json(const Json& j, const FieldPtr& field, const std::string& pointer = "");

Json to_json(const RootOfUnity& r);
RootOfUnity root_from_json(const Json& j, const std::string& pointer = "");

/// {"exp": e} for roots of unity, the CycloNum encoding otherwise.
Json value_to_json(const CycloNum& a);
CycloNum value_from_json(const Json& j, const FieldPtr& field, const std::string& pointer = "");

Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j, const std::string& pointer = "");

/// {"group", "gram" | "gram_exp", "tau_sign", "conductor"}.
Json to_json(const MonoidalData& cat);
MonoidalPtr monoidal_from_json(const Json& j, const std::string& pointer = "");

Json to_json(const BraidingParams& p);
BraidingParams params_from_json(const Json& j, const std::string& pointer = "");

Json to_json(const TwistData& t, const MonoidalData& cat);
TwistData twist_from_json(const Json& j, const MonoidalData& cat, const std::string& pointer = "");

struct BraidingRecord {
  std::optional<BraidingParams> params;
  BraidingData data;
  std::optional<std::vector<TwistData>> twists;
};

/// σ tables keyed by element keys, plus "params" and "twists" when present.
Json to_json(const BraidingRecord& r);
BraidingRecord braiding_from_json(const Json& j, const MonoidalPtr& cat, const std::string& pointer = "");

struct Document {
  MonoidalPtr monoidal;
  std::vector<BraidingRecord> braidings;
};

/// {"monoidal": ..., "braidings": [...]}.
Json to_json(const Document& d);
/// Accepts a document or a bare MonoidalData object.
Document document_from_json(const Json& j);

/// Canonical text: two-space indent, trailing newline.
std::string dump(const Json& j);

/// Throws SchemaError("", ...) on invalid JSON syntax.
Json parse_json(const std::string& text);

/// Document holding every enumerated braiding with its twists.
Document classification_document(const MonoidalPtr& cat, const std::vector<EnumeratedBraiding>& braidings);

}  // namespace ngc
