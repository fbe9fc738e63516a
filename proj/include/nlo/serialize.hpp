#pragma once

// JSON documents. Every document is
//   {"header": {"tool": "nlo", "version": ...}, "content": {...}}
// and every content object carries "schema_version" and "type". The header
// is kept apart so content can be hashed independently of the tool version.

#include <string>

#include "json.hpp"

#include "nlo/certifier.hpp"
#include "nlo/presentation.hpp"
#include "nlo/twisted_torus.hpp"

namespace nlo {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

Json document(Json content);
// Returns the content of a wrapped document (or a bare content object) after
// checking its type and schema version.
Json open_document(const Json& doc, const std::string& expected_type);
std::string dump_document(const Json& doc);

Json params_to_json(const FamilyParams& fp);
FamilyParams params_from_json(const Json& j);

Json presentation_to_json(const Presentation& pres);
Presentation presentation_from_json(const Json& j);

Json knot_data_to_json(const KnotData& kd);
KnotData knot_data_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

}  // namespace nlo
