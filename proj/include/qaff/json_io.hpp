#pragma once

// JSON forms of the library's values. Every RatFunc is a string in canonical
// text, so documents are byte-stable for a fixed input. Layout: docs/json-schema.md.

#include <json.hpp>

#include "qaff/drinfeld_poly.hpp"
#include "qaff/relations.hpp"

namespace qaff {

using Json = nlohmann::ordered_json;

struct ReportOptions {
  bool timing = false;      // include elapsed_ms
  int max_failures = 5;     // failures listed per relation (the count is always exact)
};

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const RelationReport& r, const ReportOptions& opt = {});
Json to_json(const std::vector<RelationReport>& rs, const ReportOptions& opt = {});

Json to_json(const PairingTable& t);

/// {"dim", "type", "kmax", "central_charge", "generators": {"E(1)": [[...]], ...}}
Json to_json(const MatrixModule& m);
/// Inverse of the above; ParseError on malformed documents.
MatrixModule module_from_json(const Json& j);

Json to_json(const RQResult& r);

}  // namespace qaff
