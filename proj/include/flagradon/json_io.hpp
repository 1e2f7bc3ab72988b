#pragma once

// JSON encoding of reports for the CLI. Weights carry their integer
// fundamental-weight coordinates under "omega" plus, for classical families,
// an exact epsilon-coordinate rendering; Weyl elements are reduced words.
// Serialization is deterministic (object keys are emitted sorted), and
// from/to round-trips are identities, which the test suite pins down.

#include <json.hpp>

#include "flagradon/classical.hpp"
#include "flagradon/radon.hpp"

namespace flagradon {

using Json = nlohmann::json;

Json weight_to_json(const RootSystem& rs, const Weight& w);
Weight weight_from_json(const RootSystem& rs, const Json& j);

Json weyl_to_json(const WeylElement& w);
WeylElement weyl_from_json(const RootSystem& rs, const Json& j);

Json class_to_json(const RootSystem& rs, const GrothendieckClass& c);
GrothendieckClass class_from_json(const RootSystem& rs, const Json& j);

Json entry_to_json(const RootSystem& rs, const GammaEntry& e);
GammaEntry entry_from_json(const RootSystem& rs, const Json& j);

Json report_to_json(const RootSystem& rs, const RadonReport& rep);
RadonReport report_from_json(const RootSystem& rs, const Json& j);

Json extremal_report_to_json(const RootSystem& rs, const ExtremalReport& rep);
ExtremalReport extremal_report_from_json(const RootSystem& rs, const Json& j);

Json discrepancies_to_json(const std::vector<Discrepancy>& ds);

// Envelope wrapping every CLI result. The result payload is byte-stable for
// fixed inputs and schema version; timing lives outside it.
Json make_envelope(const std::string& command, Json input, Json result,
                   long long timing_ms);

// Rebuilds the root system described by an envelope's input echo.
std::shared_ptr<const RootSystem> root_system_from_input(const Json& input);

inline constexpr const char* kSchemaVersion = "1";

}  // namespace flagradon
