#pragma once

// Canonical JSON for certificates and sweep reports. Objects are emitted
// with sorted keys and two-space indentation, so equal values always
// serialize to identical bytes.

#include "ecassoc/certificate.hpp"
#include "ecassoc/harness.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ecassoc {

using Json = nlohmann::json;

Json certificate_to_json(const Certificate& cert);
/// Throws ParseError on schema violations.
Certificate certificate_from_json(const Json& j);

Json report_to_json(const SweepReport& report);
SweepReport report_from_json(const Json& j);

/// {"reports": [...], "unattained_patterns": [...]}.
Json sweep_document(const std::vector<SweepReport>& reports);

Json axiom_report_to_json(const AxiomReport& report);
Json rational_check_to_json(const RationalSpotCheck& check);

std::string canonical_dump(const Json& j);

/// Parses text and throws ParseError on malformed JSON.
Json parse_json(std::string_view text);

}  // namespace ecassoc
