#pragma once

#include "arcminor/arc_family.hpp"
#include "arcminor/certify.hpp"
#include "arcminor/coloring.hpp"
#include "arcminor/minors.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace arcminor {

using Json = nlohmann::ordered_json;

// Family documents: {"circle": M, "arcs": [{"id": "A0", "l": 0, "r": 5}, ...]}
Json family_to_json(const ArcFamily& f);
/// Throws Error(parse_error) naming the offending field, or
/// Error(invariant_violation) from the family itself.
ArcFamily family_from_json(const Json& doc);
/// Parse errors report the line of the offending character.
ArcFamily parse_family(std::string_view text);
ArcFamily load_family(const std::filesystem::path& path);
void save_family(const ArcFamily& f, const std::filesystem::path& path);

/// {"colors": {"A0": 1, ...}, "num_colors": 3, "valid": true}
Json coloring_to_json(const ArcFamily& f, const Coloring& c, bool valid);

/// {"target": 3, "branch_sets": [["A0"], ["A1"], ["A2", "A3", "A4"]]}
Json minor_to_json(const ArcFamily& f, const MinorCertificate& cert);
MinorCertificate minor_from_json(const ArcFamily& f, const Json& doc);

Json hadwiger_to_json(const ArcFamily& f, const HadwigerCertificate& cert);
Json attempts_to_json(const std::vector<RouteAttempt>& attempts);
Json stats_to_json(const InstanceStats& s);
Json audit_to_json(const AuditReport& report);

} // namespace arcminor
