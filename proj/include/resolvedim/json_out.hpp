#pragma once

#include <json.hpp>

#include "resolvedim/enumeration.hpp"
#include "resolvedim/families.hpp"
#include "resolvedim/resolving.hpp"

namespace resolvedim {

/// Schema-stable, key-sorted JSON. Absent parameters serialize as null.
/// The optional labeling augments the report with a vertex-label map.
nlohmann::json report_to_json(const ResolvingReport& report, const GridLabeling* labeling = nullptr);

/// Elapsed time is deliberately not serialized: identical invocations
/// must produce byte-identical JSON.
nlohmann::json verification_to_json(const VerificationReport& report);

nlohmann::json labels_to_json(const GridLabeling& labeling);

} // namespace resolvedim
