#pragma once

#include "k3lattice/cycles.hpp"

#include <json.hpp>

namespace k3lattice {

// JSON report schema: "gram_w", "matches_canonical", "det_lt", "det_w",
// "index", "notes". Arbitrary-precision integers are emitted as decimal
// strings so cross-language consumers never hit 64-bit limits.
nlohmann::json report_to_json(const VerificationReport& report);

nlohmann::json matrix_to_json(const IntegerMatrix& m);

} // namespace k3lattice
