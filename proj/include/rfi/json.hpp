#pragma once

// JSON forms of the public data types. Profile objects carry their parameters
// and grid_points; weights are never serialized and are recomputed on load.

#include <json.hpp>

#include "rfi/fit.hpp"
#include "rfi/profile.hpp"

namespace rfi {

void to_json(nlohmann::json& j, const RfiProfile1D& profile);
void from_json(const nlohmann::json& j, RfiProfile1D& profile);
void to_json(nlohmann::json& j, const RfiProfile2D& profile);
void from_json(const nlohmann::json& j, RfiProfile2D& profile);

void to_json(nlohmann::json& j, const Widths1D& w);
void to_json(nlohmann::json& j, const Widths2D& w);
void from_json(const nlohmann::json& j, Widths1D& w);
void from_json(const nlohmann::json& j, Widths2D& w);

/// Keys: params, residual_norm, iterations, converged, starts, trace.
nlohmann::json fit_result_json(const FitResult1D& result);
/// As above plus effective_widths (the scale-free lambda0 / sqrt(beta) combinations).
nlohmann::json fit_result_json(const FitResult2D& result);

} // namespace rfi
