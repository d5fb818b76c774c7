#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "rfi/spectral.hpp"
#include "rfi/torrey.hpp"

namespace rfi {

// Plain CSV with a fixed header line. Numbers are written with 17 significant
// digits so a written file parses back to the identical doubles.
//   1D series    tau_s,s
//   2D series    tauH_s,tauP_s,s        (long format, tauH outer)
//   1D spectrum  nu_q_hz,S
//   2D spectrum  nuH_q_hz,nuP_q_hz,S

std::string format_series_csv(const TorreySeries1D& series);
std::string format_series_csv(const TorreySeries2D& series);
std::string format_spectrum_csv(const SpectralProfile1D& profile);
std::string format_spectrum_csv(const SpectralProfile2D& profile);

/// Throws IoError with a line-numbered message on malformed input and
/// DomainError when the tau grid is not uniform. quantum_order is left at 1.
TorreySeries1D parse_series_1d(std::istream& in);
TorreySeries2D parse_series_2d(std::istream& in);

TorreySeries1D read_series_1d(const std::filesystem::path& path);
TorreySeries2D read_series_2d(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

} // namespace rfi
