#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rfi {

inline constexpr std::size_t kDefaultGridPoints1D = 1024;
inline constexpr std::size_t kDefaultGridPoints2D = 256;

/// Uniform grid of `count` points over [lo, hi], endpoints inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

/**
 * Two-branch asymmetric Lorentzian distribution of RF amplitudes.
 *
 * The density is lambda1^2 / ((1 - nu/nu0)^2 + lambda1^2) below the nominal
 * amplitude nu0 and the same expression with lambda2 at or above it. The
 * frequency grid spans [0, 2 nu0]; weights stay empty until normalize().
 */
struct RfiProfile1D {
    double nu0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::vector<double> grid;
    std::vector<double> weights;

    /// Validates the parameters and lays out the grid. Weights are left empty.
    static RfiProfile1D make(double nu0, double lambda1, double lambda2,
                             std::size_t grid_points = kDefaultGridPoints1D);

    bool normalized() const { return !weights.empty(); }
    std::size_t grid_points() const { return grid.size(); }

    /// Human-readable notes for widths narrower than two grid spacings.
    std::vector<std::string> resolution_warnings() const;
};

/**
 * Quadrant-asymmetric two-channel Lorentzian:
 *   p = lambda0^2 / (d^2 + lambda0^2),
 *   d^2 = betaH_i (1 - nuH/nu0H)^2 + betaP_j (1 - nuP/nu0P)^2,
 * with index 1 below the nominal amplitude of that axis and 2 at or above it.
 *
 * Weights are stored row-major, H index outer: weights[i * gridP.size() + j].
 */
struct RfiProfile2D {
    double nu0H = 0.0;
    double nu0P = 0.0;
    double lambda0 = 0.0;
    double betaH1 = 0.0;
    double betaH2 = 0.0;
    double betaP1 = 0.0;
    double betaP2 = 0.0;
    std::vector<double> gridH;
    std::vector<double> gridP;
    std::vector<double> weights;

    static RfiProfile2D make(double nu0H, double nu0P, double lambda0, double betaH1,
                             double betaH2, double betaP1, double betaP2,
                             std::size_t grid_points = kDefaultGridPoints2D);

    bool normalized() const { return !weights.empty(); }
    std::size_t grid_points() const { return gridH.size(); }
    double weight(std::size_t i, std::size_t j) const { return weights[i * gridP.size() + j]; }

    std::vector<std::string> resolution_warnings() const;
};

double eval_density_1d(double nu, const RfiProfile1D& profile);
double eval_density_2d(double nuH, double nuP, const RfiProfile2D& profile);

/// Returns a copy with weights = density / sum(density) on the grid.
RfiProfile1D normalize(RfiProfile1D profile);
RfiProfile2D normalize(RfiProfile2D profile);

/// Probability-weighted mean RF amplitude over the grid (Hz).
double mean_amplitude(const RfiProfile1D& profile);

} // namespace rfi
