#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rfi/nelder_mead.hpp"
#include "rfi/profile.hpp"
#include "rfi/spectral.hpp"
#include "rfi/torrey.hpp"

namespace rfi {

struct Widths1D {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    bool operator==(const Widths1D&) const = default;
};

struct Widths2D {
    double lambda0 = 0.0;
    double betaH1 = 0.0;
    double betaH2 = 0.0;
    double betaP1 = 0.0;
    double betaP2 = 0.0;
    bool operator==(const Widths2D&) const = default;
};

/// Half-axis widths lambda0 / sqrt(beta). Only these four combinations shape
/// the distribution: (lambda0, beta) -> (c lambda0, c^2 beta) leaves it unchanged.
struct EffectiveWidths2D {
    double H1 = 0.0;
    double H2 = 0.0;
    double P1 = 0.0;
    double P2 = 0.0;
};
EffectiveWidths2D effective_widths(const Widths2D& w);

/// Everything besides the widths that the model spectrum depends on.
struct FitConfig1D {
    double nu0 = 0.0;
    int q = 1;
    std::vector<double> tau;
    std::size_t zero_fill = 0;
    std::size_t grid_points = kDefaultGridPoints1D;
    NelderMeadOptions optimizer{};
};

struct FitConfig2D {
    double nu0H = 0.0;
    double nu0P = 0.0;
    int qH = 9;
    int qP = 1;
    std::vector<double> tauH;
    std::vector<double> tauP;
    std::size_t zero_fillH = 256;
    std::size_t zero_fillP = 256;
    std::size_t grid_points = kDefaultGridPoints2D;
    NelderMeadOptions optimizer{};
};

template <class Params>
struct StartTrace {
    Params start;
    Params params;
    double norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

template <class Params>
struct FitResult {
    Params params;
    double residual_norm = 0.0;
    int iterations = 0; // of the winning start
    bool converged = false;
    int starts = 0;
    std::vector<StartTrace<Params>> trace;
    std::vector<double> best_history; // of the winning start
};

using FitResult1D = FitResult<Widths1D>;
using FitResult2D = FitResult<Widths2D>;

/// Returned by the objectives for non-positive or non-finite parameters.
inline constexpr double kObjectivePenalty = 1e6;

/**
 * Distance between a measured spectrum and the model spectrum for given widths.
 *
 * Both spectra are scaled to unit peak height before the Euclidean norm is
 * taken, so an unknown overall amplitude factor in the data does not matter.
 * Holds the precomputed kernel and transform plan; not thread-safe.
 */
class SpectrumObjective1D {
public:
    SpectrumObjective1D(const SpectralProfile1D& data, const FitConfig1D& config);

    double operator()(const Widths1D& w) const;
    /// Clipped, unit-peak model spectrum.
    std::vector<double> model(const Widths1D& w) const;

private:
    RfiProfile1D base_;
    TorreyKernel1D kernel_;
    PhasedRealTransform transform_;
    std::vector<double> data_;
};

class SpectrumObjective2D {
public:
    SpectrumObjective2D(const SpectralProfile2D& data, const FitConfig2D& config);

    double operator()(const Widths2D& w) const;
    std::vector<double> model(const Widths2D& w) const;

private:
    RfiProfile2D base_;
    TorreyKernel2D kernel_;
    PhasedRealTransform2D transform_;
    std::vector<double> data_;
};

double objective_1d(const Widths1D& params, const SpectralProfile1D& data,
                    const FitConfig1D& config);
double objective_2d(const Widths2D& params, const SpectralProfile2D& data,
                    const FitConfig2D& config);

/// Fixed multi-start sets: 3x3 grid over {0.005, 0.02, 0.08}^2 in 1D;
/// lambda0 in {0.002, 0.01} x tied (betaH, betaP) in {0.05, 0.2}^2 in 2D.
std::vector<Widths1D> default_starts_1d();
std::vector<Widths2D> default_starts_2d();

FitResult1D fit_1d(const SpectralProfile1D& data, const FitConfig1D& config);
FitResult2D fit_2d(const SpectralProfile2D& data, const FitConfig2D& config);

/// Nominal amplitude guess: location of the spectral maximum divided by q.
double estimate_nu0(const SpectralProfile1D& data, int q);

} // namespace rfi
