#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "rfi/torrey.hpp"

namespace rfi {

/**
 * Positive part of the phased real Fourier transform of a Torrey series.
 *
 * The axis holds the non-negative half of the zero-filled DFT grid,
 * freq[m] = m / (zero_fill * dtau) for m = 0 .. zero_fill / 2, in the
 * nu_q domain unless rescale_axis() has been applied.
 */
struct SpectralProfile1D {
    std::vector<double> freq; // Hz
    std::vector<double> values;
    std::size_t zero_fill = 0;
    std::optional<int> rescaled_by;
};

/// values row-major with the H axis outer.
struct SpectralProfile2D {
    std::vector<double> freqH;
    std::vector<double> freqP;
    std::vector<double> values;
    std::size_t zero_fillH = 0;
    std::size_t zero_fillP = 0;
    std::optional<int> rescaledH_by;
    std::optional<int> rescaledP_by;

    double at(std::size_t m, std::size_t n) const { return values[m * freqP.size() + n]; }
};

/// Number of non-negative frequency bins for a transform of length n.
constexpr std::size_t half_length(std::size_t n) { return n / 2 + 1; }

/// Full complex DFT, X[m] = sum_k x[k] exp(-2 pi i m k / n), with x zero-filled to n.
std::vector<std::complex<double>> dft(std::span<const double> x, std::size_t n);

/**
 * Reusable real transform of length n returning Re(i X[m]) = -Im X[m] on the
 * non-negative half. The quarter-cycle phase makes sine-modulated input
 * (the Torrey convention) absorptive: a tone sin(2 pi f tau) yields a positive
 * peak at f.
 */
class PhasedRealTransform {
public:
    explicit PhasedRealTransform(std::size_t n);
    ~PhasedRealTransform();
    PhasedRealTransform(PhasedRealTransform&&) noexcept;
    PhasedRealTransform& operator=(PhasedRealTransform&&) noexcept;
    PhasedRealTransform(const PhasedRealTransform&) = delete;
    PhasedRealTransform& operator=(const PhasedRealTransform&) = delete;

    std::size_t length() const { return n_; }
    /// x.size() <= length(); out.size() == half_length(length()).
    void execute(std::span<const double> x, std::span<double> out) const;

private:
    struct Plan;
    std::size_t n_ = 0;
    std::unique_ptr<Plan> plan_;
};

/// Per-axis phased transform of a row-major (nH x nP) array, before clipping.
class PhasedRealTransform2D {
public:
    PhasedRealTransform2D(std::size_t nH, std::size_t nP, std::size_t zero_fillH,
                          std::size_t zero_fillP);

    /// Returns half_length(zero_fillH) x half_length(zero_fillP), row-major.
    std::vector<double> execute(std::span<const double> values) const;

private:
    std::size_t nH_;
    std::size_t nP_;
    PhasedRealTransform alongH_;
    PhasedRealTransform alongP_;
};

/// Unclipped phased spectrum (the transform before taking the positive part).
std::vector<double> phased_spectrum(std::span<const double> values, std::size_t zero_fill);

SpectralProfile1D transform_1d(const TorreySeries1D& series, std::size_t zero_fill);
SpectralProfile2D transform_2d(const TorreySeries2D& series, std::size_t zero_fillH,
                               std::size_t zero_fillP);

/// Divides the frequency axis by q (nu_q -> nu). Refuses a second application.
SpectralProfile1D rescale_axis(SpectralProfile1D profile, int q);
SpectralProfile2D rescale_axes(SpectralProfile2D profile, int qH, int qP);

/// Frequency axis m / (zero_fill * dtau), m = 0 .. zero_fill / 2.
std::vector<double> frequency_axis(std::size_t zero_fill, double dtau);

/// Clamps negative entries to zero in place.
void clip_negative(std::span<double> values);

} // namespace rfi
