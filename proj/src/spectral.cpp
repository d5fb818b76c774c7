#include "rfi/spectral.hpp"

#include <algorithm>
#include <mutex>

#include <fftw3.h>
#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

// The FFTW planner is not re-entrant; executing distinct plans is.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

void require_zero_fill(std::size_t data_length, std::size_t zero_fill)
{
    if (data_length < 2) {
        throw DomainError(fmt::format("series needs at least 2 samples, got {}", data_length));
    }
    if (zero_fill < data_length) {
        throw DomainError(fmt::format("zero_fill {} is smaller than the data length {}",
                                      zero_fill, data_length));
    }
}

std::size_t checked_length(std::size_t data_length, std::size_t zero_fill)
{
    require_zero_fill(data_length, zero_fill);
    return zero_fill;
}

void require_scale(int q)
{
    if (q < 1) {
        throw DomainError(fmt::format("axis rescale factor must be >= 1, got {}", q));
    }
}

std::vector<double> scaled_axis(std::vector<double> axis, int q)
{
    for (double& f : axis) {
        f /= static_cast<double>(q);
    }
    return axis;
}

} // namespace

// Buffers are owned by the plan; execute() copies through them, so a single
// PhasedRealTransform must not be shared across threads.
struct PhasedRealTransform::Plan {
    double* in = nullptr;
    fftw_complex* out = nullptr;
    fftw_plan plan = nullptr;

    explicit Plan(std::size_t n)
    {
        std::lock_guard lock(planner_mutex());
        in = fftw_alloc_real(n);
        out = fftw_alloc_complex(half_length(n));
        if (in != nullptr && out != nullptr) {
            plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
        }
        if (plan == nullptr) {
            free_all();
            throw InternalError(fmt::format("FFTW plan creation failed for length {}", n));
        }
    }

    ~Plan()
    {
        std::lock_guard lock(planner_mutex());
        free_all();
    }

    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;

private:
    void free_all()
    {
        if (plan != nullptr) fftw_destroy_plan(plan);
        if (in != nullptr) fftw_free(in);
        if (out != nullptr) fftw_free(out);
        plan = nullptr;
        in = nullptr;
        out = nullptr;
    }
};

PhasedRealTransform::PhasedRealTransform(std::size_t n) : n_(n)
{
    if (n < 2) {
        throw DomainError(fmt::format("transform length must be >= 2, got {}", n));
    }
    plan_ = std::make_unique<Plan>(n);
}

PhasedRealTransform::~PhasedRealTransform() = default;
PhasedRealTransform::PhasedRealTransform(PhasedRealTransform&&) noexcept = default;
PhasedRealTransform& PhasedRealTransform::operator=(PhasedRealTransform&&) noexcept = default;

void PhasedRealTransform::execute(std::span<const double> x, std::span<double> out) const
{
    if (x.size() > n_ || out.size() != half_length(n_)) {
        throw DomainError("transform buffer size mismatch");
    }
    std::copy(x.begin(), x.end(), plan_->in);
    std::fill(plan_->in + x.size(), plan_->in + n_, 0.0);
    fftw_execute(plan_->plan);
    for (std::size_t m = 0; m < out.size(); ++m) {
        out[m] = -plan_->out[m][1];
    }
}

PhasedRealTransform2D::PhasedRealTransform2D(std::size_t nH, std::size_t nP,
                                             std::size_t zero_fillH, std::size_t zero_fillP)
    : nH_(nH), nP_(nP), alongH_(checked_length(nH, zero_fillH)),
      alongP_(checked_length(nP, zero_fillP))
{
}

std::vector<double> PhasedRealTransform2D::execute(std::span<const double> values) const
{
    if (values.size() != nH_ * nP_) {
        throw DomainError("2D series size does not match the transform");
    }
    const std::size_t hH = half_length(alongH_.length());
    const std::size_t hP = half_length(alongP_.length());

    // Along P for every tauH row: partial[k * hP + n].
    std::vector<double> partial(nH_ * hP);
    for (std::size_t k = 0; k < nH_; ++k) {
        alongP_.execute(values.subspan(k * nP_, nP_), std::span(partial).subspan(k * hP, hP));
    }

    // Along H for every nuP column.
    std::vector<double> column(nH_);
    std::vector<double> column_out(hH);
    std::vector<double> result(hH * hP);
    for (std::size_t n = 0; n < hP; ++n) {
        for (std::size_t k = 0; k < nH_; ++k) {
            column[k] = partial[k * hP + n];
        }
        alongH_.execute(column, column_out);
        for (std::size_t m = 0; m < hH; ++m) {
            result[m * hP + n] = column_out[m];
        }
    }
    return result;
}

std::vector<std::complex<double>> dft(std::span<const double> x, std::size_t n)
{
    require_zero_fill(x.size(), n);
    std::vector<double> in(n, 0.0);
    std::copy(x.begin(), x.end(), in.begin());
    std::vector<std::complex<double>> out(n);
    {
        std::lock_guard lock(planner_mutex());
        fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                              reinterpret_cast<fftw_complex*>(out.data()),
                                              FFTW_ESTIMATE);
        if (plan == nullptr) {
            throw InternalError("FFTW plan creation failed");
        }
        fftw_execute(plan);
        fftw_destroy_plan(plan);
    }
    // Hermitian completion of the upper half.
    for (std::size_t m = half_length(n); m < n; ++m) {
        out[m] = std::conj(out[n - m]);
    }
    return out;
}

std::vector<double> phased_spectrum(std::span<const double> values, std::size_t zero_fill)
{
    require_zero_fill(values.size(), zero_fill);
    std::vector<double> out(half_length(zero_fill));
    PhasedRealTransform(zero_fill).execute(values, out);
    return out;
}

std::vector<double> frequency_axis(std::size_t zero_fill, double dtau)
{
    if (!(dtau > 0.0)) {
        throw DomainError(fmt::format("tau increment must be > 0, got {}", dtau));
    }
    std::vector<double> axis(half_length(zero_fill));
    const double df = 1.0 / (static_cast<double>(zero_fill) * dtau);
    for (std::size_t m = 0; m < axis.size(); ++m) {
        axis[m] = static_cast<double>(m) * df;
    }
    return axis;
}

void clip_negative(std::span<double> values)
{
    for (double& v : values) {
        v = std::max(v, 0.0);
    }
}

SpectralProfile1D transform_1d(const TorreySeries1D& series, std::size_t zero_fill)
{
    require_zero_fill(series.values.size(), zero_fill);
    check_tau_grid(series.tau);
    SpectralProfile1D profile;
    profile.zero_fill = zero_fill;
    profile.freq = frequency_axis(zero_fill, series.dtau());
    profile.values = phased_spectrum(series.values, zero_fill);
    clip_negative(profile.values);
    return profile;
}

SpectralProfile2D transform_2d(const TorreySeries2D& series, std::size_t zero_fillH,
                               std::size_t zero_fillP)
{
    check_tau_grid(series.tauH);
    check_tau_grid(series.tauP);
    const PhasedRealTransform2D transform(series.tauH.size(), series.tauP.size(), zero_fillH,
                                          zero_fillP);
    SpectralProfile2D profile;
    profile.zero_fillH = zero_fillH;
    profile.zero_fillP = zero_fillP;
    profile.freqH = frequency_axis(zero_fillH, series.tauH[1] - series.tauH[0]);
    profile.freqP = frequency_axis(zero_fillP, series.tauP[1] - series.tauP[0]);
    profile.values = transform.execute(series.values);
    clip_negative(profile.values);
    return profile;
}

SpectralProfile1D rescale_axis(SpectralProfile1D profile, int q)
{
    require_scale(q);
    if (profile.rescaled_by) {
        throw StateError(fmt::format("frequency axis already rescaled by q = {}",
                                     *profile.rescaled_by));
    }
    profile.freq = scaled_axis(std::move(profile.freq), q);
    profile.rescaled_by = q;
    return profile;
}

SpectralProfile2D rescale_axes(SpectralProfile2D profile, int qH, int qP)
{
    require_scale(qH);
    require_scale(qP);
    if (profile.rescaledH_by || profile.rescaledP_by) {
        throw StateError("frequency axes already rescaled");
    }
    profile.freqH = scaled_axis(std::move(profile.freqH), qH);
    profile.freqP = scaled_axis(std::move(profile.freqP), qP);
    profile.rescaledH_by = qH;
    profile.rescaledP_by = qP;
    return profile;
}

} // namespace rfi
