#include "rfi/fit.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

void check_axis(std::span<const double> freq, std::size_t zero_fill, std::span<const double> tau,
                const char* axis)
{
    check_tau_grid(tau);
    if (zero_fill < tau.size()) {
        throw DomainError(fmt::format("{}: zero_fill {} is smaller than the {} tau points", axis,
                                      zero_fill, tau.size()));
    }
    if (freq.size() != half_length(zero_fill)) {
        throw DomainError(fmt::format("{}: data has {} frequency bins, config implies {}", axis,
                                      freq.size(), half_length(zero_fill)));
    }
    const double expected = 1.0 / (static_cast<double>(zero_fill) * (tau[1] - tau[0]));
    const double actual = freq[1] - freq[0];
    if (std::abs(actual - expected) > 1e-9 * expected) {
        throw DomainError(fmt::format("{}: data bin spacing {} Hz differs from config {} Hz", axis,
                                      actual, expected));
    }
}

void require_order(int q)
{
    if (q < 1) {
        throw DomainError(fmt::format("quantum order must be >= 1, got {}", q));
    }
}

std::vector<double> unit_peak(std::vector<double> values)
{
    const double peak = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
    if (!(peak > 0.0)) {
        return {};
    }
    for (double& v : values) {
        v /= peak;
    }
    return values;
}

double distance(std::span<const double> a, std::span<const double> b)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

bool all_positive(std::initializer_list<double> values)
{
    return std::all_of(values.begin(), values.end(),
                       [](double v) { return std::isfinite(v) && v > 0.0; });
}

template <class Params, class Objective, class ToParams>
FitResult<Params> multi_start(const Objective& objective, const std::vector<Params>& starts,
                              const std::vector<std::vector<double>>& log_starts,
                              ToParams to_params, const NelderMeadOptions& options)
{
    FitResult<Params> result;
    result.starts = static_cast<int>(starts.size());
    std::size_t best = 0;
    std::vector<NelderMeadResult> runs;
    runs.reserve(starts.size());

    for (std::size_t s = 0; s < starts.size(); ++s) {
        auto f = [&](std::span<const double> x) { return objective(to_params(x)); };
        NelderMeadResult run = nelder_mead(f, log_starts[s], options);
        StartTrace<Params> trace;
        trace.start = starts[s];
        trace.params = to_params(run.x);
        trace.norm = run.value;
        trace.iterations = run.iterations;
        trace.converged = run.converged;
        result.trace.push_back(trace);
        // Strict comparison keeps the lowest start index on ties.
        if (s == 0 || run.value < runs[best].value) {
            best = s;
        }
        runs.push_back(std::move(run));
    }

    const NelderMeadResult& winner = runs[best];
    result.params = to_params(winner.x);
    result.residual_norm = winner.value;
    result.iterations = winner.iterations;
    result.converged = winner.converged;
    result.best_history = winner.best_history;
    return result;
}

} // namespace

EffectiveWidths2D effective_widths(const Widths2D& w)
{
    return {w.lambda0 / std::sqrt(w.betaH1), w.lambda0 / std::sqrt(w.betaH2),
            w.lambda0 / std::sqrt(w.betaP1), w.lambda0 / std::sqrt(w.betaP2)};
}

SpectrumObjective1D::SpectrumObjective1D(const SpectralProfile1D& data, const FitConfig1D& config)
    : base_(RfiProfile1D::make(config.nu0, 1.0, 1.0, config.grid_points)),
      kernel_(base_.grid, config.q, config.tau),
      transform_(std::max(config.zero_fill, std::size_t{2}))
{
    require_order(config.q);
    if (data.rescaled_by) {
        throw DomainError("fit data must stay in the nu_q domain (axis was rescaled)");
    }
    check_axis(data.freq, config.zero_fill, config.tau, "spectrum");
    if (data.values.size() != data.freq.size()) {
        throw DomainError("spectrum values and axis differ in length");
    }
    data_ = unit_peak(data.values);
    if (data_.empty()) {
        throw DomainError("measured spectrum has no positive values");
    }
}

std::vector<double> SpectrumObjective1D::model(const Widths1D& w) const
{
    if (!all_positive({w.lambda1, w.lambda2})) {
        return {};
    }
    RfiProfile1D profile = base_;
    profile.lambda1 = w.lambda1;
    profile.lambda2 = w.lambda2;
    profile = normalize(std::move(profile));
    const std::vector<double> series = kernel_.apply(profile.weights);
    std::vector<double> spectrum(half_length(transform_.length()));
    transform_.execute(series, spectrum);
    clip_negative(spectrum);
    return unit_peak(std::move(spectrum));
}

double SpectrumObjective1D::operator()(const Widths1D& w) const
{
    const std::vector<double> m = model(w);
    return m.empty() ? kObjectivePenalty : distance(data_, m);
}

SpectrumObjective2D::SpectrumObjective2D(const SpectralProfile2D& data, const FitConfig2D& config)
    : base_(RfiProfile2D::make(config.nu0H, config.nu0P, 1.0, 1.0, 1.0, 1.0, 1.0,
                               config.grid_points)),
      kernel_(base_.gridH, base_.gridP, config.qH, config.qP, config.tauH, config.tauP),
      transform_(config.tauH.size(), config.tauP.size(), config.zero_fillH, config.zero_fillP)
{
    if (data.rescaledH_by || data.rescaledP_by) {
        throw DomainError("fit data must stay in the nu_q domain (axes were rescaled)");
    }
    check_axis(data.freqH, config.zero_fillH, config.tauH, "H axis");
    check_axis(data.freqP, config.zero_fillP, config.tauP, "P axis");
    if (data.values.size() != data.freqH.size() * data.freqP.size()) {
        throw DomainError("2D spectrum values and axes differ in size");
    }
    data_ = unit_peak(data.values);
    if (data_.empty()) {
        throw DomainError("measured spectrum has no positive values");
    }
}

std::vector<double> SpectrumObjective2D::model(const Widths2D& w) const
{
    if (!all_positive({w.lambda0, w.betaH1, w.betaH2, w.betaP1, w.betaP2})) {
        return {};
    }
    RfiProfile2D profile = base_;
    profile.lambda0 = w.lambda0;
    profile.betaH1 = w.betaH1;
    profile.betaH2 = w.betaH2;
    profile.betaP1 = w.betaP1;
    profile.betaP2 = w.betaP2;
    profile = normalize(std::move(profile));
    std::vector<double> spectrum = transform_.execute(kernel_.apply(profile.weights));
    clip_negative(spectrum);
    return unit_peak(std::move(spectrum));
}

double SpectrumObjective2D::operator()(const Widths2D& w) const
{
    const std::vector<double> m = model(w);
    return m.empty() ? kObjectivePenalty : distance(data_, m);
}

double objective_1d(const Widths1D& params, const SpectralProfile1D& data,
                    const FitConfig1D& config)
{
    return SpectrumObjective1D(data, config)(params);
}

double objective_2d(const Widths2D& params, const SpectralProfile2D& data,
                    const FitConfig2D& config)
{
    return SpectrumObjective2D(data, config)(params);
}

std::vector<Widths1D> default_starts_1d()
{
    constexpr double levels[] = {0.005, 0.02, 0.08};
    std::vector<Widths1D> starts;
    for (double l1 : levels) {
        for (double l2 : levels) {
            starts.push_back({l1, l2});
        }
    }
    return starts;
}

std::vector<Widths2D> default_starts_2d()
{
    constexpr double lambdas[] = {0.002, 0.01};
    constexpr double betas[] = {0.05, 0.2};
    std::vector<Widths2D> starts;
    for (double l0 : lambdas) {
        for (double bH : betas) {
            for (double bP : betas) {
                starts.push_back({l0, bH, bH, bP, bP});
            }
        }
    }
    return starts;
}

FitResult1D fit_1d(const SpectralProfile1D& data, const FitConfig1D& config)
{
    const SpectrumObjective1D objective(data, config);
    const auto starts = default_starts_1d();
    std::vector<std::vector<double>> log_starts;
    for (const auto& s : starts) {
        log_starts.push_back({std::log(s.lambda1), std::log(s.lambda2)});
    }
    auto to_params = [](std::span<const double> x) {
        return Widths1D{std::exp(x[0]), std::exp(x[1])};
    };
    return multi_start(objective, starts, log_starts, to_params, config.optimizer);
}

FitResult2D fit_2d(const SpectralProfile2D& data, const FitConfig2D& config)
{
    const SpectrumObjective2D objective(data, config);
    const auto starts = default_starts_2d();
    std::vector<std::vector<double>> log_starts;
    for (const auto& s : starts) {
        log_starts.push_back({std::log(s.lambda0), std::log(s.betaH1), std::log(s.betaH2),
                              std::log(s.betaP1), std::log(s.betaP2)});
    }
    auto to_params = [](std::span<const double> x) {
        return Widths2D{std::exp(x[0]), std::exp(x[1]), std::exp(x[2]), std::exp(x[3]),
                        std::exp(x[4])};
    };
    return multi_start(objective, starts, log_starts, to_params, config.optimizer);
}

double estimate_nu0(const SpectralProfile1D& data, int q)
{
    require_order(q);
    if (data.values.empty() || data.values.size() != data.freq.size()) {
        throw DomainError("spectrum is empty or inconsistent");
    }
    const auto peak = std::max_element(data.values.begin(), data.values.end());
    if (!(*peak > 0.0)) {
        throw DomainError("spectrum has no positive peak");
    }
    const double nu_q = data.freq[static_cast<std::size_t>(peak - data.values.begin())];
    const double scale = data.rescaled_by ? 1.0 : static_cast<double>(q);
    if (!(nu_q > 0.0)) {
        throw DomainError("spectral peak sits at zero frequency");
    }
    return nu_q / scale;
}

} // namespace rfi
