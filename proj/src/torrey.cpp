#include "rfi/torrey.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_order(int q)
{
    if (q < 1) {
        throw DomainError(fmt::format("quantum order must be >= 1, got {}", q));
    }
}

Eigen::MatrixXd sine_kernel(std::span<const double> nu, int q, std::span<const double> tau)
{
    Eigen::MatrixXd k(static_cast<Eigen::Index>(tau.size()), static_cast<Eigen::Index>(nu.size()));
    for (std::size_t r = 0; r < tau.size(); ++r) {
        for (std::size_t c = 0; c < nu.size(); ++c) {
            k(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::sin(kTwoPi * q * nu[c] * tau[r]);
        }
    }
    return k;
}

void require_time_constant(double time_constant)
{
    if (std::isnan(time_constant) || time_constant <= 0.0) {
        throw DomainError(fmt::format("damping time constant must be > 0, got {}", time_constant));
    }
}

} // namespace

std::vector<double> make_tau_grid(double dtau, std::size_t count)
{
    if (!std::isfinite(dtau) || dtau <= 0.0) {
        throw DomainError(fmt::format("tau increment must be > 0, got {}", dtau));
    }
    if (count < 2) {
        throw DomainError(fmt::format("tau grid needs at least 2 points, got {}", count));
    }
    std::vector<double> tau(count);
    for (std::size_t k = 0; k < count; ++k) {
        tau[k] = static_cast<double>(k) * dtau;
    }
    return tau;
}

void check_tau_grid(std::span<const double> tau)
{
    if (tau.size() < 2) {
        throw DomainError("tau grid needs at least 2 points");
    }
    const double step = tau[1] - tau[0];
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw DomainError("tau grid must be strictly increasing");
    }
    if (std::abs(tau[0]) > 1e-9 * step) {
        throw DomainError(fmt::format("tau grid must start at 0, starts at {}", tau[0]));
    }
    for (std::size_t k = 1; k < tau.size(); ++k) {
        const double expected = static_cast<double>(k) * step;
        if (std::abs(tau[k] - expected) > 1e-6 * step) {
            throw DomainError(fmt::format("tau grid is not uniform at index {} ({} vs {})", k,
                                          tau[k], expected));
        }
    }
}

TorreyKernel1D::TorreyKernel1D(std::span<const double> nu_grid, int q,
                               std::span<const double> tau)
{
    require_order(q);
    kernel_ = sine_kernel(nu_grid, q, tau);
}

std::vector<double> TorreyKernel1D::apply(std::span<const double> weights) const
{
    if (weights.size() != nu_points()) {
        throw DomainError("weight vector does not match kernel grid");
    }
    const Eigen::Map<const Eigen::VectorXd> w(weights.data(), static_cast<Eigen::Index>(weights.size()));
    const Eigen::VectorXd v = kernel_ * w;
    return {v.data(), v.data() + v.size()};
}

TorreyKernel2D::TorreyKernel2D(std::span<const double> nuH_grid, std::span<const double> nuP_grid,
                               int qH, int qP, std::span<const double> tauH,
                               std::span<const double> tauP)
{
    require_order(qH);
    require_order(qP);
    kernelH_ = sine_kernel(nuH_grid, qH, tauH);
    kernelP_ = sine_kernel(nuP_grid, qP, tauP);
}

std::vector<double> TorreyKernel2D::apply(std::span<const double> weights) const
{
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const auto mH = kernelH_.cols();
    const auto mP = kernelP_.cols();
    if (static_cast<Eigen::Index>(weights.size()) != mH * mP) {
        throw DomainError("weight array does not match kernel grid");
    }
    const Eigen::Map<const RowMajor> w(weights.data(), mH, mP);
    const RowMajor v = kernelH_ * (w * kernelP_.transpose());
    return {v.data(), v.data() + v.size()};
}

TorreySeries1D simulate_1d(const RfiProfile1D& profile, int q, std::span<const double> tau)
{
    require_order(q);
    if (!profile.normalized()) {
        throw StateError("simulate_1d requires a normalized profile");
    }
    TorreySeries1D series;
    series.tau.assign(tau.begin(), tau.end());
    series.quantum_order = q;
    series.values = TorreyKernel1D(profile.grid, q, tau).apply(profile.weights);
    return series;
}

TorreySeries2D simulate_2d(const RfiProfile2D& profile, int qH, int qP,
                           std::span<const double> tauH, std::span<const double> tauP)
{
    require_order(qH);
    require_order(qP);
    if (!profile.normalized()) {
        throw StateError("simulate_2d requires a normalized profile");
    }
    TorreySeries2D series;
    series.tauH.assign(tauH.begin(), tauH.end());
    series.tauP.assign(tauP.begin(), tauP.end());
    series.qH = qH;
    series.qP = qP;
    series.values =
        TorreyKernel2D(profile.gridH, profile.gridP, qH, qP, tauH, tauP).apply(profile.weights);
    return series;
}

TorreySeries1D apply_damping(TorreySeries1D series, double time_constant)
{
    require_time_constant(time_constant);
    if (std::isinf(time_constant)) {
        return series;
    }
    for (std::size_t k = 0; k < series.values.size(); ++k) {
        series.values[k] *= std::exp(-series.tau[k] / time_constant);
    }
    return series;
}

TorreySeries2D apply_damping(TorreySeries2D series, double time_constant)
{
    require_time_constant(time_constant);
    if (std::isinf(time_constant)) {
        return series;
    }
    for (std::size_t k = 0; k < series.tauH.size(); ++k) {
        const double fH = std::exp(-series.tauH[k] / time_constant);
        for (std::size_t l = 0; l < series.tauP.size(); ++l) {
            series.at(k, l) *= fH * std::exp(-series.tauP[l] / time_constant);
        }
    }
    return series;
}

double symmetric_envelope(double lambda, double nu0, int q, double tau)
{
    return std::exp(-kTwoPi * lambda * nu0 * q * tau);
}

} // namespace rfi
