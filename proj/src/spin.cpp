#include "rfi/spin.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi::spin {

namespace {

void require_spins(int n)
{
    if (n < kMinSpins || n > kMaxSpins) {
        throw DomainError(
            fmt::format("spin count must be in [{}, {}], got {}", kMinSpins, kMaxSpins, n));
    }
}

} // namespace

SpinState::SpinState(int n_spins, std::vector<std::complex<double>> amplitudes)
    : n_spins_(n_spins), amplitudes_(std::move(amplitudes))
{
    require_spins(n_spins);
    if (amplitudes_.size() != (std::size_t{1} << n_spins)) {
        throw DomainError(fmt::format("{} spins need {} amplitudes, got {}", n_spins,
                                      std::size_t{1} << n_spins, amplitudes_.size()));
    }
    if (std::abs(norm() - 1.0) > 1e-12) {
        throw DomainError(fmt::format("state norm {} differs from 1", norm()));
    }
}

double SpinState::norm() const
{
    double sum = 0.0;
    for (const auto& a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

SpinState prepare_initial(int n_spins)
{
    require_spins(n_spins);
    const std::size_t dim = std::size_t{1} << n_spins;
    std::vector<std::complex<double>> amps(dim);
    amps[0] = std::numbers::sqrt2 / 2.0;
    amps[dim >> 1] = std::numbers::sqrt2 / 2.0;
    return {n_spins, std::move(amps)};
}

SpinState cnot_all(const SpinState& state)
{
    const std::size_t a_bit = state.a_bit();
    const std::size_t m_mask = a_bit - 1;
    std::vector<std::complex<double>> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = a_bit; i < state.dimension(); ++i) {
        out[i] = state[a_bit | ((i & m_mask) ^ m_mask)];
    }
    return {state.n_spins(), std::move(out)};
}

SpinState z_rotation_on_M(const SpinState& state, double phi)
{
    const std::size_t m_mask = state.a_bit() - 1;
    std::vector<std::complex<double>> out(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const int excited = std::popcount(i & m_mask);
        out[i] = state[i] * std::polar(1.0, phi * excited);
    }
    return {state.n_spins(), std::move(out)};
}

double wrap_phase(double angle)
{
    constexpr double pi = std::numbers::pi;
    double w = std::remainder(angle, 2.0 * pi); // [-pi, pi]
    if (w <= -pi) {
        w += 2.0 * pi;
    }
    return w;
}

double extract_relative_phase(const SpinState& state, std::size_t bra_index, std::size_t ket_index)
{
    if (bra_index >= state.dimension() || ket_index >= state.dimension()) {
        throw DomainError("basis index out of range");
    }
    const auto bra = state[bra_index];
    const auto ket = state[ket_index];
    if (std::abs(bra) <= 1e-12 || std::abs(ket) <= 1e-12) {
        throw DomainError("relative phase is undefined for a vanishing amplitude");
    }
    // arg(ket * conj(bra)) is the difference without a second wrap step.
    return wrap_phase(std::arg(ket * std::conj(bra)));
}

double pfg_ratio(int n_spins, double gamma_ratio)
{
    if (n_spins < kMinSpins) {
        throw DomainError(fmt::format("spin count must be >= {}, got {}", kMinSpins, n_spins));
    }
    if (!std::isfinite(gamma_ratio) || gamma_ratio == 0.0) {
        throw DomainError("gyromagnetic ratio must be finite and non-zero");
    }
    return (n_spins - 1) * gamma_ratio + 1.0;
}

std::vector<double> torrey_phase_sequence(int n_spins, double nu0, std::span<const double> tau)
{
    require_spins(n_spins);
    if (!std::isfinite(nu0)) {
        throw DomainError("nominal amplitude must be finite");
    }
    std::vector<double> phases(tau.size());
    for (std::size_t k = 0; k < tau.size(); ++k) {
        phases[k] = wrap_phase((n_spins - 1) * 2.0 * std::numbers::pi * nu0 * tau[k]);
    }
    return phases;
}

double noon_phase_by_simulation(int n_spins, double phi)
{
    const SpinState noon = cnot_all(prepare_initial(n_spins));
    const SpinState back = cnot_all(z_rotation_on_M(noon, phi));
    return extract_relative_phase(back, 0, back.a_bit());
}

} // namespace rfi::spin
