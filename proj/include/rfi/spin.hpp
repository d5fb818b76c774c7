#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace rfi::spin {

inline constexpr int kMinSpins = 2;
inline constexpr int kMaxSpins = 14;

/**
 * Pure state of a star-topology system: one central spin A and N-1 satellite
 * spins M. Basis index bits are (A, M1, ..., M_{N-1}) from most to least
 * significant, so |A=1, all M=0> sits at index 2^(N-1).
 */
class SpinState {
public:
    SpinState(int n_spins, std::vector<std::complex<double>> amplitudes);

    int n_spins() const { return n_spins_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const std::complex<double>> amplitudes() const { return amplitudes_; }
    std::complex<double> operator[](std::size_t index) const { return amplitudes_[index]; }
    double norm() const;

    /// Index with A = 1 and every M spin in |1>.
    std::size_t all_ones_index() const { return dimension() - 1; }
    std::size_t a_bit() const { return dimension() >> 1; }

private:
    int n_spins_;
    std::vector<std::complex<double>> amplitudes_;
};

/// (|0> + |1>)_A |0...0>_M / sqrt(2).
SpinState prepare_initial(int n_spins);

/// NOT on every M spin controlled by A.
SpinState cnot_all(const SpinState& state);

/// Phase exp(i phi k) on each basis state with k satellite spins in |1>.
SpinState z_rotation_on_M(const SpinState& state, double phi);

/// arg(a[ket]) - arg(a[bra]) wrapped to (-pi, pi].
double extract_relative_phase(const SpinState& state, std::size_t bra_index, std::size_t ket_index);

/// Gradient ratio G2/G1 = (N - 1) gamma_M / gamma_A + 1 for coherence selection.
double pfg_ratio(int n_spins, double gamma_ratio);

/// Noiseless NOON Torrey phases wrap(2 pi (N-1) nu0 tau).
std::vector<double> torrey_phase_sequence(int n_spins, double nu0, std::span<const double> tau);

/// Full state-vector route: prepare, CNOT, z-rotate M by 2 pi nu0 tau, CNOT, read the phase
/// between |0>_A|0..0> and |1>_A|0..0>.
double noon_phase_by_simulation(int n_spins, double phi);

/// Wraps an angle to (-pi, pi].
double wrap_phase(double angle);

// Gyromagnetic ratios in rad s^-1 T^-1.
inline constexpr double kGammaProton = 267.5221874e6;   // CODATA 2018
inline constexpr double kGammaPhosphorus31 = 108.394e6; // IUPAC 2001 NMR nomenclature

} // namespace rfi::spin
