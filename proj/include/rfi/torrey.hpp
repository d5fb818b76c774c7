#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rfi/profile.hpp"

namespace rfi {

/// Sampled q-quantum Torrey oscillation s(tau) on a uniform grid starting at 0.
struct TorreySeries1D {
    std::vector<double> tau;    // s
    std::vector<double> values; // dimensionless
    int quantum_order = 1;

    double dtau() const { return tau.size() > 1 ? tau[1] - tau[0] : 0.0; }
};

/// Two-channel series s(tauH, tauP), row-major with tauH outer.
struct TorreySeries2D {
    std::vector<double> tauH;
    std::vector<double> tauP;
    std::vector<double> values;
    int qH = 1;
    int qP = 1;

    double at(std::size_t k, std::size_t l) const { return values[k * tauP.size() + l]; }
    double& at(std::size_t k, std::size_t l) { return values[k * tauP.size() + l]; }
};

/// {0, dtau, 2 dtau, ...}; count >= 2, dtau > 0.
std::vector<double> make_tau_grid(double dtau, std::size_t count);

/// Throws DomainError unless the grid starts at 0 and is strictly, uniformly increasing.
void check_tau_grid(std::span<const double> tau);

/**
 * Precomputed sin(2 pi q nu_i tau_k) matrix (rows tau, columns nu).
 *
 * The fitter reuses one kernel for every objective evaluation; the kernel
 * does not depend on the distribution widths, only on grids and q.
 */
class TorreyKernel1D {
public:
    TorreyKernel1D(std::span<const double> nu_grid, int q, std::span<const double> tau);

    std::vector<double> apply(std::span<const double> weights) const;
    std::size_t tau_points() const { return static_cast<std::size_t>(kernel_.rows()); }
    std::size_t nu_points() const { return static_cast<std::size_t>(kernel_.cols()); }

private:
    Eigen::MatrixXd kernel_;
};

/// Separable kernel for the two-channel signal: values = A W B^T.
class TorreyKernel2D {
public:
    TorreyKernel2D(std::span<const double> nuH_grid, std::span<const double> nuP_grid, int qH,
                   int qP, std::span<const double> tauH, std::span<const double> tauP);

    /// weights row-major (H outer), result row-major (tauH outer).
    std::vector<double> apply(std::span<const double> weights) const;

private:
    Eigen::MatrixXd kernelH_;
    Eigen::MatrixXd kernelP_;
};

TorreySeries1D simulate_1d(const RfiProfile1D& profile, int q, std::span<const double> tau);

TorreySeries2D simulate_2d(const RfiProfile2D& profile, int qH, int qP,
                           std::span<const double> tauH, std::span<const double> tauP);

/// Multiplies by exp(-tau / time_constant); +infinity leaves the series unchanged.
TorreySeries1D apply_damping(TorreySeries1D series, double time_constant);
/// 2D: product of the per-axis factors exp(-tauH / T) exp(-tauP / T).
TorreySeries2D apply_damping(TorreySeries2D series, double time_constant);

/// Continuous-limit envelope exp(-2 pi lambda nu0 q tau) for lambda1 = lambda2 = lambda.
double symmetric_envelope(double lambda, double nu0, int q, double tau);

} // namespace rfi
