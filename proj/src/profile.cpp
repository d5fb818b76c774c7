#include "rfi/profile.hpp"

#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

void require_positive(double value, const char* name)
{
    if (!std::isfinite(value) || value <= 0.0) {
        throw DomainError(fmt::format("{} must be finite and positive, got {}", name, value));
    }
}

void require_frequency(double nu, const char* name)
{
    if (!std::isfinite(nu) || nu < 0.0) {
        throw DomainError(fmt::format("{} must be finite and non-negative, got {}", name, nu));
    }
}

double lorentzian(double offset, double width)
{
    const double w2 = width * width;
    return w2 / (offset * offset + w2);
}

void warn_if_narrow(std::vector<std::string>& out, const char* label, double width,
                    std::size_t points)
{
    // Grid spacing in units of nu0 is 2 / (points - 1).
    const double floor = 2.0 * 2.0 / static_cast<double>(points - 1);
    if (width < floor) {
        out.push_back(fmt::format("{} = {:.4g} is below two grid spacings ({:.4g}); "
                                  "profile is under-resolved",
                                  label, width, floor));
    }
}

std::vector<double> normalized_weights(std::vector<double> density)
{
    // Fixed left-to-right order so results do not depend on the caller.
    const double total = std::accumulate(density.begin(), density.end(), 0.0);
    if (!(total > 0.0) || !std::isfinite(total)) {
        throw InternalError("RFI density sums to zero on the grid");
    }
    for (double& d : density) {
        d /= total;
    }
    return density;
}

} // namespace

std::vector<double> uniform_grid(double lo, double hi, std::size_t count)
{
    if (count < 2) {
        throw DomainError(fmt::format("grid needs at least 2 points, got {}", count));
    }
    std::vector<double> grid(count);
    const double span = hi - lo;
    const auto last = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        grid[i] = lo + span * (static_cast<double>(i) / last);
    }
    grid.back() = hi;
    return grid;
}

RfiProfile1D RfiProfile1D::make(double nu0, double lambda1, double lambda2,
                                std::size_t grid_points)
{
    require_positive(nu0, "nu0");
    require_positive(lambda1, "lambda1");
    require_positive(lambda2, "lambda2");
    RfiProfile1D p;
    p.nu0 = nu0;
    p.lambda1 = lambda1;
    p.lambda2 = lambda2;
    p.grid = uniform_grid(0.0, 2.0 * nu0, grid_points);
    return p;
}

std::vector<std::string> RfiProfile1D::resolution_warnings() const
{
    std::vector<std::string> out;
    warn_if_narrow(out, "lambda1", lambda1, grid.size());
    warn_if_narrow(out, "lambda2", lambda2, grid.size());
    return out;
}

RfiProfile2D RfiProfile2D::make(double nu0H, double nu0P, double lambda0, double betaH1,
                                double betaH2, double betaP1, double betaP2,
                                std::size_t grid_points)
{
    require_positive(nu0H, "nu0H");
    require_positive(nu0P, "nu0P");
    require_positive(lambda0, "lambda0");
    require_positive(betaH1, "betaH1");
    require_positive(betaH2, "betaH2");
    require_positive(betaP1, "betaP1");
    require_positive(betaP2, "betaP2");
    RfiProfile2D p;
    p.nu0H = nu0H;
    p.nu0P = nu0P;
    p.lambda0 = lambda0;
    p.betaH1 = betaH1;
    p.betaH2 = betaH2;
    p.betaP1 = betaP1;
    p.betaP2 = betaP2;
    p.gridH = uniform_grid(0.0, 2.0 * nu0H, grid_points);
    p.gridP = uniform_grid(0.0, 2.0 * nu0P, grid_points);
    return p;
}

std::vector<std::string> RfiProfile2D::resolution_warnings() const
{
    // Along each half-axis the 2D density is a 1D Lorentzian of width lambda0 / sqrt(beta).
    std::vector<std::string> out;
    warn_if_narrow(out, "lambda0/sqrt(betaH1)", lambda0 / std::sqrt(betaH1), gridH.size());
    warn_if_narrow(out, "lambda0/sqrt(betaH2)", lambda0 / std::sqrt(betaH2), gridH.size());
    warn_if_narrow(out, "lambda0/sqrt(betaP1)", lambda0 / std::sqrt(betaP1), gridP.size());
    warn_if_narrow(out, "lambda0/sqrt(betaP2)", lambda0 / std::sqrt(betaP2), gridP.size());
    return out;
}

double eval_density_1d(double nu, const RfiProfile1D& profile)
{
    require_frequency(nu, "nu");
    const double width = nu < profile.nu0 ? profile.lambda1 : profile.lambda2;
    return lorentzian(1.0 - nu / profile.nu0, width);
}

double eval_density_2d(double nuH, double nuP, const RfiProfile2D& profile)
{
    require_frequency(nuH, "nuH");
    require_frequency(nuP, "nuP");
    const double betaH = nuH < profile.nu0H ? profile.betaH1 : profile.betaH2;
    const double betaP = nuP < profile.nu0P ? profile.betaP1 : profile.betaP2;
    const double xH = 1.0 - nuH / profile.nu0H;
    const double xP = 1.0 - nuP / profile.nu0P;
    const double d2 = betaH * xH * xH + betaP * xP * xP;
    const double l2 = profile.lambda0 * profile.lambda0;
    return l2 / (d2 + l2);
}

RfiProfile1D normalize(RfiProfile1D profile)
{
    if (profile.grid.size() < 2) {
        throw DomainError("profile grid needs at least 2 points");
    }
    std::vector<double> density(profile.grid.size());
    for (std::size_t i = 0; i < density.size(); ++i) {
        density[i] = eval_density_1d(profile.grid[i], profile);
    }
    profile.weights = normalized_weights(std::move(density));
    return profile;
}

RfiProfile2D normalize(RfiProfile2D profile)
{
    if (profile.gridH.size() < 2 || profile.gridP.size() < 2) {
        throw DomainError("profile grid needs at least 2 points per axis");
    }
    const std::size_t nH = profile.gridH.size();
    const std::size_t nP = profile.gridP.size();
    std::vector<double> density(nH * nP);
    for (std::size_t i = 0; i < nH; ++i) {
        for (std::size_t j = 0; j < nP; ++j) {
            density[i * nP + j] = eval_density_2d(profile.gridH[i], profile.gridP[j], profile);
        }
    }
    profile.weights = normalized_weights(std::move(density));
    return profile;
}

double mean_amplitude(const RfiProfile1D& profile)
{
    if (!profile.normalized()) {
        throw StateError("mean_amplitude requires a normalized profile");
    }
    double mean = 0.0;
    for (std::size_t i = 0; i < profile.grid.size(); ++i) {
        mean += profile.weights[i] * profile.grid[i];
    }
    return mean;
}

} // namespace rfi
