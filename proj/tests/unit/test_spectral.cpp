#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rfi/error.hpp"
#include "rfi/spectral.hpp"

using namespace rfi;
using Catch::Approx;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t argmax(const std::vector<double>& v)
{
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::vector<double> random_series(std::mt19937_64& rng, std::size_t n)
{
    std::normal_distribution<double> g;
    std::vector<double> x(n);
    for (double& v : x) v = g(rng);
    return x;
}

TorreySeries1D tone(double f, double decay, double dtau, std::size_t n)
{
    TorreySeries1D s;
    s.tau = make_tau_grid(dtau, n);
    for (double t : s.tau) s.values.push_back(std::sin(kTwoPi * f * t) * std::exp(-t / decay));
    return s;
}

} // namespace

TEST_CASE("all-zero series transforms to all zeros", "[spectral]")
{
    TorreySeries1D s;
    s.tau = make_tau_grid(1e-6, 100);
    s.values.assign(100, 0.0);
    const auto p = transform_1d(s, 256);
    CHECK(p.values.size() == 129);
    CHECK(std::all_of(p.values.begin(), p.values.end(), [](double v) { return v == 0.0; }));

    TorreySeries2D s2;
    s2.tauH = make_tau_grid(1e-6, 8);
    s2.tauP = make_tau_grid(1e-6, 6);
    s2.values.assign(48, 0.0);
    const auto p2 = transform_2d(s2, 16, 8);
    CHECK(p2.values.size() == 9 * 5);
    CHECK(std::all_of(p2.values.begin(), p2.values.end(), [](double v) { return v == 0.0; }));
}

TEST_CASE("frequency axis spacing is 1/(zero_fill dtau)", "[spectral]")
{
    const auto axis = frequency_axis(256, 11.1e-6);
    REQUIRE(axis.size() == 129);
    CHECK(axis[0] == 0.0);
    CHECK(axis[1] == Approx(1.0 / (256 * 11.1e-6)).epsilon(1e-15));
    CHECK(axis.back() == Approx(0.5 / 11.1e-6).epsilon(1e-15));
    CHECK_THROWS_AS(frequency_axis(256, 0.0), DomainError);
}

TEST_CASE("damped tone peaks at the nearest bin", "[spectral]")
{
    constexpr double dtau = 1e-5;
    for (double f : {3210.0, 12345.0, 30000.0}) {
        const auto p = transform_1d(tone(f, 4e-3, dtau, 200), 512);
        const double df = p.freq[1];
        const auto nearest = static_cast<std::size_t>(std::lround(f / df));
        CHECK(argmax(p.values) == nearest);
        CHECK(p.values[argmax(p.values)] > 0.0);
    }
}

TEST_CASE("1D simulation peaks at q nu0", "[spectral]")
{
    constexpr double nu0 = 21000.0;
    constexpr int q = 9;
    const auto profile = normalize(RfiProfile1D::make(nu0, 0.057, 0.012));
    const auto s = simulate_1d(profile, q, make_tau_grid(1.0 / (4.0 * q * nu0), 256));
    const auto p = transform_1d(s, 256);
    const double peak = p.freq[argmax(p.values)];
    CHECK(std::abs(peak - q * nu0) <= p.freq[1]);

    const auto rescaled = rescale_axis(p, q);
    CHECK(std::abs(rescaled.freq[argmax(rescaled.values)] - nu0) <= rescaled.freq[1]);
    CHECK(rescaled.values == p.values);
}

TEST_CASE("transform is linear before clipping", "[spectral][property]")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = random_series(rng, 50);
        const auto y = random_series(rng, 50);
        const double a = coef(rng);
        const double b = coef(rng);
        std::vector<double> z(50);
        for (std::size_t i = 0; i < 50; ++i) z[i] = a * x[i] + b * y[i];
        const auto fx = phased_spectrum(x, 128);
        const auto fy = phased_spectrum(y, 128);
        const auto fz = phased_spectrum(z, 128);
        for (std::size_t m = 0; m < fz.size(); ++m) {
            CHECK(fz[m] == Approx(a * fx[m] + b * fy[m]).margin(1e-10));
        }
    }
}

TEST_CASE("complex DFT satisfies Parseval", "[spectral][property]")
{
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::size_t> len(2, 300);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = len(rng);
        const std::size_t fill = n + len(rng);
        const auto x = random_series(rng, n);
        const auto X = dft(x, fill);
        double time = 0.0;
        double freq = 0.0;
        for (double v : x) time += v * v;
        for (const auto& c : X) freq += std::norm(c);
        CHECK(std::abs(time - freq / static_cast<double>(fill)) / time < 1e-9);
    }
}

TEST_CASE("library DFT matches the naive sum", "[spectral]")
{
    std::mt19937_64 rng(31);
    for (std::size_t fill : {7u, 64u, 100u, 255u}) {
        const auto x = random_series(rng, 7);
        const auto X = dft(x, fill);
        const auto ref = oracle::naive_dft(x, fill);
        for (std::size_t m = 0; m < fill; ++m) {
            CHECK(std::abs(X[m] - ref[m]) < 1e-11);
        }
        const auto phased = phased_spectrum(x, fill);
        const auto sine = oracle::naive_sine_transform(x, fill);
        for (std::size_t m = 0; m < phased.size(); ++m) {
            CHECK(phased[m] == Approx(sine[m]).margin(1e-11));
        }
    }
}

TEST_CASE("doubling the zero-fill refines the grid without changing common bins", "[spectral]")
{
    const auto s = tone(5000.0, 2e-3, 2e-5, 96);
    const auto a = transform_1d(s, 256);
    const auto b = transform_1d(s, 512);
    CHECK(b.freq[1] == a.freq[1] / 2.0);
    for (std::size_t m = 0; m < a.values.size(); ++m) {
        CHECK(b.values[2 * m] == Approx(a.values[m]).margin(1e-9));
    }
    CHECK(*std::max_element(b.values.begin(), b.values.end()) >=
          *std::max_element(a.values.begin(), a.values.end()) - 1e-9);
}

TEST_CASE("zero-fill shorter than the data is rejected", "[spectral]")
{
    const auto s = tone(5000.0, 2e-3, 2e-5, 96);
    CHECK_THROWS_AS(transform_1d(s, 64), DomainError);
    CHECK_THROWS_AS(phased_spectrum(s.values, 95), DomainError);
    CHECK_THROWS_AS(dft(s.values, 10), DomainError);

    TorreySeries2D s2;
    s2.tauH = make_tau_grid(1e-6, 8);
    s2.tauP = make_tau_grid(1e-6, 6);
    s2.values.assign(48, 0.0);
    CHECK_THROWS_AS(transform_2d(s2, 4, 8), DomainError);
    CHECK_THROWS_AS(transform_2d(s2, 8, 4), DomainError);
}

TEST_CASE("2D transform of an outer product is the outer product of 1D transforms", "[spectral][2d]")
{
    std::mt19937_64 rng(37);
    const auto h = random_series(rng, 12);
    const auto p = random_series(rng, 9);
    std::vector<double> values(12 * 9);
    for (std::size_t k = 0; k < 12; ++k) {
        for (std::size_t l = 0; l < 9; ++l) values[k * 9 + l] = h[k] * p[l];
    }
    const auto fh = phased_spectrum(h, 32);
    const auto fp = phased_spectrum(p, 16);
    const auto f = PhasedRealTransform2D(12, 9, 32, 16).execute(values);
    REQUIRE(f.size() == fh.size() * fp.size());
    for (std::size_t m = 0; m < fh.size(); ++m) {
        for (std::size_t n = 0; n < fp.size(); ++n) {
            CHECK(f[m * fp.size() + n] == Approx(fh[m] * fp[n]).margin(1e-11));
        }
    }
}

TEST_CASE("2D simulation peaks near (qH nu0H, qP nu0P)", "[spectral][2d]")
{
    const auto profile = normalize(RfiProfile2D::make(2400.0, 2500.0, 0.0045, 0.114, 0.226, 0.095, 0.028));
    const auto s = simulate_2d(profile, 9, 1, make_tau_grid(11.1e-6, 128), make_tau_grid(50e-6, 96));
    const auto p = transform_2d(s, 256, 256);
    REQUIRE(p.freqH.size() == 129);
    REQUIRE(p.freqP.size() == 129);
    CHECK(p.freqH[1] == Approx(351.9144).epsilon(1e-6));
    CHECK(p.freqP[1] == Approx(78.125).epsilon(1e-12));
    CHECK(std::all_of(p.values.begin(), p.values.end(), [](double v) { return v >= 0.0; }));

    const auto idx = argmax(p.values);
    const double fH = p.freqH[idx / p.freqP.size()];
    const double fP = p.freqP[idx % p.freqP.size()];
    CHECK(std::abs(fH - 9 * 2400.0) <= p.freqH[1]);
    CHECK(std::abs(fP - 2500.0) <= p.freqP[1]);

    const auto rescaled = rescale_axes(p, 9, 1);
    CHECK(std::abs(rescaled.freqH[idx / p.freqP.size()] - 2400.0) <= rescaled.freqH[1]);
}

TEST_CASE("axis rescaling", "[spectral]")
{
    const auto p = transform_1d(tone(5000.0, 2e-3, 2e-5, 96), 256);
    CHECK(rescale_axis(p, 1).freq == p.freq);
    const auto once = rescale_axis(p, 9);
    CHECK(once.rescaled_by == 9);
    CHECK_THROWS_AS(rescale_axis(once, 9), StateError);
    CHECK_THROWS_AS(rescale_axis(p, 0), DomainError);

    SpectralProfile2D p2;
    p2.freqH = {0.0, 90.0};
    p2.freqP = {0.0, 10.0};
    p2.values = {0, 0, 0, 0};
    const auto r2 = rescale_axes(p2, 9, 1);
    CHECK(r2.freqH[1] == 10.0);
    CHECK(r2.freqP[1] == 10.0);
    CHECK_THROWS_AS(rescale_axes(r2, 9, 1), StateError);
    CHECK_THROWS_AS(rescale_axes(p2, 9, 0), DomainError);
}
