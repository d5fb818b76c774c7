#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "rfi/error.hpp"
#include "rfi/spin.hpp"
#include "rfi/torrey.hpp"

using namespace rfi;
using namespace rfi::spin;
using Catch::Approx;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("initial state is an equal superposition on spin A", "[spin]")
{
    const auto s = prepare_initial(3);
    REQUIRE(s.dimension() == 8);
    CHECK(std::abs(s[0]) == Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(s[4]) == Approx(1.0 / std::sqrt(2.0)));
    CHECK(s.a_bit() == 4);
    CHECK(s.norm() == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("CNOT-all creates the NOON state and is an involution", "[spin]")
{
    for (int n = kMinSpins; n <= 10; ++n) {
        const auto initial = prepare_initial(n);
        const auto noon = cnot_all(initial);
        CHECK(std::abs(noon[0]) == Approx(1.0 / std::sqrt(2.0)));
        CHECK(std::abs(noon[noon.all_ones_index()]) == Approx(1.0 / std::sqrt(2.0)));
        const auto back = cnot_all(noon);
        for (std::size_t i = 0; i < initial.dimension(); ++i) {
            CHECK(back[i] == initial[i]);
        }
    }
}

TEST_CASE("z rotation multiplies by exp(i phi k)", "[spin]")
{
    const auto noon = cnot_all(prepare_initial(4));
    const auto r = z_rotation_on_M(noon, 0.3);
    CHECK(std::arg(r[r.all_ones_index()]) == Approx(0.9).epsilon(1e-14));
    CHECK(std::arg(r[0]) == 0.0);
    CHECK(r.norm() == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("NOON phase is amplified by N - 1", "[spin]")
{
    CHECK(noon_phase_by_simulation(10, 0.1) == Approx(0.9).margin(1e-12));
    CHECK(noon_phase_by_simulation(2, 0.1) == Approx(0.1).margin(1e-12));

    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    for (int n = kMinSpins; n <= 12; ++n) {
        for (int i = 0; i < 32; ++i) {
            const double phi = angle(rng);
            const double got = noon_phase_by_simulation(n, phi);
            CHECK(std::abs(wrap_phase(got - wrap_phase((n - 1) * phi))) < 1e-10);
        }
    }
}

TEST_CASE("Torrey phase sequence matches the state-vector route", "[spin]")
{
    const auto tau = make_tau_grid(37e-6, 20);
    const auto seq = torrey_phase_sequence(5, 2100.0, tau);
    for (std::size_t k = 0; k < tau.size(); ++k) {
        const double sim = noon_phase_by_simulation(5, 2.0 * kPi * 2100.0 * tau[k]);
        CHECK(std::abs(wrap_phase(sim - seq[k])) < 1e-10);
        CHECK(seq[k] > -kPi);
        CHECK(seq[k] <= kPi);
    }
}

TEST_CASE("phase wrapping", "[spin]")
{
    CHECK(wrap_phase(9 * kPi / 4) == Approx(kPi / 4).epsilon(1e-14));
    CHECK(wrap_phase(kPi) == kPi);
    CHECK(wrap_phase(-kPi) == kPi);
    CHECK(wrap_phase(0.9 * kPi) == Approx(0.9 * kPi).epsilon(1e-15));
    CHECK(wrap_phase(-0.5) == -0.5);
}

TEST_CASE("relative phase extraction", "[spin]")
{
    std::vector<std::complex<double>> amps(4);
    amps[0] = std::polar(std::sqrt(0.5), 0.2);
    amps[3] = std::polar(std::sqrt(0.5), 0.2 + 0.9 * kPi);
    const SpinState s(2, amps);
    CHECK(extract_relative_phase(s, 0, 3) == Approx(0.9 * kPi).epsilon(1e-14));
    CHECK_THROWS_AS(extract_relative_phase(s, 0, 1), DomainError);
    CHECK_THROWS_AS(extract_relative_phase(s, 0, 4), DomainError);
}

TEST_CASE("state validation", "[spin]")
{
    CHECK_THROWS_AS(prepare_initial(1), DomainError);
    CHECK_THROWS_AS(prepare_initial(kMaxSpins + 1), DomainError);
    CHECK_THROWS_AS(SpinState(2, std::vector<std::complex<double>>(4, 1.0)), DomainError);
    CHECK_THROWS_AS(SpinState(2, std::vector<std::complex<double>>(3, 0.5)), DomainError);
}

TEST_CASE("gradient ratio", "[spin]")
{
    CHECK(pfg_ratio(2, 1.0) == 2.0);
    CHECK(pfg_ratio(10, 2.5) == 23.5);
    const double h_p = kGammaProton / kGammaPhosphorus31;
    CHECK(h_p == Approx(2.468054).margin(5e-7));
    CHECK(pfg_ratio(10, h_p) == Approx(23.2125).margin(5e-5));
    CHECK_THROWS_AS(pfg_ratio(1, 2.0), DomainError);
    CHECK_THROWS_AS(pfg_ratio(10, 0.0), DomainError);
}
