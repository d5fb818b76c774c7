#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "rfi/nelder_mead.hpp"

using namespace rfi;
using Catch::Approx;

TEST_CASE("minimizes a shifted quadratic", "[nelder_mead]")
{
    auto f = [](std::span<const double> x) {
        return (x[0] - 1.0) * (x[0] - 1.0) + 4.0 * (x[1] + 2.0) * (x[1] + 2.0);
    };
    const auto r = nelder_mead(f, {0.0, 0.0});
    CHECK(r.converged);
    CHECK(r.x[0] == Approx(1.0).margin(1e-5));
    CHECK(r.x[1] == Approx(-2.0).margin(1e-5));
    CHECK(r.value < 1e-10);
}

TEST_CASE("minimizes the Rosenbrock function", "[nelder_mead]")
{
    auto f = [](std::span<const double> x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
    };
    NelderMeadOptions o;
    o.tolerance = 1e-9;
    o.max_iterations = 5000;
    const auto r = nelder_mead(f, {-1.2, 1.0}, o);
    CHECK(r.converged);
    CHECK(r.x[0] == Approx(1.0).margin(1e-4));
    CHECK(r.x[1] == Approx(1.0).margin(1e-4));
}

TEST_CASE("best value history never increases", "[nelder_mead]")
{
    auto f = [](std::span<const double> x) {
        return std::abs(x[0]) + std::pow(x[1] - 0.5, 2) + std::cos(3 * x[2]) * 0.1 + x[2] * x[2];
    };
    const auto r = nelder_mead(f, {2.0, -1.0, 1.0});
    REQUIRE(r.best_history.size() == static_cast<std::size_t>(r.iterations));
    for (std::size_t i = 1; i < r.best_history.size(); ++i) {
        CHECK(r.best_history[i] <= r.best_history[i - 1]);
    }
    CHECK(r.value == r.best_history.back());
}

TEST_CASE("iteration cap reports non-convergence", "[nelder_mead]")
{
    auto f = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
    NelderMeadOptions o;
    o.max_iterations = 3;
    const auto r = nelder_mead(f, {5.0, 5.0}, o);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
}

TEST_CASE("NaN regions are avoided", "[nelder_mead]")
{
    auto f = [](std::span<const double> x) {
        return x[0] < 0.0 ? std::numeric_limits<double>::quiet_NaN() : (x[0] - 0.5) * (x[0] - 0.5);
    };
    const auto r = nelder_mead(f, {0.2});
    CHECK(r.x[0] == Approx(0.5).margin(1e-5));
}

TEST_CASE("simplex diameter", "[nelder_mead]")
{
    const std::vector<std::vector<double>> v{{0.0, 0.0}, {3.0, 0.0}, {0.0, 4.0}};
    CHECK(simplex_diameter(v) == 5.0);
}

TEST_CASE("runs are deterministic", "[nelder_mead]")
{
    auto f = [](std::span<const double> x) { return std::sin(x[0]) + x[1] * x[1] + 0.1 * x[0] * x[0]; };
    const auto a = nelder_mead(f, {1.0, 1.0});
    const auto b = nelder_mead(f, {1.0, 1.0});
    CHECK(a.x == b.x);
    CHECK(a.best_history == b.best_history);
}
