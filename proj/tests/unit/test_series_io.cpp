#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <random>
#include <sstream>

#include "rfi/error.hpp"
#include "rfi/series_io.hpp"

using namespace rfi;

namespace {

template <class Fn>
std::string error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const IoError& e) {
        return e.what();
    }
    return {};
}

} // namespace

TEST_CASE("1D series round-trips exactly", "[io]")
{
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    TorreySeries1D s;
    s.tau = make_tau_grid(1.0 / 756000.0, 50);
    for (std::size_t i = 0; i < 50; ++i) s.values.push_back(g(rng) * 1e-3);
    std::istringstream in(format_series_csv(s));
    const auto back = parse_series_1d(in);
    CHECK(back.tau == s.tau);
    CHECK(back.values == s.values);
}

TEST_CASE("2D series round-trips exactly", "[io]")
{
    TorreySeries2D s;
    s.tauH = make_tau_grid(11.1e-6, 5);
    s.tauP = make_tau_grid(50e-6, 3);
    for (int i = 0; i < 15; ++i) s.values.push_back(0.1 * i - 0.7);
    std::istringstream in(format_series_csv(s));
    const auto back = parse_series_2d(in);
    CHECK(back.tauH == s.tauH);
    CHECK(back.tauP == s.tauP);
    CHECK(back.values == s.values);
}

TEST_CASE("2D long format is parsed tauH-major", "[io]")
{
    std::istringstream in("tauH_s,tauP_s,s\n"
                          "0,0,0\n0,1e-3,0.5\n"
                          "2e-3,0,0.25\n2e-3,1e-3,-0.5\n");
    const auto s = parse_series_2d(in);
    CHECK(s.tauH == std::vector<double>{0.0, 2e-3});
    CHECK(s.tauP == std::vector<double>{0.0, 1e-3});
    CHECK(s.at(1, 0) == 0.25);
    CHECK(s.at(1, 1) == -0.5);
}

TEST_CASE("blank lines and surrounding whitespace are tolerated", "[io]")
{
    std::istringstream in("tau_s,s\r\n\n 0 , 0 \n1e-6,0.5\n\n2e-6, 0.25\n");
    const auto s = parse_series_1d(in);
    CHECK(s.values == std::vector<double>{0.0, 0.5, 0.25});
}

TEST_CASE("malformed input names the offending line", "[io]")
{
    CHECK_THAT(error_of([] {
                   std::istringstream in("tau_s,s\n0,0\n1e-6,abc\n");
                   parse_series_1d(in);
               }),
               Catch::Matchers::ContainsSubstring("line 3"));
    CHECK_THAT(error_of([] {
                   std::istringstream in("tau_s,s\n0,0\n1e-6\n");
                   parse_series_1d(in);
               }),
               Catch::Matchers::ContainsSubstring("line 3"));
    CHECK_THAT(error_of([] {
                   std::istringstream in("time,value\n0,0\n");
                   parse_series_1d(in);
               }),
               Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THAT(error_of([] {
                   std::istringstream in("tauH_s,tauP_s,s\n0,0,0\n0,1,0\n1,1,0\n1,0,0\n");
                   parse_series_2d(in);
               }),
               Catch::Matchers::ContainsSubstring("line 4"));
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_series_1d(empty), IoError);
}

TEST_CASE("non-uniform tau grid is a domain error", "[io]")
{
    std::istringstream in("tau_s,s\n0,0\n1e-6,0.1\n3e-6,0.2\n");
    CHECK_THROWS_AS(parse_series_1d(in), DomainError);
}

TEST_CASE("atomic write replaces the target", "[io]")
{
    const auto dir = std::filesystem::temp_directory_path() / "rfi_series_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_file(path) == "second\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
    CHECK_THROWS_AS(write_file_atomic(dir / "missing" / "x.csv", "x"), IoError);
    CHECK_THROWS_AS(read_series_1d(dir / "nope.csv"), IoError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("spectrum CSV headers", "[io]")
{
    SpectralProfile1D p;
    p.freq = {0.0, 10.0};
    p.values = {0.0, 1.5};
    CHECK(format_spectrum_csv(p) == "nu_q_hz,S\n0,0\n10,1.5\n");
    SpectralProfile2D p2;
    p2.freqH = {0.0};
    p2.freqP = {0.0, 5.0};
    p2.values = {1.0, 2.0};
    CHECK(format_spectrum_csv(p2) == "nuH_q_hz,nuP_q_hz,S\n0,0,1\n0,5,2\n");
}
