#include "rfi/json.hpp"

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

double number(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw DomainError(fmt::format("JSON field '{}' is missing or not a number", key));
    }
    return j.at(key).get<double>();
}

std::size_t grid_points(const nlohmann::json& j, std::size_t fallback)
{
    if (!j.contains("grid_points")) {
        return fallback;
    }
    if (!j.at("grid_points").is_number_integer() || j.at("grid_points").get<long long>() < 2) {
        throw DomainError("JSON field 'grid_points' must be an integer >= 2");
    }
    return j.at("grid_points").get<std::size_t>();
}

template <class Params>
nlohmann::json common_fields(const FitResult<Params>& result)
{
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& t : result.trace) {
        trace.push_back({{"start", t.start},
                         {"params", t.params},
                         {"norm", t.norm},
                         {"iterations", t.iterations},
                         {"converged", t.converged}});
    }
    return {{"params", result.params},
            {"residual_norm", result.residual_norm},
            {"iterations", result.iterations},
            {"converged", result.converged},
            {"starts", result.starts},
            {"trace", trace}};
}

} // namespace

void to_json(nlohmann::json& j, const RfiProfile1D& profile)
{
    j = {{"nu0", profile.nu0},
         {"lambda1", profile.lambda1},
         {"lambda2", profile.lambda2},
         {"grid_points", profile.grid_points()}};
}

void from_json(const nlohmann::json& j, RfiProfile1D& profile)
{
    profile = RfiProfile1D::make(number(j, "nu0"), number(j, "lambda1"), number(j, "lambda2"),
                                 grid_points(j, kDefaultGridPoints1D));
}

void to_json(nlohmann::json& j, const RfiProfile2D& profile)
{
    j = {{"nu0H", profile.nu0H},       {"nu0P", profile.nu0P},
         {"lambda0", profile.lambda0}, {"betaH1", profile.betaH1},
         {"betaH2", profile.betaH2},   {"betaP1", profile.betaP1},
         {"betaP2", profile.betaP2},   {"grid_points", profile.grid_points()}};
}

void from_json(const nlohmann::json& j, RfiProfile2D& profile)
{
    profile = RfiProfile2D::make(number(j, "nu0H"), number(j, "nu0P"), number(j, "lambda0"),
                                 number(j, "betaH1"), number(j, "betaH2"), number(j, "betaP1"),
                                 number(j, "betaP2"), grid_points(j, kDefaultGridPoints2D));
}

void to_json(nlohmann::json& j, const Widths1D& w)
{
    j = {{"lambda1", w.lambda1}, {"lambda2", w.lambda2}};
}

void to_json(nlohmann::json& j, const Widths2D& w)
{
    j = {{"lambda0", w.lambda0}, {"betaH1", w.betaH1}, {"betaH2", w.betaH2},
         {"betaP1", w.betaP1},   {"betaP2", w.betaP2}};
}

void from_json(const nlohmann::json& j, Widths1D& w)
{
    w = {number(j, "lambda1"), number(j, "lambda2")};
}

void from_json(const nlohmann::json& j, Widths2D& w)
{
    w = {number(j, "lambda0"), number(j, "betaH1"), number(j, "betaH2"), number(j, "betaP1"),
         number(j, "betaP2")};
}

nlohmann::json fit_result_json(const FitResult1D& result)
{
    return common_fields(result);
}

nlohmann::json fit_result_json(const FitResult2D& result)
{
    nlohmann::json j = common_fields(result);
    const auto e = effective_widths(result.params);
    j["effective_widths"] = {{"H1", e.H1}, {"H2", e.H2}, {"P1", e.P1}, {"P2", e.P2}};
    return j;
}

} // namespace rfi
