#include "aiecon/vector_model.hpp"

#include <cmath>

namespace aiecon::vector_model {

namespace {

void check_component(std::string_view name, double value, bool fraction,
                     const std::string& country) {
    if (!std::isfinite(value)) {
        fail(errc::range, "component '" + std::string(name) + "' for " + country +
                              " is not finite");
    }
    if (value < 0.0) {
        fail(errc::range, "component '" + std::string(name) + "' for " + country +
                              " is negative");
    }
    if (fraction && value > 1.0) {
        fail(errc::range, "component '" + std::string(name) + "' for " + country +
                              " exceeds 1 but is a fraction");
    }
}

}  // namespace

AIFactorVector make_vector(std::string country, double tech_development, double ai_adoption,
                           double ai_workforce, double ai_productivity, double ai_market_demand,
                           double ai_regulatory) {
    check_component("tech_development", tech_development, false, country);
    check_component(panel::kAiAdoption, ai_adoption, true, country);
    check_component(panel::kAiWorkforce, ai_workforce, false, country);
    check_component(panel::kAiProductivity, ai_productivity, true, country);
    check_component(panel::kAiMarketDemand, ai_market_demand, true, country);
    check_component(panel::kAiRegulatory, ai_regulatory, true, country);

    AIFactorVector v;
    v.country = std::move(country);
    v.tech_development = tech_development;
    v.ai_adoption = ai_adoption;
    v.ai_workforce = ai_workforce;
    v.ai_productivity = ai_productivity;
    v.ai_market_demand = ai_market_demand;
    v.ai_regulatory = ai_regulatory;
    return v;
}

AIFactorVector build_vector(const composite::TechnologyLevel& level,
                            const panel::FactorProfile& profile) {
    constexpr std::string_view kAiKeys[] = {panel::kAiAdoption, panel::kAiWorkforce,
                                            panel::kAiProductivity, panel::kAiMarketDemand,
                                            panel::kAiRegulatory};
    for (auto key : kAiKeys) {
        if (!profile.has(key)) {
            fail(errc::missing_indicator, "indicator '" + std::string(key) +
                                              "' missing from profile for " + profile.country);
        }
    }
    return make_vector(level.country, level.value, profile.at(panel::kAiAdoption),
                       profile.at(panel::kAiWorkforce), profile.at(panel::kAiProductivity),
                       profile.at(panel::kAiMarketDemand), profile.at(panel::kAiRegulatory));
}

double magnitude(const AIFactorVector& v) noexcept {
    double sum = 0.0;
    for (double c : v.components()) sum += c * c;
    return std::sqrt(sum);
}

VectorMagnitude vector_magnitude(const AIFactorVector& v) { return {v.country, magnitude(v)}; }

}  // namespace aiecon::vector_model
