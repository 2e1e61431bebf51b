#pragma once

#include <array>
#include <string>
#include <string_view>

#include "aiecon/composite.hpp"
#include "aiecon/panel.hpp"

namespace aiecon::vector_model {

/// One country's six-component AI factor vector. The first component is the
/// composite technology level; the other five describe AI adoption and use.
/// Adoption, productivity, market demand and regulatory environment are
/// fractions in [0, 1]; technology development and workforce are nonnegative
/// and unbounded above.
struct AIFactorVector {
    std::string country;
    double tech_development = 0.0;
    double ai_adoption = 0.0;
    double ai_workforce = 0.0;
    double ai_productivity = 0.0;
    double ai_market_demand = 0.0;
    double ai_regulatory = 0.0;

    std::array<double, 6> components() const noexcept {
        return {tech_development, ai_adoption,      ai_workforce,
                ai_productivity,  ai_market_demand, ai_regulatory};
    }
};

struct VectorMagnitude {
    std::string country;
    double value = 0.0;
};

/// Validating constructor: every component must be finite and nonnegative,
/// and the four fraction components must not exceed 1. Violations raise a
/// range error naming the offending component.
AIFactorVector make_vector(std::string country, double tech_development, double ai_adoption,
                           double ai_workforce, double ai_productivity, double ai_market_demand,
                           double ai_regulatory);

/// Assembles the vector from a composite technology level plus a profile
/// carrying the five AI indicators. A missing indicator raises an error
/// naming it.
AIFactorVector build_vector(const composite::TechnologyLevel& level,
                            const panel::FactorProfile& profile);

/// Euclidean length of the component vector.
double magnitude(const AIFactorVector& v) noexcept;

VectorMagnitude vector_magnitude(const AIFactorVector& v);

}  // namespace aiecon::vector_model
