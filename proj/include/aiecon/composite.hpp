#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aiecon/panel.hpp"

namespace aiecon::composite {

/// What to do with a zero factor before a geometric mean. A true zero would
/// annihilate the mean, so the default refuses it; `exclude` drops zeros from
/// the factor set, `epsilon` substitutes a small positive floor.
struct ZeroPolicy {
    enum class Mode { reject, exclude, epsilon };

    Mode mode = Mode::reject;
    double epsilon = 0.0;

    static ZeroPolicy reject() { return {}; }
    static ZeroPolicy exclude() { return {Mode::exclude, 0.0}; }
    static ZeroPolicy with_epsilon(double eps);
};

struct TechnologyLevel {
    std::string country;
    double value = 0.0;
    int n_factors = 0;
    std::vector<std::string> excluded_factors;
};

/// The six technology indicators entering the composite index, in canonical
/// order.
std::span<const std::string_view> technology_factor_keys() noexcept;

struct GeometricMeanResult {
    double value = 0.0;
    int n_used = 0;
    std::vector<std::size_t> excluded_positions;
};

/// Geometric mean of positive factors, computed as exp of the mean of
/// natural logs. Logs are sorted before accumulation, so any permutation of
/// the input produces a bitwise-identical result.
GeometricMeanResult geometric_mean_detail(std::span<const double> factors,
                                          const ZeroPolicy& policy);
double geometric_mean(std::span<const double> factors, const ZeroPolicy& policy);

/// Composite index for one country. Strict keys require all six canonical
/// technology factors; lenient mode takes whatever factors the profile has,
/// in sorted key order.
TechnologyLevel technology_level(const panel::FactorProfile& profile, const ZeroPolicy& policy,
                                 panel::KeyPolicy keys = panel::KeyPolicy::strict);

}  // namespace aiecon::composite
