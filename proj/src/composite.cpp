#include "aiecon/composite.hpp"

#include <algorithm>
#include <cmath>

namespace aiecon::composite {

namespace {

constexpr std::array<std::string_view, 6> kTechnologyKeys = {
    panel::kInnovationIndex,     panel::kRndExpenditure,      panel::kItExports,
    panel::kHighTechExports,     panel::kHighTechExportsPct,  panel::kPatentApplications,
};

}  // namespace

ZeroPolicy ZeroPolicy::with_epsilon(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) {
        fail(errc::range, "epsilon policy requires a positive finite epsilon");
    }
    return {Mode::epsilon, eps};
}

std::span<const std::string_view> technology_factor_keys() noexcept { return kTechnologyKeys; }

GeometricMeanResult geometric_mean_detail(std::span<const double> factors,
                                          const ZeroPolicy& policy) {
    if (factors.empty()) fail(errc::range, "geometric mean of an empty factor list");

    GeometricMeanResult result;
    std::vector<double> logs;
    logs.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
        double f = factors[i];
        if (!std::isfinite(f)) {
            fail(errc::range, "non-finite factor at position " + std::to_string(i));
        }
        if (f < 0.0) {
            fail(errc::negative_factor, "negative factor " + std::to_string(f) + " at position " +
                                            std::to_string(i));
        }
        if (f == 0.0) {
            switch (policy.mode) {
                case ZeroPolicy::Mode::reject:
                    fail(errc::zero_factor, "zero factor at position " + std::to_string(i));
                case ZeroPolicy::Mode::exclude:
                    result.excluded_positions.push_back(i);
                    continue;
                case ZeroPolicy::Mode::epsilon:
                    f = policy.epsilon;
                    break;
            }
        }
        logs.push_back(std::log(f));
    }
    if (logs.empty()) {
        fail(errc::empty_after_policy, "zero policy excluded every factor");
    }
    // Sorted accumulation makes the sum independent of input order.
    std::sort(logs.begin(), logs.end());
    double sum = 0.0;
    for (double v : logs) sum += v;
    result.value = std::exp(sum / static_cast<double>(logs.size()));
    result.n_used = static_cast<int>(logs.size());
    return result;
}

double geometric_mean(std::span<const double> factors, const ZeroPolicy& policy) {
    return geometric_mean_detail(factors, policy).value;
}

TechnologyLevel technology_level(const panel::FactorProfile& profile, const ZeroPolicy& policy,
                                 panel::KeyPolicy keys) {
    std::vector<std::string> order;
    if (keys == panel::KeyPolicy::strict) {
        for (auto key : kTechnologyKeys) {
            if (!profile.has(key)) {
                fail(errc::missing_indicator, "indicator '" + std::string(key) +
                                                  "' missing from profile for " + profile.country);
            }
            order.emplace_back(key);
        }
    } else {
        for (const auto& [key, value] : profile.factors) order.push_back(key);
        if (order.empty()) {
            fail(errc::missing_indicator, "profile for " + profile.country + " has no factors");
        }
    }

    std::vector<double> factors;
    factors.reserve(order.size());
    for (const auto& key : order) factors.push_back(profile.factors.at(key));

    GeometricMeanResult mean;
    try {
        mean = geometric_mean_detail(factors, policy);
    } catch (const Error& e) {
        if (e.code() == errc::zero_factor || e.code() == errc::negative_factor) {
            // Re-key the positional diagnostic to the indicator name.
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if ((e.code() == errc::zero_factor && factors[i] == 0.0) ||
                    (e.code() == errc::negative_factor && factors[i] < 0.0)) {
                    fail(e.code(), std::string(errc_name(e.code())) + ": indicator '" + order[i] +
                                       "' for " + profile.country);
                }
            }
        }
        throw;
    }

    TechnologyLevel level;
    level.country = profile.country;
    level.value = mean.value;
    level.n_factors = mean.n_used;
    for (auto pos : mean.excluded_positions) level.excluded_factors.push_back(order[pos]);
    return level;
}

}  // namespace aiecon::composite
