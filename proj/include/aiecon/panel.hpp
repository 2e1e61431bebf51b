#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aiecon/errors.hpp"

namespace aiecon::panel {

// Canonical indicator keys. Strict ingestion rejects anything else.
inline constexpr std::string_view kInnovationIndex = "innovation_index";
inline constexpr std::string_view kRndExpenditure = "rnd_expenditure_pct_gdp";
inline constexpr std::string_view kItExports = "it_exports_pct_goods";
inline constexpr std::string_view kHighTechExports = "high_tech_exports_musd";
inline constexpr std::string_view kHighTechExportsPct = "high_tech_exports_pct_manufactured";
inline constexpr std::string_view kPatentApplications = "patent_applications_residents";
inline constexpr std::string_view kGdpPerCapita = "gdp_per_capita_usd";
inline constexpr std::string_view kAiAdoption = "ai_adoption_rate";
inline constexpr std::string_view kAiWorkforce = "ai_workforce";
inline constexpr std::string_view kAiProductivity = "ai_productivity";
inline constexpr std::string_view kAiMarketDemand = "ai_market_demand";
inline constexpr std::string_view kAiRegulatory = "ai_regulatory_environment";
inline constexpr std::string_view kTechnologyLevel = "technology_level";
inline constexpr std::string_view kVectorMagnitude = "vector_magnitude";

std::span<const std::string_view> canonical_keys() noexcept;
bool is_canonical_key(std::string_view key) noexcept;

/// Whether unknown indicator keys are rejected (strict) or passed through.
enum class KeyPolicy { strict, lenient };

inline constexpr int kMinYear = 1900;
inline constexpr int kMaxYear = 2100;

struct IndicatorObservation {
    std::string country;
    std::string indicator;
    int year = 0;
    double value = 0.0;

    friend bool operator==(const IndicatorObservation&, const IndicatorObservation&) = default;
};

/// Inclusive calendar-year interval.
struct YearRange {
    int first = kMinYear;
    int last = kMaxYear;

    bool contains(int year) const noexcept { return year >= first && year <= last; }
};

/// Per-year weights for aggregation. Uniform mode weighs every available
/// year equally; explicit mode takes weights from a year -> weight map and
/// treats unlisted years as weight zero.
class WeightScheme {
  public:
    enum class Mode { uniform, explicit_per_year };

    WeightScheme() = default;

    static WeightScheme uniform() { return WeightScheme(); }
    static WeightScheme explicit_weights(std::map<int, double> weights);

    Mode mode() const noexcept { return mode_; }
    bool is_uniform() const noexcept { return mode_ == Mode::uniform; }
    double weight_for(int year) const noexcept;
    const std::map<int, double>& weights() const noexcept { return weights_; }

  private:
    Mode mode_ = Mode::uniform;
    std::map<int, double> weights_;
};

/// One country's aggregated indicator values over a year range.
struct FactorProfile {
    std::string country;
    std::map<std::string, double> factors;
    std::map<std::string, int> years_used;

    bool has(std::string_view key) const { return factors.contains(std::string(key)); }
    double at(std::string_view key) const;
};

/// Immutable long-format observation set. Observations are kept sorted by
/// (country, indicator, year); duplicates are rejected at construction.
class IndicatorPanel {
  public:
    IndicatorPanel() = default;

    static IndicatorPanel from_observations(std::vector<IndicatorObservation> observations,
                                            KeyPolicy policy = KeyPolicy::strict);

    const std::vector<IndicatorObservation>& observations() const noexcept { return observations_; }
    bool empty() const noexcept { return observations_.empty(); }
    std::size_t size() const noexcept { return observations_.size(); }

    std::vector<std::string> countries() const;
    std::vector<std::string> indicators() const;
    std::optional<YearRange> year_range() const;

    /// (year, value) pairs for one country/indicator within `years`, by year.
    std::vector<std::pair<int, double>> series(std::string_view country,
                                               std::string_view indicator,
                                               const YearRange& years) const;

  private:
    std::vector<IndicatorObservation> observations_;
};

/// Parses the long-format CSV `country,indicator,year,value`. Values may
/// carry a trailing `%`, which divides by 100. Errors carry 1-based line
/// numbers.
IndicatorPanel parse_panel_csv(std::string_view text, KeyPolicy policy = KeyPolicy::strict);

/// Inverse of parse_panel_csv up to row order: emits the canonical header and
/// one row per observation, sorted, with round-trip-exact numbers.
std::string serialize_panel_csv(const IndicatorPanel& panel);

/// Weighted aggregation of every indicator available for `country` within
/// `years`. Each factor is sum(w*v)/sum(w) over the years that have a value;
/// missing years shrink the normalizer. Indicators listed in `required` must
/// end up present, otherwise a missing-indicator error names the offender.
FactorProfile aggregate(const IndicatorPanel& panel, std::string_view country,
                        const YearRange& years, const WeightScheme& weights,
                        std::span<const std::string_view> required = {});

/// Parses the `year,weight` CSV used for explicit weight schemes.
WeightScheme parse_weights_csv(std::string_view text);

}  // namespace aiecon::panel
