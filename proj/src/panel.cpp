#include "aiecon/panel.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <tuple>

namespace aiecon::panel {

namespace {

constexpr std::array<std::string_view, 14> kCanonicalKeys = {
    kInnovationIndex, kRndExpenditure,     kItExports,     kHighTechExports,
    kHighTechExportsPct, kPatentApplications, kGdpPerCapita,  kAiAdoption,
    kAiWorkforce,     kAiProductivity,     kAiMarketDemand, kAiRegulatory,
    kTechnologyLevel, kVectorMagnitude,
};

constexpr std::string_view kHeader = "country,indicator,year,value";

auto obs_key(const IndicatorObservation& o) {
    return std::tie(o.country, o.indicator, o.year);
}

bool obs_less(const IndicatorObservation& a, const IndicatorObservation& b) {
    return obs_key(a) < obs_key(b);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

int parse_year_field(std::string_view field, std::size_t line_no) {
    int year = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), year);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        fail(errc::parse, "csv parse error at line " + std::to_string(line_no) +
                              ": unparseable year '" + std::string(field) + "'");
    }
    if (year < kMinYear || year > kMaxYear) {
        fail(errc::parse, "csv parse error at line " + std::to_string(line_no) + ": year " +
                              std::to_string(year) + " outside [" + std::to_string(kMinYear) +
                              ", " + std::to_string(kMaxYear) + "]");
    }
    return year;
}

double parse_double_field(std::string_view field, std::size_t line_no, const char* what) {
    bool percent = !field.empty() && field.back() == '%';
    std::string_view body = percent ? field.substr(0, field.size() - 1) : field;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(value)) {
        fail(errc::parse, "csv parse error at line " + std::to_string(line_no) +
                              ": unparseable " + what + " '" + std::string(field) + "'");
    }
    return percent ? value / 100.0 : value;
}

// Splits text into lines, tolerating CRLF and a trailing newline.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t pos = text.find('\n', start);
        std::string_view line = (pos == std::string_view::npos) ? text.substr(start)
                                                                : text.substr(start, pos - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return lines;
}

}  // namespace

std::span<const std::string_view> canonical_keys() noexcept { return kCanonicalKeys; }

bool is_canonical_key(std::string_view key) noexcept {
    return std::find(kCanonicalKeys.begin(), kCanonicalKeys.end(), key) != kCanonicalKeys.end();
}

WeightScheme WeightScheme::explicit_weights(std::map<int, double> weights) {
    bool any_positive = false;
    for (const auto& [year, w] : weights) {
        if (!std::isfinite(w) || w < 0.0) {
            fail(errc::range, "weight for year " + std::to_string(year) +
                                  " must be finite and nonnegative");
        }
        if (w > 0.0) any_positive = true;
    }
    if (!any_positive) {
        fail(errc::degenerate_weights, "explicit weight scheme needs at least one positive weight");
    }
    WeightScheme scheme;
    scheme.mode_ = Mode::explicit_per_year;
    scheme.weights_ = std::move(weights);
    return scheme;
}

double WeightScheme::weight_for(int year) const noexcept {
    if (mode_ == Mode::uniform) return 1.0;
    auto it = weights_.find(year);
    return it == weights_.end() ? 0.0 : it->second;
}

double FactorProfile::at(std::string_view key) const {
    auto it = factors.find(std::string(key));
    if (it == factors.end()) {
        fail(errc::missing_indicator,
             "indicator '" + std::string(key) + "' missing from profile for " + country);
    }
    return it->second;
}

IndicatorPanel IndicatorPanel::from_observations(std::vector<IndicatorObservation> observations,
                                                 KeyPolicy policy) {
    for (const auto& o : observations) {
        if (o.country.empty()) fail(errc::parse, "empty country identifier");
        if (o.indicator.empty()) fail(errc::parse, "empty indicator key");
        if (o.year < kMinYear || o.year > kMaxYear) {
            fail(errc::parse, "year " + std::to_string(o.year) + " outside [" +
                                  std::to_string(kMinYear) + ", " + std::to_string(kMaxYear) + "]");
        }
        if (!std::isfinite(o.value)) {
            fail(errc::parse, "non-finite value for (" + o.country + ", " + o.indicator + ", " +
                                  std::to_string(o.year) + ")");
        }
        if (policy == KeyPolicy::strict && !is_canonical_key(o.indicator)) {
            fail(errc::schema, "unknown indicator key '" + o.indicator + "'");
        }
    }
    std::sort(observations.begin(), observations.end(), obs_less);
    auto dup = std::adjacent_find(observations.begin(), observations.end(),
                                  [](const auto& a, const auto& b) { return obs_key(a) == obs_key(b); });
    if (dup != observations.end()) {
        fail(errc::duplicate_key, "duplicate observation (" + dup->country + ", " +
                                      dup->indicator + ", " + std::to_string(dup->year) + ")");
    }
    IndicatorPanel panel;
    panel.observations_ = std::move(observations);
    return panel;
}

std::vector<std::string> IndicatorPanel::countries() const {
    std::vector<std::string> out;
    for (const auto& o : observations_) {
        if (out.empty() || out.back() != o.country) out.push_back(o.country);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> IndicatorPanel::indicators() const {
    std::set<std::string> keys;
    for (const auto& o : observations_) keys.insert(o.indicator);
    return {keys.begin(), keys.end()};
}

std::optional<YearRange> IndicatorPanel::year_range() const {
    if (observations_.empty()) return std::nullopt;
    YearRange range{observations_.front().year, observations_.front().year};
    for (const auto& o : observations_) {
        range.first = std::min(range.first, o.year);
        range.last = std::max(range.last, o.year);
    }
    return range;
}

std::vector<std::pair<int, double>> IndicatorPanel::series(std::string_view country,
                                                           std::string_view indicator,
                                                           const YearRange& years) const {
    auto lo = std::lower_bound(observations_.begin(), observations_.end(),
                               std::tuple(country, indicator, years.first),
                               [](const IndicatorObservation& o, const auto& key) {
                                   return std::tuple(std::string_view(o.country),
                                                     std::string_view(o.indicator), o.year) < key;
                               });
    std::vector<std::pair<int, double>> out;
    for (auto it = lo; it != observations_.end(); ++it) {
        if (it->country != country || it->indicator != indicator || it->year > years.last) break;
        out.emplace_back(it->year, it->value);
    }
    return out;
}

IndicatorPanel parse_panel_csv(std::string_view text, KeyPolicy policy) {
    auto lines = split_lines(text);
    if (lines.empty() || lines[0] != kHeader) {
        fail(errc::parse, "csv parse error at line 1: expected header '" + std::string(kHeader) + "'");
    }
    std::vector<IndicatorObservation> observations;
    std::set<std::tuple<std::string, std::string, int>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        if (line.empty()) continue;
        std::size_t line_no = i + 1;
        auto fields = split_fields(line);
        if (fields.size() != 4) {
            fail(errc::parse, "csv parse error at line " + std::to_string(line_no) + ": expected 4 fields, got " +
                                  std::to_string(fields.size()));
        }
        IndicatorObservation obs;
        obs.country = std::string(fields[0]);
        obs.indicator = std::string(fields[1]);
        if (obs.country.empty()) {
            fail(errc::parse, "csv parse error at line " + std::to_string(line_no) + ": empty country");
        }
        if (obs.indicator.empty()) {
            fail(errc::parse, "csv parse error at line " + std::to_string(line_no) + ": empty indicator");
        }
        if (policy == KeyPolicy::strict && !is_canonical_key(obs.indicator)) {
            fail(errc::schema, "unknown indicator key '" + obs.indicator + "' at line " +
                                   std::to_string(line_no));
        }
        obs.year = parse_year_field(fields[2], line_no);
        obs.value = parse_double_field(fields[3], line_no, "value");
        if (!seen.insert({obs.country, obs.indicator, obs.year}).second) {
            fail(errc::duplicate_key, "duplicate observation (" + obs.country + ", " +
                                          obs.indicator + ", " + std::to_string(obs.year) + ")");
        }
        observations.push_back(std::move(obs));
    }
    return IndicatorPanel::from_observations(std::move(observations), policy);
}

std::string serialize_panel_csv(const IndicatorPanel& panel) {
    std::string out(kHeader);
    out.push_back('\n');
    char buf[64];
    for (const auto& o : panel.observations()) {
        std::snprintf(buf, sizeof buf, "%.17g", o.value);
        out += o.country;
        out.push_back(',');
        out += o.indicator;
        out.push_back(',');
        out += std::to_string(o.year);
        out.push_back(',');
        out += buf;
        out.push_back('\n');
    }
    return out;
}

FactorProfile aggregate(const IndicatorPanel& panel, std::string_view country,
                        const YearRange& years, const WeightScheme& weights,
                        std::span<const std::string_view> required) {
    if (years.first > years.last) {
        fail(errc::range, "empty year interval " + std::to_string(years.first) + ":" +
                              std::to_string(years.last));
    }
    FactorProfile profile;
    profile.country = std::string(country);

    std::set<std::string> wanted;
    for (const auto& o : panel.observations()) {
        if (o.country == country) wanted.insert(o.indicator);
    }
    for (auto key : required) wanted.insert(std::string(key));

    for (const auto& indicator : wanted) {
        auto values = panel.series(country, indicator, years);
        bool is_required = std::find(required.begin(), required.end(), indicator) != required.end();
        if (values.empty()) {
            if (is_required) {
                fail(errc::missing_indicator, "no observations for indicator '" + indicator +
                                                  "' for " + std::string(country) + " in " +
                                                  std::to_string(years.first) + ":" +
                                                  std::to_string(years.last));
            }
            continue;
        }
        double weight_sum = 0.0;
        double weighted_value = 0.0;
        int years_used = 0;
        for (const auto& [year, value] : values) {
            double w = weights.weight_for(year);
            if (w <= 0.0) continue;
            weight_sum += w;
            weighted_value += w * value;
            ++years_used;
        }
        if (weight_sum <= 0.0) {
            fail(errc::degenerate_weights, "all weights zero over the available years of '" +
                                               indicator + "' for " + std::string(country));
        }
        profile.factors[indicator] = weighted_value / weight_sum;
        profile.years_used[indicator] = years_used;
    }
    return profile;
}

WeightScheme parse_weights_csv(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty() || lines[0] != "year,weight") {
        fail(errc::parse, "csv parse error at line 1: expected header 'year,weight'");
    }
    std::map<int, double> weights;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::string_view line = lines[i];
        if (line.empty()) continue;
        std::size_t line_no = i + 1;
        auto fields = split_fields(line);
        if (fields.size() != 2) {
            fail(errc::parse, "csv parse error at line " + std::to_string(line_no) + ": expected 2 fields, got " +
                                  std::to_string(fields.size()));
        }
        int year = parse_year_field(fields[0], line_no);
        double w = parse_double_field(fields[1], line_no, "weight");
        if (!weights.emplace(year, w).second) {
            fail(errc::duplicate_key, "duplicate weight for year " + std::to_string(year));
        }
    }
    return WeightScheme::explicit_weights(std::move(weights));
}

}  // namespace aiecon::panel
