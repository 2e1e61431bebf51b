#include "aiecon/fixture.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace aiecon::fixture {

namespace {

constexpr std::string_view kTable1Factors =
    "country,indicator,year,value\n"
    "GEO,innovation_index,2016,33.5\n"
    "GEO,rnd_expenditure_pct_gdp,2016,0.3\n"
    "GEO,it_exports_pct_goods,2016,0.5\n"
    "GEO,high_tech_exports_musd,2016,21\n"
    "GEO,high_tech_exports_pct_manufactured,2016,2.8\n"
    "GEO,patent_applications_residents,2016,209\n"
    "ISR,innovation_index,2016,54.4\n"
    "ISR,rnd_expenditure_pct_gdp,2016,4.1\n"
    "ISR,it_exports_pct_goods,2016,11.1\n"
    "ISR,high_tech_exports_musd,2016,11794\n"
    "ISR,high_tech_exports_pct_manufactured,2016,21.0\n"
    "ISR,patent_applications_residents,2016,1263\n"
    "ARM,innovation_index,2016,33.9\n"
    "ARM,rnd_expenditure_pct_gdp,2016,0.2\n"
    "ARM,it_exports_pct_goods,2016,0.6\n"
    "ARM,high_tech_exports_musd,2016,46\n"
    "ARM,high_tech_exports_pct_manufactured,2016,5.7\n"
    "ARM,patent_applications_residents,2016,133\n"
    "AZE,innovation_index,2016,28.8\n"
    "AZE,rnd_expenditure_pct_gdp,2016,0.3\n"
    "AZE,it_exports_pct_goods,2016,0.0\n"
    "AZE,high_tech_exports_musd,2016,25\n"
    "AZE,high_tech_exports_pct_manufactured,2016,4.5\n"
    "AZE,patent_applications_residents,2016,200\n"
    "TUR,innovation_index,2016,37.0\n"
    "TUR,rnd_expenditure_pct_gdp,2016,0.8\n"
    "TUR,it_exports_pct_goods,2016,2.4\n"
    "TUR,high_tech_exports_musd,2016,3504\n"
    "TUR,high_tech_exports_pct_manufactured,2016,2.8\n"
    "TUR,patent_applications_residents,2016,2087\n"
    "USA,innovation_index,2016,60.2\n"
    "USA,rnd_expenditure_pct_gdp,2016,2.7\n"
    "USA,it_exports_pct_goods,2016,11.7\n"
    "USA,high_tech_exports_musd,2016,173106\n"
    "USA,high_tech_exports_pct_manufactured,2016,21.5\n"
    "USA,patent_applications_residents,2016,169515\n"
    "FRA,innovation_index,2016,53.4\n"
    "FRA,rnd_expenditure_pct_gdp,2016,2.2\n"
    "FRA,it_exports_pct_goods,2016,5.2\n"
    "FRA,high_tech_exports_musd,2016,105533\n"
    "FRA,high_tech_exports_pct_manufactured,2016,24.9\n"
    "FRA,patent_applications_residents,2016,13255\n"
    "DEU,innovation_index,2016,57.0\n"
    "DEU,rnd_expenditure_pct_gdp,2016,2.7\n"
    "DEU,it_exports_pct_goods,2016,5.9\n"
    "DEU,high_tech_exports_musd,2016,197273\n"
    "DEU,high_tech_exports_pct_manufactured,2016,16.4\n"
    "DEU,patent_applications_residents,2016,41517\n";

constexpr std::string_view kTable2Vector =
    "country,indicator,year,value\n"
    "GEO,technology_level,2016,6.01\n"
    "GEO,ai_adoption_rate,2016,48.0%\n"
    "GEO,ai_workforce,2016,0.52\n"
    "GEO,ai_productivity,2016,62.6%\n"
    "GEO,ai_market_demand,2016,61.3%\n"
    "GEO,ai_regulatory_environment,2016,48.7%\n"
    "ISR,technology_level,2016,95.65\n"
    "ISR,ai_adoption_rate,2016,55.0%\n"
    "ISR,ai_workforce,2016,1.22\n"
    "ISR,ai_productivity,2016,62.6%\n"
    "ISR,ai_market_demand,2016,61.3%\n"
    "ISR,ai_regulatory_environment,2016,48.7%\n"
    "ARM,technology_level,2016,7.37\n"
    "ARM,ai_adoption_rate,2016,55.0%\n"
    "ARM,ai_workforce,2016,0.39\n"
    "ARM,ai_productivity,2016,62.6%\n"
    "ARM,ai_market_demand,2016,61.3%\n"
    "ARM,ai_regulatory_environment,2016,48.7%\n"
    "AZE,technology_level,2016,4.11\n"
    "AZE,ai_adoption_rate,2016,55.0%\n"
    "AZE,ai_workforce,2016,1.44\n"
    "AZE,ai_productivity,2016,62.6%\n"
    "AZE,ai_market_demand,2016,61.3%\n"
    "AZE,ai_regulatory_environment,2016,48.7%\n"
    "TUR,technology_level,2016,33.40\n"
    "TUR,ai_adoption_rate,2016,55.0%\n"
    "TUR,ai_workforce,2016,9.60\n"
    "TUR,ai_productivity,2016,62.6%\n"
    "TUR,ai_market_demand,2016,61.3%\n"
    "TUR,ai_regulatory_environment,2016,48.7%\n"
    "USA,technology_level,2016,326.85\n"
    "USA,ai_adoption_rate,2016,50.0%\n"
    "USA,ai_workforce,2016,47.38\n"
    "USA,ai_productivity,2016,62.6%\n"
    "USA,ai_market_demand,2016,61.3%\n"
    "USA,ai_regulatory_environment,2016,48.7%\n"
    "FRA,technology_level,2016,165.98\n"
    "FRA,ai_adoption_rate,2016,48.0%\n"
    "FRA,ai_workforce,2016,8.87\n"
    "FRA,ai_productivity,2016,62.6%\n"
    "FRA,ai_market_demand,2016,61.3%\n"
    "FRA,ai_regulatory_environment,2016,48.7%\n"
    "DEU,technology_level,2016,222.15\n"
    "DEU,ai_adoption_rate,2016,48.0%\n"
    "DEU,ai_workforce,2016,12.42\n"
    "DEU,ai_productivity,2016,62.6%\n"
    "DEU,ai_market_demand,2016,61.3%\n"
    "DEU,ai_regulatory_environment,2016,48.7%\n";

constexpr std::string_view kGoldenValues =
    "table,country,quantity,value\n"
    "table1,GEO,technology_level,6.0\n"
    "table1,ISR,technology_level,95.6\n"
    "table1,ARM,technology_level,7.4\n"
    "table1,AZE,technology_level,4.1\n"
    "table1,TUR,technology_level,33.4\n"
    "table1,USA,technology_level,326.8\n"
    "table1,FRA,technology_level,166.0\n"
    "table1,DEU,technology_level,222.2\n"
    "table2,GEO,vector_magnitude,6.13\n"
    "table2,ISR,vector_magnitude,95.66\n"
    "table2,ARM,vector_magnitude,7.47\n"
    "table2,AZE,vector_magnitude,4.50\n"
    "table2,TUR,vector_magnitude,34.77\n"
    "table2,USA,vector_magnitude,330.27\n"
    "table2,FRA,vector_magnitude,166.22\n"
    "table2,DEU,vector_magnitude,222.50\n";

constexpr std::array<std::string_view, 8> kCountries = {"GEO", "ISR", "ARM", "AZE",
                                                        "TUR", "USA", "FRA", "DEU"};

[[noreturn]] void integrity_fail(const std::string& detail) {
    fail(errc::integrity, "reference values corrupt: " + detail);
}

}  // namespace

std::string_view table1_factors_csv() noexcept { return kTable1Factors; }
std::string_view table2_vector_csv() noexcept { return kTable2Vector; }
std::string_view golden_values_csv() noexcept { return kGoldenValues; }

Golden parse_golden_csv(std::string_view text) {
    Golden golden;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool saw_header = false;

    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        if (!saw_header) {
            if (line != "table,country,quantity,value") {
                integrity_fail("unexpected header '" + std::string(line) + "'");
            }
            saw_header = true;
            continue;
        }

        std::array<std::string_view, 4> fields;
        std::size_t start = 0;
        for (int f = 0; f < 4; ++f) {
            std::size_t comma = line.find(',', start);
            if (f < 3 && comma == std::string_view::npos) {
                integrity_fail("line " + std::to_string(line_no) + " has fewer than 4 fields");
            }
            if (f == 3 && comma != std::string_view::npos) {
                integrity_fail("line " + std::to_string(line_no) + " has more than 4 fields");
            }
            fields[f] = f < 3 ? line.substr(start, comma - start) : line.substr(start);
            start = comma + 1;
        }

        double value = 0.0;
        auto [end, ec] =
            std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), value);
        if (ec != std::errc() || end != fields[3].data() + fields[3].size() ||
            !std::isfinite(value) || value <= 0.0) {
            integrity_fail("bad value '" + std::string(fields[3]) + "' at line " +
                           std::to_string(line_no));
        }

        std::map<std::string, double>* target = nullptr;
        if (fields[0] == "table1" && fields[2] == "technology_level") {
            target = &golden.table1_tech_level;
        } else if (fields[0] == "table2" && fields[2] == "vector_magnitude") {
            target = &golden.table2_magnitude;
        } else {
            integrity_fail("unexpected row (" + std::string(fields[0]) + ", " +
                           std::string(fields[2]) + ") at line " + std::to_string(line_no));
        }
        if (!target->emplace(std::string(fields[1]), value).second) {
            integrity_fail("duplicate entry for " + std::string(fields[1]) + " at line " +
                           std::to_string(line_no));
        }
    }

    if (!saw_header) integrity_fail("empty reference file");
    for (auto country : kCountries) {
        if (!golden.table1_tech_level.contains(std::string(country))) {
            integrity_fail("missing technology level for " + std::string(country));
        }
        if (!golden.table2_magnitude.contains(std::string(country))) {
            integrity_fail("missing vector magnitude for " + std::string(country));
        }
    }
    if (golden.table1_tech_level.size() != kCountries.size() ||
        golden.table2_magnitude.size() != kCountries.size()) {
        integrity_fail("unexpected extra countries");
    }
    return golden;
}

Golden bundled_golden() { return parse_golden_csv(kGoldenValues); }

}  // namespace aiecon::fixture
