#pragma once

#include <map>
#include <string>
#include <string_view>

#include "aiecon/errors.hpp"

namespace aiecon::fixture {

/// Reference values a default `reproduce` run checks itself against: the
/// published technology levels and vector magnitudes for eight countries.
struct Golden {
    std::map<std::string, double> table1_tech_level;
    std::map<std::string, double> table2_magnitude;
};

/// Published regression triple audited by `reproduce`.
inline constexpr std::size_t kReportedN = 12;
inline constexpr double kReportedRSquared = 0.773;
inline constexpr double kReportedP = 0.0435;
inline constexpr double kReportedSlopePercent = 23.9;

/// Embedded copies of the bundled reference dataset. The files under data/
/// carry the same bytes; tests cross-check the two.
std::string_view table1_factors_csv() noexcept;
std::string_view table2_vector_csv() noexcept;
std::string_view golden_values_csv() noexcept;

inline constexpr std::string_view kTable1FactorsFile = "table1_factors.csv";
inline constexpr std::string_view kTable2VectorFile = "table2_vector.csv";
inline constexpr std::string_view kGoldenValuesFile = "golden_values.csv";

/// Parses the `table,country,quantity,value` reference CSV. The file must
/// contain exactly one technology-level row and one magnitude row for each
/// of the eight reference countries; anything else is an integrity error.
Golden parse_golden_csv(std::string_view text);

/// Golden values parsed from the embedded CSV.
Golden bundled_golden();

}  // namespace aiecon::fixture
