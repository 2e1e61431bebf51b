#include "aiecon/errors.hpp"

namespace aiecon {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::parse: return "parse error";
        case errc::duplicate_key: return "duplicate observation";
        case errc::schema: return "schema violation";
        case errc::missing_indicator: return "missing indicator";
        case errc::degenerate_weights: return "degenerate weights";
        case errc::negative_factor: return "negative factor";
        case errc::zero_factor: return "zero factor";
        case errc::empty_after_policy: return "empty after zero policy";
        case errc::range: return "argument out of range";
        case errc::nonpositive_value: return "nonpositive value";
        case errc::degenerate_regressor: return "degenerate regressor";
        case errc::degenerate_series: return "degenerate series";
        case errc::infinite_statistic: return "infinite statistic";
        case errc::integrity: return "data integrity failure";
        case errc::empty_report: return "empty report";
    }
    return "unknown error";
}

}  // namespace aiecon
