#pragma once

#include <stdexcept>
#include <string>

namespace aiecon {

/// Failure categories used across the library. Each maps to one of the
/// documented error conditions of the public operations.
enum class errc {
    parse,                 // malformed CSV row, unparseable number or year
    duplicate_key,         // repeated (country, indicator, year) triple
    schema,                // unknown indicator key in strict mode
    missing_indicator,     // required indicator absent from a profile/panel
    degenerate_weights,    // all weights zero over the available years
    negative_factor,       // geometric mean over a negative factor
    zero_factor,           // zero factor under the reject policy
    empty_after_policy,    // zero policy excluded every factor
    range,                 // argument outside its documented domain
    nonpositive_value,     // log transform of a value <= 0
    degenerate_regressor,  // zero variance in x
    degenerate_series,     // zero variance in x or y
    infinite_statistic,    // t-statistic at |r| = 1
    integrity,             // bundled fixture corrupt or incomplete
    empty_report,          // no countries in the input
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace aiecon
