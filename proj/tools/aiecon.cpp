#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "aiecon/report.hpp"

namespace {

using aiecon::report::Format;
using aiecon::report::RunConfig;

struct RawOptions {
    std::string input;
    std::string years = "2011:2022";
    std::string zero_policy = "reject";
    std::string weights_path;
    std::string format = "table";
    std::string emit_points;
    bool swap_axes = false;
};

int parse_int_field(std::string_view text, const char* flag) {
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        throw CLI::ValidationError(flag, "expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

aiecon::panel::YearRange parse_years(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("--years", "expected <start>:<end>, got '" + text + "'");
    }
    aiecon::panel::YearRange years;
    years.first = parse_int_field(std::string_view(text).substr(0, colon), "--years");
    years.last = parse_int_field(std::string_view(text).substr(colon + 1), "--years");
    if (years.first > years.last) {
        throw CLI::ValidationError("--years", "start year exceeds end year in '" + text + "'");
    }
    return years;
}

aiecon::composite::ZeroPolicy parse_zero_policy(const std::string& text) {
    if (text == "reject") return aiecon::composite::ZeroPolicy::reject();
    if (text == "exclude") return aiecon::composite::ZeroPolicy::exclude();
    if (text.rfind("epsilon=", 0) == 0) {
        const std::string_view value = std::string_view(text).substr(8);
        double eps = 0.0;
        auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), eps);
        if (ec != std::errc() || end != value.data() + value.size() || !std::isfinite(eps) ||
            eps <= 0.0) {
            throw CLI::ValidationError("--zero-policy",
                                       "epsilon needs a positive number, got '" + text + "'");
        }
        return aiecon::composite::ZeroPolicy::with_epsilon(eps);
    }
    throw CLI::ValidationError("--zero-policy",
                               "expected reject, exclude or epsilon=<v>, got '" + text + "'");
}

Format parse_format(const std::string& text) {
    if (text == "table") return Format::table;
    if (text == "csv") return Format::csv;
    return Format::json;
}

std::string read_file_or_fail(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        aiecon::fail(aiecon::errc::parse, std::string("cannot open ") + what + " '" + path + "'");
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

RunConfig build_config(const RawOptions& raw) {
    RunConfig config;
    config.input_path = raw.input;
    config.years = parse_years(raw.years);
    config.zero_policy = parse_zero_policy(raw.zero_policy);
    config.output_format = parse_format(raw.format);
    config.swap_axes = raw.swap_axes;
    config.emit_points_path = raw.emit_points;
    if (!raw.weights_path.empty()) {
        config.weights =
            aiecon::panel::parse_weights_csv(read_file_or_fail(raw.weights_path, "weights file"));
    }
    return config;
}

void add_common_flags(CLI::App* sub, RawOptions& raw, bool input_required) {
    auto* input = sub->add_option("--input", raw.input, "input panel CSV");
    if (input_required) input->required();
    sub->add_option("--years", raw.years, "inclusive year range <start>:<end>")
        ->capture_default_str();
    sub->add_option("--zero-policy", raw.zero_policy, "reject|exclude|epsilon=<v>")
        ->capture_default_str();
    sub->add_option("--weights", raw.weights_path, "per-year weights CSV (year,weight)");
    sub->add_option("--format", raw.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
}

void write_file_or_fail(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content)) {
        aiecon::fail(aiecon::errc::parse, "cannot write file '" + path + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"AI economy measurement pipeline"};
    app.require_subcommand(1);

    RawOptions raw;
    auto* techlevel =
        app.add_subcommand("techlevel", "composite technology level per country");
    add_common_flags(techlevel, raw, true);

    auto* vector = app.add_subcommand("vector", "AI factor vector and magnitude per country");
    add_common_flags(vector, raw, true);

    auto* regress =
        app.add_subcommand("regress", "log-log regression of GDP per capita on magnitude");
    add_common_flags(regress, raw, true);
    regress->add_flag("--swap-axes", raw.swap_axes, "swap regressor and response");
    regress->add_option("--emit-points", raw.emit_points,
                        "write log-space scatter and fit line to this CSV");

    std::string fixture_dir;
    std::string reproduce_format = "table";
    auto* reproduce =
        app.add_subcommand("reproduce", "recompute the bundled reference tables and audit");
    reproduce->add_option("--input", fixture_dir,
                          "directory with reference CSVs (default: built-in data)");
    reproduce->add_option("--format", reproduce_format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();

    std::size_t audit_n = 0;
    double audit_r2 = 0.0, audit_p = 0.0, audit_tolerance = 0.25;
    std::string audit_format = "table";
    auto* audit = app.add_subcommand("audit", "consistency check of a reported (n, R^2, p)");
    audit->add_option("--n", audit_n, "sample size")->required();
    audit->add_option("--r2", audit_r2, "reported coefficient of determination")->required();
    audit->add_option("--p", audit_p, "reported two-sided p-value")->required();
    audit->add_option("--tolerance", audit_tolerance, "relative tolerance on the p comparison")
        ->capture_default_str();
    audit->add_option("--format", audit_format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);

        if (techlevel->parsed()) {
            const RunConfig config = build_config(raw);
            std::cout << aiecon::report::render_techlevel(aiecon::report::run_techlevel(config),
                                                          config.output_format);
            return 0;
        }
        if (vector->parsed()) {
            const RunConfig config = build_config(raw);
            std::cout << aiecon::report::render_vector(aiecon::report::run_vector(config),
                                                       config.output_format);
            return 0;
        }
        if (regress->parsed()) {
            const RunConfig config = build_config(raw);
            const auto report = aiecon::report::run_regress(config);
            if (!config.emit_points_path.empty()) {
                write_file_or_fail(config.emit_points_path, aiecon::report::points_csv(report));
            }
            std::cout << aiecon::report::render_regress(report, config.output_format);
            return 0;
        }
        if (reproduce->parsed()) {
            const auto report = aiecon::report::run_reproduce(fixture_dir);
            std::cout << aiecon::report::render_reproduction(report,
                                                             parse_format(reproduce_format));
            return report.all_pass ? 0 : 3;
        }
        if (audit->parsed()) {
            const auto section =
                aiecon::report::run_audit(audit_n, audit_r2, audit_p, audit_tolerance);
            std::cout << aiecon::report::render_audit(section, parse_format(audit_format));
            return 0;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const aiecon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
