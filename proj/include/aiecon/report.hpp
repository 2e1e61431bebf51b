#pragma once

#include <limits>
#include <string>
#include <vector>

#include "aiecon/composite.hpp"
#include "aiecon/fixture.hpp"
#include "aiecon/panel.hpp"
#include "aiecon/regstats.hpp"
#include "aiecon/vector_model.hpp"

namespace aiecon::report {

enum class Format { table, csv, json };

/// Everything a command run needs: where the data comes from, which years
/// and weights aggregate it, how zeros are treated and how output is shaped.
struct RunConfig {
    std::string input_path;
    panel::YearRange years{2011, 2022};
    composite::ZeroPolicy zero_policy = composite::ZeroPolicy::reject();
    panel::WeightScheme weights = panel::WeightScheme::uniform();
    bool swap_axes = false;
    Format output_format = Format::table;
    panel::KeyPolicy key_policy = panel::KeyPolicy::strict;
    std::string emit_points_path;
};

struct TechLevelReport {
    std::vector<composite::TechnologyLevel> rows;
};

struct VectorRow {
    vector_model::AIFactorVector vec;
    double magnitude = 0.0;
};

struct VectorReport {
    std::vector<VectorRow> rows;
};

struct RegressReport {
    std::string x_indicator;
    std::string y_indicator;
    regstats::RegressionResult result;
    std::vector<std::string> labels;
    std::vector<double> ln_x;
    std::vector<double> ln_y;
};

enum class ToleranceKind { absolute, relative };
enum class Verdict { pass, fail, excluded };

const char* verdict_name(Verdict verdict) noexcept;
const char* tolerance_kind_name(ToleranceKind kind) noexcept;

/// One golden-value comparison. An excluded entry has no computed value and
/// carries the reason it was skipped.
struct ReportEntry {
    std::string table;
    std::string country;
    std::string quantity;
    double reference_value = 0.0;
    double computed_value = std::numeric_limits<double>::quiet_NaN();
    double abs_diff = std::numeric_limits<double>::quiet_NaN();
    double rel_diff = std::numeric_limits<double>::quiet_NaN();
    double tolerance = 0.0;
    ToleranceKind kind = ToleranceKind::relative;
    Verdict verdict = Verdict::fail;
    std::string reason;
};

struct AuditSection {
    regstats::AuditReport report;
    std::vector<std::string> notes;
};

struct ReproductionReport {
    std::vector<ReportEntry> entries;
    AuditSection audit;
    int n_pass = 0;
    int n_fail = 0;
    int n_excluded = 0;
    bool all_pass = false;
};

/// Composite technology level per country of the input panel.
TechLevelReport run_techlevel(const RunConfig& config);

/// Six-component vector and magnitude per country. A directly supplied
/// technology_level indicator takes precedence; otherwise the level is
/// computed from the six technology factors.
VectorReport run_vector(const RunConfig& config);

/// Log-log regression of GDP per capita on vector magnitude, paired by
/// (country, year) over the configured range. --swap-axes exchanges the
/// regressor and the response.
RegressReport run_regress(const RunConfig& config);

/// Recomputes both reference tables from the bundled dataset and compares
/// them with the published values, then audits the reported regression
/// triple. `fixture_dir` overrides the built-in dataset with CSV files from
/// a directory; empty means embedded data.
ReproductionReport run_reproduce(const std::string& fixture_dir);

/// Consistency audit of a reported (n, R^2, p) triple.
AuditSection run_audit(std::size_t n, double r_squared, double p_reported, double tolerance);

std::string render_techlevel(const TechLevelReport& report, Format format);
std::string render_vector(const VectorReport& report, Format format);
std::string render_regress(const RegressReport& report, Format format);
std::string render_reproduction(const ReproductionReport& report, Format format);
std::string render_audit(const AuditSection& audit, Format format);

/// Scatter data for external plotting: one row per observation in log
/// space plus the fitted line's two endpoints.
std::string points_csv(const RegressReport& report);

}  // namespace aiecon::report
