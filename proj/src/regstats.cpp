#include "aiecon/regstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace aiecon::regstats {

namespace {

constexpr double kPerfectFitGap = 1e-12;

struct CenteredSums {
    double mean_x = 0.0;
    double mean_y = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    double sxy = 0.0;
};

// Two passes: means first, then sums of centered products.
CenteredSums centered_sums(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    CenteredSums s;
    for (std::size_t i = 0; i < n; ++i) {
        s.mean_x += x[i];
        s.mean_y += y[i];
    }
    s.mean_x /= static_cast<double>(n);
    s.mean_y /= static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - s.mean_x;
        const double dy = y[i] - s.mean_y;
        s.sxx += dx * dx;
        s.syy += dy * dy;
        s.sxy += dx * dy;
    }
    return s;
}

void check_finite(const std::vector<double>& values, const char* which) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            fail(errc::range, std::string(which) + " value at index " + std::to_string(i) +
                                  " is not finite");
        }
    }
}

bool all_equal(const std::vector<double>& values) {
    return std::all_of(values.begin(), values.end(),
                       [&](double v) { return v == values.front(); });
}

}  // namespace

void validate(const SeriesPair& pair) {
    if (pair.x.size() != pair.y.size()) {
        fail(errc::range, "series lengths differ: " + std::to_string(pair.x.size()) + " vs " +
                              std::to_string(pair.y.size()));
    }
    if (pair.x.size() < 3) {
        fail(errc::range,
             "regression needs at least 3 points, got " + std::to_string(pair.x.size()));
    }
    if (!pair.labels.empty() && pair.labels.size() != pair.x.size()) {
        fail(errc::range, "label count " + std::to_string(pair.labels.size()) +
                              " does not match series length " + std::to_string(pair.x.size()));
    }
    check_finite(pair.x, "x");
    check_finite(pair.y, "y");
}

std::vector<double> log_transform(const std::vector<double>& values) {
    std::vector<double> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) {
            fail(errc::nonpositive_value, "cannot take log of value " +
                                              std::to_string(values[i]) + " at index " +
                                              std::to_string(i));
        }
        out.push_back(std::log(values[i]));
    }
    return out;
}

OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        fail(errc::range, "least squares needs two equal-length series of size >= 2");
    }
    const CenteredSums s = centered_sums(x, y);
    if (s.sxx == 0.0 || all_equal(x)) {
        fail(errc::degenerate_regressor, "regressor has zero variance");
    }
    OlsFit fit;
    fit.slope = s.sxy / s.sxx;
    fit.intercept = s.mean_y - fit.slope * s.mean_x;
    return fit;
}

double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        fail(errc::range, "correlation needs two equal-length series of size >= 2");
    }
    const CenteredSums s = centered_sums(x, y);
    if (s.sxx == 0.0 || s.syy == 0.0 || all_equal(x) || all_equal(y)) {
        fail(errc::degenerate_series, "correlation undefined for a constant series");
    }
    const double r = s.sxy / std::sqrt(s.sxx * s.syy);
    return std::clamp(r, -1.0, 1.0);
}

double r_squared(double r) {
    if (!(std::fabs(r) <= 1.0)) {
        fail(errc::range, "correlation " + std::to_string(r) + " lies outside [-1, 1]");
    }
    return r * r;
}

double t_statistic(double r, std::size_t n) {
    if (n < 3) fail(errc::range, "t statistic needs n >= 3");
    if (!(std::fabs(r) <= 1.0)) {
        fail(errc::range, "correlation " + std::to_string(r) + " lies outside [-1, 1]");
    }
    if (std::fabs(r) == 1.0) {
        fail(errc::infinite_statistic, "t statistic diverges at |r| = 1");
    }
    return r * std::sqrt(static_cast<double>(n - 2)) / std::sqrt(1.0 - r * r);
}

double two_sided_p(double t, double df) {
    const double p = 2.0 * student_t_sf(std::fabs(t), df);
    return std::clamp(p, std::numeric_limits<double>::denorm_min(), 1.0);
}

RegressionResult regress_loglog(const SeriesPair& pair) {
    validate(pair);
    const std::vector<double> lx = log_transform(pair.x);
    const std::vector<double> ly = log_transform(pair.y);

    const OlsFit fit = ols_fit(lx, ly);
    const double r = pearson_r(lx, ly);

    RegressionResult result;
    result.slope_b1 = fit.slope;
    result.intercept_b0 = fit.intercept;
    result.pearson_r = r;
    result.r_squared = r_squared(r);
    result.n = pair.size();
    result.df = static_cast<double>(pair.size() - 2);

    if (1.0 - result.r_squared <= kPerfectFitGap) {
        result.perfect_fit = true;
        result.t_stat = std::numeric_limits<double>::infinity();
        result.p_value = 0.0;
        return result;
    }
    result.t_stat = t_statistic(r, pair.size());
    result.p_value = two_sided_p(result.t_stat, result.df);
    return result;
}

const char* audit_verdict_name(AuditVerdict verdict) noexcept {
    switch (verdict) {
        case AuditVerdict::consistent: return "CONSISTENT";
        case AuditVerdict::inconsistent: return "INCONSISTENT";
        case AuditVerdict::not_compared: return "NOT_COMPARED";
    }
    return "UNKNOWN";
}

AuditReport audit_reported(std::size_t n, double r_squared, double p_reported,
                           double tolerance) {
    if (n < 3) fail(errc::range, "audit needs n >= 3");
    if (!(r_squared >= 0.0) || !(r_squared <= 1.0)) {
        fail(errc::range, "reported R^2 must lie in [0, 1]");
    }
    if (!(p_reported > 0.0) || !(p_reported <= 1.0)) {
        fail(errc::range, "reported p-value must lie in (0, 1]");
    }
    if (!(tolerance > 0.0)) fail(errc::range, "audit tolerance must be positive");

    AuditReport report;
    report.n = n;
    report.df = static_cast<double>(n - 2);
    report.r_squared_reported = r_squared;
    report.p_reported = p_reported;
    report.tolerance = tolerance;

    if (r_squared == 1.0) {
        report.implied_t_abs = std::numeric_limits<double>::infinity();
        report.implied_p = 0.0;
        report.ratio = std::numeric_limits<double>::quiet_NaN();
        report.verdict = AuditVerdict::not_compared;
        return report;
    }

    report.implied_t_abs =
        std::sqrt(r_squared * static_cast<double>(n - 2) / (1.0 - r_squared));
    report.implied_p = two_sided_p(report.implied_t_abs, report.df);
    report.ratio = std::fabs(report.implied_p - p_reported) / p_reported;
    report.verdict =
        report.ratio <= tolerance ? AuditVerdict::consistent : AuditVerdict::inconsistent;
    return report;
}

}  // namespace aiecon::regstats
