#pragma once

#include <string>
#include <vector>

#include "aiecon/errors.hpp"
#include "aiecon/special.hpp"

namespace aiecon::regstats {

/// Paired samples for a simple regression. `labels` is either empty or one
/// label per pair (country names, years).
struct SeriesPair {
    std::vector<std::string> labels;
    std::vector<double> x;
    std::vector<double> y;

    std::size_t size() const noexcept { return x.size(); }
};

/// Checks the pair is usable: equal lengths, at least three points, all
/// values finite, labels empty or one per point.
void validate(const SeriesPair& pair);

/// Elementwise natural log; any value <= 0 raises an error naming its index.
std::vector<double> log_transform(const std::vector<double>& values);

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Least-squares line y = intercept + slope * x. The regressor must have
/// nonzero variance.
OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Sample correlation, clamped to [-1, 1] against rounding spill. Both
/// series need nonzero variance.
double pearson_r(const std::vector<double>& x, const std::vector<double>& y);

double r_squared(double r);

/// t = r * sqrt(n - 2) / sqrt(1 - r^2); |r| = 1 has no finite statistic.
double t_statistic(double r, std::size_t n);

/// Two-sided p-value 2 * P(T > |t|), clamped into (0, 1].
double two_sided_p(double t, double df);

struct RegressionResult {
    double slope_b1 = 0.0;
    double intercept_b0 = 0.0;
    double pearson_r = 0.0;
    double r_squared = 0.0;
    double t_stat = 0.0;
    double p_value = 1.0;
    double df = 0.0;
    std::size_t n = 0;
    bool perfect_fit = false;
};

/// Full log-log elasticity regression: both series are log-transformed,
/// fitted by least squares, and the correlation is tested against zero.
/// A numerically perfect fit sets `perfect_fit`, an infinite t statistic
/// and a zero-limit p-value instead of failing.
RegressionResult regress_loglog(const SeriesPair& pair);

enum class AuditVerdict { consistent, inconsistent, not_compared };

/// Cross-check of a reported (n, R^2, p) triple: the t statistic implied by
/// R^2 and n is converted to a two-sided p-value and compared with the
/// reported one under a relative tolerance.
struct AuditReport {
    std::size_t n = 0;
    double df = 0.0;
    double r_squared_reported = 0.0;
    double p_reported = 0.0;
    double implied_t_abs = 0.0;
    double implied_p = 0.0;
    double ratio = 0.0;
    double tolerance = 0.0;
    AuditVerdict verdict = AuditVerdict::inconsistent;
};

const char* audit_verdict_name(AuditVerdict verdict) noexcept;

AuditReport audit_reported(std::size_t n, double r_squared, double p_reported,
                           double tolerance = 0.25);

}  // namespace aiecon::regstats
