#include <cmath>
#include <random>
#include <vector>

#include "aiecon/regstats.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aiecon;
using regstats::SeriesPair;

namespace {

struct NaiveFit {
    long double slope, intercept, r;
};

// Textbook one-pass sums in extended precision, independent of the library's
// centered two-pass computation.
NaiveFit naive_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const long double n = static_cast<long double>(x.size());
    long double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double xi = x[i], yi = y[i];
        sx += xi;
        sy += yi;
        sxx += xi * xi;
        syy += yi * yi;
        sxy += xi * yi;
    }
    NaiveFit fit{};
    const long double den = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;
    fit.r = (n * sxy - sx * sy) / std::sqrt(den * (n * syy - sy * sy));
    return fit;
}

long double ssr(const std::vector<double>& x, const std::vector<double>& y, long double b0,
                long double b1) {
    long double sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const long double e = static_cast<long double>(y[i]) - b0 - b1 * x[i];
        sum += e * e;
    }
    return sum;
}

bool close_rel(double a, long double b, double tol) {
    const long double scale = std::max<long double>(std::fabs(b), 1e-300);
    return std::fabs(a - b) / scale <= tol;
}

}  // namespace

TEST_CASE("least squares and correlation match hand-computed values") {
    const std::vector<double> x = {1, 2, 3};
    const std::vector<double> y = {1, 2, 2};

    const auto fit = regstats::ols_fit(x, y);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(fit.intercept == doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    const double r = regstats::pearson_r(x, y);
    CHECK(r == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(regstats::r_squared(r) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("the t statistic follows the correlation formula") {
    CHECK(regstats::t_statistic(0.5, 6) == doctest::Approx(1.1547005383792515).epsilon(1e-15));
    CHECK(regstats::t_statistic(0.0, 10) == 0.0);
    CHECK(regstats::t_statistic(-0.5, 6) ==
          doctest::Approx(-1.1547005383792515).epsilon(1e-15));
    CHECK(thrown_code([] { regstats::t_statistic(1.0, 10); }) == errc::infinite_statistic);
    CHECK(thrown_code([] { regstats::t_statistic(-1.0, 10); }) == errc::infinite_statistic);
    CHECK(thrown_code([] { regstats::t_statistic(0.5, 2); }) == errc::range);
    CHECK(thrown_code([] { regstats::r_squared(1.2); }) == errc::range);
}

TEST_CASE("two-sided p-values are symmetric and land in (0, 1]") {
    CHECK(regstats::two_sided_p(0.0, 5.0) == 1.0);
    CHECK(regstats::two_sided_p(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(regstats::two_sided_p(std::sqrt(2.0), 2.0) ==
          doctest::Approx(2.0 * (0.5 - std::sqrt(2.0) / 4.0)).epsilon(1e-12));
    for (double t : {0.3, 2.0, 7.5}) {
        CHECK(regstats::two_sided_p(t, 8.0) == regstats::two_sided_p(-t, 8.0));
    }
    CHECK(regstats::two_sided_p(100.0, 50.0) > 0.0);
}

TEST_CASE("log transform is exact and rejects nonpositive values") {
    const auto logs = regstats::log_transform({1.0, 0.5, std::exp(1.0)});
    CHECK(logs[0] == 0.0);
    CHECK(logs[1] == -0.6931471805599453);
    CHECK(logs[2] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(thrown_code([] { regstats::log_transform({1.0, 0.0}); }) == errc::nonpositive_value);
    CHECK(thrown_code([] { regstats::log_transform({-2.0}); }) == errc::nonpositive_value);
    CHECK(contains(thrown_message([] { regstats::log_transform({1.0, -2.0}); }), "index 1"));
}

TEST_CASE("series validation catches shape problems") {
    SeriesPair pair;
    pair.x = {1, 2, 3};
    pair.y = {1, 2};
    CHECK(thrown_code([&] { regstats::validate(pair); }) == errc::range);

    pair.y = {1, 2, 3};
    CHECK_NOTHROW(regstats::validate(pair));

    pair.labels = {"a"};
    CHECK(thrown_code([&] { regstats::validate(pair); }) == errc::range);
    pair.labels = {"a", "b", "c"};
    CHECK_NOTHROW(regstats::validate(pair));

    pair.x = {1, 2};
    pair.y = {1, 2};
    pair.labels.clear();
    CHECK(thrown_code([&] { regstats::validate(pair); }) == errc::range);

    pair.x = {1, 2, std::numeric_limits<double>::quiet_NaN()};
    pair.y = {1, 2, 3};
    CHECK(thrown_code([&] { regstats::validate(pair); }) == errc::range);
}

TEST_CASE("degenerate series are refused") {
    const std::vector<double> constant = {2, 2, 2};
    const std::vector<double> varying = {1, 2, 3};
    CHECK(thrown_code([&] { regstats::ols_fit(constant, varying); }) ==
          errc::degenerate_regressor);
    CHECK(thrown_code([&] { regstats::pearson_r(constant, varying); }) ==
          errc::degenerate_series);
    CHECK(thrown_code([&] { regstats::pearson_r(varying, constant); }) ==
          errc::degenerate_series);
}

TEST_CASE("log-log regression recovers an exact power law") {
    SeriesPair pair;
    for (int i = 1; i <= 12; ++i) {
        pair.x.push_back(i);
        pair.y.push_back(3.0 * std::pow(i, 2.5));
    }
    const auto result = regstats::regress_loglog(pair);
    CHECK(result.slope_b1 == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(result.intercept_b0 == doctest::Approx(std::log(3.0)).epsilon(1e-12));
    CHECK(result.n == 12);
    CHECK(result.df == 10.0);
    CHECK(result.perfect_fit);
    CHECK(std::isinf(result.t_stat));
    CHECK(result.p_value == 0.0);
    CHECK(result.r_squared == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("noisy power laws yield finite statistics") {
    SeriesPair pair;
    std::mt19937_64 rng(0x5eed0004);
    std::uniform_real_distribution<double> noise(-0.3, 0.3);
    for (int i = 1; i <= 12; ++i) {
        pair.x.push_back(i);
        pair.y.push_back(3.0 * std::pow(i, 2.5) * std::exp(noise(rng)));
    }
    const auto result = regstats::regress_loglog(pair);
    CHECK_FALSE(result.perfect_fit);
    CHECK(std::isfinite(result.t_stat));
    CHECK(result.p_value > 0.0);
    CHECK(result.p_value <= 1.0);
    CHECK(result.r_squared == doctest::Approx(result.pearson_r * result.pearson_r));

    pair.y[3] = 0.0;
    CHECK(thrown_code([&] { regstats::regress_loglog(pair); }) == errc::nonpositive_value);
}

TEST_CASE("estimates agree with a naive extended-precision oracle") {
    std::mt19937_64 rng(0x5eed0005);
    std::uniform_int_distribution<int> n_dist(3, 400);
    std::uniform_real_distribution<double> x_dist(-50.0, 50.0);
    std::uniform_real_distribution<double> a_dist(0.1, 10.0);
    std::uniform_real_distribution<double> logb_dist(std::log(1e-3), std::log(1e3));
    std::uniform_real_distribution<double> sign(-1.0, 1.0);
    std::normal_distribution<double> noise(0.0, 1.0);

    for (int trial = 0; trial < 200; ++trial) {
        const int n = n_dist(rng);
        const double a = a_dist(rng) * (sign(rng) < 0 ? -1.0 : 1.0);
        const double b = std::exp(logb_dist(rng)) * (sign(rng) < 0 ? -1.0 : 1.0);
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = x_dist(rng);
            y[i] = a + b * x[i] + noise(rng);
        }

        const auto fit = regstats::ols_fit(x, y);
        const double r = regstats::pearson_r(x, y);
        const auto oracle = naive_fit(x, y);

        CHECK(close_rel(fit.slope, oracle.slope, 1e-10));
        CHECK(close_rel(fit.intercept, oracle.intercept, 1e-10));
        CHECK(close_rel(r, oracle.r, 1e-10));
        CHECK(std::fabs(regstats::r_squared(r) - r * r) <= 1e-14);

        // The fitted coefficients minimize the residual sum of squares.
        const long double base = ssr(x, y, fit.intercept, fit.slope);
        for (double delta : {1e-4, -1e-4}) {
            CHECK(ssr(x, y, fit.intercept * (1.0 + delta), fit.slope) > base);
            CHECK(ssr(x, y, fit.intercept, fit.slope * (1.0 + delta)) > base);
        }
    }
}

TEST_CASE("the audit reproduces a consistent triple and flags an inconsistent one") {
    const auto bad = regstats::audit_reported(12, 0.773, 0.0435);
    CHECK(bad.verdict == regstats::AuditVerdict::inconsistent);
    CHECK(bad.df == 10.0);
    CHECK(bad.implied_t_abs == doctest::Approx(5.835483136478363).epsilon(1e-12));
    CHECK(bad.implied_p == doctest::Approx(0.0001648194741547251).epsilon(1e-9));
    CHECK(bad.implied_p < 0.0435);
    CHECK(bad.ratio > 0.25);

    const auto good = regstats::audit_reported(12, 0.342, 0.0435);
    CHECK(good.verdict == regstats::AuditVerdict::consistent);
    CHECK(good.implied_p == doctest::Approx(0.04579991286076278).epsilon(1e-9));
    CHECK(good.ratio <= 0.25);

    const auto null_case = regstats::audit_reported(3, 0.0, 1.0);
    CHECK(null_case.verdict == regstats::AuditVerdict::consistent);
    CHECK(null_case.implied_t_abs == 0.0);
    CHECK(null_case.implied_p == 1.0);
}

TEST_CASE("a perfect reported fit is not comparable") {
    const auto report = regstats::audit_reported(12, 1.0, 0.01);
    CHECK(report.verdict == regstats::AuditVerdict::not_compared);
    CHECK(std::isinf(report.implied_t_abs));
    CHECK(report.implied_p == 0.0);
    CHECK(std::isnan(report.ratio));
}

TEST_CASE("audit domain violations are rejected") {
    CHECK(thrown_code([] { regstats::audit_reported(2, 0.5, 0.05); }) == errc::range);
    CHECK(thrown_code([] { regstats::audit_reported(12, -0.1, 0.05); }) == errc::range);
    CHECK(thrown_code([] { regstats::audit_reported(12, 1.5, 0.05); }) == errc::range);
    CHECK(thrown_code([] { regstats::audit_reported(12, 0.5, 0.0); }) == errc::range);
    CHECK(thrown_code([] { regstats::audit_reported(12, 0.5, 1.5); }) == errc::range);
    CHECK(thrown_code([] { regstats::audit_reported(12, 0.5, 0.05, 0.0); }) == errc::range);
}

TEST_CASE("audit verdicts render as stable uppercase strings") {
    CHECK(std::string(regstats::audit_verdict_name(regstats::AuditVerdict::consistent)) ==
          "CONSISTENT");
    CHECK(std::string(regstats::audit_verdict_name(regstats::AuditVerdict::inconsistent)) ==
          "INCONSISTENT");
    CHECK(std::string(regstats::audit_verdict_name(regstats::AuditVerdict::not_compared)) ==
          "NOT_COMPARED");
}
