#include <cmath>
#include <random>

#include "aiecon/special.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace aiecon;
using regstats::regularized_incomplete_beta;
using regstats::student_t_sf;

namespace {

// Closed-form tails for one and two degrees of freedom.
double sf_df1(double t) { return 0.5 - std::atan(t) / M_PI; }
double sf_df2(double t) { return 0.5 * (1.0 - t / std::sqrt(t * t + 2.0)); }

double t_density(long double x, long double df) {
    const long double c = std::lgamma((df + 1.0L) / 2.0L) - std::lgamma(df / 2.0L) -
                          0.5L * std::log(df * static_cast<long double>(M_PI));
    return static_cast<double>(
        std::exp(c - (df + 1.0L) / 2.0L * std::log1p(x * x / df)));
}

// Simpson quadrature of the density over [0, t], an oracle independent of
// the continued fraction.
double sf_quadrature(double t, double df) {
    const int n = 20000;
    const long double h = static_cast<long double>(t) / n;
    long double sum = t_density(0.0L, df) + t_density(t, df);
    for (int i = 1; i < n; ++i) {
        sum += t_density(i * h, df) * ((i % 2) ? 4.0L : 2.0L);
    }
    return static_cast<double>(0.5L - sum * h / 3.0L);
}

}  // namespace

TEST_CASE("tail probabilities match closed forms for one and two degrees of freedom") {
    CHECK(std::fabs(student_t_sf(1.0, 1.0) - 0.25) <= 1e-12);
    CHECK(std::fabs(student_t_sf(std::sqrt(2.0), 2.0) - (0.5 - std::sqrt(2.0) / 4.0)) <= 1e-12);

    for (double t : {0.1, 0.7, 1.0, 3.0, 10.0, 42.0}) {
        CHECK(std::fabs(student_t_sf(t, 1.0) - sf_df1(t)) <= 1e-12);
        CHECK(std::fabs(student_t_sf(t, 2.0) - sf_df2(t)) <= 1e-12);
    }
}

TEST_CASE("large degrees of freedom approach the normal tail") {
    CHECK(std::fabs(student_t_sf(1.959964, 1e6) - 0.025) <= 1e-5);
}

TEST_CASE("tail probabilities match an independent quadrature oracle") {
    for (double df : {3.0, 5.0, 10.0}) {
        for (double t : {0.3, 1.1, 2.7, 6.0}) {
            CHECK(std::fabs(student_t_sf(t, df) - sf_quadrature(t, df)) <= 1e-10);
        }
    }
}

TEST_CASE("tail probability boundary behavior") {
    CHECK(student_t_sf(0.0, 7.0) == 0.5);
    CHECK(student_t_sf(std::numeric_limits<double>::infinity(), 7.0) == 0.0);
    CHECK(student_t_sf(-std::numeric_limits<double>::infinity(), 7.0) == 1.0);

    for (double t : {0.25, 1.5, 4.0}) {
        const double upper = student_t_sf(t, 9.0);
        const double lower = student_t_sf(-t, 9.0);
        CHECK(lower == 1.0 - upper);
    }
}

TEST_CASE("tail probability is strictly decreasing in t") {
    for (double df : {1.0, 2.0, 5.0, 10.0, 120.0, 1e6}) {
        double previous = student_t_sf(0.0, df);
        for (double t = 0.5; t <= 10.0; t += 0.5) {
            const double current = student_t_sf(t, df);
            CHECK(current < previous);
            previous = current;
        }
    }
}

TEST_CASE("domain violations are rejected") {
    CHECK(thrown_code([] { student_t_sf(1.0, 0.5); }) == errc::range);
    CHECK(thrown_code([] { student_t_sf(1.0, -3.0); }) == errc::range);
    CHECK(thrown_code([] { student_t_sf(std::numeric_limits<double>::quiet_NaN(), 3.0); }) ==
          errc::range);
    CHECK(thrown_code([] { regularized_incomplete_beta(0.0, 1.0, 0.5); }) == errc::range);
    CHECK(thrown_code([] { regularized_incomplete_beta(1.0, -1.0, 0.5); }) == errc::range);
    CHECK(thrown_code([] { regularized_incomplete_beta(1.0, 1.0, -0.1); }) == errc::range);
    CHECK(thrown_code([] { regularized_incomplete_beta(1.0, 1.0, 1.1); }) == errc::range);
}

TEST_CASE("incomplete beta endpoints and identities") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // I_x(1, 1) is the identity.
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-14));

    std::mt19937_64 rng(0x5eed0003);
    std::uniform_real_distribution<double> ab(0.5, 20.0);
    std::uniform_real_distribution<double> xs(1e-6, 1.0 - 1e-6);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = ab(rng);
        const double b = ab(rng);
        const double x = xs(rng);
        const double direct = regularized_incomplete_beta(a, b, x);
        const double mirrored = 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
        CHECK(std::fabs(direct - mirrored) <= 1e-12);
        CHECK(direct >= 0.0);
        CHECK(direct <= 1.0);
    }
}
