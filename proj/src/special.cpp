#include "aiecon/special.hpp"

#include <cmath>
#include <string>

#include "aiecon/errors.hpp"

namespace aiecon::regstats {

namespace {

constexpr double kTolerance = 1e-14;
constexpr int kMaxIterations = 300;
constexpr double kTiny = 1e-300;

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta, evaluated with the modified
// Lentz scheme. Converges quickly for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;

    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;

    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kTolerance) return h;
    }
    fail(errc::range, "incomplete beta continued fraction did not converge for a=" +
                          std::to_string(a) + " b=" + std::to_string(b) + " x=" +
                          std::to_string(x));
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
        fail(errc::range, "incomplete beta parameters must be positive and finite");
    }
    if (!(x >= 0.0) || !(x <= 1.0)) {
        fail(errc::range, "incomplete beta argument x must lie in [0, 1]");
    }
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;

    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_sf(double t, double df) {
    if (!(df >= 1.0) || !std::isfinite(df)) {
        fail(errc::range, "degrees of freedom must be a finite value >= 1");
    }
    if (std::isnan(t)) fail(errc::range, "t statistic is NaN");
    if (std::isinf(t)) return t > 0.0 ? 0.0 : 1.0;
    if (t < 0.0) return 1.0 - student_t_sf(-t, df);
    if (t == 0.0) return 0.5;

    const double x = df / (df + t * t);
    return 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
}

}  // namespace aiecon::regstats
