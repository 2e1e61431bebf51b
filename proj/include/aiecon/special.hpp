#pragma once

namespace aiecon::regstats {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in
/// [0, 1], evaluated with a continued fraction (modified Lentz iteration,
/// tolerance 1e-14, at most 300 terms). The complement branch is used when
/// x >= (a + 1) / (a + b + 2) so the fraction always converges fast.
double regularized_incomplete_beta(double a, double b, double x);

/// Survival function P(T > t) of Student's t distribution with `df` degrees
/// of freedom. Exact reflection handles t < 0; df must be >= 1.
double student_t_sf(double t, double df);

}  // namespace aiecon::regstats
