#pragma once

// Real Dirichlet-series evaluation with proven truncation bounds, the
// Euler-factor and generating-series identities satisfied by the character
// counts, and the empirical asymptotics of the conductor-ordered count.
// Everything is evaluated at real s inside the convergence region or
// compared exactly at the coefficient level; no analytic continuation.

#include <cstdint>
#include <vector>

#include "toruscount/charcount.hpp"
#include "toruscount/field.hpp"

namespace toruscount::series {

struct SeriesValue {
    double value = 0.0;
    double abs_error_bound = 0.0;  // proven bound, never a heuristic
    i64 terms_used = 0;
};

// Riemann zeta for real s >= 1.05: direct sum with an Euler-Maclaurin
// integral tail (two correction terms; the remainder bound is the first
// omitted term, valid since x^-s is completely monotone).
SeriesValue riemann_zeta(double s);

// L(s, chi_disc) for real s >= 1: direct summation over whole periods with
// the Abel-summation tail bound B*(N+1)^-s, B the maximal character prefix
// sum.  disc must be a fundamental discriminant.
SeriesValue dirichlet_l(i64 disc, double s, double target_accuracy = 1e-8);

// zeta_K(s) = zeta(s) * L(s, chi_disc), bounds propagated.
SeriesValue dedekind_zeta(const FieldContext& fc, double s);

// Independent route: sum of r(n) n^-s with r(n) = sum_{m|n} chi(m),
// s > 1.6; tail bound from r(n) <= tau(n) < 2 sqrt(n).
SeriesValue dedekind_zeta_by_coefficients(const FieldContext& fc, double s, i64 limit);

// Truncated sum of primitive_char_count over ideals of norm <= limit
// (aggregated per norm); tail bound from the prime-power table, which gives
// primitive_char_count_at_norm(n) <= sqrt(n) on squares and 0 elsewhere.
SeriesValue primitive_char_series(const FieldContext& fc, double s, i64 limit);

// Exact comparison of the closed-form local factor at p, expanded as an
// integer power series in p^-2s, against the per-norm aggregates of
// primitive_char_count up to the given depth, plus a numeric spot check
// at s.  depth <= 20.
bool check_euler_factor(const FieldContext& fc, i64 p, double s, int depth);

struct ResidualCheck {
    double residual = 0.0;        // |truncated series - closed form|
    double combined_bound = 0.0;  // truncation tail + closed-form bounds
    bool within_bound() const { return residual <= combined_bound; }
};

// truncated L(s, phi*) against zeta(2s-1)/zeta_K(2s)
ResidualCheck primitive_series_check(const FieldContext& fc, double s, i64 limit);

// truncated sum of conductor_pair_count(n) n^-s against the per-field-class
// closed form derived from the generating-series relations
ResidualCheck pair_count_series_check(const FieldContext& fc, double s, i64 limit);

// zeta(2s) * (truncated sum over primitive ideals of N(a)^-s) against
// zeta_K(s); s > 1.6
ResidualCheck primitive_ideal_series_check(const FieldContext& fc, double s, i64 limit);

// Coefficient of X in the conductor-ordered asymptotic:
// (h/w) * (2 zeta(2) - 1) / (zeta_K(2) |disc|), the middle factor dropped
// for trivial infinity type.
double leading_constant(const FieldContext& fc, bool trivial_infinity);

struct AsymptoticReport {
    i64 cutoff = 0;
    i64 partial_sum = 0;         // sum_{n<=cutoff} conductor_pair_count(n)
    double main_term = 0.0;
    double abs_error = 0.0;
    double fitted_exponent = 0.0;  // OLS slope of log|error| vs log cutoff
};

// Per-cutoff partial sums of the pair count with the residue main term
// (1/w)(2 zeta(2) - 1)/zeta_K(2) * Y.  Grid must hold >= 5 distinct points,
// all <= 10^7.  The fitted exponent is shared by all rows.
std::vector<AsymptoticReport> asymptotic_report(const FieldContext& fc,
                                                std::vector<i64> y_grid);

// Geometric default grid: six points per decade plus the 3*10^k rungs,
// starting at 10^4, capped at y_max (y_max appended when absent).
std::vector<i64> default_asymptotic_grid(i64 y_max);

}  // namespace toruscount::series
