#include "toruscount/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace toruscount::series {

namespace {

using i128 = __int128_t;

i64 isqrt(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// interval-style propagation helpers
SeriesValue sv_exact(double v) { return {v, std::abs(v) * 1e-16, 1}; }

SeriesValue sv_add(const SeriesValue& a, const SeriesValue& b) {
    return {a.value + b.value, a.abs_error_bound + b.abs_error_bound + 1e-16,
            std::max(a.terms_used, b.terms_used)};
}

SeriesValue sv_sub(const SeriesValue& a, const SeriesValue& b) {
    return {a.value - b.value, a.abs_error_bound + b.abs_error_bound + 1e-16,
            std::max(a.terms_used, b.terms_used)};
}

SeriesValue sv_scale(double k, const SeriesValue& a) {
    return {k * a.value, std::abs(k) * a.abs_error_bound + 1e-16, a.terms_used};
}

SeriesValue sv_mul(const SeriesValue& a, const SeriesValue& b) {
    double bound = std::abs(a.value) * b.abs_error_bound +
                   std::abs(b.value) * a.abs_error_bound +
                   a.abs_error_bound * b.abs_error_bound + 1e-16;
    return {a.value * b.value, bound, std::max(a.terms_used, b.terms_used)};
}

SeriesValue sv_div(const SeriesValue& a, const SeriesValue& b) {
    double denom = std::abs(b.value) - b.abs_error_bound;
    if (denom <= 0.0) throw std::domain_error("series: division by interval containing zero");
    double bound = (a.abs_error_bound + std::abs(a.value / b.value) * b.abs_error_bound) / denom +
                   1e-16;
    return {a.value / b.value, bound, std::max(a.terms_used, b.terms_used)};
}

}  // namespace

SeriesValue riemann_zeta(double s) {
    if (!(s >= 1.05)) throw std::domain_error("riemann_zeta: s too close to 1 (need s >= 1.05)");
    const i64 N = 400;
    double partial = 0.0, comp = 0.0;
    for (i64 n = 1; n <= N; ++n) {
        double term = std::pow(static_cast<double>(n), -s) - comp;
        double t = partial + term;
        comp = (t - partial) - term;
        partial = t;
    }
    double Nd = static_cast<double>(N);
    double tail = std::pow(Nd, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(Nd, -s) +
                  s / 12.0 * std::pow(Nd, -s - 1.0);
    double remainder = s * (s + 1.0) * (s + 2.0) / 720.0 * std::pow(Nd, -s - 3.0);
    return {partial + tail, remainder + 5e-14, N};
}

SeriesValue dirichlet_l(i64 disc, double s, double target_accuracy) {
    if (!is_fundamental_discriminant(disc))
        throw std::invalid_argument("dirichlet_l: disc must be a fundamental discriminant");
    if (!(s >= 1.0)) throw std::domain_error("dirichlet_l: s >= 1 required");
    if (!(target_accuracy > 0)) throw std::invalid_argument("dirichlet_l: bad accuracy target");

    i64 q = std::llabs(disc);
    std::vector<int> chi(q);
    for (i64 r = 0; r < q; ++r) chi[r] = kronecker(disc, r == 0 ? q : r);

    i64 period_sum = 0, prefix = 0, B = 0;
    for (i64 r = 1; r <= q; ++r) {
        prefix += chi[r % q];
        B = std::max<i64>(B, std::llabs(prefix));
        period_sum = prefix;
    }
    if (period_sum != 0) throw std::logic_error("dirichlet_l: character period sum nonzero");

    // Abel summation tail bound B*(N+1)^-s once N is a whole number of periods
    i64 N = static_cast<i64>(std::ceil(std::pow(static_cast<double>(B) / target_accuracy, 1.0 / s)));
    N = ((N + q - 1) / q) * q;
    if (N > 2000000000LL)
        throw std::invalid_argument("dirichlet_l: accuracy target needs too many terms");

    long double acc = 0.0L, comp = 0.0L;
    if (s == 1.0) {
        for (i64 n = 1; n <= N; ++n) {
            int c = chi[n % q];
            if (c == 0) continue;
            long double term = static_cast<long double>(c) / n - comp;
            long double t = acc + term;
            comp = (t - acc) - term;
            acc = t;
        }
    } else {
        for (i64 n = 1; n <= N; ++n) {
            int c = chi[n % q];
            if (c == 0) continue;
            long double term = c * std::pow(static_cast<long double>(n), -static_cast<long double>(s)) - comp;
            long double t = acc + term;
            comp = (t - acc) - term;
            acc = t;
        }
    }
    double bound = static_cast<double>(B) * std::pow(static_cast<double>(N + 1), -s) + 1e-14;
    return {static_cast<double>(acc), bound, N};
}

SeriesValue dedekind_zeta(const FieldContext& fc, double s) {
    return sv_mul(riemann_zeta(s), dirichlet_l(fc.disc(), s, 1e-10));
}

SeriesValue dedekind_zeta_by_coefficients(const FieldContext& fc, double s, i64 limit) {
    if (!(s > 1.6)) throw std::domain_error("dedekind_zeta_by_coefficients: s > 1.6 required");
    if (limit < 1) throw std::invalid_argument("dedekind_zeta_by_coefficients: limit >= 1");
    long double acc = 0.0L;
    for (i64 m = 1; m <= limit; ++m) {
        int c = fc.chi(m);
        if (c == 0) continue;
        i64 kmax = limit / m;
        if (s == 2.0) {
            for (i64 k = 1; k <= kmax; ++k) {
                long double mk = static_cast<long double>(m) * k;
                acc += c / (mk * mk);
            }
        } else {
            for (i64 k = 1; k <= kmax; ++k)
                acc += c * std::pow(static_cast<long double>(m) * k, -static_cast<long double>(s));
        }
    }
    // r(n) <= tau(n) < 2 sqrt(n)
    double tail = 2.0 * std::pow(static_cast<double>(limit), 1.5 - s) / (s - 1.5);
    return {static_cast<double>(acc), tail + 1e-10, limit};
}

SeriesValue primitive_char_series(const FieldContext& fc, double s, i64 limit) {
    if (!(s >= 1.05)) throw std::domain_error("primitive_char_series: s >= 1.05 required");
    if (limit < 1) throw std::invalid_argument("primitive_char_series: limit >= 1");
    i64 M = isqrt(limit);
    double acc = 0.0, comp = 0.0;
    for (i64 m = 1; m <= M; ++m) {
        i64 v = primitive_char_count_at_norm(fc, m * m);
        if (v == 0) continue;
        double term = v * std::pow(static_cast<double>(m), -2.0 * s) - comp;
        double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    // the prime-power table gives phi*(m^2) <= m, so the tail is at most
    // sum_{m>M} m^(1-2s) <= M^(2-2s)/(2s-2)
    double tail = std::pow(static_cast<double>(M), 2.0 - 2.0 * s) / (2.0 * s - 2.0);
    return {acc, tail + 1e-12, limit};
}

bool check_euler_factor(const FieldContext& fc, i64 p, double s, int depth) {
    if (depth < 0 || depth > 20) throw std::invalid_argument("check_euler_factor: depth in [0,20]");
    if (p < 2) throw std::invalid_argument("check_euler_factor: p must be prime");
    PrimeSplitting st = splitting_type(fc, p);

    // closed-form local factor as numerator(x) / (1 - p x), x = p^-2s
    std::vector<i64> num;
    switch (st) {
        case PrimeSplitting::Split: num = {1, -2, 1}; break;      // (1-x)^2
        case PrimeSplitting::Inert: num = {1, 0, -1}; break;      // (1-x^2)
        case PrimeSplitting::Ramified: num = {1, -1}; break;      // (1-x)
    }
    std::vector<i128> closed(depth + 1, 0);
    for (int j = 0; j <= depth; ++j) {
        i128 c = 0;
        for (size_t k = 0; k < num.size(); ++k) {
            if (static_cast<int>(k) > j) break;
            i128 pw = 1;
            for (int t = 0; t < j - static_cast<int>(k); ++t) pw *= p;
            c += static_cast<i128>(num[k]) * pw;
        }
        closed[j] = c;
    }

    // per-norm aggregates of the exact-conductor count at norm p^(2j)
    std::vector<i128> agg(depth + 1, 0);
    for (int j = 0; j <= depth; ++j) {
        if (j == 0) { agg[j] = 1; continue; }
        i128 pw = 1;
        switch (st) {
            case PrimeSplitting::Split:
                if (j == 1) { agg[j] = p - 2; break; }
                for (int t = 0; t < j - 2; ++t) pw *= p;
                agg[j] = pw * (p - 1) * (p - 1);
                break;
            case PrimeSplitting::Inert:
                if (j == 1) { agg[j] = p; break; }
                for (int t = 0; t < j - 2; ++t) pw *= p;
                agg[j] = pw * (p * p - 1);
                break;
            case PrimeSplitting::Ramified:
                for (int t = 0; t < j - 1; ++t) pw *= p;
                agg[j] = pw * (p - 1);
                break;
        }
    }
    if (closed != agg) return false;

    // numeric spot check of the expansion against the rational closed form
    double x = std::pow(static_cast<double>(p), -2.0 * s);
    double series_val = 0.0;
    for (int j = depth; j >= 0; --j)
        series_val = series_val * x + static_cast<double>(closed[j]);
    double numer = 0.0;
    for (size_t k = num.size(); k-- > 0;) numer = numer * x + num[k];
    double px = p * x;
    if (!(px < 1.0)) return false;
    double closed_val = numer / (1.0 - px);
    double tol = 4.0 * std::pow(px, depth + 1) / (1.0 - px) + 1e-9;
    return std::abs(series_val - closed_val) <= tol;
}

ResidualCheck primitive_series_check(const FieldContext& fc, double s, i64 limit) {
    SeriesValue lhs = primitive_char_series(fc, s, limit);
    SeriesValue rhs = sv_div(riemann_zeta(2.0 * s - 1.0), dedekind_zeta(fc, 2.0 * s));
    return {std::abs(lhs.value - rhs.value), lhs.abs_error_bound + rhs.abs_error_bound};
}

ResidualCheck pair_count_series_check(const FieldContext& fc, double s, i64 limit) {
    if (!(s >= 1.05)) throw std::domain_error("pair_count_series_check: s >= 1.05 required");
    PhiSieve sieve(fc, limit);
    i64 M = isqrt(limit);
    double acc = 0.0, comp = 0.0;
    for (i64 m = 1; m <= M; ++m) {
        i64 v = sieve.pair_count(m * m);
        if (v == 0) continue;
        double term = v * std::pow(static_cast<double>(m), -2.0 * s) - comp;
        double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    // pair counts satisfy Phi(m^2) <= 2 sigma_1(m) <= 2 m (1 + ln m)
    double a = 2.0 * s - 2.0;
    double Md = static_cast<double>(M);
    double tail = 2.0 * (std::pow(Md, -a) * (1.0 + std::log(Md)) / a + std::pow(Md, -a) / (a * a));
    SeriesValue lhs{acc, tail + 1e-12, limit};

    SeriesValue z2s = riemann_zeta(2.0 * s);
    SeriesValue z2s1 = riemann_zeta(2.0 * s - 1.0);
    SeriesValue zK2s = dedekind_zeta(fc, 2.0 * s);
    SeriesValue core = sv_div(sv_mul(sv_sub(sv_scale(2.0, z2s), sv_exact(1.0)), z2s1), zK2s);

    SeriesValue rhs;
    if (fc.is_gaussian()) {
        // 1/2 * core + 1/2 * (2(1 - 2^{1-2s}) zeta(2s) - 1) / zeta(2s)
        double two_pow = std::pow(2.0, 1.0 - 2.0 * s);
        SeriesValue extra = sv_div(
            sv_sub(sv_scale(2.0 * (1.0 - two_pow), z2s), sv_exact(1.0)), z2s);
        rhs = sv_add(sv_scale(0.5, core), sv_scale(0.5, extra));
    } else if (fc.is_eisenstein()) {
        // 1/3 * core + (1/3 (1 - 3^{1-2s}) zeta(2s) + L(2s, chi_{-3}) - 2/3) / zeta(2s)
        double three_pow = std::pow(3.0, 1.0 - 2.0 * s);
        SeriesValue l3 = dirichlet_l(-3, 2.0 * s, 1e-10);
        SeriesValue extra = sv_div(
            sv_sub(sv_add(sv_scale((1.0 - three_pow) / 3.0, z2s), l3), sv_exact(2.0 / 3.0)), z2s);
        rhs = sv_add(sv_scale(1.0 / 3.0, core), extra);
    } else {
        rhs = core;
    }
    return {std::abs(lhs.value - rhs.value), lhs.abs_error_bound + rhs.abs_error_bound};
}

ResidualCheck primitive_ideal_series_check(const FieldContext& fc, double s, i64 limit) {
    if (!(s > 1.6)) throw std::domain_error("primitive_ideal_series_check: s > 1.6 required");
    // multiplicative count of primitive ideals of norm n: 2 per split block,
    // ramified exponent <= 1, no inert part
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (i64 p = 2; p <= limit; ++p) {
        if (spf[p] != 0) continue;
        for (i64 m = p; m <= limit; m += p)
            if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(p);
    }
    std::vector<std::int32_t> r(limit + 1, 0);
    if (limit >= 1) r[1] = 1;
    for (i64 n = 2; n <= limit; ++n) {
        i64 p = spf[n];
        i64 m = n;
        int a = 0;
        while (m % p == 0) { m /= p; ++a; }
        if (r[m] == 0) continue;
        int block;
        switch (splitting_type(fc, p)) {
            case PrimeSplitting::Split: block = 2; break;
            case PrimeSplitting::Inert: block = 0; break;
            default: block = (a == 1) ? 1 : 0; break;
        }
        r[n] = r[m] * block;
    }
    double acc = 0.0, comp = 0.0;
    for (i64 n = 1; n <= limit; ++n) {
        if (r[n] == 0) continue;
        double term = r[n] * std::pow(static_cast<double>(n), -s) - comp;
        double t = acc + term;
        comp = (t - acc) - term;
        acc = t;
    }
    double tail = 2.0 * std::pow(static_cast<double>(limit), 1.5 - s) / (s - 1.5);
    SeriesValue w_trunc{acc, tail + 1e-12, limit};
    SeriesValue lhs = sv_mul(riemann_zeta(2.0 * s), w_trunc);
    SeriesValue rhs = dedekind_zeta(fc, s);
    return {std::abs(lhs.value - rhs.value), lhs.abs_error_bound + rhs.abs_error_bound};
}

double leading_constant(const FieldContext& fc, bool trivial_infinity) {
    double z2 = riemann_zeta(2.0).value;
    double zK2 = dedekind_zeta(fc, 2.0).value;
    double numer = trivial_infinity ? 1.0 : (2.0 * z2 - 1.0);
    return static_cast<double>(fc.h()) / fc.w() * numer / zK2 / static_cast<double>(-fc.disc());
}

std::vector<AsymptoticReport> asymptotic_report(const FieldContext& fc, std::vector<i64> y_grid) {
    std::sort(y_grid.begin(), y_grid.end());
    y_grid.erase(std::unique(y_grid.begin(), y_grid.end()), y_grid.end());
    if (y_grid.size() < 5)
        throw std::invalid_argument("asymptotic_report: regression needs >= 5 grid points");
    if (y_grid.front() < 1 || y_grid.back() > 10000000)
        throw std::invalid_argument("asymptotic_report: cutoffs must lie in [1, 10^7]");

    PhiSieve sieve(fc, y_grid.back());
    // residue of the pair-count Dirichlet series at s = 1; the generic 1/2
    // becomes 1/4 resp. 1/6 for the two extra-unit fields, i.e. 1/w
    double constant = (2.0 * riemann_zeta(2.0).value - 1.0) /
                      dedekind_zeta(fc, 2.0).value / fc.w();

    std::vector<AsymptoticReport> rows;
    rows.reserve(y_grid.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    i64 pts = 0;
    for (i64 y : y_grid) {
        AsymptoticReport r;
        r.cutoff = y;
        r.partial_sum = sieve.pair_count_prefix(y);
        r.main_term = constant * static_cast<double>(y);
        r.abs_error = std::abs(static_cast<double>(r.partial_sum) - r.main_term);
        if (r.abs_error > 0) {
            double lx = std::log(static_cast<double>(y));
            double ly = std::log(r.abs_error);
            sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
            ++pts;
        }
        rows.push_back(r);
    }
    if (pts < 2) throw std::logic_error("asymptotic_report: degenerate regression");
    double slope = (pts * sxy - sx * sy) / (pts * sxx - sx * sx);
    for (AsymptoticReport& r : rows) r.fitted_exponent = slope;
    return rows;
}

std::vector<i64> default_asymptotic_grid(i64 y_max) {
    static const i64 ladder[] = {10000, 14678, 21544, 30000, 31623, 46416, 68129};
    std::vector<i64> grid;
    for (i64 scale = 1; ; scale *= 10) {
        bool any = false;
        for (i64 v : ladder) {
            i64 y = v * scale;
            if (y > y_max) break;
            grid.push_back(y);
            any = true;
        }
        if (!any || scale > y_max) break;
    }
    if (grid.empty() || grid.back() != y_max) grid.push_back(y_max);
    return grid;
}

}  // namespace toruscount::series
