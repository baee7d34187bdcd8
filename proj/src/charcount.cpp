#include "toruscount/charcount.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace toruscount {

namespace {

i64 isqrt(i64 n) {
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// conductor-dividing count for one prime block
i64 char_count_block(const PrimeBlock& b) {
    switch (b.type) {
        case PrimeSplitting::Split: {
            int m = std::min(b.e, b.ebar);
            return m == 0 ? 1 : checked_mul(checked_pow(b.p, m - 1), b.p - 1);
        }
        case PrimeSplitting::Inert:
            return b.e == 0 ? 1 : checked_mul(checked_pow(b.p, b.e - 1), b.p + 1);
        case PrimeSplitting::Ramified:
            return checked_pow(b.p, b.e / 2);
    }
    return 0;
}

// exact-conductor count for one prime block
i64 primitive_block(const PrimeBlock& b) {
    switch (b.type) {
        case PrimeSplitting::Split:
            if (b.e != b.ebar) return 0;
            if (b.e == 1) return b.p - 2;
            return checked_mul(checked_pow(b.p, b.e - 2), (b.p - 1) * (b.p - 1));
        case PrimeSplitting::Inert:
            if (b.e == 1) return b.p;
            return checked_mul(checked_pow(b.p, b.e - 2), b.p * b.p - 1);
        case PrimeSplitting::Ramified:
            if (b.e % 2 != 0) return 0;
            return checked_mul(checked_pow(b.p, b.e / 2 - 1), b.p - 1);
    }
    return 0;
}

// exact-conductor aggregate at norm p^j
i64 primitive_at_norm_block(const FieldContext& fc, i64 p, int j) {
    if (j == 0) return 1;
    if (j % 2 != 0) return 0;
    switch (splitting_type(fc, p)) {
        case PrimeSplitting::Split:
            if (j == 2) return p - 2;
            return checked_mul(checked_pow(p, j / 2 - 2), (p - 1) * (p - 1));
        case PrimeSplitting::Inert:
            if (j == 2) return p;
            return checked_mul(checked_pow(p, j / 2 - 2), p * p - 1);
        case PrimeSplitting::Ramified:
            return checked_mul(checked_pow(p, j / 2 - 1), p - 1);
    }
    return 0;
}

// u + conj(u) for Eisenstein, u itself for Gaussian: the integer weight of
// the correction term in the unit-refined count.
int unit_value_weight(const FieldContext& fc, UnitValue u) {
    if (!unit_value_valid(fc, u)) throw std::invalid_argument("invalid unit value for field");
    if (fc.is_gaussian()) return u == UnitValue::PlusOne ? 1 : -1;
    return u == UnitValue::PlusOne ? 2 : -1;
}

i64 refined_from_parts(const FieldContext& fc, i64 full, i64 correction, UnitValue u) {
    int w0 = fc.is_gaussian() ? 2 : 3;
    i64 v = checked_add(full, checked_mul(unit_value_weight(fc, u), correction));
    if (v < 0 || v % w0 != 0)
        throw std::logic_error("unit-refined character count is not a non-negative integer");
    return v / w0;
}

int moebius_rational(i64 n) {
    int cnt = 0;
    for (i64 q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            n /= q;
            if (n % q == 0) return 0;
            ++cnt;
        }
    }
    if (n > 1) ++cnt;
    return cnt % 2 == 0 ? 1 : -1;
}

int unit_class_count(const FieldContext& fc) {
    return fc.is_gaussian() ? 2 : (fc.is_eisenstein() ? 3 : 1);
}

UnitValue unit_class_value(const FieldContext& fc, int idx) {
    if (fc.is_gaussian()) return idx == 0 ? UnitValue::PlusOne : UnitValue::MinusOne;
    if (fc.is_eisenstein())
        return idx == 0 ? UnitValue::PlusOne : (idx == 1 ? UnitValue::Zeta3 : UnitValue::Zeta3Conj);
    return UnitValue::PlusOne;
}

int unit_class_index(const FieldContext& fc, UnitValue u) {
    if (!fc.is_gaussian() && !fc.is_eisenstein()) {
        if (u != UnitValue::PlusOne)
            throw std::invalid_argument("invalid unit value for field");
        return 0;  // compatibility is automatic: a single class
    }
    if (!unit_value_valid(fc, u)) throw std::invalid_argument("invalid unit value for field");
    switch (u) {
        case UnitValue::PlusOne: return 0;
        case UnitValue::MinusOne: return 1;
        case UnitValue::Zeta3: return 1;
        case UnitValue::Zeta3Conj: return 2;
    }
    return 0;
}

}  // namespace

int unit_value_order(UnitValue u) {
    switch (u) {
        case UnitValue::PlusOne: return 1;
        case UnitValue::MinusOne: return 2;
        default: return 3;
    }
}

bool unit_value_valid(const FieldContext& fc, UnitValue u) {
    if (u == UnitValue::PlusOne) return fc.is_gaussian() || fc.is_eisenstein();
    if (u == UnitValue::MinusOne) return fc.is_gaussian();
    return fc.is_eisenstein();
}

UnitValue unit_value_for_infinity_type(const FieldContext& fc, i64 k) {
    if (fc.is_gaussian()) return k % 2 == 0 ? UnitValue::PlusOne : UnitValue::MinusOne;
    if (fc.is_eisenstein()) {
        switch (((k % 3) + 3) % 3) {
            case 0: return UnitValue::PlusOne;
            case 1: return UnitValue::Zeta3;
            default: return UnitValue::Zeta3Conj;
        }
    }
    return UnitValue::PlusOne;
}

InfinityType infinity_type(i64 k) {
    i64 m = 1 + std::llabs(k);
    return {k, checked_mul(m, m)};
}

std::optional<ConductorBudget> split_conductor(const FieldContext& fc, i64 C) {
    if (C < 1) throw std::invalid_argument("split_conductor: C >= 1 required");
    i64 q = -fc.disc();
    if (C % q != 0) return std::nullopt;
    return ConductorBudget{C, C / q};
}

i64 char_count(const FieldContext&, const IdealFactored& a) {
    i64 r = 1;
    for (const PrimeBlock& b : a.blocks()) r = checked_mul(r, char_count_block(b));
    return r;
}

i64 primitive_char_count(const FieldContext&, const IdealFactored& a) {
    i64 r = 1;
    for (const PrimeBlock& b : a.blocks()) {
        i64 v = primitive_block(b);
        if (v == 0) return 0;
        r = checked_mul(r, v);
    }
    return r;
}

i64 primitive_divisor_moebius_sum(const IdealFactored& a) {
    i64 s = 0;
    for (const IdealFactored& d : divisors(a)) {
        if (is_primitive(d)) s += moebius(quotient(a, d));
    }
    return s;
}

i64 primitive_char_count(const FieldContext& fc, const IdealFactored& a, UnitValue u) {
    return refined_from_parts(fc, primitive_char_count(fc, a),
                              primitive_divisor_moebius_sum(a), u);
}

i64 primitive_char_count_at_norm(const FieldContext& fc, i64 n) {
    if (n < 1) throw std::invalid_argument("primitive_char_count_at_norm: n >= 1 required");
    i64 r = 1;
    i64 m = n;
    for (i64 q = 2; q * q <= m; ++q) {
        if (m % q != 0) continue;
        int j = 0;
        while (m % q == 0) { m /= q; ++j; }
        i64 v = primitive_at_norm_block(fc, q, j);
        if (v == 0) return 0;
        r = checked_mul(r, v);
    }
    if (m > 1) return 0;  // first power of a prime: odd exponent
    return r;
}

i64 primitive_char_count_at_norm(const FieldContext& fc, i64 n, UnitValue u) {
    return refined_from_parts(fc, primitive_char_count_at_norm(fc, n), sqrt_moebius(n), u);
}

int archimedean_char_count(i64 n) {
    if (n == 1) return 1;
    if (n >= 4) {
        i64 r = isqrt(n);
        if (r * r == n) return 2;
    }
    return 0;
}

int sqrt_moebius(i64 n) {
    i64 r = isqrt(n);
    if (r * r != n) return 0;
    return moebius_rational(r);
}

namespace {

// the per-norm aggregate entering the pair count: refined for the two
// special fields, plain otherwise
i64 aggregate_at_norm(const FieldContext& fc, i64 n, UnitValue u) {
    if (fc.is_gaussian() || fc.is_eisenstein())
        return primitive_char_count_at_norm(fc, n, u);
    return primitive_char_count_at_norm(fc, n);
}

}  // namespace

i64 conductor_pair_count(const FieldContext& fc, i64 n) {
    if (n < 1) throw std::invalid_argument("conductor_pair_count: n >= 1 required");
    i64 total = 0;
    for (i64 v = 1; v * v <= n; ++v) {
        i64 b = v * v;
        if (n % b != 0) continue;
        int arch = archimedean_char_count(b);
        if (arch == 0) continue;
        // the archimedean side fixes the unit value via k = ±(v-1)
        total = checked_add(total,
                            checked_mul(arch, aggregate_at_norm(fc, n / b,
                                                                unit_value_for_infinity_type(fc, v - 1))));
    }
    return total;
}

i64 trivial_infinity_pair_count(const FieldContext& fc, i64 n) {
    return aggregate_at_norm(fc, n, UnitValue::PlusOne);
}

i64 count_at_conductor(const FieldContext& fc, i64 C, bool trivial_infinity) {
    std::optional<ConductorBudget> budget = split_conductor(fc, C);
    if (!budget) return 0;
    i64 pairs = trivial_infinity ? trivial_infinity_pair_count(fc, budget->finite_norm)
                                 : conductor_pair_count(fc, budget->finite_norm);
    return checked_mul(fc.h(), pairs);
}

i64 count_up_to_conductor(const FieldContext& fc, i64 X, bool trivial_infinity) {
    if (X < 1) throw std::invalid_argument("count_up_to_conductor: X >= 1 required");
    i64 limit = X / -fc.disc();
    if (limit == 0) return 0;
    PhiSieve sieve(fc, limit);
    i64 pairs = trivial_infinity ? sieve.trivial_pair_count_prefix(limit)
                                 : sieve.pair_count_prefix(limit);
    return checked_mul(fc.h(), pairs);
}

i64 count_with_infinity_type(const FieldContext& fc, i64 k, i64 X) {
    if (X < 1) throw std::invalid_argument("count_with_infinity_type: X >= 1 required");
    i64 c = infinity_type(k).conductor;
    i64 q = -fc.disc();
    UnitValue u = unit_value_for_infinity_type(fc, k);
    i64 total = 0;
    for (i64 n = 1; checked_mul(checked_mul(q, n), c) <= X; ++n)
        total = checked_add(total, aggregate_at_norm(fc, n, u));
    return checked_mul(fc.h(), total);
}

// --- PhiSieve ---------------------------------------------------------------

PhiSieve::PhiSieve(const FieldContext& fc, i64 limit) : fc_(fc), limit_(limit) {
    if (limit < 1) throw std::invalid_argument("PhiSieve: limit >= 1 required");
    if (limit > 10000000) throw std::invalid_argument("PhiSieve: limit > 10^7 not supported");
    sqrt_limit_ = isqrt(limit);

    // smallest-prime-factor table, then the multiplicative table on 1..limit
    std::vector<std::uint32_t> spf(limit + 1, 0);
    for (i64 p = 2; p <= limit; ++p) {
        if (spf[p] != 0) continue;
        for (i64 m = p; m <= limit; m += p)
            if (spf[m] == 0) spf[m] = static_cast<std::uint32_t>(p);
    }
    phi_star_.assign(limit + 1, 0);
    phi_star_[1] = 1;
    for (i64 n = 2; n <= limit; ++n) {
        i64 p = spf[n];
        i64 m = n;
        int j = 0;
        while (m % p == 0) { m /= p; ++j; }
        phi_star_[n] = (phi_star_[m] == 0) ? 0
                       : checked_mul(phi_star_[m], primitive_at_norm_block(fc_, p, j));
    }

    // rational Moebius on 1..sqrt(limit), for the refined aggregates
    std::vector<int> mu(sqrt_limit_ + 1, 1);
    {
        std::vector<bool> composite(sqrt_limit_ + 1, false);
        for (i64 p = 2; p <= sqrt_limit_; ++p) {
            if (composite[p]) continue;
            for (i64 m = p; m <= sqrt_limit_; m += p) {
                if (m > p) composite[m] = true;
                mu[m] = -mu[m];
            }
            for (i64 m = p * p; m <= sqrt_limit_; m += p * p) mu[m] = 0;
        }
        mu[0] = 0;
    }

    int classes = unit_class_count(fc_);
    int w0 = fc_.is_gaussian() ? 2 : (fc_.is_eisenstein() ? 3 : 1);
    auto agg = [&](i64 root, int cls) -> i64 {
        i64 full = phi_star_[root * root];
        if (classes == 1) return full;
        int weight = unit_value_weight(fc_, unit_class_value(fc_, cls));
        i64 v = full + i64(weight) * mu[root];
        if (v < 0 || v % w0 != 0)
            throw std::logic_error("unit-refined aggregate is not a non-negative integer");
        return v / w0;
    };

    pair_sq_.assign(sqrt_limit_ + 1, 0);
    pair_sq_prefix_.assign(sqrt_limit_ + 1, 0);
    triv_sq_prefix_.assign(sqrt_limit_ + 1, 0);
    unit_sq_prefix_.assign(classes, std::vector<i64>(sqrt_limit_ + 1, 0));

    for (i64 m = 1; m <= sqrt_limit_; ++m) {
        // pair count at n = m^2: archimedean side contributes via square
        // divisors b = v^2 of n, i.e. v | m
        i64 total = 0;
        for (i64 v = 1; v <= m; ++v) {
            if (m % v != 0) continue;
            int arch = archimedean_char_count(v * v);
            if (arch == 0) continue;
            UnitValue u = unit_value_for_infinity_type(fc_, v - 1);
            total = checked_add(total, checked_mul(arch, agg(m / v, unit_class_index(fc_, u))));
        }
        pair_sq_[m] = total;
        pair_sq_prefix_[m] = checked_add(pair_sq_prefix_[m - 1], total);
        triv_sq_prefix_[m] = checked_add(triv_sq_prefix_[m - 1], agg(m, 0));
        for (int c = 0; c < classes; ++c)
            unit_sq_prefix_[c][m] = checked_add(unit_sq_prefix_[c][m - 1], agg(m, c));
    }
}

i64 PhiSieve::phi_star(i64 n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("PhiSieve::phi_star");
    return phi_star_[n];
}

i64 PhiSieve::pair_count(i64 n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("PhiSieve::pair_count");
    i64 r = isqrt(n);
    return r * r == n ? pair_sq_[r] : 0;
}

i64 PhiSieve::trivial_pair_count(i64 n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("PhiSieve::trivial_pair_count");
    i64 r = isqrt(n);
    if (r * r != n) return 0;
    return triv_sq_prefix_[r] - triv_sq_prefix_[r - 1];
}

i64 PhiSieve::pair_count_prefix(i64 y) const {
    if (y < 0 || y > limit_) throw std::out_of_range("PhiSieve::pair_count_prefix");
    return pair_sq_prefix_[isqrt(y)];
}

i64 PhiSieve::trivial_pair_count_prefix(i64 y) const {
    if (y < 0 || y > limit_) throw std::out_of_range("PhiSieve::trivial_pair_count_prefix");
    return triv_sq_prefix_[isqrt(y)];
}

i64 PhiSieve::unit_class_prefix(i64 y, UnitValue u) const {
    if (y < 0 || y > limit_) throw std::out_of_range("PhiSieve::unit_class_prefix");
    return unit_sq_prefix_[unit_class_index(fc_, u)][isqrt(y)];
}

}  // namespace toruscount
