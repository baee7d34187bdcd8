#include "toruscount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace toruscount::oracle {

namespace {

i64 floor_div(i64 a, i64 b) {  // b > 0
    return a >= 0 ? a / b : -((-a + b - 1) / b);
}

struct Hnf {
    i64 a, b, c;  // lattice Z*(a,0) + Z*(b,c), a,c > 0, 0 <= b < a
};

// column HNF of a rank-2 set of integer column vectors
Hnf hnf_of(std::vector<std::pair<i64, i64>> cols) {
    // clear second coordinates against the column of smallest nonzero |y|
    for (;;) {
        size_t pivot = cols.size();
        for (size_t i = 0; i < cols.size(); ++i) {
            if (cols[i].second != 0 &&
                (pivot == cols.size() ||
                 std::llabs(cols[i].second) < std::llabs(cols[pivot].second)))
                pivot = i;
        }
        if (pivot == cols.size()) throw std::logic_error("hnf_of: rank < 2");
        bool again = false;
        for (size_t i = 0; i < cols.size(); ++i) {
            if (i == pivot || cols[i].second == 0) continue;
            i64 q = floor_div(cols[i].second, cols[pivot].second);
            cols[i].first -= q * cols[pivot].first;
            cols[i].second -= q * cols[pivot].second;
            if (cols[i].second != 0) again = true;
        }
        if (!again) {
            i64 b = cols[pivot].first, c = cols[pivot].second;
            if (c < 0) { b = -b; c = -c; }
            i64 a = 0;
            for (size_t i = 0; i < cols.size(); ++i)
                if (i != pivot) a = std::gcd(a, cols[i].first);
            if (a == 0) throw std::logic_error("hnf_of: rank < 2");
            b %= a;
            if (b < 0) b += a;
            return {a, b, c};
        }
    }
}

}  // namespace

QuotientRing::QuotientRing(const FieldContext& fc, const IdealFactored& ideal, i64 cap)
    : fc_(fc), ideal_(ideal), t_(fc.omega_trace()), n0_(fc.omega_norm_term()) {
    if (ideal.norm() > cap) throw std::length_error("oracle: ideal norm exceeds cap");

    auto mul_elem = [&](std::pair<i64, i64> u, std::pair<i64, i64> v) {
        return std::pair<i64, i64>{u.first * v.first + u.second * v.second * n0_,
                                   u.first * v.second + u.second * v.first +
                                       u.second * v.second * t_};
    };
    auto mul_lattice = [&](const Hnf& L, const Hnf& M) {
        std::vector<std::pair<i64, i64>> cols;
        std::pair<i64, i64> lb[2] = {{L.a, 0}, {L.b, L.c}};
        std::pair<i64, i64> mb[2] = {{M.a, 0}, {M.b, M.c}};
        for (auto& u : lb)
            for (auto& v : mb) cols.push_back(mul_elem(u, v));
        return hnf_of(cols);
    };

    Hnf lat{1, 0, 1};
    for (const PrimeBlock& blk : ideal.blocks()) {
        i64 p = blk.p;
        // roots of x^2 - t x - n0 mod p; a split prime has two, the labeled
        // prime ideal takes the smaller one (this fixes p vs pbar globally)
        std::vector<i64> roots;
        for (i64 r = 0; r < p; ++r)
            if (((r * r - t_ * r - n0_) % p + p) % p == 0) roots.push_back(r);
        switch (blk.type) {
            case PrimeSplitting::Split: {
                if (roots.size() != 2) throw std::logic_error("oracle: split prime without two roots");
                Hnf P{p, (p - roots[0]) % p, 1};
                Hnf Pbar{p, (p - roots[1]) % p, 1};
                for (int i = 0; i < blk.e; ++i) lat = mul_lattice(lat, P);
                for (int i = 0; i < blk.ebar; ++i) lat = mul_lattice(lat, Pbar);
                break;
            }
            case PrimeSplitting::Inert: {
                if (!roots.empty()) throw std::logic_error("oracle: inert prime with a root");
                for (int i = 0; i < blk.e; ++i) lat = mul_lattice(lat, Hnf{p, 0, p});
                break;
            }
            case PrimeSplitting::Ramified: {
                if (roots.size() != 1) throw std::logic_error("oracle: ramified prime without double root");
                Hnf P{p, (p - roots[0]) % p, 1};
                for (int i = 0; i < blk.e; ++i) lat = mul_lattice(lat, P);
                break;
            }
        }
    }
    a_ = lat.a;
    b_ = lat.b;
    c_ = lat.c;
    if (a_ * c_ != ideal.norm()) throw std::logic_error("oracle: lattice index != ideal norm");

    // sampled associativity check
    i64 n = size();
    std::uint64_t state = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(n);
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<i64>((state >> 17) % static_cast<std::uint64_t>(n));
    };
    for (int trial = 0; trial < 32; ++trial) {
        Elem x = reduce(next() % a_, next() % c_);
        Elem y = reduce(next() % a_, next() % c_);
        Elem z = reduce(next() % a_, next() % c_);
        if (mul(mul(x, y), z) != mul(x, mul(y, z)))
            throw std::logic_error("oracle: ring multiplication not associative");
    }
}

QuotientRing::Elem QuotientRing::reduce(i64 x, i64 y) const {
    i64 q = floor_div(y, c_);
    y -= q * c_;
    x -= q * b_;
    x %= a_;
    if (x < 0) x += a_;
    return {x, y};
}

QuotientRing::Elem QuotientRing::mul(const Elem& u, const Elem& v) const {
    return reduce(u.first * v.first + u.second * v.second * n0_,
                  u.first * v.second + u.second * v.first + u.second * v.second * t_);
}

bool QuotientRing::lattice_member(i64 x, i64 y) const {
    if (y % c_ != 0) return false;
    return (x - (y / c_) * b_) % a_ == 0;
}

bool QuotientRing::is_unit(const Elem& e) const {
    // x*R is the additive group generated by x and x*omega; x is a unit
    // iff that group plus the ideal lattice is all of Z^2 (then 1 in x*R)
    Elem xo = mul(e, {0, 1});
    Hnf h = hnf_of({{a_, 0}, {b_, c_}, {e.first, e.second}, {xo.first, xo.second}});
    return h.a == 1 && h.c == 1;
}

bool QuotientRing::is_unit_by_scan(const Elem& e) const {
    Elem unit = one();
    for (i64 y = 0; y < c_; ++y)
        for (i64 x = 0; x < a_; ++x)
            if (mul(e, {x, y}) == unit) return true;
    return false;
}

i64 QuotientRing::least_rational() const {
    for (i64 x = 1; x <= a_; ++x)
        if (lattice_member(x, 0)) return x;
    throw std::logic_error("oracle: no rational integer in ideal");
}

UnitGroupStats unit_stats(const QuotientRing& ring) {
    UnitGroupStats st;
    i64 n = ring.size();
    for (i64 y = 0; y < ring.hnf_c(); ++y)
        for (i64 x = 0; x < ring.hnf_a(); ++x)
            if (ring.is_unit({x, y})) ++st.order;

    std::vector<std::uint8_t> in_image(n, 0);
    i64 m0 = ring.least_rational();
    st.least_rational = m0;
    i64 image_size = 0;
    for (i64 m = 1; m <= m0; ++m) {
        if (std::gcd(m, m0) != 1) continue;
        i64 id = ring.elem_id(ring.reduce(m, 0));
        if (!in_image[id]) { in_image[id] = 1; ++image_size; }
    }
    st.rational_image_order = image_size;
    if (st.order % st.rational_image_order != 0)
        throw std::logic_error("oracle: rational image order does not divide unit group order");

    const FieldContext& fc = ring.field();
    if (fc.is_gaussian() || fc.is_eisenstein()) {
        QuotientRing::Elem q = ring.omega();  // i resp. zeta_6
        QuotientRing::Elem x = q;
        i64 ord = 1;
        while (!in_image[ring.elem_id(x)]) {
            x = ring.mul(x, q);
            if (++ord > st.order + 1)
                throw std::logic_error("oracle: distinguished unit order not found");
        }
        st.distinguished_unit_order = ord;
    }
    return st;
}

OracleContext::OracleContext(const FieldContext& fc, i64 cap) : fc_(fc), cap_(cap) {}

const UnitGroupStats& OracleContext::stats(const IdealFactored& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    QuotientRing ring(fc_, a, cap_);
    return memo_.emplace(a, unit_stats(ring)).first->second;
}

i64 OracleContext::char_count(const IdealFactored& a) {
    const UnitGroupStats& st = stats(a);
    return st.order / st.rational_image_order;
}

i64 OracleContext::primitive_char_count(const IdealFactored& a) {
    i64 total = 0;
    for (const IdealFactored& d : divisors(a))
        total += moebius(d) * char_count(quotient(a, d));
    return total;
}

// #characters of Q = (O/a)^x / rational-image with chi(q) = u, for
// conductor dividing a: |Q| / ord(q) if u^ord(q) = 1, else 0
i64 OracleContext::conductor_dividing_count(const IdealFactored& a, UnitValue u) {
    const UnitGroupStats& st = stats(a);
    i64 q_order = st.distinguished_unit_order.value();
    if (q_order % unit_value_order(u) != 0) return 0;
    i64 quotient_order = st.order / st.rational_image_order;
    if (quotient_order % q_order != 0)
        throw std::logic_error("oracle: distinguished unit order does not divide quotient order");
    return quotient_order / q_order;
}

i64 OracleContext::primitive_char_count(const IdealFactored& a, UnitValue u) {
    if (!unit_value_valid(fc_, u))
        throw std::invalid_argument("oracle: invalid unit value for field");
    i64 total = 0;
    for (const IdealFactored& d : divisors(a))
        total += moebius(quotient(a, d)) * conductor_dividing_count(d, u);
    return total;
}

i64 OracleContext::pair_count(i64 C, bool trivial_infinity) {
    if (C < 1) throw std::invalid_argument("oracle: C >= 1 required");
    i64 q = -fc_.disc();
    if (C % q != 0) return 0;
    i64 rest = C / q;
    bool special = fc_.is_gaussian() || fc_.is_eisenstein();
    i64 total = 0;
    for (i64 m = 1; m * m <= rest; ++m) {
        if (rest % (m * m) != 0) continue;
        if (trivial_infinity && m != 1) continue;
        i64 n = rest / (m * m);
        std::vector<i64> ks = (m == 1) ? std::vector<i64>{0} : std::vector<i64>{m - 1, 1 - m};
        for (i64 k : ks) {
            for (const IdealFactored& ideal : ideals_of_norm(fc_, n)) {
                i64 cnt = special
                              ? primitive_char_count(ideal, unit_value_for_infinity_type(fc_, k))
                              : primitive_char_count(ideal);
                total = checked_add(total, cnt);
            }
        }
    }
    return checked_mul(fc_.h(), total);
}

}  // namespace toruscount::oracle
