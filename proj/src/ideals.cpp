#include "toruscount/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace toruscount {

IdealFactored::IdealFactored(std::vector<PrimeBlock> blocks) : blocks_(std::move(blocks)) {
    std::sort(blocks_.begin(), blocks_.end(),
              [](const PrimeBlock& a, const PrimeBlock& b) { return a.p < b.p; });
    for (size_t i = 0; i < blocks_.size(); ++i) {
        const PrimeBlock& b = blocks_[i];
        if (b.p < 2) throw std::invalid_argument("IdealFactored: bad prime");
        if (i > 0 && blocks_[i - 1].p == b.p)
            throw std::invalid_argument("IdealFactored: duplicate prime");
        if (b.e < 0 || b.ebar < 0) throw std::invalid_argument("IdealFactored: negative exponent");
        switch (b.type) {
            case PrimeSplitting::Split:
                if (b.e == 0 && b.ebar == 0)
                    throw std::invalid_argument("IdealFactored: empty block");
                norm_ = checked_mul(norm_, checked_pow(b.p, b.e + b.ebar));
                break;
            case PrimeSplitting::Inert:
                if (b.e == 0 || b.ebar != 0)
                    throw std::invalid_argument("IdealFactored: bad inert block");
                norm_ = checked_mul(norm_, checked_pow(b.p, 2 * i64(b.e)));
                break;
            case PrimeSplitting::Ramified:
                if (b.e == 0 || b.ebar != 0)
                    throw std::invalid_argument("IdealFactored: bad ramified block");
                norm_ = checked_mul(norm_, checked_pow(b.p, b.e));
                break;
        }
    }
}

IdealFactored IdealFactored::conjugate() const {
    std::vector<PrimeBlock> out = blocks_;
    for (PrimeBlock& b : out) {
        if (b.type == PrimeSplitting::Split) std::swap(b.e, b.ebar);
    }
    return IdealFactored(std::move(out));
}

std::vector<IdealFactored> ideals_of_norm(const FieldContext& fc, i64 n) {
    if (n < 1) throw std::invalid_argument("ideals_of_norm: n must be >= 1");
    // factor n, then pick exponent patterns per splitting type
    std::vector<std::pair<i64, int>> fact;
    i64 m = n;
    for (i64 q = 2; q * q <= m; ++q) {
        if (m % q == 0) {
            int a = 0;
            while (m % q == 0) { m /= q; ++a; }
            fact.emplace_back(q, a);
        }
    }
    if (m > 1) fact.emplace_back(m, 1);

    std::vector<std::vector<PrimeBlock>> partial{{}};
    for (auto [p, a] : fact) {
        PrimeSplitting st = splitting_type(fc, p);
        std::vector<PrimeBlock> options;
        switch (st) {
            case PrimeSplitting::Split:
                for (int e = 0; e <= a; ++e)
                    options.push_back({p, st, e, a - e});
                break;
            case PrimeSplitting::Inert:
                if (a % 2 != 0) return {};  // odd inert exponents impossible
                options.push_back({p, st, a / 2, 0});
                break;
            case PrimeSplitting::Ramified:
                options.push_back({p, st, a, 0});
                break;
        }
        std::vector<std::vector<PrimeBlock>> next;
        next.reserve(partial.size() * options.size());
        for (const auto& base : partial) {
            for (const PrimeBlock& opt : options) {
                auto blk = base;
                if (opt.e != 0 || opt.ebar != 0) blk.push_back(opt);
                next.push_back(std::move(blk));
            }
        }
        partial = std::move(next);
    }
    std::vector<IdealFactored> out;
    out.reserve(partial.size());
    for (auto& blk : partial) out.emplace_back(std::move(blk));
    std::sort(out.begin(), out.end());
    return out;
}

int moebius(const IdealFactored& a) {
    int count = 0;
    for (const PrimeBlock& b : a.blocks()) {
        if (b.e >= 2 || b.ebar >= 2) return 0;
        count += b.e + b.ebar;
    }
    return count % 2 == 0 ? 1 : -1;
}

std::vector<IdealFactored> divisors(const IdealFactored& a) {
    std::vector<std::vector<PrimeBlock>> partial{{}};
    for (const PrimeBlock& b : a.blocks()) {
        std::vector<std::vector<PrimeBlock>> next;
        int emax = b.e, fmax = (b.type == PrimeSplitting::Split) ? b.ebar : 0;
        for (const auto& base : partial) {
            for (int e = 0; e <= emax; ++e) {
                for (int f = 0; f <= fmax; ++f) {
                    auto blk = base;
                    if (e != 0 || f != 0) blk.push_back({b.p, b.type, e, f});
                    next.push_back(std::move(blk));
                }
            }
        }
        partial = std::move(next);
    }
    std::vector<IdealFactored> out;
    out.reserve(partial.size());
    for (auto& blk : partial) out.emplace_back(std::move(blk));
    std::sort(out.begin(), out.end());
    return out;
}

i64 rational_content(const IdealFactored& a) {
    i64 m = 1;
    for (const PrimeBlock& b : a.blocks()) {
        int e;
        switch (b.type) {
            case PrimeSplitting::Split: e = std::max(b.e, b.ebar); break;
            case PrimeSplitting::Inert: e = b.e; break;
            default: e = (b.e + 1) / 2; break;
        }
        m = checked_mul(m, checked_pow(b.p, e));
    }
    return m;
}

IdealFactored quotient(const IdealFactored& a, const IdealFactored& b) {
    std::vector<PrimeBlock> out;
    auto it = a.blocks().begin();
    for (const PrimeBlock& d : b.blocks()) {
        while (it != a.blocks().end() && it->p < d.p) out.push_back(*it++);
        if (it == a.blocks().end() || it->p != d.p || it->type != d.type ||
            it->e < d.e || it->ebar < d.ebar)
            throw std::invalid_argument("quotient: not a divisor");
        PrimeBlock q = *it++;
        q.e -= d.e;
        q.ebar -= d.ebar;
        if (q.e != 0 || q.ebar != 0) out.push_back(q);
    }
    out.insert(out.end(), it, a.blocks().end());
    return IdealFactored(std::move(out));
}

bool is_primitive(const IdealFactored& a) {
    for (const PrimeBlock& b : a.blocks()) {
        switch (b.type) {
            case PrimeSplitting::Split:
                if (std::min(b.e, b.ebar) >= 1) return false;
                break;
            case PrimeSplitting::Inert:
                return false;  // (p) itself is the inert prime ideal
            case PrimeSplitting::Ramified:
                if (b.e >= 2) return false;
                break;
        }
    }
    return true;
}

i64 ideal_count_by_character(const FieldContext& fc, i64 n) {
    i64 r = 0;
    for (i64 m = 1; m * m <= n; ++m) {
        if (n % m != 0) continue;
        r += fc.chi(m);
        if (m * m != n) r += fc.chi(n / m);
    }
    return r;
}

}  // namespace toruscount
