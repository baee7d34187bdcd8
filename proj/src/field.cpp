#include "toruscount/field.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace toruscount {

namespace {

bool is_squarefree(i64 n) {
    n = std::llabs(n);
    for (i64 q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
    }
    return true;
}

}  // namespace

int kronecker(i64 a, i64 n) {
    if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
    int result = 1;
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        i64 r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) result = -result;
    }
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

bool is_fundamental_discriminant(i64 disc) {
    if (disc == 1 || disc == 0) return false;
    i64 m = ((disc % 4) + 4) % 4;
    if (m == 1) return is_squarefree(disc);
    if (m != 0) return false;
    i64 q = disc / 4;
    i64 qm = ((q % 4) + 4) % 4;
    return (qm == 2 || qm == 3) && is_squarefree(q);
}

i64 count_reduced_forms(i64 disc) {
    if (disc >= 0) throw std::invalid_argument("count_reduced_forms: disc must be negative");
    if (!is_fundamental_discriminant(disc))
        throw std::invalid_argument("count_reduced_forms: disc not fundamental");
    i64 count = 0;
    // reduced forms satisfy a <= sqrt(|disc|/3)
    for (i64 a = 1; 3 * a * a <= -disc; ++a) {
        for (i64 b = -a; b <= a; ++b) {
            i64 num = b * b - disc;
            if (num % (4 * a) != 0) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if ((std::llabs(b) == a || a == c) && b < 0) continue;
            i64 g = std::gcd(std::gcd(a, std::llabs(b)), c);
            if (g != 1) continue;  // forms of fundamental disc are primitive anyway
            ++count;
        }
    }
    return count;
}

FieldContext::FieldContext(i64 d) {
    if (d >= 0) throw std::invalid_argument("FieldContext: d must be negative");
    if (is_squarefree(d)) {
        i64 m = ((d % 4) + 4) % 4;
        d_ = d;
        disc_ = (m == 1) ? d : 4 * d;
    } else if (d % 4 == 0 && is_fundamental_discriminant(d)) {
        // accept the fundamental discriminant spelling (e.g. -8, -20)
        d_ = d / 4;
        disc_ = d;
    } else {
        throw std::invalid_argument("FieldContext: d = " + std::to_string(d) +
                                    " is neither squarefree nor a fundamental discriminant");
    }
    if (-disc_ > 1000000)
        throw std::invalid_argument("FieldContext: |disc| > 10^6 is out of scope");
    h_ = count_reduced_forms(disc_);
    w_ = (d_ == -1) ? 4 : (d_ == -3 ? 6 : 2);
}

PrimeSplitting splitting_type(const FieldContext& fc, i64 p) {
    if (p < 2) throw std::invalid_argument("splitting_type: p must be prime");
    if (fc.disc() % p == 0) return PrimeSplitting::Ramified;
    return kronecker(fc.disc(), p) == 1 ? PrimeSplitting::Split : PrimeSplitting::Inert;
}

}  // namespace toruscount
