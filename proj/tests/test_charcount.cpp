#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "toruscount/charcount.hpp"

using namespace toruscount;

namespace {

const FieldContext& gauss() {
    static FieldContext fc(-1);
    return fc;
}
const FieldContext& eisenstein() {
    static FieldContext fc(-3);
    return fc;
}
const FieldContext& f7() {
    static FieldContext fc(-7);
    return fc;
}

IdealFactored split55() { return IdealFactored({{5, PrimeSplitting::Split, 1, 1}}); }
IdealFactored inert3() { return IdealFactored({{3, PrimeSplitting::Inert, 1, 0}}); }
IdealFactored ram2(int e) { return IdealFactored({{2, PrimeSplitting::Ramified, e, 0}}); }

}  // namespace

TEST_CASE("conductor-dividing count per prime block") {
    CHECK(char_count(gauss(), split55()) == 4);   // p^{min-1}(p-1), n=m=1
    CHECK(char_count(gauss(), inert3()) == 4);    // p^{n-1}(p+1)
    CHECK(char_count(gauss(), ram2(2)) == 2);     // p^{floor(n/2)}
    CHECK(char_count(gauss(), IdealFactored{}) == 1);
    CHECK(char_count(gauss(), ram2(5)) == 4);
    CHECK(char_count(gauss(), IdealFactored({{5, PrimeSplitting::Split, 3, 2}})) == 20);
}

TEST_CASE("exact-conductor count per prime block") {
    CHECK(primitive_char_count(gauss(), split55()) == 3);  // p-2
    CHECK(primitive_char_count(gauss(), IdealFactored({{5, PrimeSplitting::Split, 2, 1}})) == 0);
    CHECK(primitive_char_count(gauss(), ram2(3)) == 0);    // odd ramified exponent
    CHECK(primitive_char_count(gauss(), ram2(2)) == 1);
    CHECK(primitive_char_count(gauss(), inert3()) == 3);
    CHECK(primitive_char_count(gauss(), IdealFactored({{3, PrimeSplitting::Inert, 2, 0}})) == 8);
    CHECK(primitive_char_count(gauss(), IdealFactored({{5, PrimeSplitting::Split, 2, 2}})) == 16);
}

TEST_CASE("moebius inversion round trip") {
    for (i64 d : {-1LL, -3LL, -7LL, -20LL}) {
        FieldContext fc(d);
        for (i64 n = 1; n <= 500; ++n) {
            for (const IdealFactored& a : ideals_of_norm(fc, n)) {
                i64 direct = 0;
                for (const IdealFactored& dv : divisors(a))
                    direct += moebius(dv) * char_count(fc, quotient(a, dv));
                REQUIRE(direct == primitive_char_count(fc, a));
                i64 sum = 0;
                for (const IdealFactored& dv : divisors(a))
                    sum += primitive_char_count(fc, dv);
                REQUIRE(sum == char_count(fc, a));
            }
        }
    }
}

TEST_CASE("unit-refined counts") {
    CHECK(primitive_char_count(gauss(), IdealFactored{}, UnitValue::PlusOne) == 1);
    CHECK(primitive_char_count(gauss(), ram2(2), UnitValue::PlusOne) == 0);
    CHECK(primitive_char_count(gauss(), ram2(2), UnitValue::MinusOne) == 1);
    CHECK(primitive_char_count(gauss(), split55(), UnitValue::PlusOne) == 1);
    CHECK(primitive_char_count(gauss(), split55(), UnitValue::MinusOne) == 2);
    CHECK(primitive_char_count(eisenstein(), IdealFactored{}, UnitValue::Zeta3) == 0);
    CHECK(primitive_char_count(eisenstein(),
                               IdealFactored({{3, PrimeSplitting::Ramified, 2, 0}}),
                               UnitValue::PlusOne) == 0);
    CHECK(primitive_char_count(eisenstein(),
                               IdealFactored({{3, PrimeSplitting::Ramified, 2, 0}}),
                               UnitValue::Zeta3) == 1);
    CHECK(primitive_char_count(eisenstein(),
                               IdealFactored({{7, PrimeSplitting::Split, 1, 1}}),
                               UnitValue::PlusOne) == 1);
    CHECK(primitive_char_count(eisenstein(),
                               IdealFactored({{7, PrimeSplitting::Split, 1, 1}}),
                               UnitValue::Zeta3) == 2);

    // invalid unit values for the field are rejected
    CHECK_THROWS_AS(primitive_char_count(gauss(), split55(), UnitValue::Zeta3),
                    std::invalid_argument);
    CHECK_THROWS_AS(primitive_char_count(eisenstein(), IdealFactored{}, UnitValue::MinusOne),
                    std::invalid_argument);
    CHECK_THROWS_AS(primitive_char_count(f7(), IdealFactored{}, UnitValue::PlusOne),
                    std::invalid_argument);
}

TEST_CASE("unit-value partition") {
    for (i64 n = 1; n <= 400; ++n) {
        for (const IdealFactored& a : ideals_of_norm(gauss(), n)) {
            i64 plus = primitive_char_count(gauss(), a, UnitValue::PlusOne);
            i64 minus = primitive_char_count(gauss(), a, UnitValue::MinusOne);
            REQUIRE(plus >= 0);
            REQUIRE(minus >= 0);
            REQUIRE(plus + minus == primitive_char_count(gauss(), a));
        }
        for (const IdealFactored& a : ideals_of_norm(eisenstein(), n)) {
            i64 one = primitive_char_count(eisenstein(), a, UnitValue::PlusOne);
            i64 z = primitive_char_count(eisenstein(), a, UnitValue::Zeta3);
            i64 zc = primitive_char_count(eisenstein(), a, UnitValue::Zeta3Conj);
            REQUIRE(z == zc);
            REQUIRE(one + z + zc == primitive_char_count(eisenstein(), a));
        }
    }
}

TEST_CASE("per-norm aggregates match the prime-power table") {
    CHECK(primitive_char_count_at_norm(gauss(), 25) == 3);
    CHECK(primitive_char_count_at_norm(gauss(), 9) == 3);
    CHECK(primitive_char_count_at_norm(f7(), 4) == 0);  // 2 splits, p-2 = 0
    CHECK(primitive_char_count_at_norm(gauss(), 1) == 1);
    CHECK(primitive_char_count_at_norm(gauss(), 10) == 0);

    // odd prime powers vanish at split and inert primes; aggregation identity
    for (i64 d : {-1LL, -3LL, -7LL, -15LL, -23LL}) {
        FieldContext fc(d);
        for (i64 n = 1; n <= 2000; ++n) {
            i64 agg = 0;
            for (const IdealFactored& a : ideals_of_norm(fc, n))
                agg += primitive_char_count(fc, a);
            REQUIRE(agg == primitive_char_count_at_norm(fc, n));
        }
    }
}

TEST_CASE("archimedean conductor count") {
    CHECK(archimedean_char_count(1) == 1);
    CHECK(archimedean_char_count(2) == 0);
    CHECK(archimedean_char_count(4) == 2);
    CHECK(archimedean_char_count(9) == 2);
    CHECK(archimedean_char_count(12) == 0);
    CHECK(archimedean_char_count(16) == 2);
    CHECK(infinity_type(0).conductor == 1);
    CHECK(infinity_type(3).conductor == 16);
    CHECK(infinity_type(-3).conductor == 16);
}

TEST_CASE("pair counts against frozen tables") {
    const i64 phi_m1[] = {1, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 3};
    const i64 phi_m7[] = {1, 0, 0, 2, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 3};
    const i64 phi_m3[] = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 5};
    const i64 phi1_m1[] = {1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1};
    const i64 phi1_m3[] = {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    for (i64 n = 1; n <= 16; ++n) {
        CHECK(conductor_pair_count(gauss(), n) == phi_m1[n - 1]);
        CHECK(conductor_pair_count(f7(), n) == phi_m7[n - 1]);
        CHECK(conductor_pair_count(eisenstein(), n) == phi_m3[n - 1]);
        CHECK(trivial_infinity_pair_count(gauss(), n) == phi1_m1[n - 1]);
        CHECK(trivial_infinity_pair_count(eisenstein(), n) == phi1_m3[n - 1]);
    }
    const i64 phi_m23[] = {1, 0, 0, 2, 0, 0, 0, 0, 3, 0, 0, 0};
    FieldContext f23(-23);
    for (i64 n = 1; n <= 12; ++n) CHECK(conductor_pair_count(f23, n) == phi_m23[n - 1]);
    CHECK(trivial_infinity_pair_count(gauss(), 25) == 1);
    CHECK(trivial_infinity_pair_count(f7(), 9) == primitive_char_count_at_norm(f7(), 9));
}

TEST_CASE("exact conductor counts") {
    FieldContext f23(-23);
    CHECK(count_at_conductor(f23, 23, true) == 3);  // h = 3, phi*(1) = 1
    CHECK(count_at_conductor(gauss(), 16, true) == 0);
    CHECK(count_at_conductor(gauss(), 7, true) == 0);   // |disc| does not divide C
    CHECK(count_at_conductor(gauss(), 7, false) == 0);
    CHECK(count_at_conductor(gauss(), 4, false) == 1);
    CHECK(count_at_conductor(f7(), 28, false) == 2);

    // per-field-class closed form for the trivial-infinity count, n <= 2000
    for (i64 d : {-1LL, -3LL, -7LL, -8LL, -15LL}) {
        FieldContext fc(d);
        for (i64 n = 1; n <= 2000; ++n) {
            i64 expected;
            i64 full = primitive_char_count_at_norm(fc, n);
            if (fc.is_gaussian())
                expected = fc.h() * ((full + sqrt_moebius(n)) / 2);
            else if (fc.is_eisenstein())
                expected = fc.h() * ((full + 2 * sqrt_moebius(n)) / 3);
            else
                expected = fc.h() * full;
            REQUIRE(count_at_conductor(fc, n * -fc.disc(), true) == expected);
        }
    }
}

TEST_CASE("summatory counts") {
    CHECK(count_up_to_conductor(f7(), 6, false) == 0);  // X < |disc|
    CHECK(count_up_to_conductor(f7(), 7, false) == 1);
    CHECK(count_up_to_conductor(gauss(), 400, false) == 41);
    CHECK(count_up_to_conductor(gauss(), 400, true) == 17);
    CHECK(count_up_to_conductor(gauss(), 50, false) == 4);
    CHECK(count_up_to_conductor(gauss(), 100, false) == 10);
    CHECK(count_up_to_conductor(eisenstein(), 50, false) == 6);
    CHECK(count_up_to_conductor(eisenstein(), 100, false) == 7);
    CHECK(count_up_to_conductor(eisenstein(), 400, false) == 39);
    CHECK(count_up_to_conductor(eisenstein(), 400, true) == 17);
    CHECK(count_up_to_conductor(f7(), 50, false) == 3);
    CHECK(count_up_to_conductor(f7(), 400, false) == 34);
    CHECK(count_up_to_conductor(f7(), 400, true) == 16);
    FieldContext f23(-23);
    CHECK(count_up_to_conductor(f23, 50, false) == 3);
    CHECK(count_up_to_conductor(f23, 400, false) == 27);
    CHECK(count_up_to_conductor(f23, 400, true) == 9);

    // monotone in X
    i64 prev = 0;
    for (i64 X = 1; X <= 300; ++X) {
        i64 v = count_up_to_conductor(gauss(), X, false);
        REQUIRE(v >= prev);
        prev = v;
    }
}

TEST_CASE("fixed infinity type counts") {
    CHECK(count_with_infinity_type(f7(), 1, 28) == 1);
    CHECK(count_with_infinity_type(gauss(), 1, 1000) == 11);
    CHECK(count_with_infinity_type(gauss(), 2, 1000) == 4);
    CHECK(count_with_infinity_type(eisenstein(), 1, 1000) == 12);
    FieldContext f23(-23);
    CHECK(count_with_infinity_type(f23, 1, 2000) == 9);

    // k = 0 recovers the trivial-infinity summatory count
    for (i64 X : {7LL, 100LL, 400LL, 1234LL}) {
        CHECK(count_with_infinity_type(f7(), 0, X) == count_up_to_conductor(f7(), X, true));
        CHECK(count_with_infinity_type(gauss(), 0, X) == count_up_to_conductor(gauss(), X, true));
    }

    // partition over infinity types reproduces the full count
    for (i64 d : {-1LL, -3LL, -7LL, -23LL}) {
        FieldContext fc(d);
        for (i64 X : {40LL, 777LL, 2000LL}) {
            i64 total = 0;
            for (i64 k = 0; -fc.disc() * infinity_type(k).conductor <= X; ++k) {
                total += count_with_infinity_type(fc, k, X);
                if (k > 0) total += count_with_infinity_type(fc, -k, X);
            }
            REQUIRE(total == count_up_to_conductor(fc, X, false));
        }
    }
}

TEST_CASE("sieve tables agree with the direct functions") {
    for (i64 d : {-1LL, -3LL, -7LL, -23LL}) {
        FieldContext fc(d);
        PhiSieve sieve(fc, 3000);
        i64 prefix = 0, triv_prefix = 0;
        for (i64 n = 1; n <= 3000; ++n) {
            REQUIRE(sieve.phi_star(n) == primitive_char_count_at_norm(fc, n));
            REQUIRE(sieve.pair_count(n) == conductor_pair_count(fc, n));
            REQUIRE(sieve.trivial_pair_count(n) == trivial_infinity_pair_count(fc, n));
            prefix += sieve.pair_count(n);
            triv_prefix += sieve.trivial_pair_count(n);
            REQUIRE(sieve.pair_count_prefix(n) == prefix);
            REQUIRE(sieve.trivial_pair_count_prefix(n) == triv_prefix);
        }
    }
    // frozen prefix anchors at 10^4
    CHECK(PhiSieve(gauss(), 10000).pair_count_prefix(10000) == 3854);
    CHECK(PhiSieve(eisenstein(), 10000).pair_count_prefix(10000) == 3027);
    CHECK(PhiSieve(f7(), 10000).pair_count_prefix(10000) == 6107);
    CHECK(PhiSieve(FieldContext(-20), 10000).pair_count_prefix(10000) == 6251);
}

TEST_CASE("unit class prefixes compose the fixed-type counts") {
    for (i64 d : {-1LL, -3LL, -11LL}) {
        FieldContext fc(d);
        PhiSieve sieve(fc, 2000);
        for (i64 k : {0LL, 1LL, 2LL, 3LL, -1LL, -2LL}) {
            for (i64 X : {100LL, 555LL, 2000LL * -fc.disc()}) {
                i64 n_max = X / (-fc.disc() * infinity_type(k).conductor);
                if (n_max > sieve.limit()) continue;
                i64 expected = fc.h() * sieve.unit_class_prefix(
                                            n_max, unit_value_for_infinity_type(fc, k));
                REQUIRE(count_with_infinity_type(fc, k, X) == expected);
            }
        }
    }
}

TEST_CASE("counts are invariant under conjugate relabeling of split primes") {
    for (i64 d : {-1LL, -3LL, -15LL}) {
        FieldContext fc(d);
        for (i64 n = 1; n <= 800; ++n) {
            for (const IdealFactored& a : ideals_of_norm(fc, n)) {
                IdealFactored c = a.conjugate();
                REQUIRE(char_count(fc, c) == char_count(fc, a));
                REQUIRE(primitive_char_count(fc, c) == primitive_char_count(fc, a));
                if (fc.is_gaussian())
                    REQUIRE(primitive_char_count(fc, c, UnitValue::MinusOne) ==
                            primitive_char_count(fc, a, UnitValue::MinusOne));
                if (fc.is_eisenstein())
                    REQUIRE(primitive_char_count(fc, c, UnitValue::Zeta3) ==
                            primitive_char_count(fc, a, UnitValue::Zeta3));
            }
        }
    }
}

TEST_CASE("conductor budget decomposition") {
    FieldContext gauss(-1);
    CHECK_FALSE(split_conductor(gauss, 7).has_value());
    auto b = split_conductor(gauss, 36);
    REQUIRE(b.has_value());
    CHECK(b->finite_norm == 9);
    CHECK(b->total == 36);
    CHECK_THROWS_AS(split_conductor(gauss, 0), std::invalid_argument);
}

TEST_CASE("counting arithmetic fails loudly on overflow") {
    CHECK_THROWS_AS(IdealFactored({{5, PrimeSplitting::Split, 40, 40}}), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(10, 40), std::overflow_error);
    CHECK_THROWS_AS(count_at_conductor(gauss(), 0, true), std::invalid_argument);
}
