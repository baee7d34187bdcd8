#pragma once

// Closed-form counting of Hecke-type characters on the norm-one torus of an
// imaginary quadratic field.
//
// char_count(a)            characters of (O_K/a)^x trivial on the image of
//                          (Z/(a∩Z))^x  (conductor dividing a)
// primitive_char_count(a)  the same with exact conductor a (Moebius
//                          inversion of char_count over the divisor lattice)
// primitive_char_count(a,u)  refined by the character's value u at the
//                          distinguished root of unity (i resp. zeta_6),
//                          needed when the unit group exceeds ±1
// conductor_pair_count(n)  compatible pairs (chi_infty, chi_f) whose
//                          conductors multiply to n
//
// All functions are multiplicative over coprime prime blocks and return
// exact 64-bit integers; overflow throws.

#include <cstdint>
#include <optional>
#include <vector>

#include "toruscount/field.hpp"
#include "toruscount/ideals.hpp"

namespace toruscount {

// Value of a character at the distinguished root of unity: ±1 for the
// Gaussian field, a cube root of unity (value at zeta_6) for the Eisenstein
// field.  PlusOne is valid for both.
enum class UnitValue { PlusOne, MinusOne, Zeta3, Zeta3Conj };

int unit_value_order(UnitValue u);
bool unit_value_valid(const FieldContext& fc, UnitValue u);

// The unit value forced on the finite part by the archimedean character
// z -> z^{2k} |z|^{-2k}:  (-1)^k at i, zeta_3^k at zeta_6.
UnitValue unit_value_for_infinity_type(const FieldContext& fc, i64 k);

struct InfinityType {
    i64 k;
    i64 conductor;  // (1 + |k|)^2
};
InfinityType infinity_type(i64 k);

// An analytic-conductor target C = |disc| * finite_norm; nullopt when |disc|
// does not divide C (no form attains such a conductor).
struct ConductorBudget {
    i64 total;
    i64 finite_norm;
};
std::optional<ConductorBudget> split_conductor(const FieldContext& fc, i64 C);

// --- per-ideal counts -------------------------------------------------------

i64 char_count(const FieldContext& fc, const IdealFactored& a);
i64 primitive_char_count(const FieldContext& fc, const IdealFactored& a);
i64 primitive_char_count(const FieldContext& fc, const IdealFactored& a, UnitValue u);

// sum over primitive divisors d | a (no rational integer divisor > 1) of
// moebius(a/d); the correction term in the unit-refined count.
i64 primitive_divisor_moebius_sum(const IdealFactored& a);

// --- per-norm aggregates ----------------------------------------------------

// sum of primitive_char_count over all ideals of norm n, evaluated by the
// multiplicative prime-power table (vanishes off perfect squares).
i64 primitive_char_count_at_norm(const FieldContext& fc, i64 n);

// unit-refined aggregate; fc must be Gaussian or Eisenstein.
i64 primitive_char_count_at_norm(const FieldContext& fc, i64 n, UnitValue u);

// number of archimedean characters of conductor n: 1 if n = 1, 2 if n >= 4
// is a perfect square, else 0.
int archimedean_char_count(i64 n);

// mu(sqrt(n)) when n is a perfect square, else 0.
int sqrt_moebius(i64 n);

// --- pair counts and conductor-ordered counts -------------------------------

i64 conductor_pair_count(const FieldContext& fc, i64 n);          // all pairs
i64 trivial_infinity_pair_count(const FieldContext& fc, i64 n);   // chi_infty = 1

// Exact number of forms of analytic conductor C (0 when |disc| does not
// divide C); h times the pair count at n = C/|disc|.
i64 count_at_conductor(const FieldContext& fc, i64 C, bool trivial_infinity);

// Number of forms of conductor <= X; sieved over n <= X/|disc|.
i64 count_up_to_conductor(const FieldContext& fc, i64 X, bool trivial_infinity);

// Forms with infinity type exactly k and conductor <= X.
i64 count_with_infinity_type(const FieldContext& fc, i64 k, i64 X);

// --- sieved tables ----------------------------------------------------------

// Per-field tables of the counting functions on 1..limit, built once by a
// smallest-prime-factor multiplicative sieve.  All aggregate counting
// functions vanish off perfect squares, so pair counts and their prefix
// sums are stored on the square indices.
class PhiSieve {
public:
    PhiSieve(const FieldContext& fc, i64 limit);

    const FieldContext& field() const { return fc_; }
    i64 limit() const { return limit_; }

    i64 phi_star(i64 n) const;            // primitive_char_count_at_norm(n)
    i64 pair_count(i64 n) const;          // conductor_pair_count(n)
    i64 trivial_pair_count(i64 n) const;  // trivial_infinity_pair_count(n)

    i64 pair_count_prefix(i64 y) const;          // sum_{n<=y} pair_count(n)
    i64 trivial_pair_count_prefix(i64 y) const;

    // sum_{n<=y} of the unit-refined aggregate for the class of u
    // (PlusOne for generic fields).
    i64 unit_class_prefix(i64 y, UnitValue u) const;

private:
    FieldContext fc_;
    i64 limit_;
    i64 sqrt_limit_;
    std::vector<i64> phi_star_;                    // 0..limit
    std::vector<i64> pair_sq_, pair_sq_prefix_;    // index m <-> n = m^2
    std::vector<i64> triv_sq_prefix_;
    std::vector<std::vector<i64>> unit_sq_prefix_;  // per unit class
};

}  // namespace toruscount
