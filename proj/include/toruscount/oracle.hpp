#pragma once

// Brute-force ground truth for the closed-form counts: explicit finite
// quotient rings O_K/a built from a Hermite-normal-form model of the ideal
// lattice in the basis (1, omega), their unit groups, and direct character
// counting.  Nothing here shares code with the closed forms in charcount.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toruscount/charcount.hpp"
#include "toruscount/field.hpp"
#include "toruscount/ideals.hpp"

namespace toruscount::oracle {

// O_K/a with coset representatives x + y*omega, 0 <= x < a, 0 <= y < c,
// where the ideal lattice has column HNF [[a, b], [0, c]] and a*c = N(a).
class QuotientRing {
public:
    using Elem = std::pair<i64, i64>;

    // Throws std::length_error when N(a) exceeds cap.
    QuotientRing(const FieldContext& fc, const IdealFactored& ideal, i64 cap = 4096);

    i64 size() const { return a_ * c_; }
    i64 hnf_a() const { return a_; }
    i64 hnf_b() const { return b_; }
    i64 hnf_c() const { return c_; }
    const IdealFactored& ideal() const { return ideal_; }
    const FieldContext& field() const { return fc_; }

    Elem reduce(i64 x, i64 y) const;
    Elem mul(const Elem& u, const Elem& v) const;
    Elem one() const { return reduce(1, 0); }
    Elem omega() const { return reduce(0, 1); }
    i64 elem_id(const Elem& e) const { return e.first * c_ + e.second; }

    // x is a unit iff multiplication by x is onto, i.e. the additive group
    // generated by x, x*omega and the ideal lattice is all of Z^2.
    bool is_unit(const Elem& e) const;

    // reference implementation: scan the whole ring for an inverse
    bool is_unit_by_scan(const Elem& e) const;

    // generator of (image of a) ∩ Z, found by scanning lattice membership
    i64 least_rational() const;

    bool lattice_member(i64 x, i64 y) const;

private:
    FieldContext fc_;
    IdealFactored ideal_;
    i64 t_, n0_;        // omega^2 = t*omega + n0
    i64 a_, b_, c_;     // column HNF of the ideal lattice
};

struct UnitGroupStats {
    i64 order = 0;                 // |(O/a)^x|
    i64 rational_image_order = 0;  // |image of (Z/(a∩Z))^x|
    i64 least_rational = 0;        // generator of a ∩ Z found by lattice scan
    // order of the image of i (resp. zeta_6) in (O/a)^x / rational image;
    // absent for fields with unit group {±1}
    std::optional<i64> distinguished_unit_order;
};

UnitGroupStats unit_stats(const QuotientRing& ring);

// Memoizing driver for oracle sweeps over many ideals of one field.
class OracleContext {
public:
    explicit OracleContext(const FieldContext& fc, i64 cap = 4096);

    const FieldContext& field() const { return fc_; }
    i64 cap() const { return cap_; }

    const UnitGroupStats& stats(const IdealFactored& a);

    // definitional count of characters of (O/a)^x trivial on the rational
    // image: group index
    i64 char_count(const IdealFactored& a);

    // Moebius inversion of char_count over the divisor lattice
    i64 primitive_char_count(const IdealFactored& a);

    // characters of exact conductor a with prescribed value u at the
    // distinguished root of unity (Gaussian/Eisenstein fields only)
    i64 primitive_char_count(const IdealFactored& a, UnitValue u);

    // h * #{(k, a) : (1+|k|)^2 * N(a) * |disc| = C, chi_f of exact
    // conductor a compatible with the k-th archimedean character}
    i64 pair_count(i64 C, bool trivial_infinity);

private:
    i64 conductor_dividing_count(const IdealFactored& a, UnitValue u);

    FieldContext fc_;
    i64 cap_;
    std::map<IdealFactored, UnitGroupStats> memo_;
};

}  // namespace toruscount::oracle
