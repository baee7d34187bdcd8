#pragma once

// Integral ideals of O_K in fully factored form over rational primes.
// At a split prime the two conjugate prime ideals are labeled by a fixed
// convention chosen once per field (see oracle.hpp); the pair of exponents
// is stored as (e, ebar).  Inert and ramified primes carry one exponent.

#include <cstdint>
#include <vector>

#include "toruscount/field.hpp"

namespace toruscount {

struct PrimeBlock {
    i64 p = 0;
    PrimeSplitting type = PrimeSplitting::Inert;
    int e = 0;     // exponent of the prime ideal (the labeled one, if split)
    int ebar = 0;  // split only: exponent of the conjugate

    friend bool operator==(const PrimeBlock&, const PrimeBlock&) = default;
    friend auto operator<=>(const PrimeBlock&, const PrimeBlock&) = default;
};

class IdealFactored {
public:
    IdealFactored() = default;  // the unit ideal (1)

    // blocks must have distinct primes and at least one nonzero exponent
    // each; they are sorted internally.
    explicit IdealFactored(std::vector<PrimeBlock> blocks);

    const std::vector<PrimeBlock>& blocks() const { return blocks_; }
    i64 norm() const { return norm_; }
    bool is_unit_ideal() const { return blocks_.empty(); }

    // complex conjugate: swaps (e, ebar) at every split prime
    IdealFactored conjugate() const;

    friend bool operator==(const IdealFactored&, const IdealFactored&) = default;
    friend auto operator<=>(const IdealFactored&, const IdealFactored&) = default;

private:
    std::vector<PrimeBlock> blocks_;  // sorted by p
    i64 norm_ = 1;
};

// All ideals of norm exactly n (empty when none exist), in a deterministic
// order.  n >= 1.
std::vector<IdealFactored> ideals_of_norm(const FieldContext& fc, i64 n);

// Moebius function on ideals: 0 on non-squarefree, else (-1)^(#prime ideals).
int moebius(const IdealFactored& a);

// All ideal divisors of a, deterministically ordered.
std::vector<IdealFactored> divisors(const IdealFactored& a);

// Generator of a ∩ Z: max(e,ebar) at split p, e at inert, ceil(e/2) at
// ramified primes.
i64 rational_content(const IdealFactored& a);

// b must divide a componentwise; returns a/b.
IdealFactored quotient(const IdealFactored& a, const IdealFactored& b);

// true iff no rational integer > 1 divides a (split blocks one-sided,
// ramified exponent <= 1, no inert blocks).
bool is_primitive(const IdealFactored& a);

// #ideals of norm n computed by the divisor-character formula
// r(n) = sum_{m|n} chi_disc(m); used as an independent cross-check on
// ideals_of_norm.
i64 ideal_count_by_character(const FieldContext& fc, i64 n);

}  // namespace toruscount
