#pragma once

// Arithmetic of an imaginary quadratic field K = Q(sqrt(d)):
// fundamental discriminant, Kronecker character, prime splitting,
// class number (by reduced-form enumeration) and unit count.

#include <cstdint>

#include "toruscount/checked.hpp"

namespace toruscount {

enum class PrimeSplitting { Split, Inert, Ramified };

// Kronecker symbol (a|n) for n >= 1.  Completely multiplicative in n and,
// for a a fundamental discriminant, periodic mod |a|.
int kronecker(i64 a, i64 n);

// true iff disc is a fundamental discriminant (disc = 1 is excluded).
bool is_fundamental_discriminant(i64 disc);

// Number of reduced primitive forms (a,b,c) with b^2 - 4ac = disc,
// |b| <= a <= c and b >= 0 when |b| = a or a = c.  Equals the class number.
// Rejects non-fundamental or non-negative disc.
i64 count_reduced_forms(i64 disc);

class FieldContext {
public:
    // d < 0 squarefree, or a fundamental discriminant 4*d' (d' squarefree,
    // d' = 2,3 mod 4); the latter spelling lets callers pass -8 for
    // Q(sqrt(-2)) or -20 for Q(sqrt(-5)).  Everything else is rejected.
    explicit FieldContext(i64 d);

    i64 d() const { return d_; }          // squarefree radicand
    i64 disc() const { return disc_; }    // fundamental discriminant
    i64 h() const { return h_; }          // class number
    int w() const { return w_; }          // number of roots of unity
    bool is_gaussian() const { return d_ == -1; }
    bool is_eisenstein() const { return d_ == -3; }

    // trace and "constant" of the ring generator: omega^2 = t*omega + n0,
    // omega = sqrt(d) (t=0, n0=d) or (1+sqrt(d))/2 (t=1, n0=(d-1)/4).
    i64 omega_trace() const { return disc_ % 2 == 0 ? 0 : 1; }
    i64 omega_norm_term() const { return disc_ % 2 == 0 ? d_ : (d_ - 1) / 4; }

    int chi(i64 n) const { return kronecker(disc_, n); }

private:
    i64 d_;
    i64 disc_;
    i64 h_;
    int w_;
};

PrimeSplitting splitting_type(const FieldContext& fc, i64 p);

}  // namespace toruscount
