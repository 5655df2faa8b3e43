#pragma once

// Exterior differential on the calculus, and the recovery of the two-form
// exchange relations from the first-order ones.

#include "qsp/algebra.hpp"

namespace qsp {

// Graded Leibniz expansion of d, term by term, without reduction.
// Letter images: d(th) = dth, d(x) = dx, d(x^-1) = -x^-1 dx x^-1, and the
// differentials map to zero.  Only defined on differential presentations.
WordSum d_raw(const WordSum& in);

// Normalized differential.
Element d(const Element& a);

struct TwoFormDerivation {
    bool dx_sq_zero = false;  // dx dx = 0 is forced
    ParamRational lambda2;    // dx dth = lambda2 * dth dx
    bool consistent = false;  // all differentiated relations agree
};

// Differentiates every first-order relation, reduces the images against the
// first-order rules alone, and solves the resulting linear constraints on
// the irreducible two-form words.  The exchange coefficient is output, not
// input: nothing about two-forms is assumed.
TwoFormDerivation derive_two_form_relations(Family f, const Bindings& b = {});

}  // namespace qsp
