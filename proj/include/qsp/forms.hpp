#pragma once

// The Cartan-Maurer form algebra on (u, w, th, x), where in the calculus
//   w = dx x^-1      u = dth x^-1 - dx x^-1 th x^-1.
// The presentation's rule table is typed from closed forms; the derivation
// route below recomputes every product inside the calculus and re-expresses
// it in the form basis, so the table is checked against an independent path.

#include "qsp/hopf.hpp"

namespace qsp {

// Form-algebra presentation; letters 0=u, 1=w, 2=th, 3=x.
const Presentation& omega(Family f, const Bindings& b = {});

// Calculus images of the form generators.
Element cm_w(const Presentation& gamma);
Element cm_u(const Presentation& gamma);

// Push a form element through the embedding into the calculus with the same
// family and bindings.
Element omega_to_gamma(const Element& a);

// Rewrite a calculus element in the basis u^a w^b th^e x^n.  The change of
// basis is triangular, so this is exact; throws std::domain_error when a
// division by a bound-to-zero leading coefficient blocks it.
Element gamma_to_omega(const Element& g);

// Normal form of the two-letter word [a, b] computed in the calculus and
// pulled back; independent of the form presentation's own rule table.
Element derive_omega_product(const Presentation& O, Letter a, Letter b);

// Co-structure with primitive u and w over the function-algebra images.
const CoStructure& omega_hopf(const Presentation& O,
                              AntipodeConvention conv = AntipodeConvention::Graded);

}  // namespace qsp
