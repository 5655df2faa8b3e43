#pragma once

// Co-structures on the calculus: the coproduct extending the group-like
// coproduct of the function algebra, the right and left co-actions, counit,
// and antipode.  All are generated by letter images: coproduct and counit
// extend multiplicatively (with Koszul signs), the antipode extends as a
// graded antihomomorphism (plain antihomomorphism under the ungraded
// convention).

#include <array>

#include "qsp/tensor.hpp"

namespace qsp {

enum class AntipodeConvention { Graded, Ungraded };

std::string convention_name(AntipodeConvention c);

class CoStructure {
  public:
    CoStructure(const Presentation& G, AntipodeConvention conv,
                std::array<TensorElement, 5> delta, std::array<ParamRational, 5> eps,
                std::array<Element, 5> antipode);

    const Presentation& pres() const { return *alg_; }
    AntipodeConvention convention() const { return conv_; }

    const TensorElement& delta_of(Letter l) const { return delta_[l]; }
    const ParamRational& eps_of(Letter l) const { return eps_[l]; }
    const Element& antipode_of(Letter l) const { return s_[l]; }

    TensorElement coproduct(const WordSum& a) const;
    TensorElement coproduct(const Element& a) const;
    ParamRational counit(const WordSum& a) const;
    ParamRational counit(const Element& a) const;
    Element antipode(const WordSum& a) const;
    Element antipode(const Element& a) const;

  private:
    const Presentation* alg_;
    AntipodeConvention conv_;
    std::array<TensorElement, 5> delta_;
    std::array<ParamRational, 5> eps_;
    std::array<Element, 5> s_;
};

// Full co-structure on a differential presentation.  The antipode image of
// a differential is the differential of the antipode, so the commutation of
// the antipode with d holds on generators by construction and on products
// as a theorem.
const CoStructure& hopf(const Presentation& G,
                        AntipodeConvention conv = AntipodeConvention::Graded);

// Right co-action (second slot in the function algebra) and left co-action.
const CoStructure& coaction_right(const Presentation& G);
const CoStructure& coaction_left(const Presentation& G);

}  // namespace qsp
