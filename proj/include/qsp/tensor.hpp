#pragma once

// Fixed-arity tensors over one presentation, with the Koszul sign rule
//   (a1 (x) a2) (b1 (x) b2) = (-1)^{p(b1) p(a2)} a1 b1 (x) a2 b2
// and its arity-n generalization.  Slot maps carry no signs: every map used
// here (coproducts, counit, antipode) is parity preserving.

#include <functional>
#include <vector>

#include "qsp/algebra.hpp"

namespace qsp {

class TensorElement {
  public:
    using Key = std::vector<NormalMono>;

    TensorElement(const Presentation& a, int arity);
    static TensorElement simple(const Element& a);  // arity 1
    static TensorElement pure(const std::vector<Element>& slots);

    const Presentation& pres() const { return *alg_; }
    int arity() const { return arity_; }
    const std::map<Key, ParamRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Key& k, const ParamRational& c);
    void add_scaled(const TensorElement& o, const ParamRational& c);

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(const ParamRational& c, const TensorElement& a);
    friend TensorElement operator-(const TensorElement& a);

    TensorElement tensor(const TensorElement& o) const;  // slot concatenation

    // Replace slot i through a linear map; arity is preserved.
    TensorElement map_slot(int i, const std::function<Element(const Element&)>& f) const;
    // Replace slot i by a tensor image, splicing its slots in place.
    TensorElement expand_slot(int i, const std::function<TensorElement(const Element&)>& f) const;

    Element collapse() const;  // multiply the slots left to right

    bool operator==(const TensorElement& o) const;
    std::string str() const;

  private:
    const Presentation* alg_;
    int arity_;
    std::map<Key, ParamRational> t_;
};

}  // namespace qsp
