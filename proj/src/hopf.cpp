#include "qsp/hopf.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

#include "qsp/calculus.hpp"

namespace qsp {

std::string convention_name(AntipodeConvention c) {
    return c == AntipodeConvention::Graded ? "graded" : "ungraded";
}

CoStructure::CoStructure(const Presentation& G, AntipodeConvention conv,
                         std::array<TensorElement, 5> delta, std::array<ParamRational, 5> eps,
                         std::array<Element, 5> antipode)
    : alg_(&G),
      conv_(conv),
      delta_(std::move(delta)),
      eps_(std::move(eps)),
      s_(std::move(antipode)) {}

TensorElement CoStructure::coproduct(const WordSum& a) const {
    if (&a.pres() != alg_) throw std::logic_error("co-structure applied across presentations");
    TensorElement out(*alg_, 2);
    TensorElement unit = TensorElement::pure({Element::one(*alg_), Element::one(*alg_)});
    for (const auto& [w, c] : a.terms()) {
        TensorElement acc = unit;
        for (Letter l : w) acc = acc * delta_[l];
        out.add_scaled(acc, c);
    }
    return out;
}

TensorElement CoStructure::coproduct(const Element& a) const { return coproduct(a.to_words()); }

ParamRational CoStructure::counit(const WordSum& a) const {
    if (&a.pres() != alg_) throw std::logic_error("co-structure applied across presentations");
    ParamRational out(0);
    for (const auto& [w, c] : a.terms()) {
        ParamRational acc = c;
        for (Letter l : w) {
            acc = acc * eps_[l];
            if (acc.is_zero()) break;
        }
        out += acc;
    }
    return out;
}

ParamRational CoStructure::counit(const Element& a) const { return counit(a.to_words()); }

Element CoStructure::antipode(const WordSum& a) const {
    if (&a.pres() != alg_) throw std::logic_error("co-structure applied across presentations");
    Element out(*alg_);
    for (const auto& [w, c] : a.terms()) {
        // S(l1 ... ln) = sign * S(ln) ... S(l1), the graded sign collecting
        // one factor (-1)^{p(li) p(lj)} per transposed pair.
        int sign = 0;
        if (conv_ == AntipodeConvention::Graded) {
            for (size_t i = 0; i < w.size(); ++i)
                for (size_t j = i + 1; j < w.size(); ++j)
                    sign += alg_->parity_of_letter(w[i]) * alg_->parity_of_letter(w[j]);
        }
        Element acc = Element::one(*alg_);
        for (size_t i = w.size(); i-- > 0;) acc = acc * s_[w[i]];
        out.add_scaled(acc, sign % 2 ? -c : c);
    }
    return out;
}

Element CoStructure::antipode(const Element& a) const { return antipode(a.to_words()); }

namespace {

enum class CoVariant { Full, Right, Left };

std::unique_ptr<CoStructure> build_gamma_costructure(const Presentation& G, CoVariant v,
                                                     AntipodeConvention conv) {
    if (G.kind() != AlgebraKind::Gamma)
        throw std::logic_error("co-structure factory expects a differential presentation");

    Element ONE = Element::one(G);
    Element DTH = Element::generator(G, 0), DX = Element::generator(G, 1),
            TH = Element::generator(G, 2), X = Element::generator(G, 3),
            XI = Element::generator(G, kXInv);
    auto T = [&](const Element& a, const Element& b) { return TensorElement::pure({a, b}); };

    // The function-algebra generators are group-like (x) or primitive over
    // the group-like (th); the same images serve all three variants.
    std::array<TensorElement, 5> delta = {TensorElement(G, 2), TensorElement(G, 2),
                                          T(TH, X) + T(X, TH), T(X, X), T(XI, XI)};
    switch (v) {
        case CoVariant::Full:
            delta[1] = T(DX, X) + T(X, DX);
            delta[0] = T(DTH, X) + T(DX, TH) + T(X, DTH) - T(TH, DX);
            break;
        case CoVariant::Right:
            delta[1] = T(DX, X);
            delta[0] = T(DTH, X) + T(DX, TH);
            break;
        case CoVariant::Left:
            delta[1] = T(X, DX);
            delta[0] = T(X, DTH) - T(TH, DX);
            break;
    }

    std::array<ParamRational, 5> eps = {ParamRational(0), ParamRational(0), ParamRational(0),
                                        ParamRational(1), ParamRational(1)};

    std::array<Element, 5> s = {Element(G), Element(G), Element(G), Element(G), Element(G)};
    s[3] = XI;
    s[kXInv] = X;
    s[2] = G.normalize(WordSum(G, Word{kXInv, 2, kXInv}, ParamRational(-1)));
    s[1] = d(s[3]);
    s[0] = d(s[2]);

    return std::make_unique<CoStructure>(G, conv, std::move(delta), std::move(eps), std::move(s));
}

const CoStructure& costructure_cached(const Presentation& G, int variant, int conv) {
    static std::mutex mu;
    static std::map<std::tuple<const Presentation*, int, int>, std::unique_ptr<CoStructure>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(&G, variant, conv);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache
                 .emplace(key, build_gamma_costructure(G, static_cast<CoVariant>(variant),
                                                       static_cast<AntipodeConvention>(conv)))
                 .first;
    }
    return *it->second;
}

}  // namespace

const CoStructure& hopf(const Presentation& G, AntipodeConvention conv) {
    return costructure_cached(G, int(CoVariant::Full), int(conv));
}

const CoStructure& coaction_right(const Presentation& G) {
    return costructure_cached(G, int(CoVariant::Right), int(AntipodeConvention::Graded));
}

const CoStructure& coaction_left(const Presentation& G) {
    return costructure_cached(G, int(CoVariant::Left), int(AntipodeConvention::Graded));
}

}  // namespace qsp
