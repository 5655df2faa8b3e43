#include "doctest.h"

#include "qsp/rng.hpp"
#include "qsp/tensor.hpp"

using namespace qsp;

namespace {

Element gen(const Presentation& a, Letter l) { return Element::generator(a, l); }

NormalMono random_mono(Rng& rng) {
    NormalMono m;
    m.e[0] = int32_t(rng.below(3));
    m.e[1] = int32_t(rng.below(2));
    m.e[2] = int32_t(rng.below(2));
    m.e[3] = int32_t(rng.below(5)) - 2;
    return m;
}

TensorElement random_tensor(const Presentation& G, Rng& rng, int arity, int nterms) {
    TensorElement t(G, arity);
    for (int k = 0; k < nterms; ++k) {
        TensorElement::Key key;
        for (int i = 0; i < arity; ++i) key.push_back(random_mono(rng));
        t.add(key, ParamRational(int(rng.below(5)) - 2));
    }
    return t;
}

}  // namespace

TEST_CASE("Koszul signs on simple tensors") {
    const auto& G = Presentation::gamma(Family::I);
    Element one = Element::one(G), TH = gen(G, 2), X = gen(G, 3), DX = gen(G, 1);

    auto t = [&](const Element& a, const Element& b) { return TensorElement::pure({a, b}); };

    // Odd past odd flips the sign; even slots do not.
    CHECK(t(one, TH) * t(TH, one) == -t(TH, TH));
    CHECK(t(one, X) * t(TH, one) == t(TH, X));
    CHECK(t(one, DX) * t(DX, one) == -t(DX, DX));
    CHECK(t(one, DX) * t(TH, one) == -t(TH, DX));

    // The square of the primitive-style tensor of an odd nilpotent vanishes
    // only because of the sign rule.
    TensorElement dth = t(TH, X) + t(X, TH);
    CHECK((dth * dth).is_zero());
}

TEST_CASE("tensor product multiplication is associative") {
    Rng rng(77);
    const auto& G = Presentation::gamma(Family::I);
    for (int k = 0; k < 25; ++k) {
        TensorElement a = random_tensor(G, rng, 2, 2);
        TensorElement b = random_tensor(G, rng, 2, 2);
        TensorElement c = random_tensor(G, rng, 2, 2);
        CHECK((a * b) * c == a * (b * c));
    }
    for (int k = 0; k < 10; ++k) {
        TensorElement a = random_tensor(G, rng, 3, 2);
        TensorElement b = random_tensor(G, rng, 3, 2);
        TensorElement c = random_tensor(G, rng, 3, 2);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("slot maps and collapse") {
    const auto& G = Presentation::gamma(Family::I);
    Element TH = gen(G, 2), X = gen(G, 3);

    TensorElement t = TensorElement::pure({TH, X});
    CHECK(t.collapse() == TH * X);

    // Doubling a slot via expand_slot splices arity correctly.
    auto dup = [&](const Element& e) { return TensorElement::pure({e, Element::one(G)}); };
    TensorElement e3 = t.expand_slot(0, dup);
    CHECK(e3.arity() == 3);
    CHECK(e3 == TensorElement::pure({TH, Element::one(G), X}));

    auto dbl = [&](const Element& e) { return ParamRational(2) * e; };
    CHECK(t.map_slot(1, dbl) == ParamRational(2) * t);

    CHECK(TensorElement::pure({X, X}).tensor(TensorElement::simple(TH)).arity() == 3);

    // Slot products that vanish drop the whole term.
    TensorElement z = TensorElement::pure({TH, TH}) * TensorElement::pure({TH, X});
    CHECK(z.is_zero());
}
