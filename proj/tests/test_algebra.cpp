#include "doctest.h"

#include <stdexcept>

#include "qsp/algebra.hpp"
#include "qsp/rng.hpp"

using namespace qsp;

namespace {

Element gen(const Presentation& a, Letter l) { return Element::generator(a, l); }

Element norm_word(const Presentation& a, const Word& w, Strategy st = Strategy::Leftmost) {
    return a.normalize(WordSum(a, w), st);
}

Word random_word(Rng& rng, size_t max_len) {
    Word w(1 + rng.below(max_len));
    for (auto& l : w) l = Letter(rng.below(5));
    return w;
}

}  // namespace

TEST_CASE("superplane and calculus rules produce the expected normal forms") {
    const auto& G1 = Presentation::gamma(Family::I);
    const auto& G2 = Presentation::gamma(Family::II);
    Element X = gen(G1, 3), TH = gen(G1, 2), DX = gen(G1, 1), DTH = gen(G1, 0);

    CHECK(X * TH == pr_q() * (TH * X));
    CHECK((TH * TH).is_zero());
    CHECK((DX * DX).is_zero());
    CHECK(X * DX == pr_p() * (DX * X));
    CHECK(X * DTH == pr_p() * pr_q() * (DTH * X));
    CHECK(TH * DTH == DTH * TH);  // forced by d(th^2) = 0
    CHECK(DX * DTH == pr_p() * pr_q() * (DTH * DX));

    // theta dx mixes the two bidegree-(1,1) monomials in family I.
    Element tdx = TH * DX;
    CHECK(tdx.size() == 2);
    NormalMono dxth{0, 1, 1, 0}, dthx{1, 0, 0, 1};
    CHECK(tdx.coeff(dxth) == -pr_q().inv());
    CHECK(tdx.coeff(dthx) == ParamRational(1) - pr_p());

    Element tdx2 = gen(G2, 2) * gen(G2, 1);
    CHECK(tdx2.size() == 1);
    CHECK(tdx2.coeff(dxth) == -pr_r());

    Element xdth2 = gen(G2, 3) * gen(G2, 0);
    CHECK(xdth2.coeff(dthx) == pr_q());
    CHECK(xdth2.coeff(dxth) == pr_q() * pr_r() - ParamRational(1));

    CHECK(gen(G2, 1) * gen(G2, 0) == pr_r().inv() * (gen(G2, 0) * gen(G2, 1)));
}

TEST_CASE("x^-1 rules invert the x rules exactly") {
    for (Family f : {Family::I, Family::II}) {
        const auto& G = Presentation::gamma(f);
        Element X = gen(G, 3), XI = gen(G, kXInv);
        CHECK(X * XI == Element::one(G));
        CHECK(XI * X == Element::one(G));
        for (Letter h : {Letter(0), Letter(1), Letter(2)}) {
            Element H = gen(G, h);
            CHECK(X * (XI * H) == H);
            CHECK(XI * (X * H) == H);
        }
    }

    // Closed forms of the conjugated rules.
    const auto& G1 = Presentation::gamma(Family::I);
    Element XI = gen(G1, kXInv);
    auto XIpow = [&](int k) {
        Element e = Element::one(G1);
        for (int i = 0; i < k; ++i) e = e * XI;
        return e;
    };
    CHECK(XI * gen(G1, 2) == pr_q().inv() * (gen(G1, 2) * XI));
    CHECK(XI * gen(G1, 1) == pr_p().inv() * (gen(G1, 1) * XI));
    CHECK(XI * gen(G1, 0) == (pr_p() * pr_q()).inv() * (gen(G1, 0) * XI));

    const auto& G2 = Presentation::gamma(Family::II);
    Element XI2 = gen(G2, kXInv);
    Element lhs = XI2 * gen(G2, 0);
    Element expect = pr_q().inv() * (gen(G2, 0) * XI2) -
                     (pr_q() * pr_q() * pr_s()).inv() * (pr_q() * pr_r() - ParamRational(1)) *
                         (gen(G2, 1) * gen(G2, 2) * XI2 * XI2);
    CHECK(lhs == expect);
    (void)XIpow;
}

TEST_CASE("defining relations vanish, also inside random contexts") {
    Rng rng(2024);
    for (Family f : {Family::I, Family::II}) {
        const auto& G = Presentation::gamma(f);
        for (const auto& rel : defining_relations(G)) {
            WordSum diff = rel.lhs - rel.rhs;
            CHECK(G.normalize(diff).is_zero());
            for (int k = 0; k < 20; ++k) {
                WordSum a(G, random_word(rng, 3));
                WordSum b(G, random_word(rng, 3));
                CHECK(G.normalize(a * diff * b).is_zero());
            }
        }
    }
}

TEST_CASE("normalization is strategy independent and terminates") {
    for (Family f : {Family::I, Family::II}) {
        const auto& G = Presentation::gamma(f);

        // Exhaustive over short words: covers every overlap of two rules.
        Word w;
        for (int len = 2; len <= 4; ++len) {
            std::vector<size_t> idx(len, 0);
            while (true) {
                w.assign(len, 0);
                for (int i = 0; i < len; ++i) w[i] = Letter(idx[i]);
                CHECK(norm_word(G, w, Strategy::Leftmost) == norm_word(G, w, Strategy::Rightmost));
                int i = len - 1;
                while (i >= 0 && ++idx[i] == 5) idx[i--] = 0;
                if (i < 0) break;
            }
        }

        Rng rng(f == Family::I ? 7 : 8);
        for (int k = 0; k < 150; ++k) {
            Word rw = random_word(rng, 12);
            NormalizeStats sl, sr;
            Element L = G.normalize(WordSum(G, rw), Strategy::Leftmost, &sl);
            Element R = G.normalize(WordSum(G, rw), Strategy::Rightmost, &sr);
            CHECK(L == R);
        }
    }
}

TEST_CASE("normal forms are fixed points and products associate") {
    Rng rng(99);
    for (Family f : {Family::I, Family::II}) {
        const auto& G = Presentation::gamma(f);
        for (int k = 0; k < 40; ++k) {
            Element U = norm_word(G, random_word(rng, 4));
            CHECK(G.normalize(U.to_words()) == U);

            Element V = norm_word(G, random_word(rng, 4));
            Element W = norm_word(G, random_word(rng, 4));
            CHECK((U * V) * W == U * (V * W));
        }
    }
}

TEST_CASE("grading is additive on homogeneous elements") {
    Rng rng(5);
    const auto& G = Presentation::gamma(Family::I);
    for (int k = 0; k < 60; ++k) {
        Word wu = random_word(rng, 5), wv = random_word(rng, 5);
        Element U = norm_word(G, wu), V = norm_word(G, wv);
        auto gu = grade_of(U), gv = grade_of(V), guv = grade_of(U * V);
        REQUIRE(gu.has_value());
        REQUIRE(gv.has_value());
        REQUIRE(guv.has_value());
        if (!(U * V).is_zero()) {
            CHECK(guv->parity == (gu->parity + gv->parity) % 2);
            CHECK(guv->form_degree == gu->form_degree + gv->form_degree);
        }
    }
    NormalMono m{2, 1, 1, -3};
    CHECK(G.parity_of(m) == 0);
    CHECK(G.form_degree_of(m) == 3);
}

TEST_CASE("parameter bindings specialize the rule table") {
    Bindings b{{"p", ParamRational(1)}};
    const auto& G = Presentation::gamma(Family::I, b);
    const Rule* r = G.rule(2, 1);
    REQUIRE(r != nullptr);
    CHECK(r->rhs.size() == 1);  // the (1-p) dth x term drops out at p = 1
    CHECK(gen(G, 3) * gen(G, 1) == gen(G, 1) * gen(G, 3));

    // A binding that kills a leading coefficient leaves x dx without an
    // invertible leading term, so the x^-1 table cannot be built.
    Bindings bad{{"p", ParamRational(0)}};
    CHECK_THROWS_AS(Presentation::gamma(Family::I, bad), std::domain_error);
}

TEST_CASE("element and word printing") {
    const auto& G = Presentation::gamma(Family::I);
    Element X = gen(G, 3), TH = gen(G, 2);
    CHECK((X * TH).str() == "q*th*x");
    CHECK(Element::one(G).str() == "1");
    CHECK(Element::zero(G).str() == "0");
    Element m = Element::mono(G, NormalMono{2, 1, 0, -3});
    CHECK(m.str() == "dth^2*dx*x^-3");
    CHECK((ParamRational(1) - pr_p()).str() == "-p+1");
    Element two_terms = TH * gen(G, 1);
    CHECK(two_terms.str() == "-q^-1*dx*th + (-p+1)*dth*x");
}
