#include "qsp/calculus.hpp"

#include <stdexcept>

namespace qsp {

WordSum d_raw(const WordSum& in) {
    const Presentation& G = in.pres();
    if (G.kind() != AlgebraKind::Gamma)
        throw std::logic_error("d acts on the differential calculus presentation");

    WordSum out(G);
    for (const auto& [w, c] : in.terms()) {
        int prefix_parity = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            Letter l = w[i];
            std::vector<std::pair<ParamRational, Word>> img;
            switch (l) {
                case 2:
                    img.push_back({ParamRational(1), Word{0}});
                    break;
                case 3:
                    img.push_back({ParamRational(1), Word{1}});
                    break;
                case kXInv:
                    img.push_back({ParamRational(-1), Word{kXInv, 1, kXInv}});
                    break;
                default:
                    break;  // d(dth) = d(dx) = 0
            }
            for (const auto& [ic, iw] : img) {
                Word nw(w.begin(), w.begin() + i);
                nw.insert(nw.end(), iw.begin(), iw.end());
                nw.insert(nw.end(), w.begin() + i + 1, w.end());
                ParamRational coeff = c * ic;
                if (prefix_parity) coeff = -coeff;
                out.add(nw, coeff);
            }
            prefix_parity = (prefix_parity + G.parity_of_letter(l)) % 2;
        }
    }
    return out;
}

Element d(const Element& a) { return a.pres().normalize(d_raw(a.to_words())); }

TwoFormDerivation derive_two_form_relations(Family f, const Bindings& b) {
    Presentation partial(AlgebraKind::Gamma, f, b, Presentation::gamma_alphabet(),
                         Presentation::gamma_first_order_rules(f, b));

    const Word dx_dx{1, 1}, dx_dth{1, 0}, dth_dx{0, 1};

    TwoFormDerivation out;
    bool have_lambda = false;
    out.consistent = true;

    for (const auto& rel : defining_relations(partial)) {
        WordSum image = partial.reduce_words(d_raw(rel.lhs - rel.rhs));

        ParamRational c_xx, c_xd, c_dx;
        bool stray = false;
        for (const auto& [w, c] : image.terms()) {
            if (w == dx_dx)
                c_xx = c;
            else if (w == dx_dth)
                c_xd = c;
            else if (w == dth_dx)
                c_dx = c;
            else
                stray = true;
        }
        if (stray) {
            out.consistent = false;
            continue;
        }

        if (!c_xx.is_zero()) out.dx_sq_zero = true;

        if (!c_xd.is_zero()) {
            // c_xd * dx dth + c_dx * dth dx = 0 pins the exchange coefficient.
            ParamRational lam = -c_dx / c_xd;
            if (have_lambda && !(lam == out.lambda2))
                out.consistent = false;
            out.lambda2 = lam;
            have_lambda = true;
        } else if (!c_dx.is_zero()) {
            out.consistent = false;  // would force dth dx = 0
        }
    }

    out.consistent = out.consistent && have_lambda && out.dx_sq_zero;
    return out;
}

}  // namespace qsp
