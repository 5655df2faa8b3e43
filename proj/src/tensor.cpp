#include "qsp/tensor.hpp"

#include <stdexcept>

namespace qsp {

TensorElement::TensorElement(const Presentation& a, int arity) : alg_(&a), arity_(arity) {
    if (arity < 1) throw std::logic_error("tensor arity must be positive");
}

TensorElement TensorElement::simple(const Element& a) {
    TensorElement t(a.pres(), 1);
    for (const auto& [m, c] : a.terms()) t.add({m}, c);
    return t;
}

TensorElement TensorElement::pure(const std::vector<Element>& slots) {
    if (slots.empty()) throw std::logic_error("tensor needs at least one slot");
    TensorElement t = simple(slots[0]);
    for (size_t i = 1; i < slots.size(); ++i) t = t.tensor(simple(slots[i]));
    return t;
}

void TensorElement::add(const Key& k, const ParamRational& c) {
    if (int(k.size()) != arity_) throw std::logic_error("tensor key arity mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

void TensorElement::add_scaled(const TensorElement& o, const ParamRational& c) {
    if (alg_ != o.alg_ || arity_ != o.arity_)
        throw std::logic_error("tensor shape mismatch");
    for (const auto& [k, v] : o.t_) add(k, c * v);
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    TensorElement r = a;
    r.add_scaled(b, ParamRational(1));
    return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    TensorElement r = a;
    r.add_scaled(b, ParamRational(-1));
    return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    if (a.alg_ != b.alg_ || a.arity_ != b.arity_)
        throw std::logic_error("tensor shape mismatch");
    const Presentation& G = *a.alg_;
    const int n = a.arity_;
    TensorElement r(G, n);

    for (const auto& [ka, ca] : a.t_) {
        for (const auto& [kb, cb] : b.t_) {
            int sign = 0;
            for (int j = 0; j < n; ++j)
                for (int i = j + 1; i < n; ++i) sign += G.parity_of(kb[j]) * G.parity_of(ka[i]);

            ParamRational c = ca * cb;
            if (sign % 2) c = -c;

            // Slotwise products can split into several basis terms each.
            std::vector<std::pair<TensorElement::Key, ParamRational>> acc{{{}, c}};
            for (int i = 0; i < n && !acc.empty(); ++i) {
                Element prod = Element::mono(G, ka[i]) * Element::mono(G, kb[i]);
                std::vector<std::pair<TensorElement::Key, ParamRational>> next;
                for (const auto& [key, k] : acc) {
                    for (const auto& [m, cm] : prod.terms()) {
                        TensorElement::Key nk = key;
                        nk.push_back(m);
                        next.push_back({std::move(nk), k * cm});
                    }
                }
                acc = std::move(next);
            }
            for (const auto& [key, k] : acc) r.add(key, k);
        }
    }
    return r;
}

TensorElement operator*(const ParamRational& c, const TensorElement& a) {
    TensorElement r(*a.alg_, a.arity_);
    r.add_scaled(a, c);
    return r;
}

TensorElement operator-(const TensorElement& a) { return ParamRational(-1) * a; }

TensorElement TensorElement::tensor(const TensorElement& o) const {
    if (alg_ != o.alg_) throw std::logic_error("tensors over different presentations");
    TensorElement r(*alg_, arity_ + o.arity_);
    for (const auto& [ka, ca] : t_) {
        for (const auto& [kb, cb] : o.t_) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add(k, ca * cb);
        }
    }
    return r;
}

TensorElement TensorElement::map_slot(int i, const std::function<Element(const Element&)>& f) const {
    return expand_slot(i, [&](const Element& e) { return TensorElement::simple(f(e)); });
}

TensorElement TensorElement::expand_slot(
    int i, const std::function<TensorElement(const Element&)>& f) const {
    if (i < 0 || i >= arity_) throw std::logic_error("tensor slot out of range");
    int out_arity = -1;
    TensorElement r(*alg_, 1);
    bool first = true;
    for (const auto& [k, c] : t_) {
        TensorElement img = f(Element::mono(*alg_, k[size_t(i)]));
        if (first) {
            out_arity = arity_ - 1 + img.arity();
            r = TensorElement(*alg_, out_arity);
            first = false;
        } else if (arity_ - 1 + img.arity() != out_arity) {
            throw std::logic_error("slot map produced inconsistent arity");
        }
        for (const auto& [ik, ic] : img.terms()) {
            Key nk(k.begin(), k.begin() + i);
            nk.insert(nk.end(), ik.begin(), ik.end());
            nk.insert(nk.end(), k.begin() + i + 1, k.end());
            r.add(nk, c * ic);
        }
    }
    if (first) {
        // Empty tensor: probe the map's arity with 1 to keep shapes stable.
        TensorElement img = f(Element::one(*alg_));
        r = TensorElement(*alg_, arity_ - 1 + img.arity());
    }
    return r;
}

Element TensorElement::collapse() const {
    Element out(*alg_);
    for (const auto& [k, c] : t_) {
        Element prod = Element::mono(*alg_, k[0]);
        for (int i = 1; i < arity_; ++i) prod = prod * Element::mono(*alg_, k[size_t(i)]);
        out.add_scaled(prod, c);
    }
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (alg_ != o.alg_ || arity_ != o.arity_)
        throw std::logic_error("tensor shape mismatch");
    return t_ == o.t_;
}

std::string TensorElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
        std::string body;
        for (int i = 0; i < arity_; ++i) {
            if (i) body += " (x) ";
            body += alg_->mono_str(k[size_t(i)]);
        }
        std::string term;
        if (c.is_one())
            term = body;
        else if (c.is_minus_one())
            term = "-" + body;
        else {
            std::string cs = c.str();
            if (c.needs_parens()) cs = "(" + cs + ")";
            term = cs + "*" + body;
        }
        if (!s.empty()) s += "  +  ";
        s += term;
    }
    return s;
}

}  // namespace qsp
