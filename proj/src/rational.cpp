#include "qsp/rational.hpp"

#include <algorithm>
#include <sstream>

namespace qsp {

const std::array<const char*, kNumParams> kParamNames = {"q", "p", "r", "s"};

int param_index(std::string_view name) {
    for (int i = 0; i < kNumParams; ++i)
        if (name == kParamNames[i]) return i;
    return -1;
}

int64_t ParamMono::degree() const {
    int64_t d = 0;
    for (int32_t x : e) d += x;
    return d;
}

bool ParamMono::is_one() const {
    return e == std::array<int32_t, kNumParams>{0, 0, 0, 0};
}

bool ParamMono::divides(const ParamMono& m) const {
    for (int i = 0; i < kNumParams; ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

ParamMono operator*(const ParamMono& a, const ParamMono& b) {
    ParamMono m;
    for (int i = 0; i < kNumParams; ++i) m.e[i] = a.e[i] + b.e[i];
    return m;
}

ParamMono operator/(const ParamMono& a, const ParamMono& b) {
    ParamMono m;
    for (int i = 0; i < kNumParams; ++i) m.e[i] = a.e[i] - b.e[i];
    return m;
}

bool MonoOrder::operator()(const ParamMono& a, const ParamMono& b) const {
    int64_t da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
}

Poly::Poly(const Rat& c) {
    if (c != 0) t_.emplace(ParamMono{}, c);
}

Poly::Poly(const ParamMono& m, const Rat& c) {
    if (c != 0) t_.emplace(m, c);
}

bool Poly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one());
}

const ParamMono& Poly::lead_mono() const {
    if (t_.empty()) throw std::domain_error("Poly: leading term of zero");
    return t_.begin()->first;
}

const Rat& Poly::lead_coeff() const {
    if (t_.empty()) throw std::domain_error("Poly: leading term of zero");
    return t_.begin()->second;
}

void Poly::add_term(const ParamMono& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.t_) out.add_term(m, c);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly out = a;
    for (const auto& [m, c] : b.t_) out.add_term(m, -c);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.t_)
        for (const auto& [mb, cb] : b.t_) out.add_term(ma * mb, ca * cb);
    return out;
}

Poly operator-(const Poly& a) {
    Poly out;
    for (const auto& [m, c] : a.t_) out.t_.emplace(m, -c);
    return out;
}

Poly operator*(const Poly& a, const Rat& c) {
    Poly out;
    if (c == 0) return out;
    for (const auto& [m, k] : a.t_) out.t_.emplace(m, k * c);
    return out;
}

ParamMono Poly::mono_content() const {
    ParamMono m;
    if (t_.empty()) return m;
    bool first = true;
    for (const auto& [mono, c] : t_) {
        (void)c;
        if (first) {
            m = mono;
            first = false;
        } else {
            for (int i = 0; i < kNumParams; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
        }
    }
    return m;
}

Poly Poly::shifted(const ParamMono& m) const {
    Poly out;
    for (const auto& [mono, c] : t_) out.t_.emplace(mono * m, c);
    return out;
}

namespace {

// Highest exponent of variable v, or -1 when v is absent.
int32_t top_degree(const Poly& a, int v) {
    int32_t d = -1;
    for (const auto& [m, c] : a.terms()) {
        (void)c;
        d = std::max(d, m.e[v]);
    }
    return d;
}

int first_variable(const Poly& a) {
    for (int v = 0; v < kNumParams; ++v)
        if (top_degree(a, v) > 0) return v;
    return -1;
}

// Coefficient of v^k, a polynomial in the remaining variables.
Poly coeff_of(const Poly& a, int v, int32_t k) {
    Poly out;
    for (const auto& [m, c] : a.terms()) {
        if (m.e[v] != k) continue;
        ParamMono rest = m;
        rest.e[v] = 0;
        out.add_term(rest, c);
    }
    return out;
}

Poly times_power(const Poly& a, int v, int32_t k) {
    ParamMono m;
    m.e[v] = k;
    return a.shifted(m);
}

// Content of a viewed as a univariate polynomial in v: the gcd of its
// v-coefficients.
Poly content_in(const Poly& a, int v) {
    Poly g;
    for (int32_t k = top_degree(a, v); k >= 0; --k) {
        Poly c = coeff_of(a, v, k);
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return Poly(Rat(1));
    }
    return g;
}

bool try_div_exact(const Poly& a, const Poly& b, Poly& quot) {
    Poly rem = a;
    quot = Poly();
    while (!rem.is_zero()) {
        const ParamMono& lm = rem.lead_mono();
        const ParamMono& lb = b.lead_mono();
        if (!lb.divides(lm)) return false;
        ParamMono m = lm / lb;
        Rat c = rem.lead_coeff() / b.lead_coeff();
        quot.add_term(m, c);
        rem = rem - b.shifted(m) * c;
    }
    return true;
}

// Pseudo-remainder of a by b in variable v (deg_v a >= deg_v b > absent-free).
Poly pseudo_rem(Poly a, const Poly& b, int v) {
    int32_t db = top_degree(b, v);
    Poly lb = coeff_of(b, v, db);
    int32_t da = top_degree(a, v);
    while (!a.is_zero() && (da = top_degree(a, v)) >= db) {
        Poly la = coeff_of(a, v, da);
        a = a * lb - times_power(la * b, v, da - db);
        if (top_degree(a, v) == da)
            throw std::logic_error("pseudo_rem: degree did not drop");
    }
    return a;
}

Poly make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    Rat inv_lc = Rat(1) / a.lead_coeff();
    return a * inv_lc;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly(Rat(1));

    // Divisibility probes catch gcd(c*g, g), the dominant shape here.
    Poly quot;
    if (try_div_exact(a, b, quot)) return make_monic(b);
    if (try_div_exact(b, a, quot)) return make_monic(a);

    int v = first_variable(a);
    int vb = first_variable(b);
    if (v < 0 || (vb >= 0 && vb < v)) v = vb;
    if (v < 0) return Poly(Rat(1));
    if (top_degree(a, v) <= 0 || top_degree(b, v) <= 0)
        return poly_gcd(content_in(a, v), content_in(b, v));

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly f = poly_div_exact(a, ca), g = poly_div_exact(b, cb);
    Poly cont = poly_gcd(ca, cb);

    if (top_degree(f, v) < top_degree(g, v)) std::swap(f, g);
    while (true) {
        Poly rem = pseudo_rem(f, g, v);
        if (rem.is_zero()) break;
        if (top_degree(rem, v) <= 0) return make_monic(cont);  // coprime in v
        rem = poly_div_exact(rem, content_in(rem, v));
        f = g;
        g = rem;
    }
    return make_monic(cont * poly_div_exact(g, content_in(g, v)));
}

Poly poly_div_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_div_exact: division by zero");
    Poly quot;
    if (!try_div_exact(a, b, quot)) throw std::domain_error("poly_div_exact: not divisible");
    return quot;
}

ParamRational::ParamRational() : den_(Rat(1)) {}

ParamRational::ParamRational(long long n) : num_(Rat(n)), den_(Rat(1)) {}

ParamRational::ParamRational(const Rat& c) : num_(c), den_(Rat(1)) {}

ParamRational::ParamRational(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

ParamRational ParamRational::param(int index) {
    ParamMono m;
    m.e[index] = 1;
    return monomial(m);
}

ParamRational ParamRational::monomial(const ParamMono& m, const Rat& c) {
    ParamRational out;
    out.num_ = Poly(m, c);
    return out;
}

bool ParamRational::is_one() const {
    return den_ == Poly(Rat(1)) && num_ == Poly(Rat(1));
}

bool ParamRational::is_minus_one() const {
    return den_ == Poly(Rat(1)) && num_ == Poly(Rat(-1));
}

bool ParamRational::is_integer() const {
    if (!den_.is_constant() || !num_.is_constant()) return false;
    if (num_.is_zero()) return true;
    Rat v = num_.lead_coeff() / den_.lead_coeff();
    return denominator(v) == 1;
}

void ParamRational::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("ParamRational: zero denominator");
    if (num_.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    ParamMono mn = num_.mono_content();
    ParamMono md = den_.mono_content();
    Poly n0 = num_.shifted(ParamMono{} / mn);
    Poly d0 = den_.shifted(ParamMono{} / md);
    Poly g = poly_gcd(n0, d0);
    if (!(g == Poly(Rat(1)))) {
        n0 = poly_div_exact(n0, g);
        d0 = poly_div_exact(d0, g);
    }
    Rat lc = d0.lead_coeff();
    den_ = d0 * (Rat(1) / lc);
    num_ = n0.shifted(mn / md) * (Rat(1) / lc);
}

ParamRational ParamRational::inv() const {
    if (is_zero()) throw std::domain_error("ParamRational: division by zero");
    return ParamRational(den_, num_);
}

ParamRational operator+(const ParamRational& a, const ParamRational& b) {
    return ParamRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRational operator-(const ParamRational& a, const ParamRational& b) {
    return ParamRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ParamRational operator*(const ParamRational& a, const ParamRational& b) {
    return ParamRational(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRational operator/(const ParamRational& a, const ParamRational& b) {
    if (b.is_zero()) throw std::domain_error("ParamRational: division by zero");
    return ParamRational(a.num_ * b.den_, a.den_ * b.num_);
}

ParamRational operator-(const ParamRational& a) {
    ParamRational out = a;
    out.num_ = -out.num_;
    return out;
}

ParamRational& ParamRational::operator+=(const ParamRational& b) { return *this = *this + b; }
ParamRational& ParamRational::operator-=(const ParamRational& b) { return *this = *this - b; }
ParamRational& ParamRational::operator*=(const ParamRational& b) { return *this = *this * b; }

namespace {

ParamRational substitute_poly(const Poly& a, const std::array<const ParamRational*, kNumParams>& bound) {
    ParamRational acc;
    for (const auto& [m, c] : a.terms()) {
        ParamRational term(c);
        ParamMono rest;
        for (int v = 0; v < kNumParams; ++v) {
            if (bound[v])
                term *= pow(*bound[v], m.e[v]);
            else
                rest.e[v] = m.e[v];
        }
        acc += term * ParamRational::monomial(rest);
    }
    return acc;
}

}  // namespace

ParamRational ParamRational::substitute(const Bindings& b) const {
    std::array<const ParamRational*, kNumParams> bound{};
    for (const auto& [name, value] : b) {
        int v = param_index(name);
        if (v < 0) throw std::domain_error("substitute: unknown parameter '" + name + "'");
        bound[v] = &value;
    }
    ParamRational n = substitute_poly(num_, bound);
    ParamRational d = substitute_poly(den_, bound);
    if (d.is_zero()) throw std::domain_error("substitute: denominator vanishes under binding");
    return n / d;
}

bool ParamRational::needs_parens() const {
    return !(den_ == Poly(Rat(1))) || num_.size() > 1;
}

namespace {

std::string rat_str(const Rat& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string term_str(const ParamMono& m, const Rat& c, bool lead) {
    std::string s;
    Rat a = c < 0 ? Rat(-c) : c;
    if (c < 0)
        s += "-";
    else if (!lead)
        s += "+";
    std::string vars;
    for (int v = 0; v < kNumParams; ++v) {
        if (m.e[v] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += kParamNames[v];
        if (m.e[v] != 1) vars += "^" + std::to_string(m.e[v]);
    }
    if (vars.empty()) return s + rat_str(a);
    if (a != 1) s += rat_str(a) + "*";
    return s + vars;
}

}  // namespace

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool lead = true;
    for (const auto& [m, c] : t_) {
        s += term_str(m, c, lead);
        lead = false;
    }
    return s;
}

std::string ParamRational::str() const {
    if (den_ == Poly(Rat(1))) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

ParamRational pow(const ParamRational& a, long long n) {
    if (n < 0) return pow(a.inv(), -n);
    ParamRational out(1);
    ParamRational base = a;
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

ParamRational pr_q() { return ParamRational::param(0); }
ParamRational pr_p() { return ParamRational::param(1); }
ParamRational pr_r() { return ParamRational::param(2); }
ParamRational pr_s() { return ParamRational::param(3); }

}  // namespace qsp
