#include "qsp/algebra.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qsp {

namespace {

constexpr uint64_t kMaxRewriteSteps = 10'000'000;

using RuleMap = std::map<std::pair<Letter, Letter>, Rule>;
using RawSum = std::map<Word, ParamRational>;

void raw_add(RawSum& m, const Word& w, const ParamRational& c) {
    if (c.is_zero()) return;
    auto it = m.find(w);
    if (it == m.end()) {
        m.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

// Worklist reduction: repeatedly rewrites the first word of the worklist at
// the strategy's redex until no adjacent pair matches a rule.  Merging terms
// through a map keeps coefficient cancellation immediate and the traversal
// order deterministic.
RawSum reduce_raw(const RuleMap& rules, RawSum work, Strategy st, uint64_t* steps_out) {
    RawSum out;
    uint64_t steps = 0;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        const Word& w = node.key();
        const ParamRational& c = node.mapped();

        const Rule* r = nullptr;
        size_t at = 0;
        if (w.size() >= 2) {
            if (st == Strategy::Leftmost) {
                for (size_t i = 0; i + 1 < w.size(); ++i) {
                    auto it = rules.find({w[i], w[i + 1]});
                    if (it != rules.end()) {
                        r = &it->second;
                        at = i;
                        break;
                    }
                }
            } else {
                for (size_t i = w.size() - 1; i-- > 0;) {
                    auto it = rules.find({w[i], w[i + 1]});
                    if (it != rules.end()) {
                        r = &it->second;
                        at = i;
                        break;
                    }
                }
            }
        }

        if (!r) {
            raw_add(out, w, c);
            continue;
        }

        if (++steps > kMaxRewriteSteps)
            throw std::runtime_error("rewriting exceeded the step limit");

        for (const auto& [rc, rw] : r->rhs) {
            Word nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + at);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + at + 2, w.end());
            raw_add(work, nw, c * rc);
        }
    }
    if (steps_out) *steps_out = steps;
    return out;
}

int letter_position(Letter l) { return l == kXInv ? kXPos : l; }

// Irreducible words under a complete table are sorted with consistent sign
// on the x run; anything else means the table was not complete.
bool word_to_mono(const Word& w, const std::array<GenInfo, 4>& alphabet, NormalMono& m) {
    m = NormalMono{};
    int prev = -1;
    Letter prev_letter = 0;
    for (Letter l : w) {
        int pos = letter_position(l);
        if (pos < prev) return false;
        if (prev == kXPos && pos == kXPos && prev_letter != l) return false;
        m.e[pos] += (l == kXInv) ? -1 : 1;
        prev = pos;
        prev_letter = l;
    }
    for (int i = 0; i < 4; ++i)
        if (alphabet[i].nilpotent && m.e[i] > 1) return false;
    return true;
}

std::string letter_name(const std::array<GenInfo, 4>& alphabet, Letter l) {
    return l == kXInv ? "xinv" : alphabet[l].name;
}

std::string coeff_prefix(const ParamRational& c, const std::string& body) {
    if (body.empty()) return c.str();
    if (c.is_one()) return body;
    if (c.is_minus_one()) return "-" + body;
    std::string cs = c.str();
    if (c.needs_parens()) cs = "(" + cs + ")";
    return cs + "*" + body;
}

void join_term(std::string& s, std::string term) {
    if (s.empty()) {
        s = std::move(term);
        return;
    }
    if (!term.empty() && term[0] == '-') {
        s += " - ";
        s += term.substr(1);
    } else {
        s += " + ";
        s += term;
    }
}

}  // namespace

std::string family_name(Family f) { return f == Family::I ? "I" : "II"; }

ConsistencyCoefficients family_coefficients(Family f) {
    ConsistencyCoefficients c;
    c.B = ParamRational(1);
    if (f == Family::I) {
        c.A = pr_p();
        c.F11 = pr_p() * pr_q();
        c.F12 = ParamRational(0);
        c.F21 = -pr_q().inv();
        c.F22 = ParamRational(1) - pr_p();
    } else {
        c.A = pr_s();
        c.F11 = pr_q();
        c.F12 = pr_q() * pr_r() - ParamRational(1);
        c.F21 = -pr_r();
        c.F22 = ParamRational(0);
    }
    return c;
}

ParamRational two_form_lambda(Family f) {
    return f == Family::I ? pr_p() * pr_q() : pr_r().inv();
}

Presentation::Presentation(AlgebraKind kind, Family family, Bindings bindings,
                           std::array<GenInfo, 4> alphabet,
                           std::map<std::pair<Letter, Letter>, Rule> rules)
    : kind_(kind),
      family_(family),
      bindings_(std::move(bindings)),
      alphabet_(std::move(alphabet)),
      rules_(std::move(rules)) {}

const Rule* Presentation::rule(Letter a, Letter b) const {
    auto it = rules_.find({a, b});
    return it == rules_.end() ? nullptr : &it->second;
}

WordSum Presentation::reduce_words(const WordSum& in, Strategy st, NormalizeStats* stats) const {
    RawSum work;
    for (const auto& [w, c] : in.terms()) raw_add(work, w, c);
    uint64_t steps = 0;
    RawSum out = reduce_raw(rules_, std::move(work), st, &steps);
    if (stats) stats->steps = steps;
    WordSum res(*this);
    for (const auto& [w, c] : out) res.add(w, c);
    return res;
}

Element Presentation::normalize(const WordSum& in, Strategy st, NormalizeStats* stats) const {
    WordSum red = reduce_words(in, st, stats);
    Element res(*this);
    for (const auto& [w, c] : red.terms()) {
        NormalMono m;
        if (!word_to_mono(w, alphabet_, m))
            throw std::logic_error("irreducible word is not in normal order; rule table incomplete");
        res.add(m, c);
    }
    return res;
}

int Presentation::parity_of(const NormalMono& m) const {
    int64_t s = 0;
    for (int i = 0; i < 4; ++i) s += int64_t(m.e[i]) * alphabet_[i].parity;
    return int(((s % 2) + 2) % 2);
}

int Presentation::form_degree_of(const NormalMono& m) const {
    int64_t s = 0;
    for (int i = 0; i < 4; ++i) s += int64_t(m.e[i]) * alphabet_[i].form_degree;
    return int(s);
}

Word Presentation::word_of(const NormalMono& m) const {
    Word w;
    for (int i = 0; i < 3; ++i)
        for (int32_t k = 0; k < m.e[i]; ++k) w.push_back(Letter(i));
    Letter xl = m.e[3] >= 0 ? Letter(kXPos) : kXInv;
    for (int32_t k = 0; k < (m.e[3] >= 0 ? m.e[3] : -m.e[3]); ++k) w.push_back(xl);
    return w;
}

std::string Presentation::mono_str(const NormalMono& m) const {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < 4; ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += alphabet_[i].name;
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

int Presentation::letter_by_name(const std::string& name) const {
    for (int i = 0; i < 4; ++i)
        if (alphabet_[i].name == name) return i;
    if (name == "xinv") return kXInv;
    return -1;
}

void Presentation::derive_inverse_rules(std::map<std::pair<Letter, Letter>, Rule>& rules,
                                        const std::array<GenInfo, 4>& alphabet) {
    if (!alphabet[kXPos].invertible)
        throw std::logic_error("deriving x^-1 rules requires an invertible x");

    Rule cancel;
    cancel.rhs = {{ParamRational(1), Word{}}};
    cancel.eq = "";  // definitional: adjoining the inverse, not a cited relation
    rules.insert({{kXPos, kXInv}, cancel});
    rules.insert({{kXInv, kXPos}, cancel});

    // Conjugate x h = c (h x) + E into x^-1 h = c^-1 (h x^-1) - c^-1 x^-1 E x^-1.
    // The descending letter order makes every rule that the reduction of
    // x^-1 E x^-1 can touch available before it is needed.
    for (Letter h : {Letter(2), Letter(1), Letter(0)}) {
        auto it = rules.find({kXPos, h});
        if (it == rules.end())
            throw std::logic_error("rule table has no rule for x * " + alphabet[h].name);

        const Word hx{h, kXPos};
        ParamRational c;
        RawSum extra;
        for (const auto& [rc, rw] : it->second.rhs) {
            if (rw == hx)
                c = rc;
            else
                raw_add(extra, rw, rc);
        }
        if (c.is_zero())
            throw std::domain_error("x * " + alphabet[h].name +
                                    " has no invertible leading coefficient");

        Rule inv;
        inv.eq = it->second.eq;
        inv.derived = true;
        inv.rhs.push_back({c.inv(), Word{h, kXInv}});

        if (!extra.empty()) {
            RawSum conj;
            for (const auto& [ew, ec] : extra) {
                Word w;
                w.push_back(kXInv);
                w.insert(w.end(), ew.begin(), ew.end());
                w.push_back(kXInv);
                raw_add(conj, w, -(c.inv()) * ec);
            }
            RawSum red = reduce_raw(rules, std::move(conj), Strategy::Leftmost, nullptr);
            for (const auto& [rw, rc] : red) inv.rhs.push_back({rc, rw});
        }
        rules.insert({{kXInv, h}, inv});
    }
}

const std::array<GenInfo, 4>& Presentation::gamma_alphabet() {
    static const std::array<GenInfo, 4> alphabet = {
        GenInfo{"dth", 0, 1, false, false},
        GenInfo{"dx", 1, 1, true, false},
        GenInfo{"th", 1, 0, true, false},
        GenInfo{"x", 0, 0, false, true},
    };
    return alphabet;
}

std::map<std::pair<Letter, Letter>, Rule> Presentation::gamma_first_order_rules(Family f,
                                                                                const Bindings& b) {
    auto sub = [&](const ParamRational& v) { return b.empty() ? v : v.substitute(b); };

    ConsistencyCoefficients cf = family_coefficients(f);
    ParamRational A = sub(cf.A), B = sub(cf.B), F11 = sub(cf.F11), F12 = sub(cf.F12),
                  F21 = sub(cf.F21), F22 = sub(cf.F22);
    ParamRational q = sub(pr_q());

    const std::string eq1 = "(1)";
    const std::string eq11 = f == Family::I ? "(11a)" : "(11b)";

    std::map<std::pair<Letter, Letter>, Rule> rules;
    auto put = [&](Letter a, Letter bb, std::vector<std::pair<ParamRational, Word>> rhs,
                   const std::string& eq) {
        Rule r;
        for (auto& [rc, rw] : rhs)
            if (!rc.is_zero()) r.rhs.push_back({rc, rw});
        r.eq = eq;
        rules.insert({{a, bb}, r});
    };

    // Superplane relations.
    put(3, 2, {{q, Word{2, 3}}}, eq1);
    put(2, 2, {}, eq1);

    // Coordinate against differential.
    put(3, 1, {{A, Word{1, 3}}}, eq11);
    put(3, 0, {{F11, Word{0, 3}}, {F12, Word{1, 2}}}, eq11);
    put(2, 1, {{F21, Word{1, 2}}, {F22, Word{0, 3}}}, eq11);
    put(2, 0, {{B, Word{0, 2}}}, eq11);

    return rules;
}

const Presentation& Presentation::gamma(Family f, const Bindings& b) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<Presentation>> cache;

    std::string key = family_name(f);
    for (const auto& [name, val] : b) key += ";" + name + "=" + val.str();

    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto sub = [&](const ParamRational& v) { return b.empty() ? v : v.substitute(b); };
    ParamRational lam2 = sub(two_form_lambda(f));

    const std::string eq12 = f == Family::I ? "(12a)" : "(12b)";
    auto rules = gamma_first_order_rules(f, b);

    Rule dx2;
    dx2.eq = eq12;
    rules.insert({{1, 1}, dx2});
    Rule dxdth;
    dxdth.eq = eq12;
    dxdth.rhs.push_back({lam2, Word{0, 1}});
    rules.insert({{1, 0}, dxdth});

    derive_inverse_rules(rules, gamma_alphabet());

    auto p = std::make_unique<Presentation>(AlgebraKind::Gamma, f, b, gamma_alphabet(),
                                            std::move(rules));
    const Presentation& ref = *p;
    cache.emplace(std::move(key), std::move(p));
    return ref;
}

void WordSum::add(const Word& w, const ParamRational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

void WordSum::add_scaled(const WordSum& o, const ParamRational& c) {
    if (alg_ != o.alg_) throw std::logic_error("word sums from different presentations");
    for (const auto& [w, k] : o.t_) add(w, c * k);
}

WordSum operator+(const WordSum& a, const WordSum& b) {
    WordSum r = a;
    r.add_scaled(b, ParamRational(1));
    return r;
}

WordSum operator-(const WordSum& a, const WordSum& b) {
    WordSum r = a;
    r.add_scaled(b, ParamRational(-1));
    return r;
}

WordSum operator*(const WordSum& a, const WordSum& b) {
    if (a.alg_ != b.alg_) throw std::logic_error("word sums from different presentations");
    WordSum r(*a.alg_);
    for (const auto& [wa, ca] : a.t_)
        for (const auto& [wb, cb] : b.t_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

WordSum operator*(const ParamRational& c, const WordSum& a) {
    WordSum r(*a.alg_);
    r.add_scaled(a, c);
    return r;
}

WordSum operator-(const WordSum& a) { return ParamRational(-1) * a; }

std::string WordSum::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
        std::string body;
        for (Letter l : w) {
            if (!body.empty()) body += "*";
            body += letter_name(alg_->alphabet(), l);
        }
        join_term(s, coeff_prefix(c, body));
    }
    return s;
}

Element Element::one(const Presentation& a) { return mono(a, NormalMono{}); }

Element Element::scalar(const Presentation& a, const ParamRational& c) {
    Element e(a);
    e.add(NormalMono{}, c);
    return e;
}

Element Element::generator(const Presentation& a, Letter l) {
    NormalMono m;
    if (l == kXInv)
        m.e[kXPos] = -1;
    else
        m.e[l] = 1;
    return mono(a, m);
}

Element Element::mono(const Presentation& a, const NormalMono& m, const ParamRational& c) {
    Element e(a);
    e.add(m, c);
    return e;
}

ParamRational Element::coeff(const NormalMono& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? ParamRational(0) : it->second;
}

void Element::add(const NormalMono& m, const ParamRational& c) {
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

void Element::add_scaled(const Element& o, const ParamRational& c) {
    if (alg_ != o.alg_) throw std::logic_error("elements from different presentations");
    for (const auto& [m, k] : o.t_) add(m, c * k);
}

WordSum Element::to_words() const {
    WordSum r(*alg_);
    for (const auto& [m, c] : t_) r.add(alg_->word_of(m), c);
    return r;
}

Element operator+(const Element& a, const Element& b) {
    Element r = a;
    r.add_scaled(b, ParamRational(1));
    return r;
}

Element operator-(const Element& a, const Element& b) {
    Element r = a;
    r.add_scaled(b, ParamRational(-1));
    return r;
}

Element operator*(const Element& a, const Element& b) {
    if (a.alg_ != b.alg_) throw std::logic_error("elements from different presentations");
    return a.alg_->normalize(a.to_words() * b.to_words());
}

Element operator*(const ParamRational& c, const Element& a) {
    Element r(*a.alg_);
    r.add_scaled(a, c);
    return r;
}

Element operator-(const Element& a) { return ParamRational(-1) * a; }

Element& Element::operator+=(const Element& b) {
    add_scaled(b, ParamRational(1));
    return *this;
}

Element& Element::operator-=(const Element& b) {
    add_scaled(b, ParamRational(-1));
    return *this;
}

bool Element::operator==(const Element& b) const {
    if (alg_ != b.alg_) throw std::logic_error("elements from different presentations");
    return t_ == b.t_;
}

std::string Element::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
        join_term(s, m.is_one() ? c.str() : coeff_prefix(c, alg_->mono_str(m)));
    }
    return s;
}

Element pow(const Element& a, int n) {
    if (n < 0) throw std::domain_error("negative power of an algebra element");
    Element r = Element::one(a.pres());
    for (int i = 0; i < n; ++i) r = r * a;
    return r;
}

std::optional<Grade> grade_of(const Element& a) {
    if (a.is_zero()) return Grade{0, 0};
    std::optional<Grade> g;
    for (const auto& [m, c] : a.terms()) {
        (void)c;
        Grade h{a.pres().parity_of(m), a.pres().form_degree_of(m)};
        if (!g)
            g = h;
        else if (!(*g == h))
            return std::nullopt;
    }
    return g;
}

std::vector<Relation> defining_relations(const Presentation& a) {
    std::vector<Relation> out;
    for (const auto& [key, r] : a.rules()) {
        if (r.derived) continue;
        auto [la, lb] = key;
        std::string name = letter_name(a.alphabet(), la);
        name += (la == lb) ? "^2" : "*" + letter_name(a.alphabet(), lb);
        WordSum lhs(a, Word{la, lb});
        WordSum rhs(a);
        for (const auto& [rc, rw] : r.rhs) rhs.add(rw, rc);
        out.push_back(Relation{name, r.eq, lhs, rhs});
    }
    return out;
}

}  // namespace qsp
