#pragma once

// Graded algebras presented by adjacent-pair rewrite rules.
//
// Two presentations share this engine: the differential algebra on
// (dth, dx, th, x) and the Cartan-Maurer form algebra on (u, w, th, x).
// Words over the alphabet (plus the pseudo-letter xinv) normalize to the
// basis  g0^a g1^b g2^e x^n  with nilpotent letters capped at exponent 1
// and n ranging over all integers.  Every out-of-order adjacent pair has a
// rewrite rule, so normal forms are exactly the sorted words.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsp/rational.hpp"

namespace qsp {

enum class Family { I, II };
enum class AlgebraKind { Gamma, Omega };
enum class Strategy { Leftmost, Rightmost };

std::string family_name(Family f);

// Letters 0..3 index the alphabet in ascending normal order; 4 is x^-1.
using Letter = uint8_t;
inline constexpr Letter kXInv = 4;
inline constexpr Letter kXPos = 3;  // x sits last in both alphabets

using Word = std::vector<Letter>;

struct GenInfo {
    std::string name;
    int parity = 0;       // 0 even, 1 odd
    int form_degree = 0;  // 1 for differentials and Cartan-Maurer forms
    bool nilpotent = false;
    bool invertible = false;
};

// Exponent vector over the alphabet; e[3] (the x exponent) may be negative.
struct NormalMono {
    std::array<int32_t, 4> e{0, 0, 0, 0};

    bool is_one() const { return e == std::array<int32_t, 4>{0, 0, 0, 0}; }
    friend auto operator<=>(const NormalMono&, const NormalMono&) = default;
};

// Right-hand side of one rewrite rule: sum of coefficient-word pairs, with
// every replacement word already in normal order.  Empty sum rewrites to 0.
struct Rule {
    std::vector<std::pair<ParamRational, Word>> rhs;
    std::string eq;        // equation label for reports
    bool derived = false;  // true for the x^-1 rules obtained by conjugation
};

// Coefficients of the first-order calculus exchange relations; also the
// entries of the associated 4x4 exchange matrix.
struct ConsistencyCoefficients {
    ParamRational A, B, F11, F12, F21, F22;
};

ConsistencyCoefficients family_coefficients(Family f);
ParamRational two_form_lambda(Family f);  // coefficient in dx dth = lambda dth dx

class Element;
class WordSum;

struct NormalizeStats {
    uint64_t steps = 0;
};

class Presentation {
  public:
    // Differential calculus presentation; bindings specialize parameters.
    static const Presentation& gamma(Family f, const Bindings& b = {});

    // Building blocks of gamma(): the alphabet, and the rule table of the
    // superplane plus first-order relations alone (no two-form rules, no
    // x^-1 rules).  The two-form derivation reduces against exactly these.
    static const std::array<GenInfo, 4>& gamma_alphabet();
    static std::map<std::pair<Letter, Letter>, Rule> gamma_first_order_rules(Family f,
                                                                             const Bindings& b);

    Presentation(AlgebraKind kind, Family family, Bindings bindings,
                 std::array<GenInfo, 4> alphabet,
                 std::map<std::pair<Letter, Letter>, Rule> rules);

    AlgebraKind kind() const { return kind_; }
    Family family() const { return family_; }
    const Bindings& bindings() const { return bindings_; }
    const std::array<GenInfo, 4>& alphabet() const { return alphabet_; }
    const GenInfo& info(Letter l) const { return alphabet_[l == kXInv ? kXPos : l]; }
    const std::map<std::pair<Letter, Letter>, Rule>& rules() const { return rules_; }

    const Rule* rule(Letter a, Letter b) const;

    // Fully reduces against the rule table.  Requires a complete table (every
    // out-of-order pair covered), which both shipped presentations have.
    Element normalize(const WordSum& in, Strategy st = Strategy::Leftmost,
                      NormalizeStats* stats = nullptr) const;

    // Reduction that stops at irreducible words; meaningful for partial rule
    // tables (used while deriving the two-form relations).
    WordSum reduce_words(const WordSum& in, Strategy st = Strategy::Leftmost,
                         NormalizeStats* stats = nullptr) const;

    int parity_of(const NormalMono& m) const;
    int form_degree_of(const NormalMono& m) const;
    int parity_of_letter(Letter l) const { return info(l).parity; }

    Word word_of(const NormalMono& m) const;
    std::string mono_str(const NormalMono& m) const;

    int letter_by_name(const std::string& name) const;  // -1 when absent; "xinv" -> kXInv

    // Adds the conjugated x^-1 rules for every rule x*h -> c h x + rest.
    // Throws std::domain_error when a leading coefficient is not invertible
    // (a binding can cause this).
    static void derive_inverse_rules(std::map<std::pair<Letter, Letter>, Rule>& rules,
                                     const std::array<GenInfo, 4>& alphabet);

  private:
    AlgebraKind kind_;
    Family family_;
    Bindings bindings_;
    std::array<GenInfo, 4> alphabet_;
    std::map<std::pair<Letter, Letter>, Rule> rules_;
};

// Unreduced linear combination of words.
class WordSum {
  public:
    explicit WordSum(const Presentation& a) : alg_(&a) {}
    WordSum(const Presentation& a, const Word& w, const ParamRational& c = ParamRational(1))
        : alg_(&a) {
        add(w, c);
    }

    const Presentation& pres() const { return *alg_; }
    const std::map<Word, ParamRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Word& w, const ParamRational& c);
    void add_scaled(const WordSum& o, const ParamRational& c);

    friend WordSum operator+(const WordSum& a, const WordSum& b);
    friend WordSum operator-(const WordSum& a, const WordSum& b);
    friend WordSum operator*(const WordSum& a, const WordSum& b);  // concatenation
    friend WordSum operator*(const ParamRational& c, const WordSum& a);
    friend WordSum operator-(const WordSum& a);

    std::string str() const;

  private:
    const Presentation* alg_;
    std::map<Word, ParamRational> t_;
};

// Canonical form: basis monomials with nonzero coefficients.
class Element {
  public:
    explicit Element(const Presentation& a) : alg_(&a) {}

    static Element zero(const Presentation& a) { return Element(a); }
    static Element one(const Presentation& a);
    static Element scalar(const Presentation& a, const ParamRational& c);
    static Element generator(const Presentation& a, Letter l);
    static Element mono(const Presentation& a, const NormalMono& m,
                        const ParamRational& c = ParamRational(1));

    const Presentation& pres() const { return *alg_; }
    const std::map<NormalMono, ParamRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }

    ParamRational coeff(const NormalMono& m) const;
    void add(const NormalMono& m, const ParamRational& c);
    void add_scaled(const Element& o, const ParamRational& c);

    WordSum to_words() const;

    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);  // normalized product
    friend Element operator*(const ParamRational& c, const Element& a);
    friend Element operator-(const Element& a);
    Element& operator+=(const Element& b);
    Element& operator-=(const Element& b);

    bool operator==(const Element& b) const;

    std::string str() const;

  private:
    const Presentation* alg_;
    std::map<NormalMono, ParamRational> t_;
};

Element pow(const Element& a, int n);  // n >= 0

struct Grade {
    int parity;       // 0 even, 1 odd
    int form_degree;
    friend bool operator==(const Grade&, const Grade&) = default;
};

// Common grade of all terms; nullopt for 0 is (0,0); nullopt when mixed.
std::optional<Grade> grade_of(const Element& a);

// Defining relation, as the pair lhs = rhs of raw word sums.
struct Relation {
    std::string name;
    std::string eq;
    WordSum lhs;
    WordSum rhs;
};

// The presentation's defining relations (pair rules that are not derived),
// plus the x x^-1 = 1 = x^-1 x cancellations.
std::vector<Relation> defining_relations(const Presentation& a);

}  // namespace qsp
