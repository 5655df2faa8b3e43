#pragma once

// Exact rational functions in the deformation parameters q, p, r, s.
//
// A ParamRational is a quotient num/den of Laurent polynomials held in
// canonical form: den is an ordinary polynomial (no negative exponents),
// divisible by no parameter, with grlex-leading coefficient 1; the ordinary
// part of num is coprime to den.  Zero is 0/1.  Equality of canonical forms
// is structural equality.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsp {

using Rat = boost::multiprecision::cpp_rational;

inline constexpr int kNumParams = 4;

// Index order fixes the monomial tie-break q > p > r > s.
extern const std::array<const char*, kNumParams> kParamNames;

// -1 if the name is not a parameter.
int param_index(std::string_view name);

// Laurent monomial q^e0 p^e1 r^e2 s^e3; exponents may be negative.
struct ParamMono {
    std::array<int32_t, kNumParams> e{0, 0, 0, 0};

    int64_t degree() const;
    bool is_one() const;
    bool divides(const ParamMono& m) const;  // componentwise e <= m.e

    friend ParamMono operator*(const ParamMono& a, const ParamMono& b);
    friend ParamMono operator/(const ParamMono& a, const ParamMono& b);
    friend bool operator==(const ParamMono&, const ParamMono&) = default;
};

// Descending graded-lexicographic order: higher total degree first, ties by
// exponent of q, then p, then r, then s.  Map iteration therefore starts at
// the leading term.
struct MonoOrder {
    bool operator()(const ParamMono& a, const ParamMono& b) const;
};

// Laurent polynomial over Q; no explicit zero coefficients are stored.
class Poly {
  public:
    using Terms = std::map<ParamMono, Rat, MonoOrder>;

    Poly() = default;
    explicit Poly(const Rat& c);
    Poly(const ParamMono& m, const Rat& c);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    const Terms& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    const ParamMono& lead_mono() const;  // throws on zero
    const Rat& lead_coeff() const;

    void add_term(const ParamMono& m, const Rat& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Rat& c);
    friend bool operator==(const Poly&, const Poly&) = default;

    // Componentwise minimum of exponents over all terms; the monomial content
    // of a Laurent polynomial.  Zero polynomial has content 1.
    ParamMono mono_content() const;

    // Multiplies every term by m (a unit of the Laurent ring).
    Poly shifted(const ParamMono& m) const;

    std::string str() const;

  private:
    Terms t_;
};

// gcd of ordinary polynomials (all exponents nonnegative); the result is
// defined up to a rational scale and returned with leading coefficient 1.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact quotient a/b of ordinary polynomials; throws std::domain_error if b
// does not divide a.
Poly poly_div_exact(const Poly& a, const Poly& b);

class ParamRational;

// Parameter bindings for substitution, e.g. {p -> q^-2}.  Ordered map keeps
// report echoes deterministic.
using Bindings = std::map<std::string, ParamRational>;

class ParamRational {
  public:
    ParamRational();  // zero
    ParamRational(long long n);
    explicit ParamRational(const Rat& c);
    ParamRational(Poly num, Poly den);  // canonicalizes

    static ParamRational param(int index);
    static ParamRational monomial(const ParamMono& m, const Rat& c = 1);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_minus_one() const;
    bool is_integer() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    ParamRational inv() const;  // throws std::domain_error on zero

    friend ParamRational operator+(const ParamRational& a, const ParamRational& b);
    friend ParamRational operator-(const ParamRational& a, const ParamRational& b);
    friend ParamRational operator*(const ParamRational& a, const ParamRational& b);
    friend ParamRational operator/(const ParamRational& a, const ParamRational& b);
    friend ParamRational operator-(const ParamRational& a);
    ParamRational& operator+=(const ParamRational& b);
    ParamRational& operator-=(const ParamRational& b);
    ParamRational& operator*=(const ParamRational& b);

    friend bool operator==(const ParamRational&, const ParamRational&) = default;

    // Simultaneous substitution of bound parameters; unbound parameters pass
    // through.  Throws std::domain_error if a denominator vanishes.
    ParamRational substitute(const Bindings& b) const;

    // True when printing this coefficient in front of a word needs parentheses.
    bool needs_parens() const;

    std::string str() const;

  private:
    void canonicalize();

    Poly num_;
    Poly den_;
};

ParamRational pow(const ParamRational& a, long long n);

// Convenience factories: the four parameters.
ParamRational pr_q();
ParamRational pr_p();
ParamRational pr_r();
ParamRational pr_s();

}  // namespace qsp
