// Acceptance suite: the eleven gate criteria, one printed line per criterion,
// exit status 0 only when every criterion holds.  Sample counts and parameter
// loci are pinned here, not configurable.  The only argument is the path of
// the qsp executable, consumed by the determinism criterion.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qsp/calculus.hpp"
#include "qsp/forms.hpp"
#include "qsp/rng.hpp"
#include "qsp/verify.hpp"

using namespace qsp;

namespace {

int g_failures = 0;

std::string clip(std::string s) {
    if (s.size() > 240) s = s.substr(0, 240) + "...";
    return s;
}

void line(int n, bool ok, const std::string& what, const std::string& why = "") {
    if (ok) {
        std::printf("PASS criterion %d: %s\n", n, what.c_str());
    } else {
        std::printf("FAIL criterion %d: %s [%s]\n", n, what.c_str(), clip(why).c_str());
        ++g_failures;
    }
}

void info(const std::string& s) { std::printf("  info: %s\n", clip(s).c_str()); }

bool coeffs_match(const ConsistencyCoefficients& a, const ConsistencyCoefficients& b) {
    return a.A == b.A && a.B == b.B && a.F11 == b.F11 && a.F12 == b.F12 &&
           a.F21 == b.F21 && a.F22 == b.F22;
}

// Every named record must exist in the report and pass.
bool records_pass(const Report& r, const std::vector<std::string>& names, std::string& why) {
    for (const auto& want : names) {
        bool found = false;
        for (const auto& c : r.checks) {
            if (c.name != want) continue;
            found = true;
            if (c.status == "fail") {
                why = "family " + r.family + ", " + c.name + ": " + c.witness;
                return false;
            }
        }
        if (!found) {
            why = "family " + r.family + ": missing record \"" + want + "\"";
            return false;
        }
    }
    return true;
}

std::string failing_records(const Report& r) {
    std::string s;
    for (const auto& c : r.checks) {
        if (c.status != "fail") continue;
        if (!s.empty()) s += "; ";
        s += "family " + r.family + ", " + c.name + ": " + c.witness;
    }
    return s;
}

std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const char* qsp_path = argc > 1 ? argv[1] : nullptr;

    // 1: the constraint solver emits exactly the two coefficient families.
    {
        std::vector<ConsistencySolution> sols = solve_consistency();
        bool ok = sols.size() == 2;
        std::string why = "expected two branches, got " + std::to_string(sols.size());
        if (ok && sols[0].family == sols[1].family) {
            ok = false;
            why = "both branches landed in the same family";
        }
        if (ok) {
            for (const auto& s : sols) {
                if (!coeffs_match(s.coeffs, family_coefficients(s.family))) {
                    ok = false;
                    why = "branch " + s.branch + " differs from the shipped coefficient table";
                    break;
                }
                if (!satisfies_consistency(s.coeffs)) {
                    ok = false;
                    why = "branch " + s.branch + " does not satisfy the constraint system";
                    break;
                }
            }
        }
        line(1, ok,
             "the consistency solver emits exactly two branches, matching the shipped "
             "coefficient tables and satisfying the constraints exactly",
             why);
    }

    // 2: the two-form relations are forced by differentiating the first-order ones.
    {
        TwoFormDerivation di = derive_two_form_relations(Family::I);
        TwoFormDerivation dii = derive_two_form_relations(Family::II);
        bool ok = di.consistent && di.dx_sq_zero && di.lambda2 == pr_p() * pr_q() &&
                  dii.consistent && dii.dx_sq_zero && dii.lambda2 == pr_r().inv();
        line(2, ok,
             "two-form derivation forces (dx)^2 = 0 and exchange coefficients p*q "
             "(family I) and r^-1 (family II) exactly",
             "derived coefficients: I " + di.lambda2.str() + ", II " + dii.lambda2.str());
    }

    // Shared calculus reports: 500 samples per family, above the floors of
    // 200 elements (criterion 3) and 500 words (criterion 4).
    RunOptions calc_opts;
    calc_opts.fuel = 500;
    Report calc_i = verify_calculus(calc_opts);
    RunOptions calc_opts_ii = calc_opts;
    calc_opts_ii.family = Family::II;
    Report calc_ii = verify_calculus(calc_opts_ii);

    // 3: d^2 = 0 and the graded Leibniz rule on random elements.
    {
        std::vector<std::string> names = {"the differential squares to zero",
                                          "the graded Leibniz rule holds"};
        std::string why;
        bool ok = records_pass(calc_i, names, why) && records_pass(calc_ii, names, why);
        line(3, ok,
             "d^2 = 0 and the graded Leibniz rule hold on 500 random elements "
             "(words up to length 8) per family, zero failures",
             why);
    }

    // 4: relation normal forms and strategy independence.
    {
        auto names_of = [](const Presentation& g) {
            std::vector<std::string> v;
            for (const auto& rel : defining_relations(g))
                v.push_back("relation " + rel.name + " normalizes to zero");
            v.push_back("normal forms are strategy independent");
            return v;
        };
        std::string why;
        bool ok = records_pass(calc_i, names_of(Presentation::gamma(Family::I)), why) &&
                  records_pass(calc_ii, names_of(Presentation::gamma(Family::II)), why);
        line(4, ok,
             "every defining relation normalizes to zero and 500 random words up to "
             "length 12 reduce identically under leftmost and rightmost strategies",
             why);
    }

    // Shared co-structure reports: 200 samples per family.
    RunOptions hopf_opts;
    hopf_opts.fuel = 200;
    Report hopf_i = verify_hopf(hopf_opts);
    RunOptions hopf_opts_ii = hopf_opts;
    hopf_opts_ii.family = Family::II;
    Report hopf_ii = verify_hopf(hopf_opts_ii);

    // 5: Hopf axioms on the coordinate algebra.
    {
        std::vector<std::string> names = {
            "coassociativity on the coordinate algebra",
            "counit laws on the coordinate algebra",
            "antipode laws on the coordinate algebra",
            "the antipode is involutive on the coordinate algebra"};
        std::string why;
        bool ok = records_pass(hopf_i, names, why) && records_pass(hopf_ii, names, why);
        line(5, ok,
             "coassociativity, counit, and antipode laws hold on the coordinate algebra "
             "on generators and 200 random elements per family, and the antipode is "
             "involutive",
             why);
    }

    // 6: Hopf structure of the calculus.
    {
        std::vector<std::string> names = {"right co-action identities",
                                          "left co-action identities",
                                          "coproduct respects the calculus relations",
                                          "counit respects the calculus relations",
                                          "antipode respects the calculus relations",
                                          "coassociativity on the calculus",
                                          "counit laws on the calculus",
                                          "antipode laws on the calculus"};
        std::string why;
        bool ok = records_pass(hopf_i, names, why) && records_pass(hopf_ii, names, why);
        line(6, ok,
             "co-action identities, relation invariance, and the co-structure laws hold "
             "on the calculus in both families at generic parameters (graded antipode "
             "convention)",
             why);
    }

    // 7: form-algebra relations against the printed tables, and its co-structure.
    {
        RunOptions o;
        Report forms_i = derive_forms_report(o);
        RunOptions oii;
        oii.family = Family::II;
        Report forms_ii = derive_forms_report(oii);
        std::string why = failing_records(forms_i);
        if (!failing_records(forms_ii).empty()) {
            if (!why.empty()) why += "; ";
            why += failing_records(forms_ii);
        }
        bool derived_ok = why.empty();

        RunOptions om;
        om.fuel = 200;
        Report omega_i = verify_omega(om);
        RunOptions omii = om;
        omii.family = Family::II;
        Report omega_ii = verify_omega(omii);
        std::vector<std::string> names = {"coassociativity on the form algebra",
                                          "counit laws on the form algebra",
                                          "antipode laws on the form algebra",
                                          "coproduct compatibility on the published examples"};
        std::string why_laws;
        bool laws_ok =
            records_pass(omega_i, names, why_laws) && records_pass(omega_ii, names, why_laws);
        if (!laws_ok) {
            if (!why.empty()) why += "; ";
            why += why_laws;
        }
        line(7, derived_ok && laws_ok,
             "derived form-generator relations match the printed tables verbatim, and "
             "the form algebra satisfies its co-structure laws and coproduct "
             "compatibility exactly",
             why);
    }

    // 8: Yang-Baxter and braid identities of the exchange matrix.
    {
        ParamMatrix ci = exchange_matrix(Family::I);
        bool i_ok = qybe_residual(ci, SwapConvention::Graded).is_zero() &&
                    braid_residual(ci, perm_super()).is_zero();

        ParamMatrix cii = exchange_matrix(Family::II);
        bool ii_generic_nonzero = !qybe_residual(cii, SwapConvention::Graded).is_zero() &&
                                  !braid_residual(cii, perm_super()).is_zero();
        Bindings locus;
        locus["s"] = pr_q() * pr_r();
        ParamMatrix cii_locus = exchange_matrix(Family::II, locus);
        bool ii_locus_zero = qybe_residual(cii_locus, SwapConvention::Graded).is_zero() &&
                             braid_residual(cii_locus, perm_super()).is_zero();

        std::string why;
        if (!i_ok) why = "family I residual is nonzero";
        if (!ii_generic_nonzero) why = "family II generic residual unexpectedly vanishes";
        if (!ii_locus_zero) why = "family II residual does not vanish on s = q*r";
        line(8, i_ok && ii_generic_nonzero && ii_locus_zero,
             "family I satisfies both matrix identities generically; family II has a "
             "nonzero generic residual that vanishes exactly on s = q*r",
             why);

        for (Family f : {Family::I, Family::II}) {
            RunOptions bo;
            bo.family = f;
            Report rep = verify_braid(bo);
            for (const auto& c : rep.checks)
                if (c.status == "n/a")
                    info("family " + rep.family + ", " + c.name + ": " + c.witness);
        }
    }

    // 9: the exchange matrix and the rewrite rules present the same algebra.
    {
        bool ok = matrix_matches_rules(Family::I) && matrix_matches_rules(Family::II);
        line(9, ok,
             "relations regenerated from the exchange matrix normalize to zero against "
             "the rule table in both families",
             "a regenerated relation has a nonzero normal form");
    }

    // 10: classical limit of family I.
    {
        Bindings classical;
        classical["q"] = ParamRational(1);
        classical["p"] = ParamRational(1);
        const Presentation& g = Presentation::gamma(Family::I, classical);

        struct Probe {
            Word lhs, rhs;  // empty rhs: lhs must normalize to zero
            const char* what;
        };
        const std::vector<Probe> probes = {{{3, 2}, {2, 3}, "x*th = th*x"},
                                           {{2, 2}, {}, "th^2 = 0"},
                                           {{3, 1}, {1, 3}, "x*dx = dx*x"}};
        Rng rng(42);
        bool ok = true;
        std::string why;
        for (int i = 0; i < 100 && ok; ++i) {
            Word left(rng.below(4)), right(rng.below(4));
            for (auto& l : left) l = Letter(rng.below(5));
            for (auto& l : right) l = Letter(rng.below(5));
            for (const auto& pr : probes) {
                Word a = left, b = left;
                a.insert(a.end(), pr.lhs.begin(), pr.lhs.end());
                a.insert(a.end(), right.begin(), right.end());
                b.insert(b.end(), pr.rhs.begin(), pr.rhs.end());
                b.insert(b.end(), right.begin(), right.end());
                Element ea = g.normalize(WordSum(g, a));
                Element eb = pr.rhs.empty() ? Element::zero(g) : g.normalize(WordSum(g, b));
                if (!(ea == eb)) {
                    ok = false;
                    why = std::string(pr.what) + " fails in context " +
                          WordSum(g, a).str() + ": " + (ea - eb).str();
                    break;
                }
            }
        }
        line(10, ok,
             "at q = 1, p = 1 the family I relations degenerate to x*th = th*x, "
             "th^2 = 0, x*dx = dx*x on 100 random two-sided contexts",
             why);
    }

    // 11: the command-line tool reports deterministically and cleanly.
    {
        bool ok = false;
        std::string why = "path of the qsp executable not supplied";
        if (qsp_path) {
            std::string cmd = std::string("\"") + qsp_path +
                              "\" verify all --family I --fuel 100 --seed 42 --json";
            int s1 = std::system((cmd + " > acceptance_run1.json 2>/dev/null").c_str());
            int s2 = std::system((cmd + " > acceptance_run2.json 2>/dev/null").c_str());
            std::string out1 = slurp("acceptance_run1.json");
            std::string out2 = slurp("acceptance_run2.json");
            if (!WIFEXITED(s1) || WEXITSTATUS(s1) != 0 || !WIFEXITED(s2) ||
                WEXITSTATUS(s2) != 0) {
                why = "nonzero exit status";
            } else if (out1.empty()) {
                why = "empty report";
            } else if (out1 != out2) {
                why = "reports differ between runs";
            } else {
                ok = true;
            }
        }
        line(11, ok,
             "verify all --family I --fuel 100 --seed 42 --json exits 0 and emits "
             "byte-identical reports across two runs",
             why);
    }

    if (g_failures)
        std::printf("%d of 11 criteria failed\n", g_failures);
    else
        std::printf("all 11 criteria passed\n");
    return g_failures ? 1 : 0;
}
