#include "doctest.h"

#include "qsp/rmatrix.hpp"

using namespace qsp;

namespace {

size_t nonzero_count(const ParamMatrix& m) {
    size_t n = 0;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) ++n;
    return n;
}

ParamMatrix printed_hat_I() {
    ParamRational q = pr_q(), p = pr_p(), one(1);
    ParamMatrix m(4, 4);
    m.at(0, 0) = p;
    m.at(1, 2) = p * q;
    m.at(2, 1) = q.inv();
    m.at(2, 2) = p - one;
    m.at(3, 3) = one;
    return m;
}

ParamMatrix printed_hat_II() {
    ParamRational q = pr_q(), r = pr_r(), s = pr_s(), one(1);
    ParamMatrix m(4, 4);
    m.at(0, 0) = s;
    m.at(1, 1) = r;
    m.at(1, 2) = q;
    m.at(2, 1) = q * r - one;
    m.at(3, 3) = one;
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic building blocks") {
    ParamMatrix i2 = ParamMatrix::identity(2), i4 = ParamMatrix::identity(4);
    CHECK(kron(i2, i2) == i4);
    CHECK(perm_plain() * perm_plain() == i4);
    CHECK(perm_super() * perm_super() == i4);

    ParamMatrix c = exchange_matrix(Family::I);
    CHECK(embed12(c).rows() == 8);
    CHECK(embed13(c, SwapConvention::Plain).rows() == 8);

    // The two swaps differ exactly in the odd-odd corner.
    ParamMatrix diff = perm_plain() - perm_super();
    CHECK(nonzero_count(diff) == 1);
    CHECK(diff.at(3, 3) == ParamRational(2));
}

TEST_CASE("exchange matrix presents the same algebra as the rule table") {
    CHECK(matrix_matches_rules(Family::I));
    CHECK(matrix_matches_rules(Family::II));
    CHECK(matrix_matches_rules(Family::I, Bindings{{"p", ParamRational(1)}}));
    CHECK(matrix_matches_rules(Family::II, Bindings{{"s", pr_q() * pr_r()}}));
    CHECK(matrix_matches_rules(Family::I,
                               Bindings{{"q", ParamRational(1)}, {"p", ParamRational(1)}}));
}

TEST_CASE("family I matrix conditions") {
    ParamMatrix c = exchange_matrix(Family::I);
    ParamRational p = pr_p(), one(1);
    ParamRational dev = ParamRational(2) * (p - one) * (p - one);

    CHECK(qybe_residual(c, SwapConvention::Graded).is_zero());
    CHECK(braid_residual(c, perm_super()).is_zero());

    // Without the graded swap both conditions fail, by exactly one entry
    // proportional to the square of the classical deviation p - 1.
    ParamMatrix qp = qybe_residual(c, SwapConvention::Plain);
    CHECK(nonzero_count(qp) == 1);
    CHECK(qp.at(3, 6) == dev);

    ParamMatrix bp = braid_residual(c, perm_plain());
    CHECK(nonzero_count(bp) == 1);
    CHECK(bp.at(6, 6) == -dev);
}

TEST_CASE("family II matrix conditions hold exactly on the s = qr locus") {
    ParamRational q = pr_q(), r = pr_r(), s = pr_s(), one(1);
    ParamRational obstruction = (s + one) * (q * r - one) * (q * r - s);
    ParamRational dev = ParamRational(2) * (q * r - one) * (q * r - one);

    ParamMatrix c = exchange_matrix(Family::II);

    ParamMatrix qg = qybe_residual(c, SwapConvention::Graded);
    CHECK(nonzero_count(qg) == 1);
    CHECK(qg.at(4, 1) == obstruction);

    ParamMatrix bs = braid_residual(c, perm_super());
    CHECK(nonzero_count(bs) == 1);
    CHECK(bs.at(1, 1) == -obstruction);

    // The ungraded variants stack a second, s-independent failure on top.
    ParamMatrix qp = qybe_residual(c, SwapConvention::Plain);
    CHECK(nonzero_count(qp) == 2);
    CHECK(qp.at(4, 1) == obstruction);
    CHECK(qp.at(6, 3) == -dev);

    ParamMatrix bp = braid_residual(c, perm_plain());
    CHECK(nonzero_count(bp) == 2);
    CHECK(bp.at(1, 1) == -obstruction);
    CHECK(bp.at(3, 3) == dev);

    // Binding s = qr clears the graded conditions and nothing else.
    Bindings b{{"s", q * r}};
    ParamMatrix cb = exchange_matrix(Family::II, b);
    CHECK(qybe_residual(cb, SwapConvention::Graded).is_zero());
    CHECK(braid_residual(cb, perm_super()).is_zero());

    ParamMatrix qpb = qybe_residual(cb, SwapConvention::Plain);
    CHECK(nonzero_count(qpb) == 1);
    CHECK(qpb.at(6, 3) == -dev);

    ParamMatrix bpb = braid_residual(cb, perm_plain());
    CHECK(nonzero_count(bpb) == 1);
    CHECK(bpb.at(3, 3) == dev);
}

TEST_CASE("hatted matrices against their closed forms") {
    // Family I: the closed form is the plain product; the graded product
    // differs only in the sign of the odd-odd corner, and only the graded
    // variant satisfies the braid condition.
    ParamMatrix hat_plain_I = perm_plain() * exchange_matrix(Family::I);
    CHECK(hat_plain_I == printed_hat_I());

    ParamMatrix hat_super_I = perm_super() * exchange_matrix(Family::I);
    ParamMatrix diff_I = hat_plain_I - hat_super_I;
    CHECK(nonzero_count(diff_I) == 1);
    CHECK(diff_I.at(3, 3) == ParamRational(2));

    // Family II: the closed form transposes r and qr - 1 relative to the
    // product of the swap with the exchange matrix.
    ParamRational q = pr_q(), r = pr_r(), one(1);
    ParamMatrix hat_plain_II = perm_plain() * exchange_matrix(Family::II);
    ParamMatrix diff_II = hat_plain_II - printed_hat_II();
    CHECK(nonzero_count(diff_II) == 2);
    CHECK(diff_II.at(1, 1) == q * r - one - r);
    CHECK(diff_II.at(2, 1) == r - (q * r - one));

    // That closed form fails the braid condition even at s = qr: this
    // residual entry does not involve s at all.
    ParamMatrix printed = printed_hat_II();
    ParamMatrix b12 = embed12(printed), b23 = embed23(printed);
    ParamMatrix res = b12 * b23 * b12 - b23 * b12 * b23;
    CHECK(res.at(3, 3) == q * q * r * r - q * r + r * r - r);
}

TEST_CASE("consistency solver recovers both coefficient families") {
    auto sols = solve_consistency();
    REQUIRE(sols.size() == 2);

    CHECK(sols[0].family == Family::I);
    CHECK(sols[0].branch == "F12 = 0");
    CHECK(sols[1].family == Family::II);
    CHECK(sols[1].branch == "F22 = 0");

    for (const auto& sol : sols) {
        ConsistencyCoefficients want = family_coefficients(sol.family);
        CHECK(sol.coeffs.A == want.A);
        CHECK(sol.coeffs.B == want.B);
        CHECK(sol.coeffs.F11 == want.F11);
        CHECK(sol.coeffs.F12 == want.F12);
        CHECK(sol.coeffs.F21 == want.F21);
        CHECK(sol.coeffs.F22 == want.F22);
        CHECK(satisfies_consistency(sol.coeffs));
    }

    ConsistencyCoefficients broken = family_coefficients(Family::I);
    broken.F11 = broken.F11 + ParamRational(1);
    CHECK_FALSE(satisfies_consistency(broken));

    ConsistencyCoefficients broken2 = family_coefficients(Family::II);
    broken2.F22 = pr_s();  // both bilinear constraints now bite
    CHECK_FALSE(satisfies_consistency(broken2));
}
