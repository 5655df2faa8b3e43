#include "qsp/rmatrix.hpp"

#include <stdexcept>

namespace qsp {

ParamMatrix ParamMatrix::identity(size_t n) {
    ParamMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ParamRational(1);
    return m;
}

bool ParamMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

std::string ParamMatrix::str() const {
    std::string s;
    for (size_t i = 0; i < rows_; ++i) {
        s += i == 0 ? "[" : " ";
        for (size_t j = 0; j < cols_; ++j) {
            s += at(i, j).str();
            if (j + 1 < cols_) s += ", ";
        }
        s += i + 1 < rows_ ? ";\n" : "]";
    }
    return s;
}

ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ParamMatrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const ParamRational& av = a.at(i, k);
            if (av.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const ParamRational& bv = b.at(k, j);
                if (!bv.is_zero()) out.at(i, j) += av * bv;
            }
        }
    return out;
}

ParamMatrix operator-(const ParamMatrix& a, const ParamMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    ParamMatrix out(a.rows_, a.cols_);
    for (size_t i = 0; i < a.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
    return out;
}

bool ParamMatrix::operator==(const ParamMatrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_;
}

ParamMatrix kron(const ParamMatrix& a, const ParamMatrix& b) {
    ParamMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            const ParamRational& av = a.at(i, j);
            if (av.is_zero()) continue;
            for (size_t k = 0; k < b.rows(); ++k)
                for (size_t l = 0; l < b.cols(); ++l) {
                    const ParamRational& bv = b.at(k, l);
                    if (!bv.is_zero()) out.at(i * b.rows() + k, j * b.cols() + l) = av * bv;
                }
        }
    return out;
}

ParamMatrix exchange_matrix(Family f, const Bindings& b) {
    auto sub = [&](const ParamRational& v) { return b.empty() ? v : v.substitute(b); };
    ConsistencyCoefficients cf = family_coefficients(f);

    ParamMatrix c(4, 4);
    c.at(0, 0) = sub(cf.A);
    c.at(1, 1) = sub(-cf.F21);
    c.at(1, 2) = sub(-cf.F22);
    c.at(2, 1) = sub(cf.F12);
    c.at(2, 2) = sub(cf.F11);
    c.at(3, 3) = sub(cf.B);
    return c;
}

ParamMatrix perm_plain() {
    ParamMatrix p(4, 4);
    p.at(0, 0) = ParamRational(1);
    p.at(1, 2) = ParamRational(1);
    p.at(2, 1) = ParamRational(1);
    p.at(3, 3) = ParamRational(1);
    return p;
}

ParamMatrix perm_super() {
    ParamMatrix p = perm_plain();
    p.at(3, 3) = ParamRational(-1);
    return p;
}

ParamMatrix embed12(const ParamMatrix& c) { return kron(c, ParamMatrix::identity(2)); }

ParamMatrix embed23(const ParamMatrix& c) { return kron(ParamMatrix::identity(2), c); }

ParamMatrix embed13(const ParamMatrix& c, SwapConvention sw) {
    ParamMatrix p = sw == SwapConvention::Graded ? perm_super() : perm_plain();
    ParamMatrix swap23 = kron(ParamMatrix::identity(2), p);
    return swap23 * embed12(c) * swap23;
}

ParamMatrix qybe_residual(const ParamMatrix& c, SwapConvention sw) {
    ParamMatrix c12 = embed12(c), c23 = embed23(c), c13 = embed13(c, sw);
    return c12 * c13 * c23 - c23 * c13 * c12;
}

ParamMatrix braid_residual(const ParamMatrix& c, const ParamMatrix& p) {
    ParamMatrix bh = p * c;
    ParamMatrix b12 = embed12(bh), b23 = embed23(bh);
    return b12 * b23 * b12 - b23 * b12 * b23;
}

bool matrix_matches_rules(Family f, const Bindings& b) {
    const Presentation& G = Presentation::gamma(f, b);
    ParamMatrix c = exchange_matrix(f, b);

    // Variables indexed 1, 2 with parities 0, 1; letters of the calculus.
    const Letter zl[3] = {0, 3, 2};   // z[1] = x, z[2] = th
    const Letter dzl[3] = {0, 1, 0};  // dz[1] = dx, dz[2] = dth
    auto idx = [](int a, int bb) { return size_t(2 * (a - 1) + (bb - 1)); };

    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            int sign = (i - 1) * j % 2 ? -1 : 1;  // (-1)^{i(j+1)} with 0-based parities
            WordSum rel(G, Word{zl[i], dzl[j]}, ParamRational(sign));
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l) {
                    const ParamRational& cv = c.at(idx(j, i), idx(k, l));
                    if (!cv.is_zero()) rel.add(Word{dzl[k], zl[l]}, -cv);
                }
            if (!G.normalize(rel).is_zero()) return false;
        }
    return true;
}

std::vector<ConsistencySolution> solve_consistency() {
    // Unknowns (A, B, F11, F12, F21, F22) subject to the linear constraints
    //   F11 + q F22 = q,   F12 + q F21 = -1,   B = 1
    // and the factored bilinear ones
    //   F12 F22 = 0,   (F11 - q A) F22 = 0.
    // Each branch kills one factor of both bilinear constraints at once.
    ParamRational q = pr_q(), one(1);
    std::vector<ConsistencySolution> out;

    {
        // Branch F12 = 0: the second bilinear constraint forces F11 = q A
        // away from F22 = 0; name the free coefficient A = p and eliminate.
        ConsistencyCoefficients c;
        c.B = one;
        c.F12 = ParamRational(0);
        c.F21 = -(one + c.F12) / q;
        c.A = pr_p();
        c.F11 = q * c.A;
        c.F22 = (q - c.F11) / q;
        out.push_back({Family::I, "F12 = 0", c});
    }
    {
        // Branch F22 = 0: both bilinear constraints drop, F11 is pinned and
        // two coefficients stay free; name F12 = qr - 1 and A = s.
        ConsistencyCoefficients c;
        c.B = one;
        c.F22 = ParamRational(0);
        c.F11 = q - q * c.F22;
        c.F12 = q * pr_r() - one;
        c.F21 = -(one + c.F12) / q;
        c.A = pr_s();
        out.push_back({Family::II, "F22 = 0", c});
    }
    return out;
}

bool satisfies_consistency(const ConsistencyCoefficients& c) {
    ParamRational q = pr_q(), one(1);
    return (c.F11 + q * c.F22 - q).is_zero() && (c.F12 + q * c.F21 + one).is_zero() &&
           (c.B - one).is_zero() && (c.F12 * c.F22).is_zero() &&
           ((c.F11 - q * c.A) * c.F22).is_zero();
}

}  // namespace qsp
