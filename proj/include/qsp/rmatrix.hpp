#pragma once

// The 4x4 exchange matrix behind the coordinate-differential commutation
// rules, its Yang-Baxter and braid conditions, and the solver that recovers
// the two coefficient families from the consistency constraints.

#include <string>
#include <vector>

#include "qsp/algebra.hpp"

namespace qsp {

// Dense matrix over the parameter field.  Small fixed sizes only (4x4 and
// 8x8 here), so storage is a flat vector and products are cubic.
class ParamMatrix {
  public:
    ParamMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, ParamRational(0)) {}

    static ParamMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    ParamRational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const ParamRational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    std::string str() const;

    friend ParamMatrix operator*(const ParamMatrix& a, const ParamMatrix& b);
    friend ParamMatrix operator-(const ParamMatrix& a, const ParamMatrix& b);
    bool operator==(const ParamMatrix& b) const;

  private:
    size_t rows_, cols_;
    std::vector<ParamRational> a_;
};

ParamMatrix kron(const ParamMatrix& a, const ParamMatrix& b);

// Exchange matrix with rows and columns indexed by the pairs
// (dx,x), (dx,th), (dth,x), (dth,th).
ParamMatrix exchange_matrix(Family f, const Bindings& b = {});

// Swap on the two-fold tensor square; the graded version carries the sign
// of transposing two odd directions.
ParamMatrix perm_plain();
ParamMatrix perm_super();

enum class SwapConvention { Plain, Graded };

// Slot embeddings into the three-fold tensor cube.  The outer embedding
// conjugates by the swap of the last two slots, which is where the two
// conventions differ.
ParamMatrix embed12(const ParamMatrix& c);
ParamMatrix embed23(const ParamMatrix& c);
ParamMatrix embed13(const ParamMatrix& c, SwapConvention sw);

// C12 C13 C23 - C23 C13 C12; the Yang-Baxter condition is its vanishing.
ParamMatrix qybe_residual(const ParamMatrix& c, SwapConvention sw);

// B12 B23 B12 - B23 B12 B23 for B = P C.
ParamMatrix braid_residual(const ParamMatrix& c, const ParamMatrix& p);

// Regenerates the coordinate-differential rewrite rules from the exchange
// matrix, with the sign (-1)^{i(j+1)} on the left-hand side, and reduces
// them in the calculus: true when every regenerated relation normalizes
// to zero, i.e. the matrix and the rule table present the same algebra.
bool matrix_matches_rules(Family f, const Bindings& b = {});

// One family of solutions of the consistency constraints on
// (A, B, F11, F12, F21, F22): both bilinear constraints factor, and each
// branch kills one factor.
struct ConsistencySolution {
    Family family;
    std::string branch;
    ConsistencyCoefficients coeffs;
};

// Solves the constraint system by branching on the factored constraints
// and eliminating; the remaining free coefficients are named p (branch one)
// and r, s (branch two).
std::vector<ConsistencySolution> solve_consistency();

// Checks the linear and bilinear consistency constraints directly.
bool satisfies_consistency(const ConsistencyCoefficients& c);

}  // namespace qsp
