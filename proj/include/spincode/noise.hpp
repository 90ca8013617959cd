#pragma once

#include "spincode/code_builder.hpp"

namespace spincode {

/// CPTP map between spaces of dimension d_in and d_out, held as a Kraus list
/// with cached superoperator and Choi views. Vectorization is column-stacking:
/// vec(A rho B) = (B^T (x) A) vec(rho).
struct QuantumChannel {
    std::vector<CMatrix> kraus;  // each d_out x d_in

    std::size_t dim_in() const { return kraus.at(0).cols(); }
    std::size_t dim_out() const { return kraus.at(0).rows(); }

    CMatrix superoperator() const;  // d_out^2 x d_in^2
    CMatrix choi() const;           // (d_in * d_out) square, index k*d_out + i
    CMatrix apply(const CMatrix& rho) const;

    /// max |sum K^dag K - 1| entry
    double trace_preservation_defect() const;

    static QuantumChannel identity(std::size_t d);
    static QuantumChannel from_superoperator(const CMatrix& s, std::size_t d_in,
                                             std::size_t d_out, double cutoff = 1e-12);
    static QuantumChannel from_choi(const CMatrix& c, std::size_t d_in,
                                    std::size_t d_out, double cutoff = 1e-12);

    QuantumChannel compose_after(const QuantumChannel& inner) const;
};

/// Finite-time random-rotation channel exp(gamma_t * L) with
/// L[rho] = sum_w (J_w rho J_w - (1/2){J_w^2, rho}).
QuantumChannel lindblad_channel(SpinJ spin, double gamma_t);

struct KLMatrix {
    std::size_t n_errors = 0;
    std::vector<CMatrix> blocks;  // row-major (j,k), each 2x2: <a|Ej^dag Ek|b>
    double violation = 0;

    const CMatrix& block(std::size_t j, std::size_t k) const {
        return blocks[j * n_errors + k];
    }
};

KLMatrix kl_matrix(const SpinCode& code, const std::vector<CMatrix>& errors);

/// The reduced exact-correction conditions for a rotation-symmetric code;
/// everything collapses to the single scalar <0|J_z|0>.
struct ReducedConditions {
    double jz2_defect = 0;       // off-diagonality of <a|Jz^2|b> + diagonal mismatch
    double jxjy_defect = 0;      // off-diagonality of the Jx Jy cross block
    double jz_offdiag = 0;       // |<0|Jz|1>|
    double jz_antisymmetry = 0;  // |<1|Jz|1> + <0|Jz|0>|
    double jz_expectation = 0;   // <0|Jz|0>, the deciding scalar

    bool exact(double tol = 1e-10) const {
        return jz2_defect < tol && jxjy_defect < tol && jz_offdiag < tol &&
               jz_antisymmetry < tol && std::abs(jz_expectation) < tol;
    }
};

ReducedConditions reduced_conditions(const SpinCode& code);

/// Rank of the Gram matrix of {E |a>} over E in {1, Jx, Jy, Jz}, a in {0,1},
/// with each vector normalized; 8 means the error spaces tile the full space.
int error_subspace_rank(const SpinCode& code);

}  // namespace spincode
