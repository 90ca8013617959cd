#pragma once

#include "spincode/noise.hpp"

namespace spincode {

/// Noise acting on an encoded qubit: encode isometry (d x 2, columns ket0 and
/// ket1) composed with a channel on the spin space. effective holds the
/// combined Kraus operators (d x 2 each).
struct RecoveryProblem {
    CMatrix encode;
    QuantumChannel noise;
    QuantumChannel effective;
};

RecoveryProblem make_recovery_problem(const SpinCode& code, const QuantumChannel& noise);

/// F = sum_k |tr(K_k)/2|^2 for a qubit-to-qubit channel (maximally mixed
/// reference input).
double entanglement_fidelity(const QuantumChannel& channel);

struct SDPSolution {
    CMatrix recovery_choi;  // index j*2+i, input j major / output qubit minor
    double fidelity = 0;
    std::size_t iterations = 0;
    double primal_residual = 0;
    double dual_residual = 0;
    double partial_trace_residual = 0;
    double choi_min_eigenvalue = 0;
    bool converged = false;
};

/// Best CPTP recovery by ADMM on the recovery Choi matrix:
/// maximize (1/4) tr(C M) over C >= 0 with Tr_out C = identity.
SDPSolution optimal_recovery(const RecoveryProblem& problem);

struct TransposeRecovery {
    QuantumChannel recovery;  // d -> 2
    double fidelity = 0;
};

/// Petz channel of the effective channel with respect to the maximally mixed
/// code state; near-optimal baseline and ADMM warm start.
TransposeRecovery transpose_recovery(const RecoveryProblem& problem);

struct SweepPoint {
    double gamma_t = 0;
    double fidelity = 0;
    std::size_t iterations = 0;
    double residual = 0;
    bool converged = false;
};

enum class RecoveryMethod { SDP, Transpose };

std::vector<SweepPoint> fidelity_sweep(const SpinCode& code,
                                       const std::vector<double>& gamma_t_grid,
                                       RecoveryMethod method);

/// Evenly log-spaced grid, endpoints included.
std::vector<double> log_grid(double lo, double hi, std::size_t points);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace spincode
