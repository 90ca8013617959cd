#pragma once

#include "spincode/code_builder.hpp"

namespace spincode {

struct GateReport {
    std::string name;
    CMatrix target;    // logical unitary, 2x2 or 4x4
    CMatrix achieved;  // projected action on the codespace
    double distance = 0;  // min over global phase of ||achieved - e^{ia} target||_F
    double leakage = 0;   // ||(1-P) U P||_F

    bool ok(double tol = 1e-9) const { return distance < tol && leakage < tol; }
};

struct LogicalAction {
    CMatrix matrix;  // [<a-bar| U |b-bar>]
    double leakage = 0;
};

/// min over unit phase of ||a - e^{i alpha} t||_F, alpha = arg tr(t^dag a)
double phase_invariant_distance(const CMatrix& a, const CMatrix& t);

LogicalAction logical_action(const CMatrix& u, const SpinCode& code);
LogicalAction logical_action(const CMatrix& u, const SpinCode& code_a,
                             const SpinCode& code_b);

/// Support residue class of ket0 mod 4, as a representative in {1/2, -3/2}.
/// Throws if the support does not fit a single residue class.
double support_offset(const SpinCode& code);

/// T-bar = exp(-i phi J_z) exp(-i (pi/4) J_z^2), phi = pi/4 or 5pi/4 by the
/// m0 branch; verified against diag(1, e^{i pi/4}).
std::pair<CMatrix, GateReport> t_gate(const SpinCode& code);

/// CZ-bar = exp(i(pi/2) Jz x 1) exp(i(pi/2) 1 x Jz) exp(-i pi Jz x Jz),
/// verified against diag(1,1,1,-1) on the product codespace.
std::pair<CMatrix, GateReport> cz_gate(const SpinCode& code_a, const SpinCode& code_b);

struct SupportReport {
    std::set<double> supp0, supp1;
    bool disjoint_z = false, disjoint_x = false, disjoint_y = false;
};

/// sigma-bar_z eigenstates must occupy disjoint J_w eigenvalue sets for each
/// axis w, so a projective J_w measurement reads the logical state out.
SupportReport measurement_support_check(const SpinCode& code);

}  // namespace spincode
