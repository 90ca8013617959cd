#pragma once

#include <optional>
#include <set>

#include "spincode/group_theory.hpp"

namespace spincode {

/// Projector onto the isotypic component of one subgroup irrep inside the
/// spin-j space. Zero multiplicity gives the zero matrix.
struct IrrepProjector {
    CMatrix p;
    std::string irrep_label;
    int multiplicity = 0;
};

/// A logical qubit: two orthonormal codewords in a spin-j space.
/// Amplitude vectors are over |j,m> with m descending.
struct SpinCode {
    SpinJ spin;
    GroupLabel group;
    std::string irrep_label;
    std::vector<cdouble> ket0, ket1;
    std::optional<double> phi;  // mixing phase of the zero-expectation build

    CMatrix codespace_projector() const;
};

IrrepProjector irrep_projector(SpinJ spin, const FiniteSubgroup& group,
                               const std::string& irrep_label);

/// sigma-bar_w = P (i exp(-i pi J_w)) P, Hermitian for half-integer spin.
CMatrix irrep_pauli(const IrrepProjector& projector, SpinJ spin, char axis);

/// Multiplicity-1 extraction: ket0 is the +1 eigenvector of sigma-bar_z in
/// range(P), ket1 = sigma-bar_x ket0. Phase convention: the amplitude on the
/// highest occupied m is real positive, applied to each ket separately.
SpinCode extract_codewords(SpinJ spin, const FiniteSubgroup& group,
                           const std::string& irrep_label);

/// Higher-multiplicity build with <0|J_z|0> = 0: diagonalize J_z projected
/// onto the +1 eigenspace of sigma-bar_z, mix the eigenvector pair whose
/// eigenvalues straddle zero with weights sqrt(l2/(l2-l1)), sqrt(-l1/(l2-l1))
/// and relative phase phi.
SpinCode extract_codewords_zero_jz(SpinJ spin, const FiniteSubgroup& group,
                                   const std::string& irrep_label, double phi);

/// The fixed spin-7/2 binary-icosahedral code.
SpinCode icosahedral_code_7half();

/// m values of the given axis' angular-momentum operator whose eigenvectors
/// overlap the state above 1e-10 in amplitude.
std::set<double> support_set(const std::vector<cdouble>& state,
                             const AngularMomentumOps& ops, char axis);

/// Rotate the leading nonzero amplitude to the positive real axis.
void fix_global_phase(std::vector<cdouble>& state, double tol = 1e-10);

}  // namespace spincode
