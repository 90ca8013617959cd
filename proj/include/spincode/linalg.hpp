#pragma once

#include "spincode/cmatrix.hpp"

namespace spincode {

/// Result of a Hermitian eigendecomposition A = V diag(lambda) V^dag.
/// Eigenvalues ascending, eigenvectors in the columns of V.
struct EigDecomposition {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;

    std::vector<cdouble> eigenvector(std::size_t k) const;
};

/// Hermitian eigendecomposition by cyclic Jacobi with complex rotations.
/// Converges when the off-diagonal Frobenius norm drops below
/// 1e-14 x the matrix Frobenius norm. Rejects non-square or
/// non-Hermitian input.
EigDecomposition herm_eig(const CMatrix& a);

/// V exp(-i * scale * Lambda) V^dag for Hermitian h. Result is unitary.
CMatrix expm_hermitian_generator(const CMatrix& h, double scale);

/// General matrix exponential: scaling-and-squaring with a degree-13
/// Pade approximant.
CMatrix expm_general(const CMatrix& a);

/// Solve A X = B by LU with partial pivoting.
CMatrix lu_solve(CMatrix a, const CMatrix& b);

}  // namespace spincode
